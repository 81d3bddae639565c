use std::process::Command;

use ballquot::cli::{cmd_check_all, commands, OutputFormat, Overrides, RunConfig, Status};
use ballquot::exactmath::qi;
use ballquot::finitegrp::target;
use ballquot::fpgroup::{cover_invariants, find_epimorphisms, EpiOptions, Presentation};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_ballquot"))
}

#[test]
fn exit_codes() {
    let ok = bin().args(["dm", "euler"]).output().unwrap();
    assert_eq!(ok.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&ok.stdout).contains("PASS dm.euler"));

    let bad = bin().args(["--eps", "-1", "dm", "euler"]).output().unwrap();
    assert_eq!(bad.status.code(), Some(2));

    let usage = bin().args(["group", "homsearch", "--target", "nope"]).output().unwrap();
    assert_eq!(usage.status.code(), Some(2));
}

#[test]
fn json_and_csv_output() {
    let out = bin().args(["--json", "group", "abelianize"]).output().unwrap();
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["schemaVersion"], 1);
    assert_eq!(v["checks"][0]["status"], "PASS");

    let out = bin().args(["--format", "csv", "dm", "triangle", "2", "3", "7"]).output().unwrap();
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("id,status,source,expected,observed"));
    assert!(lines.next().unwrap().contains("-1/42"));
}

#[test]
fn config_file_and_flags() {
    let dir = std::env::temp_dir().join(format!("ballquot-cfg-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("run.toml");
    std::fs::write(&path, "eps = \"1e-6\"\nmax-cosets = 500\noutput-format = \"csv\"\n").unwrap();
    let flags = Overrides { max_cosets: Some(700), ..Default::default() };
    let cfg = RunConfig::resolve(Some(&path), &flags).unwrap();
    assert_eq!(cfg.max_cosets, 700);
    assert_eq!(cfg.output_format, OutputFormat::Csv);
    std::fs::write(&path, "epsilon = 1\n").unwrap();
    assert!(RunConfig::resolve(Some(&path), &Overrides::default()).is_err());
}

#[test]
fn tc_subgroup_closes_at_288() {
    let r = commands::cmd_tc(&Presentation::gamma(), &["j".into(), "u".into(), "v".into()], 100_000);
    assert!(r.checks[0].observed.starts_with("288 cosets"));
}

#[test]
fn euler_characteristic_scales_with_index() {
    let g = Presentation::gamma();
    for name in ["z3", "a4"] {
        let t = target(name).unwrap();
        let s = find_epimorphisms(&g, &t, &EpiOptions::default()).unwrap();
        for m in &s.maps {
            let c = cover_invariants(m, &qi(1)).unwrap();
            assert_eq!(c.euler_char * qi(288), qi(c.index as i64));
            assert_eq!(c.index, t.group.order());
        }
    }
}

#[test]
fn corrupt_field_table_only_fails_the_search() {
    let dir = std::env::temp_dir().join(format!("ballquot-data-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    std::fs::write(dir.join("fields.json"), "{ not json").unwrap();
    let cfg = RunConfig { data_dir: Some(dir), ..Default::default() };
    let r = cmd_check_all(&cfg);
    let failing: Vec<&str> = r.checks.iter().filter(|c| c.status == Status::Fail).map(|c| c.id.as_str()).collect();
    assert!(failing.contains(&"search.survivor"));
    for id in ["dm.euler", "group.s1.e", "group.s2.e", "group.s2.covers-s1", "group.frob21"] {
        let c = r.checks.iter().find(|c| c.id == id).unwrap();
        assert_eq!(c.status, Status::Pass, "{id}");
    }
}
