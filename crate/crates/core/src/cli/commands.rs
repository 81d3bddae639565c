use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};

use super::report::{Check, Report, Source};
use super::RunConfig;
use crate::covolume::{
    disc_upper_bound, reproduce_table2, run_full_search, BoundKind, Candidate, SearchOptions, SearchReport, Verdict,
    TABLE1_DELTAS,
};
use crate::dmorbifold::{
    ball_aut_constant, builtin_stratification, check_int, check_sigma_int, derive_stratification, hurwitz_bound,
    invariant_conversions, orbifold_euler, triangle_orbifold, triangle_stratification, vol_lower, BallTuple,
};
use crate::exactmath::interval::fmt_q;
use crate::exactmath::{dec, q, qi, RealInterval, Q};
use crate::finitegrp::{frobenius21, psu33_cached, target, PermGroup, TARGET_NAMES};
use crate::fpgroup::{
    abelianization, cover_between, find_epimorphisms, format_invariants, free_rank, hodge_numbers, kernel_homology,
    preimage_coset_table, subgroup_abelian_invariants, surjections_to_cyclic, todd_coxeter, verify_surface, BjVariant,
    EpiOptions, Enumeration, Presentation, SurfaceCheck, GAMMA_ORDERS,
};

/// Published discriminant bounds for n = 1..5.
pub const TABLE1_PUBLISHED: [&str; 5] = ["6.64809", "9.96044", "10.404", "10.523", "10.5646"];
pub const TABLE1_TOL: &str = "5e-4";
pub const TABLE2_PUBLISHED: [u64; 5] = [3, 3, 3, 1, 1];
/// Printed caps for n = 1..5 and direct bounds, with their relative tolerance.
pub const CAPS_PUBLISHED: [(u32, &str); 5] = [(1, "2.8116"), (2, "4.1011"), (3, "5.214"), (4, "5.481"), (5, "5.965")];
pub const DIRECT_PUBLISHED: [((u64, u64), &str); 4] =
    [((5, 125), "0.00152"), ((8, 256), "0.00569"), ((49, 16807), "0.00642"), ((81, 19683), "0.00577")];
pub const CONSTANT_REL_TOL: &str = "2e-3";

/// |x − p| ≤ tol for some x in v.
pub fn within_abs(v: &RealInterval, p: &Q, tol: &Q) -> bool {
    v.lo() - tol <= *p && *p <= v.hi() + tol
}

pub fn within_rel(v: &RealInterval, p: &Q, rel: &Q) -> bool {
    within_abs(v, p, &(p.abs() * rel))
}

fn iv(v: &RealInterval, digits: usize) -> String {
    format!("[{}, {}]", fmt_q(v.lo(), digits), fmt_q(v.hi(), digits))
}

fn search_options(cfg: &RunConfig, force_h1: bool) -> Result<SearchOptions, String> {
    Ok(SearchOptions { degrees: (1..=5).collect(), force_h1, fields: cfg.fields()?, odlyzko: cfg.odlyzko()? })
}

pub fn table1_checks(eps: &Q) -> Vec<Check> {
    let tol = dec(TABLE1_TOL);
    TABLE1_DELTAS
        .iter()
        .zip(TABLE1_PUBLISHED)
        .map(|((n, d), p)| {
            let id = format!("table1.n{n}");
            match disc_upper_bound(*n, &dec(d), eps) {
                Ok(v) => Check::new(&id, within_abs(&v, &dec(p), &tol), Source::Published, format!("{p} ± {TABLE1_TOL}"), iv(&v, 8)),
                Err(e) => Check::error(&id, Source::Published, p, e),
            }
        })
        .collect()
}

pub fn table2_checks(cfg: &RunConfig) -> Vec<Check> {
    let rows = cfg.odlyzko().and_then(|t| reproduce_table2(&t).map_err(|e| e.to_string()));
    match rows {
        Ok(rows) => {
            let got: Vec<u64> = rows.iter().map(|r| r.h3_bound).collect();
            vec![Check::new("table2.h3", got == TABLE2_PUBLISHED, Source::Published, format!("{TABLE2_PUBLISHED:?}"), format!("{got:?}"))]
        }
        Err(e) => vec![Check::error("table2.h3", Source::Published, format!("{TABLE2_PUBLISHED:?}"), e)],
    }
}

/// Caps and direct bounds from a finished search, against the printed values.
pub fn constant_checks(r: &SearchReport) -> Vec<Check> {
    let rel = dec(CONSTANT_REL_TOL);
    let mut out = Vec::new();
    for (n, p) in CAPS_PUBLISHED {
        let id = format!("cap.n{n}");
        let c = r.certificates.iter().find(|c| c.n == n && c.candidate.is_none() && c.bound_used != BoundKind::Deferred);
        match c.and_then(|c| c.computed_value.as_ref()) {
            Some(v) => out.push(Check::new(&id, within_rel(v, &dec(p), &rel), Source::Published, format!("{p} (rel {CONSTANT_REL_TOL})"), iv(v, 8))),
            None => out.push(Check::new(&id, false, Source::Published, p, "missing")),
        }
    }
    for ((dk, dl), p) in DIRECT_PUBLISHED {
        let id = format!("direct.({dk},{dl})");
        let cand = Candidate { disc_k: dk, disc_l: dl };
        let c = r.certificates.iter().find(|c| c.candidate == Some(cand));
        match c.and_then(|c| c.computed_value.as_ref()) {
            Some(v) => out.push(Check::new(&id, within_rel(v, &dec(p), &rel), Source::Published, format!("{p} (rel {CONSTANT_REL_TOL})"), iv(v, 10))),
            None => out.push(Check::new(&id, false, Source::Published, p, "missing")),
        }
    }
    out
}

/// One survivor (12, 144) with e = 1/288; every other certificate eliminates.
pub fn search_checks(r: &SearchReport) -> Vec<Check> {
    let survivors: Vec<String> =
        r.survivors.iter().map(|s| format!("({}, {})", s.candidate.disc_k, s.candidate.disc_l)).collect();
    let unique = r.survivors.len() == 1 && r.survivors[0].candidate == Candidate { disc_k: 12, disc_l: 144 };
    let uncovered: Vec<String> = r
        .certificates
        .iter()
        .filter(|c| c.candidate.is_some() && c.verdict != Verdict::Eliminated)
        .filter(|c| c.candidate != Some(Candidate { disc_k: 12, disc_l: 144 }))
        .map(|c| c.label())
        .collect();
    let e_min = r.survivors.first().and_then(|s| s.e_min_recognized.clone()).unwrap_or_else(|| "none".into());
    let form = r.survivors.first().map(|s| s.hermitian_form.join(", ")).unwrap_or_default();
    vec![
        Check::new("search.survivor", unique, Source::Published, "(12, 144)", survivors.join(" ")),
        Check::new("search.form", form == "1, 1, 1-α", Source::Published, "diag(1, 1, 1-α)", format!("diag({form})")),
        Check::new("search.certificates", uncovered.is_empty(), Source::Computed, "every other pair eliminated", if uncovered.is_empty() { "all eliminated".to_string() } else { uncovered.join(" ") }),
        Check::new("search.e_min", e_min == "1/288", Source::Published, "1/288", e_min),
        Check::new("search.division-algebra", r.division_algebra.d_equals_l, Source::Computed, "D = l", r.division_algebra.d_equals_l.to_string()),
    ]
}

pub fn cmd_bounds(cfg: &RunConfig, n: Option<u32>, delta: Option<&str>) -> Report {
    let mut rep = Report::new("bounds");
    if let Some(d) = delta {
        let n = n.unwrap_or(1);
        let id = format!("bound.n{n}");
        let ds = d.to_string();
        rep.timed("bound", || match crate::exactmath::interval::parse_decimal(&ds) {
            Some(dq) => match disc_upper_bound(n, &dq, &cfg.eps) {
                Ok(v) => vec![Check::new(&id, true, Source::Computed, "interval", iv(&v, 10))],
                Err(e) => vec![Check::error(&id, Source::Computed, "interval", e)],
            },
            None => vec![Check::error(&id, Source::Computed, "interval", format!("bad delta {ds:?}"))],
        });
        return rep;
    }
    let eps = cfg.eps.clone();
    rep.timed("table1", || table1_checks(&eps));
    rep.timed("table2", || table2_checks(cfg));
    rep
}

pub fn cmd_search(cfg: &RunConfig, force_h1: bool) -> Report {
    let mut rep = Report::new("search");
    let t = std::time::Instant::now();
    let result = search_options(cfg, force_h1).and_then(|o| run_full_search(&o).map_err(|e| e.to_string()));
    rep.timings.insert("search".into(), t.elapsed().as_secs_f64());
    match result {
        Ok(r) => {
            for c in &r.certificates {
                let v = c.computed_value.as_ref().map(|v| iv(v, 10)).unwrap_or_else(|| "-".into());
                rep.note(format!("{:<18} {:<20} h3={} {:?} {}", c.label(), v, c.h3, c.verdict, c.note));
            }
            for s in &r.survivors {
                rep.note(format!(
                    "survivor ({}, {}): e(principal) {} index {} e_min {} ~ {}",
                    s.candidate.disc_k,
                    s.candidate.disc_l,
                    iv(&s.e_principal, 12),
                    s.index,
                    iv(&s.e_min, 12),
                    s.e_min_recognized.clone().unwrap_or_default()
                ));
            }
            if force_h1 {
                rep.note("class numbers forced to 1");
            } else {
                rep.checks.extend(search_checks(&r));
            }
            rep.attach("search", &r);
        }
        Err(e) => rep.push(Check::error("search.survivor", Source::Published, "(12, 144)", e)),
    }
    rep
}

pub fn dm_euler_checks() -> Vec<Check> {
    let builtin = builtin_stratification();
    let e = orbifold_euler(&builtin);
    let derived = derive_stratification();
    let same = derived.as_ref().map(|d| d == &builtin).unwrap_or(false);
    let tri = orbifold_euler(&triangle_stratification(&[2, 3, 7]));
    vec![
        match e {
            Ok(e) => Check::new("dm.euler", e == q(1, 288), Source::Published, "1/288", e.to_string()),
            Err(err) => Check::error("dm.euler", Source::Published, "1/288", err),
        },
        Check::new("dm.strata-derived", same, Source::Computed, "derived strata equal the builtin table", same.to_string()),
        match tri {
            Ok(t) => Check::new("dm.triangle-237", t == q(-1, 42), Source::Elementary, "-1/42", t.to_string()),
            Err(err) => Check::error("dm.triangle-237", Source::Elementary, "-1/42", err),
        },
    ]
}

pub fn cmd_dm_tuple(text: &str) -> Report {
    let mut rep = Report::new("dm tuple");
    match BallTuple::parse(text) {
        Ok(t) => {
            let int = check_int(&t);
            let sigma = check_sigma_int(&t);
            rep.note(format!("tuple {t}, dimension {}", t.dimension()));
            for w in &int.witnesses {
                rep.note(format!("INT fails at (mu_{}, mu_{}): (1 - mu_i - mu_j)^-1 = {}", w.i, w.j, w.value));
            }
            rep.push(Check::new("dm.int", true, Source::Computed, "-", int.holds.to_string()));
            rep.push(Check::new("dm.sigma-int", true, Source::Computed, "-", sigma.holds.to_string()));
            if t.len() == 3 {
                if let Ok(tr) = triangle_orbifold(&t) {
                    rep.note(format!("triangle orbifold ({}, {}, {})", tr.r[0], tr.r[1], tr.r[2]));
                }
            }
            rep.attach("int", &int);
            rep.attach("sigmaInt", &sigma);
        }
        Err(e) => rep.push(Check::error("dm.tuple", Source::Computed, "valid ball tuple", e)),
    }
    rep
}

pub fn cmd_dm_euler() -> Report {
    let mut rep = Report::new("dm euler");
    for s in &builtin_stratification().strata {
        rep.note(format!("{:<6} chi {:>3}  |G| {}", s.label, s.chi.to_string(), s.weight));
    }
    rep.timed("dm", dm_euler_checks);
    rep
}

pub fn cmd_dm_triangle(r: [u64; 3]) -> Report {
    let mut rep = Report::new("dm triangle");
    match orbifold_euler(&triangle_stratification(&r)) {
        Ok(e) => rep.push(Check::new("dm.triangle", true, Source::Elementary, "2 - sum(1 - 1/r)", e.to_string())),
        Err(err) => rep.push(Check::error("dm.triangle", Source::Elementary, "-", err)),
    }
    rep
}

pub fn cmd_surface(cfg: &RunConfig, e: Option<&str>, genus: Option<i64>) -> Report {
    let mut rep = Report::new("surface");
    if let Some(g) = genus {
        match hurwitz_bound(g) {
            Ok(b) => rep.push(Check::new("surface.hurwitz", true, Source::Elementary, "84(g - 1)", b.to_string())),
            Err(err) => rep.push(Check::error("surface.hurwitz", Source::Elementary, "84(g - 1)", err)),
        }
    }
    if let Some(e) = e {
        let parsed = crate::exactmath::interval::parse_rational(e);
        match parsed.map(|x| invariant_conversions(&x, &cfg.eps).map(|inv| (x, inv))) {
            Some(Ok((x, inv))) => {
                rep.note(format!("e = {}, chi(O) = {}, K^2 = {}, vol = {}", inv.e, inv.chi_o, inv.k2, iv(&inv.volume, 10)));
                rep.push(Check::new("surface.aut-bound", true, Source::Elementary, "288 e", (x * qi(288)).to_string()));
                rep.attach("invariants", &inv);
            }
            Some(Err(err)) => rep.push(Check::error("surface.e", Source::Elementary, "-", err)),
            None => rep.push(Check::error("surface.e", Source::Elementary, "-", format!("cannot parse {e:?}"))),
        }
    }
    rep
}

fn surface_checks(label: &str, s: &SurfaceCheck, e: i64) -> Vec<Check> {
    let id = |k: &str| format!("group.{label}.{k}");
    vec![
        Check::new(&id("conditions"), s.hurwitz.passes(), Source::Computed, "conditions (1)-(3) hold", format!("{}/{}/{}", s.hurwitz.condition1, s.hurwitz.condition2, s.hurwitz.condition3)),
        Check::new(&id("e"), s.cover.euler_char == qi(e), Source::Published, e.to_string(), s.cover.euler_char.to_string()),
        Check::new(&id("aut"), s.target_order == 288 * e as u128, Source::Published, format!("{} = 288·{e}", 288 * e), s.target_order.to_string()),
        Check::new(&id("classes"), s.torsion_free_classes == 1, Source::Computed, "1 class up to Aut", format!("{} of {} surjection classes", s.torsion_free_classes, s.classes)),
    ]
}

pub fn verify_with(cfg: &RunConfig, name: &str) -> Result<SurfaceCheck, String> {
    let w = cfg.witnesses()?;
    verify_surface(name, cfg.hom_search_budget, &w, BjVariant::Square, &cfg.eps).map_err(|e| e.to_string())
}

fn h1_checks(label: &str, s: &SurfaceCheck, e: i64, published: &str) -> Vec<Check> {
    let id = format!("group.{label}.h1");
    match kernel_homology(&Presentation::gamma(), &s.map) {
        Ok(inv) => {
            let text = format_invariants(&inv);
            let b1 = free_rank(&inv) as i64;
            let hodge = hodge_numbers(e, b1).map(|h| format!(" (q {}, p_g {}, h11 {})", h.q, h.p_g, h.h11)).unwrap_or_default();
            vec![Check::new(&id, text == published, Source::Published, published, text + &hodge)]
        }
        Err(err) => vec![Check::error(&id, Source::Published, published, err)],
    }
}

/// H₁ of the S₁ kernel, for the stretch run.
pub const S1_H1: &str = "Z^14";
pub const S2_H1: &str = "Z/2 x Z/2 x Z/2 x Z/2 x Z/2 x Z/2 x Z/2 x Z/2 x Z/2 x Z/2 x Z/2 x Z/2 x Z/2 x Z/2 x Z/2 x Z^14";

pub fn cmd_verify(cfg: &RunConfig, which: u8) -> Report {
    let mut rep = Report::new(if which == 1 { "group verify-s1" } else { "group verify-s2" });
    let t = std::time::Instant::now();
    let s1 = verify_with(cfg, "psu33xz3");
    rep.timings.insert("s1".into(), t.elapsed().as_secs_f64());
    let s1 = match s1 {
        Ok(s) => s,
        Err(e) => {
            rep.push(Check::error("group.s1", Source::Published, "surjection onto PSU(3,3) x Z/3", e));
            return rep;
        }
    };
    if which == 1 {
        rep.note(format!("images b, j, u, v: {}", s1.images.join("  ")));
        rep.checks.extend(surface_checks("s1", &s1, 63));
        if cfg.stretch {
            rep.timed("h1", || h1_checks("s1", &s1, 63, S1_H1));
        } else {
            rep.push(Check::skip("group.s1.h1", Source::Published, S1_H1, "run with --stretch"));
        }
        rep.attach("s1", &s1);
        return rep;
    }
    let t = std::time::Instant::now();
    let s2 = verify_with(cfg, "psu33xa4");
    rep.timings.insert("s2".into(), t.elapsed().as_secs_f64());
    match s2 {
        Ok(s2) => {
            rep.note(format!("images b, j, u, v: {}", s2.images.join("  ")));
            rep.checks.extend(surface_checks("s2", &s2, 252));
            rep.checks.extend(cover_checks(&s2, &s1));
            if cfg.stretch {
                rep.timed("h1", || h1_checks("s2", &s2, 252, S2_H1));
            } else {
                rep.push(Check::skip("group.s2.h1", Source::Published, "(Z/2)^15 x Z^14", "run with --stretch"));
            }
            rep.attach("s2", &s2);
        }
        Err(e) => rep.push(Check::error("group.s2", Source::Published, "surjection onto PSU(3,3) x A4", e)),
    }
    rep
}

fn cover_checks(s2: &SurfaceCheck, s1: &SurfaceCheck) -> Vec<Check> {
    let fwd = cover_between(s2, s1);
    let back = cover_between(s1, s2);
    let mut out = Vec::new();
    match fwd {
        Ok(r) => out.push(Check::new("group.s2.covers-s1", r.holds && r.degree == Some(4), Source::Published, "regular, degree 4", format!("{} degree {}", r.holds, r.degree.map(|d| d.to_string()).unwrap_or_else(|| "-".into())))),
        Err(e) => out.push(Check::error("group.s2.covers-s1", Source::Published, "regular, degree 4", e)),
    }
    match back {
        Ok(r) => out.push(Check::new("group.s1.not-over-s2", !r.holds, Source::Elementary, "false", r.holds.to_string())),
        Err(e) => out.push(Check::error("group.s1.not-over-s2", Source::Elementary, "false", e)),
    }
    out
}

pub fn frobenius_checks(s1: Option<&SurfaceCheck>, stretch: bool) -> Vec<Check> {
    let psu = match psu33_cached() {
        Ok(p) => p,
        Err(e) => return vec![Check::error("group.frob21", Source::Computed, "order 21", e)],
    };
    let f = match frobenius21(&psu.group) {
        Ok(f) => f,
        Err(e) => return vec![Check::error("group.frob21", Source::Computed, "order 21", e)],
    };
    let ok = f.group.order() == 21 && !f.is_abelian && !f.is_normal;
    let mut out = vec![Check::new(
        "group.frob21",
        ok,
        Source::Computed,
        "nonabelian, not normal, order 21",
        format!("order {}, abelian {}, normal {}", f.group.order(), f.is_abelian, f.is_normal),
    )];
    let e = q(63, 21);
    out.push(Check::new("group.frob21.e", e == qi(3), Source::Published, "63/21 = 3", e.to_string()));
    if let (Some(s1), true) = (s1, stretch) {
        let n = s1.map.target.degree();
        let k = PermGroup::new(n, f.group.generators().iter().map(|g| g.shifted(0, n)).collect()).expect("degree");
        let r = preimage_coset_table(&s1.map, &k)
            .and_then(|t| subgroup_abelian_invariants(&Presentation::gamma(), &t))
            .map(|inv| free_rank(&inv));
        out.push(match r {
            Ok(b1) => Check::new("group.frob21.b1", b1 == 2, Source::Published, "2", b1.to_string()),
            Err(e) => Check::error("group.frob21.b1", Source::Published, "2", e),
        });
    }
    out
}

pub fn cmd_abelianize(p: &Presentation) -> Report {
    let mut rep = Report::new("group abelianize");
    let inv = abelianization(p);
    let n3 = surjections_to_cyclic(&inv, 3);
    rep.note(format!("abelianization: {}", format_invariants(&inv)));
    let is_gamma = *p == Presentation::gamma();
    rep.push(Check::new(
        "group.z3-quotients",
        !is_gamma || n3 == BigInt::from(1),
        if is_gamma { Source::Published } else { Source::Computed },
        if is_gamma { "1" } else { "-" },
        n3.to_string(),
    ));
    rep.attach("invariants", &inv.iter().map(|d| d.to_string()).collect::<Vec<_>>());
    rep
}

pub fn cmd_tc(p: &Presentation, subgroup: &[String], max_cosets: usize) -> Report {
    let mut rep = Report::new("group tc");
    // with generators listed, enumerate the subgroup's own presentation
    // (relators of p in those generators) over the trivial subgroup
    let pres = if subgroup.is_empty() {
        Ok(p.clone())
    } else {
        restrict_presentation(p, subgroup)
    };
    let t = std::time::Instant::now();
    let r = pres.and_then(|pp| todd_coxeter(&pp, &[], max_cosets).map_err(|e| e.to_string()));
    rep.timings.insert("tc".into(), t.elapsed().as_secs_f64());
    match r {
        Ok(Enumeration::Complete(t)) => rep.push(Check::new("group.tc", true, Source::Computed, "closes", format!("{} cosets", t.index()))),
        Ok(Enumeration::Overflow { max_cosets, defined }) => rep.push(Check::new(
            "group.tc",
            true,
            Source::Computed,
            "closes",
            format!("overflow at {max_cosets} live cosets ({defined} defined)"),
        )),
        Err(e) => rep.push(Check::error("group.tc", Source::Computed, "closes", e)),
    }
    rep
}

/// The relators of `p` involving only the named generators.
pub fn restrict_presentation(p: &Presentation, names: &[String]) -> Result<Presentation, String> {
    let idx: Vec<usize> = names
        .iter()
        .map(|n| p.generator_index(n).ok_or_else(|| format!("no generator {n:?}")))
        .collect::<Result<_, _>>()?;
    let rels = p
        .relators()
        .iter()
        .filter(|r| r.support().iter().all(|g| idx.contains(g)))
        .map(|r| {
            crate::fpgroup::Word::from_letters(
                r.letters().iter().map(|&(g, e)| (idx.iter().position(|&x| x == g).expect("in support"), e)),
            )
        })
        .collect();
    Presentation::new(names.to_vec(), rels).map_err(|e| e.to_string())
}

/// Parses "b=3,j=12"; "auto" imposes the torsion orders of Γ when each
/// occurs in the target, "none" imposes nothing.
pub fn parse_orders(p: &Presentation, spec: &str, target_group: &PermGroup) -> Result<EpiOptions, String> {
    let pairs: Vec<(String, u64)> = match spec {
        "none" => Vec::new(),
        "auto" => {
            let elems = target_group.elements().map_err(|e| e.to_string())?;
            let orders: std::collections::BTreeSet<u64> = elems.iter().map(|x| x.order()).collect();
            if GAMMA_ORDERS.iter().all(|(g, o)| p.generator_index(g).is_some() && orders.contains(o)) {
                GAMMA_ORDERS.iter().map(|(g, o)| (g.to_string(), *o)).collect()
            } else {
                Vec::new()
            }
        }
        s => s
            .split(',')
            .map(|kv| {
                let (k, v) = kv.split_once('=').ok_or_else(|| format!("expected name=order, got {kv:?}"))?;
                Ok((k.trim().to_string(), v.trim().parse::<u64>().map_err(|e| format!("{kv:?}: {e}"))?))
            })
            .collect::<Result<_, String>>()?,
    };
    let refs: Vec<(&str, u64)> = pairs.iter().map(|(k, v)| (k.as_str(), *v)).collect();
    EpiOptions::with_orders(p, &refs).map_err(|e| e.to_string())
}

pub fn cmd_homsearch(cfg: &RunConfig, p: &Presentation, target_name: &str, orders: &str, budget: Option<u64>) -> Report {
    let mut rep = Report::new("group homsearch");
    let t = match target(target_name) {
        Ok(t) => t,
        Err(e) => {
            rep.push(Check::error("group.homsearch", Source::Computed, "-", e));
            return rep;
        }
    };
    let opts = parse_orders(p, orders, &t.group).map(|mut o| {
        o.budget = budget.unwrap_or(cfg.hom_search_budget);
        o
    });
    let start = std::time::Instant::now();
    let r = opts.and_then(|o| find_epimorphisms(p, &t, &o).map_err(|e| e.to_string()));
    rep.timings.insert("search".into(), start.elapsed().as_secs_f64());
    match r {
        Ok(s) => {
            rep.note(format!(
                "target {} (order {}), search order {}, {} nodes",
                t.description,
                t.group.order(),
                s.search_order.join(","),
                s.nodes
            ));
            for (i, m) in s.maps.iter().enumerate() {
                let imgs: Vec<String> = m.images.iter().map(|x| x.to_string()).collect();
                rep.note(format!("class {}: {}", i + 1, imgs.join("  ")));
            }
            rep.push(Check::new("group.homsearch", true, Source::Computed, "-", format!("{} classes up to automorphism", s.count())));
        }
        Err(e) => rep.push(Check::error("group.homsearch", Source::Computed, "-", e)),
    }
    rep
}

pub fn cmd_targets() -> Report {
    let mut rep = Report::new("group target");
    for name in TARGET_NAMES {
        match target(name) {
            Ok(t) => rep.note(format!("{name:<9} {:<16} order {:>6}  degree {}", t.description, t.group.order(), t.group.degree())),
            Err(e) => rep.push(Check::error(&format!("target.{name}"), Source::Computed, "-", e)),
        }
    }
    rep
}

/// The full run: covolume search, orbifold Euler characteristic, S₁, S₂ and
/// the Frobenius quotient. Failures are recorded and the run continues.
pub fn cmd_check_all(cfg: &RunConfig) -> Report {
    let mut rep = Report::new("paper-check");
    rep.timed("table1", || table1_checks(&dec("1e-8")));
    rep.timed("table2", || table2_checks(cfg));
    let mut search: Option<SearchReport> = None;
    rep.timed("covolume", || match search_options(cfg, false).and_then(|o| run_full_search(&o).map_err(|e| e.to_string())) {
        Ok(r) => {
            let mut c = search_checks(&r);
            c.extend(constant_checks(&r));
            search = Some(r);
            c
        }
        Err(e) => vec![Check::error("search.survivor", Source::Published, "(12, 144)", e)],
    });
    rep.timed("dm", dm_euler_checks);
    let mut s1 = None;
    rep.timed("s1", || match verify_with(cfg, "psu33xz3") {
        Ok(s) => {
            let c = surface_checks("s1", &s, 63);
            s1 = Some(s);
            c
        }
        Err(e) => vec![Check::error("group.s1", Source::Published, "surjection onto PSU(3,3) x Z/3", e)],
    });
    rep.timed("s2", || match verify_with(cfg, "psu33xa4") {
        Ok(s2) => {
            let mut c = surface_checks("s2", &s2, 252);
            match &s1 {
                Some(s1) => c.extend(cover_checks(&s2, s1)),
                None => c.push(Check::new("group.s2.covers-s1", false, Source::Published, "regular, degree 4", "no S1 map")),
            }
            c
        }
        Err(e) => vec![Check::error("group.s2", Source::Published, "surjection onto PSU(3,3) x A4", e)],
    });
    let stretch = cfg.stretch;
    rep.timed("frob21", || frobenius_checks(s1.as_ref(), stretch));
    if stretch {
        match &s1 {
            Some(s) => rep.timed("h1", || h1_checks("s1", s, 63, S1_H1)),
            None => rep.push(Check::new("group.s1.h1", false, Source::Published, S1_H1, "no S1 map")),
        }
    } else {
        rep.push(Check::skip("group.s1.h1", Source::Published, S1_H1, "run with --stretch"));
    }
    if let Some(r) = &search {
        rep.attach("survivors", &r.survivors);
    }
    rep
}

/// Every numeric constant quoted in the source with its recomputed value.
pub fn cmd_constants(cfg: &RunConfig) -> Report {
    let mut rep = Report::new("constants");
    let eps = cfg.eps.clone();
    rep.timed("table1", || table1_checks(&eps));
    rep.timed("covolume", || match search_options(cfg, false).and_then(|o| run_full_search(&o).map_err(|e| e.to_string())) {
        Ok(r) => {
            let mut c = constant_checks(&r);
            if let Some(s) = r.survivors.first() {
                let e_p = s.e_principal_recognized.clone().unwrap_or_default();
                c.push(Check::new("e_principal", e_p == "1/96", Source::Computed, "1/96", format!("{e_p} {}", iv(&s.e_principal, 14))));
                c.push(Check::new("index", s.index == 3, Source::Computed, "3", s.index.to_string()));
                let inv = s.e_min.recip().ok().map(|v| iv(&v, 10)).unwrap_or_default();
                c.push(Check::new("288", s.e_min_recognized.as_deref() == Some("1/288"), Source::Published, "1/e_min = 3·96 = 288", inv));
            }
            c
        }
        Err(e) => vec![Check::error("covolume", Source::Published, "-", e)],
    });
    let rel = dec(CONSTANT_REL_TOL);
    rep.timed("volume", || match vol_lower(&eps) {
        Ok(v) => vec![Check::new("pi^2/1944", within_rel(&v, &dec("0.005077"), &rel), Source::Published, "0.005077", iv(&v, 10))],
        Err(e) => vec![Check::error("pi^2/1944", Source::Published, "0.005077", e)],
    });
    let b = ball_aut_constant();
    rep.push(Check::new("b", b == 5184, Source::Published, "5184", b.to_string()));
    let h = hurwitz_bound(3).unwrap_or_default();
    rep.push(Check::new("84(g-1) at g=3", h == 168, Source::Published, "168", h.to_string()));
    let a = (qi(63) * qi(288)).to_integer().to_i64().unwrap_or_default();
    rep.push(Check::new("288 e at e=63", a == 18144, Source::Published, "18144", a.to_string()));
    rep
}

/// GAMMA with the chosen reading of the (bj) relator.
pub fn gamma(variant: BjVariant) -> Presentation {
    Presentation::gamma_variant(variant)
}
