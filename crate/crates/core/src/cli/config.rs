use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::covolume::OdlyzkoTable;
use crate::exactmath::interval::{parse_decimal, parse_rational};
use crate::exactmath::{FieldTable, Q};
use crate::fpgroup::TorsionWitnessList;

pub const DATA_ENV: &str = "BALLQUOT_DATA";

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    #[default]
    Human,
    Json,
    Csv,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunConfig {
    pub eps: Q,
    pub max_cosets: usize,
    pub hom_search_budget: u64,
    /// Directory whose fields.json, odlyzko.json and torsion_witnesses.json
    /// replace the embedded copies.
    pub data_dir: Option<PathBuf>,
    pub output_format: OutputFormat,
    pub stretch: bool,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            eps: parse_decimal("1e-10").expect("literal"),
            max_cosets: 1_000_000,
            hom_search_budget: 2_000_000_000,
            data_dir: None,
            output_format: OutputFormat::Human,
            stretch: false,
        }
    }
}

/// The TOML file layout; every key is optional.
#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields, rename_all = "kebab-case")]
pub struct ConfigFile {
    pub eps: Option<String>,
    pub max_cosets: Option<usize>,
    pub hom_search_budget: Option<u64>,
    pub data_dir: Option<PathBuf>,
    pub output_format: Option<OutputFormat>,
    pub stretch: Option<bool>,
}

/// Command-line values; set fields win over the file and the environment.
#[derive(Debug, Default, Clone)]
pub struct Overrides {
    pub eps: Option<String>,
    pub max_cosets: Option<usize>,
    pub hom_search_budget: Option<u64>,
    pub data_dir: Option<PathBuf>,
    pub output_format: Option<OutputFormat>,
    pub stretch: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("configuration error: {0}")]
pub struct ConfigError(pub String);

pub fn parse_eps(s: &str) -> Result<Q, ConfigError> {
    let e = parse_decimal(s)
        .or_else(|| parse_rational(s))
        .ok_or_else(|| ConfigError(format!("cannot parse precision {s:?}")))?;
    if e <= Q::from_integer(0.into()) {
        return Err(ConfigError(format!("precision must be positive, got {s}")));
    }
    Ok(e)
}

impl RunConfig {
    /// Defaults, then the config file, then `BALLQUOT_DATA`, then flags.
    pub fn resolve(file: Option<&Path>, flags: &Overrides) -> Result<Self, ConfigError> {
        let mut cfg = RunConfig::default();
        if let Some(path) = file {
            let text = std::fs::read_to_string(path).map_err(|e| ConfigError(format!("{}: {e}", path.display())))?;
            cfg.apply_file(&text)?;
        }
        if let Some(d) = std::env::var_os(DATA_ENV) {
            cfg.data_dir = Some(PathBuf::from(d));
        }
        cfg.apply(flags)?;
        Ok(cfg)
    }

    pub fn apply_file(&mut self, text: &str) -> Result<(), ConfigError> {
        let f: ConfigFile = toml::from_str(text).map_err(|e| ConfigError(e.to_string()))?;
        if let Some(e) = f.eps {
            self.eps = parse_eps(&e)?;
        }
        if let Some(m) = f.max_cosets {
            self.max_cosets = m;
        }
        if let Some(b) = f.hom_search_budget {
            self.hom_search_budget = b;
        }
        if let Some(d) = f.data_dir {
            self.data_dir = Some(d);
        }
        if let Some(o) = f.output_format {
            self.output_format = o;
        }
        if let Some(s) = f.stretch {
            self.stretch = s;
        }
        self.validate()
    }

    pub fn apply(&mut self, o: &Overrides) -> Result<(), ConfigError> {
        if let Some(e) = &o.eps {
            self.eps = parse_eps(e)?;
        }
        if let Some(m) = o.max_cosets {
            self.max_cosets = m;
        }
        if let Some(b) = o.hom_search_budget {
            self.hom_search_budget = b;
        }
        if let Some(d) = &o.data_dir {
            self.data_dir = Some(d.clone());
        }
        if let Some(f) = o.output_format {
            self.output_format = f;
        }
        self.stretch |= o.stretch;
        self.validate()
    }

    fn validate(&self) -> Result<(), ConfigError> {
        if self.max_cosets == 0 || self.hom_search_budget == 0 {
            return Err(ConfigError("budgets must be positive".into()));
        }
        Ok(())
    }

    fn data_file(&self, name: &str) -> Option<PathBuf> {
        self.data_dir.as_ref().map(|d| d.join(name)).filter(|p| p.exists())
    }

    pub fn fields(&self) -> Result<FieldTable, String> {
        match self.data_file("fields.json") {
            Some(p) => FieldTable::load(&p).map_err(|e| format!("{}: {e}", p.display())),
            None => Ok(FieldTable::builtin()),
        }
    }

    pub fn odlyzko(&self) -> Result<OdlyzkoTable, String> {
        match self.data_file("odlyzko.json") {
            Some(p) => OdlyzkoTable::load(&p).map_err(|e| format!("{}: {e}", p.display())),
            None => Ok(OdlyzkoTable::builtin()),
        }
    }

    pub fn witnesses(&self) -> Result<TorsionWitnessList, String> {
        match self.data_file("torsion_witnesses.json") {
            Some(p) => TorsionWitnessList::load(&p).map_err(|e| format!("{}: {e}", p.display())),
            None => Ok(TorsionWitnessList::builtin()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn flags_win_over_file() {
        let mut c = RunConfig::default();
        c.apply_file("eps = \"1e-6\"\nmax-cosets = 500\noutput-format = \"json\"\n").unwrap();
        assert_eq!(c.max_cosets, 500);
        assert_eq!(c.output_format, OutputFormat::Json);
        c.apply(&Overrides { max_cosets: Some(7), ..Default::default() }).unwrap();
        assert_eq!(c.max_cosets, 7);
        assert_eq!(c.eps, parse_decimal("1e-6").unwrap());
        assert!(c.apply_file("eps = \"-1\"").is_err());
        assert!(c.apply_file("bogus = 1").is_err());
        assert!(c.apply(&Overrides { hom_search_budget: Some(0), ..Default::default() }).is_err());
    }
}
