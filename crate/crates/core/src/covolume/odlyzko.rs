use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::exactmath::interval::parse_decimal;
use crate::exactmath::{dec, Q};

use super::bounds::{disc_upper_bound, TABLE1_DELTAS};
use super::CovolumeError;

pub const ODLYZKO_JSON: &str = include_str!("../../data/odlyzko.json");

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct OdlyzkoEntry {
    pub degree: u32,
    pub root_disc_lower: String,
    pub source: String,
}

/// Lower bounds for the root discriminant of totally complex fields, by degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OdlyzkoTable {
    pub entries: BTreeMap<u32, (Q, String)>,
}

impl OdlyzkoTable {
    pub fn builtin() -> Self {
        Self::parse(ODLYZKO_JSON).expect("embedded odlyzko table is valid")
    }

    pub fn parse(text: &str) -> Result<Self, CovolumeError> {
        let rows: Vec<OdlyzkoEntry> = serde_json::from_str(text).map_err(|e| CovolumeError::Data(e.to_string()))?;
        let mut entries = BTreeMap::new();
        for r in rows {
            let v = parse_decimal(&r.root_disc_lower)
                .ok_or_else(|| CovolumeError::Data(format!("bad bound {:?}", r.root_disc_lower)))?;
            entries.insert(r.degree, (v, r.source));
        }
        Ok(OdlyzkoTable { entries })
    }

    pub fn load(path: &Path) -> Result<Self, CovolumeError> {
        let text = std::fs::read_to_string(path).map_err(|e| CovolumeError::Data(format!("{}: {e}", path.display())))?;
        Self::parse(&text)
    }

    pub fn lower(&self, degree: u32) -> Option<&Q> {
        self.entries.get(&degree).map(|(v, _)| v)
    }
}

/// Poitou's weight: (1 − x) cos πx + sin(πx)/π on [0, 1], zero beyond.
fn weight(x: f64) -> f64 {
    use std::f64::consts::PI;
    if x >= 1.0 {
        0.0
    } else {
        (1.0 - x) * (PI * x).cos() + (PI * x).sin() / PI
    }
}

fn explicit_formula(degree: u32, b: f64) -> f64 {
    use std::f64::consts::PI;
    const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;
    let n = degree as f64;
    let f = |x: f64| {
        if x < 1e-9 {
            return 0.0;
        }
        (1.0 - weight(x / b) / (x / 2.0).cosh()) / (2.0 * (x / 2.0).sinh())
    };
    // Simpson on [0, b]
    let m = 4000;
    let h = b / m as f64;
    let mut s = f(0.0) + f(b);
    for i in 1..m {
        let x = i as f64 * h;
        s += if i % 2 == 1 { 4.0 } else { 2.0 } * f(x);
    }
    let inner = s * h / 3.0;
    let tail = -(b / 4.0).tanh().ln();
    let log_rd = EULER_GAMMA + (8.0 * PI).ln() - inner - tail - 16.0 * b / (PI * PI * n);
    log_rd.exp()
}

/// Unconditional explicit-formula lower bound on the root discriminant of a
/// totally complex field of the given degree, maximized over the scale b.
pub fn explicit_formula_bound(degree: u32) -> f64 {
    let (mut lo, mut hi) = (0.05_f64, 40.0_f64);
    let g = (5.0_f64.sqrt() - 1.0) / 2.0;
    for _ in 0..80 {
        let a = hi - g * (hi - lo);
        let c = lo + g * (hi - lo);
        if explicit_formula(degree, a) < explicit_formula(degree, c) {
            lo = a;
        } else {
            hi = c;
        }
    }
    explicit_formula(degree, (lo + hi) / 2.0)
}

#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Table2Row {
    pub n: u32,
    pub disc_bound: f64,
    /// Degrees 2n·3^a that were tested, with their root-discriminant lower bounds.
    pub probes: Vec<(u32, String)>,
    pub h3_bound: u64,
}

/// Largest power of 3 that a class number of ℓ can contain: the Hilbert class
/// field has the same root discriminant as ℓ, so a subextension of degree
/// 2n·3^a must respect the tabulated lower bound.
pub fn reproduce_table2(table: &OdlyzkoTable) -> Result<Vec<Table2Row>, CovolumeError> {
    let mut out = Vec::new();
    for (n, delta) in TABLE1_DELTAS {
        let b = disc_upper_bound(n, &dec(delta), &dec("1e-8"))?;
        let mut h: u64 = 1;
        let mut probes = Vec::new();
        loop {
            let deg = 2 * n * (h as u32) * 3;
            let lower = table
                .lower(deg)
                .ok_or_else(|| CovolumeError::Data(format!("no discriminant bound for degree {deg}")))?;
            probes.push((deg, crate::exactmath::interval::fmt_q(lower, 6)));
            if lower > b.hi() {
                break;
            }
            h *= 3;
        }
        out.push(Table2Row { n, disc_bound: b.hi_f64(), probes, h3_bound: h });
    }
    Ok(out)
}

pub fn table2_map(rows: &[Table2Row]) -> BTreeMap<u32, u64> {
    rows.iter().map(|r| (r.n, r.h3_bound)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn explicit_formula_values() {
        assert!((explicit_formula_bound(2) - 1.72027).abs() < 1e-3);
        assert!((explicit_formula_bound(24) - 10.6266).abs() < 1e-3);
        // quadratic and quartic minima: sqrt(3), 117^(1/4)
        assert!(explicit_formula_bound(2) < 3f64.sqrt());
        assert!(explicit_formula_bound(4) < 117f64.powf(0.25));
    }
}
