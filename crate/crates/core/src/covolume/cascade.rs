use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use rayon::prelude::*;
use serde::Serialize;

use crate::exactmath::interval::{refine, serialize_q};
use crate::exactmath::special::{dedekind_zeta_bits, riemann_zeta_bits};
use crate::exactmath::{dec, q, qi, FieldDesc, FieldTable, RealInterval, Q};

use super::bounds::{direct_lower_bound, disc_upper_bound, rational_cap, root_disc_cap, TABLE1_DELTAS};
use super::odlyzko::{reproduce_table2, table2_map, OdlyzkoTable, Table2Row};
use super::prasad::{
    division_algebra_check, index_bound, prasad_euler_char, relative_l_bits, CommClassData, DivisionAlgebraRecord,
};
use super::CovolumeError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Candidate {
    pub disc_k: u64,
    pub disc_l: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum BoundKind {
    /// Disc_ℓ cap for k = Q
    #[serde(rename = "field-bound-q")]
    FieldBoundQ,
    /// Disc_ℓ^(1/4) cap for real quadratic k
    #[serde(rename = "field-bound-quad")]
    FieldBoundQuad,
    /// Disc_ℓ^(1/2n) cap against a root-discriminant lower bound
    #[serde(rename = "field-bound-n")]
    FieldBoundN,
    /// lower bound on the Euler characteristic for one (k, ℓ) pair
    #[serde(rename = "field-bound-direct")]
    FieldBoundDirect,
    #[serde(rename = "deferred")]
    Deferred,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub enum Verdict {
    Eliminated,
    Survives,
    Indeterminate,
    Deferred,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct EliminationCertificate {
    pub n: u32,
    /// None when the certificate covers every pair of this degree.
    pub candidate: Option<Candidate>,
    pub bound_used: BoundKind,
    pub computed_value: Option<RealInterval>,
    #[serde(serialize_with = "serialize_q")]
    pub threshold: Q,
    /// h_{ℓ,3} fed into the bound
    pub h3: u64,
    pub verdict: Verdict,
    pub note: String,
}

impl EliminationCertificate {
    pub fn label(&self) -> String {
        match self.candidate {
            Some(c) => format!("n={} ({}, {})", self.n, c.disc_k, c.disc_l),
            None => format!("n={}", self.n),
        }
    }
}

const ELIM_THRESHOLD: (i64, i64) = (1, 864);

/// Evaluates `f` on the precision schedule 1e-4, 1e-6, ... (six attempts)
/// until `decide` gives an answer.
fn schedule<F, D>(f: F, decide: D) -> Result<(RealInterval, Option<bool>), CovolumeError>
where
    F: Fn(&Q) -> Result<RealInterval, CovolumeError>,
    D: Fn(&RealInterval) -> Option<bool>,
{
    let mut eps = dec("1e-4");
    let mut last = None;
    for _ in 0..6 {
        let v = f(&eps)?;
        if let Some(b) = decide(&v) {
            return Ok((v, Some(b)));
        }
        last = Some(v);
        eps = &eps * q(1, 100);
    }
    Ok((last.expect("at least one attempt"), None))
}

fn verdict_of(x: Option<bool>) -> Verdict {
    match x {
        Some(true) => Verdict::Eliminated,
        Some(false) => Verdict::Survives,
        None => Verdict::Indeterminate,
    }
}

/// Power of 3 dividing the class number, if it is known.
fn three_part(h: u32) -> u64 {
    let mut h = h as u64;
    let mut p = 1;
    while h.is_multiple_of(3) {
        h /= 3;
        p *= 3;
    }
    p
}

#[derive(Debug, Clone)]
pub struct SearchOptions {
    pub degrees: Vec<u32>,
    /// Pretend the class-number bound is 1 for every n.
    pub force_h1: bool,
    pub fields: FieldTable,
    pub odlyzko: OdlyzkoTable,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            degrees: (1..=5).collect(),
            force_h1: false,
            fields: FieldTable::builtin(),
            odlyzko: OdlyzkoTable::builtin(),
        }
    }
}

fn candidate_pairs(fields: &FieldTable, n: u32, max_disc_l: u64) -> Vec<(FieldDesc, FieldDesc)> {
    let mut out = Vec::new();
    for l in fields.select(2 * n, true, max_disc_l) {
        for k in fields.select(n, false, max_disc_l) {
            if l.disc % (k.disc * k.disc) == 0 {
                out.push((k.clone(), l.clone()));
            }
        }
    }
    out.sort_by_key(|(k, l)| (k.disc, l.disc));
    out
}

fn direct_certificate(n: u32, k: &FieldDesc, l: &FieldDesc, h_table: u64, force_h1: bool) -> Result<EliminationCertificate, CovolumeError> {
    let h3 = if force_h1 {
        1
    } else {
        l.class_number.map(three_part).unwrap_or(h_table)
    };
    let thr = q(ELIM_THRESHOLD.0, ELIM_THRESHOLD.1);
    let (v, d) = schedule(
        |eps| direct_lower_bound(n, k.disc, l.disc, h3, eps),
        |v| {
            if v.gt(&thr) {
                Some(true)
            } else if v.hi() <= &thr {
                Some(false)
            } else {
                None
            }
        },
    )?;
    Ok(EliminationCertificate {
        n,
        candidate: Some(Candidate { disc_k: k.disc, disc_l: l.disc }),
        bound_used: BoundKind::FieldBoundDirect,
        computed_value: Some(v),
        threshold: thr,
        h3,
        verdict: verdict_of(d),
        note: format!("{} over {}", l.label, k.label),
    })
}

/// Certificates for every commensurability class with k of degree n.
pub fn field_bound_cascade(n: u32) -> Result<Vec<EliminationCertificate>, CovolumeError> {
    let opts = SearchOptions::default();
    let t2 = table2_map(&reproduce_table2(&opts.odlyzko)?);
    cascade_with(n, &opts, &t2)
}

fn cascade_with(n: u32, opts: &SearchOptions, t2: &BTreeMap<u32, u64>) -> Result<Vec<EliminationCertificate>, CovolumeError> {
    if n >= 6 || n == 0 {
        return Ok(vec![EliminationCertificate {
            n,
            candidate: None,
            bound_used: BoundKind::Deferred,
            computed_value: None,
            threshold: qi(0),
            h3: 0,
            verdict: Verdict::Deferred,
            note: "degrees n >= 6 are handled by Prasad–Yeung and not recomputed here".into(),
        }]);
    }
    let h_table = if opts.force_h1 { 1 } else { *t2.get(&n).ok_or_else(|| CovolumeError::Data(format!("no class-number row for n = {n}")))? };
    let mut certs = Vec::new();

    if n == 1 {
        // Disc_ℓ ≤ cap, against the smallest imaginary quadratic discriminant 3
        let thr = qi(3);
        let (v, d) = schedule(|eps| rational_cap(h_table, eps), |v| {
            if v.lt(&thr) {
                Some(true)
            } else if v.lo() >= &thr {
                Some(false)
            } else {
                None
            }
        })?;
        let verdict = verdict_of(d);
        certs.push(EliminationCertificate {
            n,
            candidate: None,
            bound_used: BoundKind::FieldBoundQ,
            computed_value: Some(v.clone()),
            threshold: thr,
            h3: h_table,
            verdict,
            note: "Disc_l <= cap < 3".into(),
        });
        if verdict != Verdict::Eliminated {
            let max = v.hi().floor().to_integer().to_u64().unwrap_or(0);
            let pairs = candidate_pairs(&opts.fields, 1, max);
            certs.extend(direct_all(1, &pairs, h_table, opts.force_h1)?);
        }
        return Ok(certs);
    }

    let (cap, _) = schedule(|eps| root_disc_cap(n, h_table, eps), |_| Some(true))?;
    if n >= 4 {
        let lower = opts
            .odlyzko
            .lower(2 * n)
            .ok_or_else(|| CovolumeError::Data(format!("no discriminant bound for degree {}", 2 * n)))?
            .clone();
        let (v, d) = schedule(|eps| root_disc_cap(n, h_table, eps), |v| {
            if v.lt(&lower) {
                Some(true)
            } else if v.lo() >= &lower {
                Some(false)
            } else {
                None
            }
        })?;
        let verdict = verdict_of(d);
        certs.push(EliminationCertificate {
            n,
            candidate: None,
            bound_used: BoundKind::FieldBoundN,
            computed_value: Some(v),
            threshold: lower,
            h3: h_table,
            verdict,
            note: format!("root discriminant cap against the degree-{} lower bound", 2 * n),
        });
        if verdict == Verdict::Eliminated {
            return Ok(certs);
        }
    } else {
        certs.push(EliminationCertificate {
            n,
            candidate: None,
            bound_used: if n == 2 { BoundKind::FieldBoundQuad } else { BoundKind::FieldBoundN },
            computed_value: Some(cap.clone()),
            threshold: qi(0),
            h3: h_table,
            verdict: Verdict::Survives,
            note: "cap on Disc_l^(1/2n); candidates enumerated below".into(),
        });
    }
    let cap_pow = cap.powi(2 * n as i64)?;
    let max: BigInt = cap_pow.hi().floor().to_integer();
    let max = max.to_u64().unwrap_or(u64::MAX);
    let pairs = candidate_pairs(&opts.fields, n, max);
    certs.extend(direct_all(n, &pairs, h_table, opts.force_h1)?);
    Ok(certs)
}

fn direct_all(
    n: u32,
    pairs: &[(FieldDesc, FieldDesc)],
    h_table: u64,
    force_h1: bool,
) -> Result<Vec<EliminationCertificate>, CovolumeError> {
    pairs.par_iter().map(|(k, l)| direct_certificate(n, k, l, h_table, force_h1)).collect()
}

#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct SurvivorRecord {
    pub candidate: Candidate,
    pub k: String,
    pub l: String,
    /// hermitian form diag(1, 1, 1 − α)
    pub hermitian_form: [String; 3],
    pub e_principal: RealInterval,
    pub index: u64,
    pub e_min: RealInterval,
    /// smallest-denominator rational inside e_min (denominator ≤ 10⁴)
    pub e_min_recognized: Option<String>,
    pub e_principal_recognized: Option<String>,
    pub zeta_product: RealInterval,
    pub zeta_2n_sqrt: RealInterval,
    pub zeta_product_exceeds: bool,
}

#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Table1Row {
    pub n: u32,
    pub delta: String,
    pub bound: RealInterval,
}

#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct SearchReport {
    pub table1: Vec<Table1Row>,
    pub table2: Vec<Table2Row>,
    pub certificates: Vec<EliminationCertificate>,
    pub survivors: Vec<SurvivorRecord>,
    pub division_algebra: DivisionAlgebraRecord,
    pub constants: BTreeMap<String, RealInterval>,
}

pub fn table1(eps: &Q) -> Result<Vec<Table1Row>, CovolumeError> {
    TABLE1_DELTAS
        .par_iter()
        .map(|(n, d)| Ok(Table1Row { n: *n, delta: d.to_string(), bound: disc_upper_bound(*n, &dec(d), eps)? }))
        .collect()
}

/// Discriminant bounds, class-number bounds, the per-degree cascades, the
/// division-algebra check and the survivor's volume.
pub fn run_full_search(opts: &SearchOptions) -> Result<SearchReport, CovolumeError> {
    let t1 = table1(&dec("1e-8"))?;
    let t2 = reproduce_table2(&opts.odlyzko)?;
    let t2m = table2_map(&t2);
    let mut certificates = Vec::new();
    for &n in &opts.degrees {
        certificates.extend(cascade_with(n, opts, &t2m)?);
    }
    if let Some(bad) = certificates.iter().find(|c| c.verdict == Verdict::Indeterminate) {
        return Err(CovolumeError::Indeterminate(bad.label()));
    }
    let division_algebra = division_algebra_check();
    let mut survivors = Vec::new();
    for c in certificates.iter().filter(|c| c.verdict == Verdict::Survives) {
        let Some(cand) = c.candidate else { continue };
        let k = opts.fields.find(c.n, cand.disc_k).cloned();
        let l = opts.fields.find(2 * c.n, cand.disc_l).cloned();
        let (Some(k), Some(l)) = (k, l) else {
            return Err(CovolumeError::Data(format!("survivor {} missing from the field table", c.label())));
        };
        survivors.push(survivor_record(c.n, cand, k, l, &division_algebra)?);
    }
    let mut constants = BTreeMap::new();
    for s in &survivors {
        constants.insert(format!("e_principal({},{})", s.candidate.disc_k, s.candidate.disc_l), s.e_principal.clone());
        constants.insert(format!("e_min({},{})", s.candidate.disc_k, s.candidate.disc_l), s.e_min.clone());
    }
    for c in &certificates {
        if let Some(v) = &c.computed_value {
            constants.insert(format!("{} {:?}", c.label(), c.bound_used), v.clone());
        }
    }
    Ok(SearchReport { table1: t1, table2: t2, certificates, survivors, division_algebra, constants })
}

fn survivor_record(
    n: u32,
    cand: Candidate,
    k: FieldDesc,
    l: FieldDesc,
    da: &DivisionAlgebraRecord,
) -> Result<SurvivorRecord, CovolumeError> {
    let is_zeta12 = cand == Candidate { disc_k: 12, disc_l: 144 };
    if is_zeta12 && !da.d_equals_l {
        return Err(CovolumeError::Data("division algebra check failed".into()));
    }
    let c = CommClassData::new(k.clone(), l.clone());
    let eps = dec("1e-12");
    let e_principal = prasad_euler_char(&c, &eps)?;
    let index = index_bound(&c);
    let e_min = e_principal.scale(&q(1, index as i64));
    let zp = refine(&eps, |bits| {
        let z = dedekind_zeta_bits(&k, &RealInterval::int(2), bits + 16)?;
        Ok((&z * &relative_l_bits(&c, 3, bits + 16)?).round(bits + 4))
    })?;
    let z2n = refine(&eps, |bits| riemann_zeta_bits(&RealInterval::int(2 * n as i64), bits + 16)?.sqrt(bits + 16))?;
    let exceeds = zp.lo() > z2n.hi();
    Ok(SurvivorRecord {
        candidate: cand,
        k: k.label,
        l: l.label,
        hermitian_form: ["1".into(), "1".into(), "1-α".into()],
        e_principal: e_principal.clone(),
        index,
        e_min: e_min.clone(),
        e_min_recognized: recognize(&e_min).map(|x| x.to_string()),
        e_principal_recognized: recognize(&e_principal).map(|x| x.to_string()),
        zeta_product: zp,
        zeta_2n_sqrt: z2n,
        zeta_product_exceeds: exceeds,
    })
}

/// The rational with smallest denominator (at most 10⁴) inside `v`, if any.
pub fn recognize(v: &RealInterval) -> Option<Q> {
    (1..=10_000i64).find_map(|d| {
        let p = (v.lo() * qi(d)).ceil();
        let x = p / qi(d);
        v.contains(&x).then_some(x)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn three_parts() {
        assert_eq!(three_part(1), 1);
        assert_eq!(three_part(18), 9);
    }

    #[test]
    fn degree_two_candidates() {
        let pairs = candidate_pairs(&FieldTable::builtin(), 2, 282);
        let v: Vec<_> = pairs.iter().map(|(k, l)| (k.disc, l.disc)).collect();
        assert_eq!(v, vec![(5, 125), (5, 225), (8, 256), (12, 144)]);
    }
}
