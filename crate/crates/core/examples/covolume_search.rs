use ballquot::covolume::{run_full_search, SearchOptions};

fn main() {
    let t = std::time::Instant::now();
    let report = run_full_search(&SearchOptions::default()).expect("search runs");
    for row in &report.table1 {
        println!("n={} delta={} bound {:.8}", row.n, row.delta, row.bound);
    }
    for row in &report.table2 {
        println!("n={} h3 <= {} probes {:?}", row.n, row.h3_bound, row.probes);
    }
    for c in &report.certificates {
        let v = c.computed_value.as_ref().map(|v| format!("{v:.8}")).unwrap_or_default();
        println!("{:<16} {:?} {:<28} h3={} {:?}", c.label(), c.bound_used, v, c.h3, c.verdict);
    }
    for s in &report.survivors {
        println!(
            "survivor ({}, {}): e(Gamma_P) {} ~ {:?}, index {}, e_min {} ~ {:?}, zeta product {} > {}: {}",
            s.candidate.disc_k,
            s.candidate.disc_l,
            s.e_principal,
            s.e_principal_recognized,
            s.index,
            s.e_min,
            s.e_min_recognized,
            s.zeta_product,
            s.zeta_2n_sqrt,
            s.zeta_product_exceeds
        );
    }
    println!("division algebra D = l: {}", report.division_algebra.d_equals_l);
    println!("elapsed {:?}", t.elapsed());
}
