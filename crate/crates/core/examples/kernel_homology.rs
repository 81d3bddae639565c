use ballquot::exactmath::dec;
use ballquot::fpgroup::{format_invariants, free_rank, hodge_numbers, kernel_homology, verify_s1, Presentation};

// Reidemeister-Schreier on the index-18144 kernel, then sparse elimination.
fn main() {
    let s1 = verify_s1(2_000_000_000, &dec("1e-10")).unwrap();
    let t = std::time::Instant::now();
    let inv = kernel_homology(&Presentation::gamma(), &s1.map).unwrap();
    println!("H1(S1) = {} ({:?})", format_invariants(&inv), t.elapsed());
    let h = hodge_numbers(63, free_rank(&inv) as i64).unwrap();
    println!("q = {}, p_g = {}, h11 = {}", h.q, h.p_g, h.h11);
}
