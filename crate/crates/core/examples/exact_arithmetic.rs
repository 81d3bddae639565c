use ballquot::exactmath::interval::pi;
use ballquot::exactmath::{dec, dirichlet_l, gamma_fn, kronecker_symbol, q, qi, riemann_zeta, CycloElem};

fn main() {
    let eps = dec("1e-20");
    println!("pi      {:.22}", pi(80));
    println!("zeta(2) {:.22}", riemann_zeta(&qi(2), &eps).unwrap());
    println!("Gamma(1/3) {:.22}", gamma_fn(&q(1, 3), &eps).unwrap());
    // L(3, chi_-4) L(3, chi_-3), the relative factor for Q(zeta12)/Q(sqrt3)
    let l4 = dirichlet_l(-4, &qi(3), &eps).unwrap();
    let l3 = dirichlet_l(-3, &qi(3), &eps).unwrap();
    println!("L(3,chi_-4) L(3,chi_-3) {:.22}", &l4 * &l3);
    println!("(-3 | 7) = {}", kronecker_symbol(-3, 7).unwrap());

    let z = CycloElem::zeta();
    println!("zeta^12 = 1: {}", z.pow(12) == CycloElem::one());
    let a = CycloElem::alpha();
    println!("alpha = {a}, tau(alpha) = {}, N(alpha) = {}", a.tau(), a.norm());
    let u = &CycloElem::from_ints([2, 0, 0, 0]) - &a;
    println!("2 - alpha = {u}, inverse {}", u.inverse().unwrap());
}
