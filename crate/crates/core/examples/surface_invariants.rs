use ballquot::dmorbifold::{aut_bound, ball_aut_constant, hurwitz_bound, invariant_conversions, vol_lower};
use ballquot::exactmath::{dec, qi};

fn main() {
    let eps = dec("1e-12");
    for e in [3, 63, 252] {
        let inv = invariant_conversions(&qi(e), &eps).unwrap();
        println!("e = {e}: chi(O) = {}, K^2 = {}, vol {:.6}, |Aut| <= {}", inv.chi_o, inv.k2, inv.volume, aut_bound(&qi(e)));
    }
    for g in 2..=4 {
        println!("genus {g}: |Aut| <= {}", hurwitz_bound(g).unwrap());
    }
    println!("orbifold volume lower bound {:.8}", vol_lower(&eps).unwrap());
    println!("ball constant {}", ball_aut_constant());
}
