use ballquot::fpgroup::{abelianization, format_invariants, surjections_to_cyclic, BjVariant, Presentation};

fn main() {
    for (label, p) in [("Gamma", Presentation::gamma()), ("Gamma, cube variant", Presentation::gamma_variant(BjVariant::Cube))] {
        let inv = abelianization(&p);
        println!("{label}: H1 = {}", format_invariants(&inv));
        for prime in [2u32, 3, 5] {
            println!("  surjections onto Z/{prime} up to automorphism: {}", surjections_to_cyclic(&inv, prime));
        }
    }
    for r in Presentation::gamma().relators() {
        println!("  {}", Presentation::gamma().format_word(r));
    }

    let p = Presentation::parse(&["x", "y"], &["x^4", "y^6", "(x,y)"]).unwrap();
    println!("Z/4 x Z/6 -> {}", format_invariants(&abelianization(&p)));
}
