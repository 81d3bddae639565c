use ballquot::dmorbifold::{
    builtin_stratification, check_int, check_sigma_int, derive_stratification, orbifold_euler, solve_triangle,
    triangle_orbifold, BallTuple,
};

fn main() {
    let t = BallTuple::hurwitz();
    println!("tuple {t}");
    let int = check_int(&t);
    println!("INT {}", int.holds);
    for w in &int.witnesses {
        println!("  fails at ({}, {}): {}", w.i, w.j, w.value);
    }
    println!("SIGMA-INT {}", check_sigma_int(&t).holds);

    let s = builtin_stratification();
    for st in &s.strata {
        println!("{:<5} chi {:>3} / {}", st.label, st.chi.to_string(), st.weight);
    }
    println!("orbifold Euler characteristic {}", orbifold_euler(&s).unwrap());
    println!("derivation agrees with the table: {}", derive_stratification().unwrap() == s);

    let tri = solve_triangle([2, 3, 7]).unwrap();
    let r = triangle_orbifold(&tri).unwrap();
    println!("(2,3,7) from mu = {tri}: r = ({}, {}, {})", r.r[0], r.r[1], r.r[2]);
}
