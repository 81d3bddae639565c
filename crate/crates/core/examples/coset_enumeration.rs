use ballquot::fpgroup::{todd_coxeter, Enumeration, Presentation};

fn main() {
    let g10 = Presentation::g10();
    for r in g10.relators() {
        println!("  {}", g10.format_word(r));
    }
    match todd_coxeter(&g10, &[], 100_000).unwrap() {
        Enumeration::Complete(t) => println!("<j,u,v> has order {}", t.index()),
        Enumeration::Overflow { max_cosets, .. } => println!("no closure within {max_cosets} cosets"),
    }

    // the subgroup <u> has index 288/4
    let u = g10.word("u").unwrap();
    let t = todd_coxeter(&g10, &[u], 100_000).unwrap();
    println!("[<j,u,v> : <u>] = {}", t.index().unwrap_or(0));

    let gamma = Presentation::gamma();
    match todd_coxeter(&gamma, &[], 200_000).unwrap() {
        Enumeration::Complete(t) => println!("Gamma closes at {}", t.index()),
        Enumeration::Overflow { max_cosets, defined } => {
            println!("Gamma over the trivial subgroup: overflow at {max_cosets} ({defined} cosets defined)")
        }
    }
}
