use ballquot::finitegrp::target;
use ballquot::fpgroup::{find_epimorphisms, EpiOptions, Presentation};

// Small targets with and without prescribed generator orders.
fn main() {
    let g = Presentation::gamma();
    for name in ["z3", "a4", "frob21"] {
        let t = target(name).unwrap();
        let s = find_epimorphisms(&g, &t, &EpiOptions::default()).unwrap();
        println!("{:<7} {} classes, {} nodes, order {}", t.description, s.count(), s.nodes, s.search_order.join(","));
        for m in &s.maps {
            let imgs: Vec<String> = m.images.iter().map(|x| x.to_string()).collect();
            println!("   {}", imgs.join("  "));
        }
    }
    let p = Presentation::parse(&["x", "y"], &["x^2", "y^3", "(x*y)^3"]).unwrap();
    let opts = EpiOptions::with_orders(&p, &[("x", 2), ("y", 3)]).unwrap();
    let s = find_epimorphisms(&p, &target("a4").unwrap(), &opts).unwrap();
    println!("(2,3,3) -> A4: {} class(es)", s.count());
}
