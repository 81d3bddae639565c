use ballquot::exactmath::dec;
use ballquot::fpgroup::{cover_between, verify_s1, verify_s2};

fn main() {
    let eps = dec("1e-10");
    let t = std::time::Instant::now();
    let s1 = verify_s1(2_000_000_000, &eps).unwrap();
    let s2 = verify_s2(2_000_000_000, &eps).unwrap();
    for s in [&s1, &s2] {
        println!("{} (order {}), search order {}", s.target, s.target_order, s.search_order.join(","));
        println!("  {} nodes, {} classes, {} with torsion-free kernel", s.nodes, s.classes, s.torsion_free_classes);
        println!("  b, j, u, v -> {}", s.images.join("  "));
        let h = &s.hurwitz;
        println!("  generates {}, ord(b) {}, |<j,u,v>| {}, conditions {}/{}/{}", h.generates, h.b_order, h.jvu_order, h.condition1, h.condition2, h.condition3);
        println!("  e = {}, volume {:.6}", s.cover.euler_char, s.cover.volume);
    }
    let rel = cover_between(&s2, &s1).unwrap();
    println!("S2 -> S1 regular: {}, degree {}", rel.holds, rel.degree.unwrap_or(0));
    println!("elapsed {:?}", t.elapsed());
}
