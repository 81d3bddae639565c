use ballquot::finitegrp::unitary::mat_identity;
use ballquot::finitegrp::{
    frobenius21, lattice_unitaries, psu33_cached, psu3_order_formula, reduce_mod_p3, su3_center_size, HermitianMatrix3,
};

fn main() {
    let psu = psu33_cached().unwrap();
    println!("{} isotropic points, {} transvection generators", psu.points.len(), psu.group.generators().len());
    println!("|PSU(3,3)| = {} (formula {}), center of SU has order {}", psu.group.order(), psu3_order_formula(3), su3_center_size());
    println!("transitive on points: {}", psu.group.is_transitive());
    println!("with Frobenius: {}", psu.gamma_u().unwrap().order());

    let h = reduce_mod_p3(&HermitianMatrix3::form_h()).unwrap();
    println!("h mod p3 is the identity form: {}", h == mat_identity());
    let mut in_group = 0;
    let units = lattice_unitaries();
    for m in &units {
        let r = reduce_mod_p3(m).unwrap();
        if ballquot::finitegrp::unitary::is_unitary(&r, &mat_identity()) {
            in_group += 1;
        }
    }
    println!("{in_group} of {} lattice unitaries reduce to unitary matrices", units.len());

    let f = frobenius21(&psu.group).unwrap();
    println!("Frobenius subgroup: a = {}, b = {}, order {}, normal {}", f.a, f.b, f.group.order(), f.is_normal);
}
