//! Degree of a toric surface from its quiver, its block quiver and its dual polygon.

use fanoq::lattice2d::known;
use fanoq::polygonal::{
    build_bquiv, build_quiv, degree_from_block, degree_from_quiver, hamiltonian, quiver_degree_check,
};

fn main() {
    for (name, p) in
        [("P2", known::p2()), ("P(1,1,2)", known::p112()), ("P(1,1,6)", known::p116()), ("octagon", known::octagon())]
    {
        let b = build_bquiv(&p).quiver;
        let h = hamiltonian(&b);
        println!(
            "{name}: quiv {}, block {}, dual {}, Hamiltonian cycle {:?}, formula holds {}",
            degree_from_quiver(&build_quiv(&p)),
            degree_from_block(&b).expect("polygonal block quivers are Hamiltonian"),
            p.dual_degree(),
            h.cycle,
            quiver_degree_check(&p)
        );
    }
}
