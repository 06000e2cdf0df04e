//! Standard refinement of a polygon's spanning fan into T-cones and R-cones.

use fanoq::lattice2d::{known, refine_with, standard_refinement, Placement};

fn main() {
    for (name, p) in [("P(1,1,6)", known::p116()), ("octagon", known::octagon())] {
        let r = standard_refinement(&p);
        println!("{name}: {} cones, {} T-cones", r.cones.len(), r.t_count());
        for c in &r.cones {
            println!(
                "  edge {} cone {} {} w={} l={} {:?} {}",
                c.edge,
                c.cone.u,
                c.cone.v,
                c.cone.width,
                c.cone.local_index,
                c.kind,
                c.cone.quotient()
            );
        }
        let mirrored = refine_with(&p, Placement::ResidualFirst).expect("valid polygon");
        println!("  placement-independent labels: {}", mirrored.label_multiset() == r.label_multiset());
    }
}
