//! Facet normals and simplex multiplicities of three-dimensional Fano polytopes.

use fanoq::complex3::{block_complex3, known};

fn main() {
    for (name, p) in
        [("P3", known::p3()), ("P(1,1,1,9)/3", known::p1119_mod3()), ("simplex", known::standard_simplex())]
    {
        let c = block_complex3(&p);
        println!("{name}: normals {:?}", c.normals);
        for s in &c.simplices {
            println!("  {:?} multiplicity {} (positive order {:?})", s.triple, s.multiplicity, s.oriented);
        }
    }
}
