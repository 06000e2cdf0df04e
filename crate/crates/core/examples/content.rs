//! Singularity content, residual sums, and a residual table learned from the corpus.

use fanoq::lattice2d::{enumerate_fano_polygons, known};
use fanoq::polygonal::{residual_sum, singularity_content, ResidualTable};

fn main() {
    for (name, p) in [("P(1,1,3)", known::p113()), ("P(1,1,6)", known::p116()), ("octagon", known::octagon())] {
        println!("{name}: content {}, residual sum {}", singularity_content(&p), residual_sum(&p));
    }
    let corpus = enumerate_fano_polygons(2);
    let table = ResidualTable::from_witnesses(&corpus);
    println!("residual contribution per class (from single-class witnesses):");
    for (class, value) in &table.values {
        println!("  {class}: {value}");
    }
    let bad = table.additivity_counterexamples(&corpus);
    println!("additivity counterexamples: {}", bad.len());
}
