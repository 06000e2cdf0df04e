//! Merges twin vertices of a quiver and splits them apart again.

use fanoq::lattice2d::known;
use fanoq::polygonal::{build_bquiv, build_quiv};
use fanoq::quiver::{block, block_classes, quivers_isomorphic, split_vertex};

fn main() {
    let p = known::p112();
    let q = build_quiv(&p).quiver;
    println!("quiv:\n{q}");
    println!("classes {:?}", block_classes(&q));
    let b = block(&q);
    println!("block:\n{b}");
    println!("matches bquiv: {}", quivers_isomorphic(&b, &build_bquiv(&p).quiver));
    let composite = (0..b.len()).find(|&v| b.weight(v) > b.local_index(v)).expect("P(1,1,2) has a wide edge");
    let split = split_vertex(&b, composite, 1).expect("k = 1 is always allowed");
    println!("split at {composite}:\n{split}");
    println!("split recovers quiv: {}", quivers_isomorphic(&split, &q));
}
