//! Lists Fano polygons in a coordinate box, one per GL2(Z) class.
//!
//! Run with `cargo run --example enumerate -- 2`.

use fanoq::lattice2d::enumerate_fano_polygons;
use fanoq::polygonal::singularity_content;

fn main() {
    let bound: i64 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(2);
    let corpus = enumerate_fano_polygons(bound);
    for p in &corpus {
        let verts: Vec<String> = p.vertices().iter().map(|v| v.to_string()).collect();
        println!(
            "{:>2} vertices  volume {:>3}  degree {:>6}  content {}  {}",
            p.len(),
            p.normalized_volume(),
            p.dual_degree().to_string(),
            singularity_content(p),
            verts.join(" ")
        );
    }
    println!("{} classes with vertices in [-{bound},{bound}]^2", corpus.len());
}
