//! Builds the quiver of a polygon's standard refinement and its block quiver.
//!
//! `cargo run --example quiver -- -1,-6 1,0 0,1`

use fanoq::lattice2d::{known, FanoPolygon, LatticeVector2, OrientedLattice2};
use fanoq::polygonal::{build_bquiv, build_quiv};

fn parse_polygon(args: &[String]) -> FanoPolygon {
    if args.is_empty() {
        return known::p116();
    }
    let pts = args
        .iter()
        .map(|a| {
            let (x, y) = a.split_once(',').expect("points look like x,y");
            LatticeVector2::new(x.parse().expect("integer"), y.parse().expect("integer"))
        })
        .collect();
    FanoPolygon::new(OrientedLattice2::Positive, pts).expect("a Fano polygon")
}

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let p = parse_polygon(&args);
    println!("polygon {:?}", p.vertices().iter().map(|v| (v.x, v.y)).collect::<Vec<_>>());
    for (name, pq) in [("quiv", build_quiv(&p)), ("bquiv", build_bquiv(&p))] {
        println!("{name}: {} vertices", pq.quiver.len());
        for v in 0..pq.quiver.len() {
            println!("  {v}: label {:?} normal {} {:?}", pq.quiver.label(v), pq.normals[v], pq.kinds[v]);
        }
        print!("{}", pq.quiver);
    }
}
