//! Rebuilds polygons from block quivers, and shows quivers that no polygon has.

use fanoq::lattice2d::{known, polygons_equivalent, EquivalenceGroup, FanoPolygon};
use fanoq::polygonal::build_bquiv;
use fanoq::quiver::DecoratedQuiver;
use fanoq::reconstruction::{expected_volume_gap, reconstruct_all, reconstruct_general, reconstruct_triangle};

fn triangle(labels: [(i64, i64); 3], arrows: [i64; 3]) -> DecoratedQuiver {
    DecoratedQuiver::from_arrows(labels.to_vec(), &[(0, 1, arrows[0]), (1, 2, arrows[1]), (2, 0, arrows[2])])
        .expect("valid quiver")
}

fn show(p: &FanoPolygon) -> String {
    p.vertices().iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ")
}

fn main() {
    let q = triangle([(1, 1), (1, 1), (1, 3)], [5, 5, 5]);
    let r = reconstruct_triangle(&q).expect("balanced block quiver");
    let p = r.polygon.as_ref().expect("polygonal");
    println!("{q}-> {}, same as P(1,1,3): {}", show(p), polygons_equivalent(p, &known::p113(), EquivalenceGroup::GL));

    let bad = triangle([(2, 1), (1, 1), (1, 1)], [4, 8, 4]);
    let r = reconstruct_triangle(&bad).expect("balanced block quiver");
    let f = r.failed_condition.expect("not polygonal");
    println!("{bad}-> fails {} ({}), volume gap {:?}", f.condition, f.witness, expected_volume_gap(&bad));

    for a in 1..=5 {
        let ok = reconstruct_triangle(&triangle([(1, 1); 3], [a, a, a])).expect("balanced").is_success();
        println!("three (1,1) vertices with {a} arrows each: polygonal {ok}");
    }

    let octagon = build_bquiv(&known::octagon()).quiver;
    let r = reconstruct_general(&octagon).expect("balanced block quiver");
    println!("octagon: recovered {}", r.polygon.as_ref().map(show).unwrap_or_default());

    let shared = DecoratedQuiver::from_arrows(
        vec![(1, 7); 4],
        &[(0, 1, 7), (0, 2, 7), (1, 2, 14), (2, 3, 21), (3, 0, 14), (3, 1, 7)],
    )
    .expect("valid quiver");
    for p in reconstruct_all(&shared).expect("balanced block quiver") {
        println!("shared quiver is the block quiver of {}", show(&p));
    }
}
