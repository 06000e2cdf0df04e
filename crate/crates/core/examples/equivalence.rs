//! Polygon equivalence under SL2(Z) and GL2(Z).

use fanoq::lattice2d::{
    canonical_form, enumerate_fano_polygons, known, polygons_equivalent, EquivalenceGroup, FanoPolygon,
};

const MIRROR: [[i64; 2]; 2] = [[-1, 0], [0, 1]];

fn show(p: &FanoPolygon) -> String {
    p.vertices().iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ")
}

fn main() {
    let p = known::p113();
    let sheared = p.transform([[1, 3], [0, 1]]).expect("unimodular");
    println!("P(1,1,3) {}", show(&p));
    println!("sheared {}: SL-equivalent {}", show(&sheared), polygons_equivalent(&p, &sheared, EquivalenceGroup::SL));
    println!("GL canonical form {:?}", canonical_form(&p, EquivalenceGroup::GL));

    let chiral = enumerate_fano_polygons(2)
        .into_iter()
        .find(|q| !polygons_equivalent(q, &q.transform(MIRROR).expect("unimodular"), EquivalenceGroup::SL))
        .expect("some polygon is chiral");
    let mirrored = chiral.transform(MIRROR).expect("unimodular");
    println!(
        "{} and its mirror {}: SL {}, GL {}",
        show(&chiral),
        show(&mirrored),
        polygons_equivalent(&chiral, &mirrored, EquivalenceGroup::SL),
        polygons_equivalent(&chiral, &mirrored, EquivalenceGroup::GL)
    );
}
