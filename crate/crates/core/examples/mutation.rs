//! Quiver mutation, generalized mutation, and the matching polygon mutation.

use fanoq::lattice2d::{known, mutate_polygon};
use fanoq::polygonal::{build_quiv, commutation_check};
use fanoq::quiver::{balancing, mutate, mutation_group_check, quivers_isomorphic};

fn main() {
    let p = known::p1xp1();
    let pq = build_quiv(&p);
    let q = &pq.quiver;
    println!("P1xP1:\n{q}");

    let mq = mutate(q, 0, 1).expect("balanced vertex");
    println!("mutated at 0:\n{mq}");
    let mp = mutate_polygon(&p, pq.normals[0]).expect("T-vertex");
    println!("polygon mutation gives {:?}", mp.vertices().iter().map(|v| (v.x, v.y)).collect::<Vec<_>>());
    println!("quivers agree: {}", quivers_isomorphic(&mq, &build_quiv(&mp).quiver));

    for k in -2..=2 {
        let m = mutate(q, 0, k).expect("balanced vertex");
        let back = mutate(&m, 0, k).expect("still balanced");
        println!(
            "k={k:>2}: labels {:?}, balanced {}, involution {}",
            m.labels(),
            balancing(&m).all_balanced(),
            back == *q
        );
    }
    println!("mut^2 . mut^1 = mut^0 . mut^-1: {}", mutation_group_check(q, 0, 1, 2).expect("balanced"));

    let r = known::p116();
    let rq = build_quiv(&r);
    for v in 0..rq.quiver.len() {
        println!(
            "P(1,1,6) vertex {v} ({:?}): commutation check {}",
            rq.kinds[v],
            commutation_check(&r, v).expect("valid")
        );
    }
}
