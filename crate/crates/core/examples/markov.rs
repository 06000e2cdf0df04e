//! The Markov-type point attached to a polygon.

use fanoq::lattice2d::known;
use fanoq::polygonal::markov_point;

fn main() {
    for (name, p) in
        [("P2", known::p2()), ("P(1,1,3)", known::p113()), ("P(1,1,6)", known::p116()), ("octagon", known::octagon())]
    {
        let m = markov_point(&p);
        println!("{name}: x={:?} y={:?} z={} t={} residual={}", m.x, m.y, m.z, m.t, m.residual);
    }
}
