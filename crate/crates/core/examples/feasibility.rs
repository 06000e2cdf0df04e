//! Decides whether a triangle with given labels and content can exist.
//!
//! `cargo run --example feasibility -- 1,1,2 1,3,2 2 -5/3`

use fanoq::polygonal::triangle_feasibility;
use num_rational::Rational64;

fn triple(s: &str) -> [i64; 3] {
    let v: Vec<i64> = s.split(',').map(|x| x.parse().expect("integer")).collect();
    v.try_into().expect("three values")
}

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let (w, l, tau, res) = match args.as_slice() {
        [w, l, tau, res] => (triple(w), triple(l), tau.parse().expect("integer"), res.parse().expect("rational")),
        _ => ([1, 1, 2], [1, 3, 2], 2, Rational64::new(-5, 3)),
    };
    match triangle_feasibility(w, l, tau, res) {
        Ok(f) => println!("w={w:?} l={l:?} tau={tau} residual={res}: {f}"),
        Err(e) => println!("not applicable: {e}"),
    }
}
