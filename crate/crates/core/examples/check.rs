//! Runs the invariant suite over every Fano polygon with coordinates in `[-b, b]`.
//!
//! `cargo run --release --example check -- 3`

use fanoq::invariants::{check_corpus, Check};
use fanoq::lattice2d::{enumerate_fano_polygons, EquivalenceGroup};

fn main() {
    let bound: i64 = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(2);
    let corpus = enumerate_fano_polygons(bound);
    let summary = check_corpus(&corpus, EquivalenceGroup::GL);
    println!("{} polygons checked", summary.polygons);
    for check in Check::ALL {
        let bad = summary.count(check);
        println!("{:<30} {}", check.to_string(), if bad == 0 { "ok".to_string() } else { format!("{bad} failures") });
    }
    for (check, (p, detail)) in &summary.examples {
        println!("{check}: {:?} ({detail})", p.vertices());
    }
}
