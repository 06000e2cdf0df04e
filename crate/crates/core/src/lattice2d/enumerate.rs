use std::collections::BTreeMap;

use super::equivalence::{canonical_form, CanonicalForm, EquivalenceGroup};
use super::polygon::{angle_cmp, FanoPolygon};
use super::vector::{LatticeVector2, OrientedLattice2};

/// All Fano polygons with vertices in `[-bound, bound]^2`, one per
/// `GL2(Z)`-class.
///
/// Classes are ordered by vertex count, then normalized volume, then
/// canonical form; the representative is the first polygon met by the
/// search, so the output is fully deterministic.
pub fn enumerate_fano_polygons(bound: i64) -> Vec<FanoPolygon> {
    let mut pts: Vec<LatticeVector2> = (-bound..=bound)
        .flat_map(|x| (-bound..=bound).map(move |y| LatticeVector2::new(x, y)))
        .filter(|p| p.is_primitive())
        .collect();
    pts.sort_by(|&a, &b| angle_cmp(a, b));

    let mut classes: BTreeMap<(usize, i64, CanonicalForm), FanoPolygon> = BTreeMap::new();
    let mut chain = Vec::new();
    for start in 0..pts.len() {
        chain.push(pts[start]);
        extend(&pts, start, &mut chain, &mut classes);
        chain.pop();
    }
    classes.into_values().collect()
}

/// Extends a convex chain by points of strictly larger angle. The first
/// point of the chain has the smallest angle among the polygon's vertices.
fn extend(
    pts: &[LatticeVector2],
    last: usize,
    chain: &mut Vec<LatticeVector2>,
    classes: &mut BTreeMap<(usize, i64, CanonicalForm), FanoPolygon>,
) {
    let cur = *chain.last().unwrap();
    let first = chain[0];
    if chain.len() >= 3 && closes(chain) {
        let p =
            FanoPolygon::new(OrientedLattice2::Positive, chain.clone()).expect("search only produces Fano polygons");
        let key = (p.len(), p.normalized_volume(), canonical_form(&p, EquivalenceGroup::GL));
        classes.entry(key).or_insert(p);
    }
    for next in last + 1..pts.len() {
        let q = pts[next];
        // origin strictly left of the new edge
        if cur.det(q) <= 0 {
            continue;
        }
        if chain.len() >= 2 {
            let prev = chain[chain.len() - 2];
            if (cur - prev).det(q - cur) <= 0 {
                continue;
            }
        }
        // the first vertex must stay a convex corner when the chain closes
        if chain.len() >= 2 && (chain[1] - first).det(q - first) <= 0 {
            continue;
        }
        chain.push(q);
        extend(pts, next, chain, classes);
        chain.pop();
    }
}

fn closes(chain: &[LatticeVector2]) -> bool {
    let n = chain.len();
    let (a, b, c) = (chain[n - 2], chain[n - 1], chain[0]);
    let d = chain[1];
    b.det(c) > 0 && (b - a).det(c - b) > 0 && (c - b).det(d - c) > 0
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice2d::{convex_hull, known, polygons_equivalent};

    /// Independent oracle: every subset of the box's primitive points whose
    /// hull is Fano, deduplicated by a search over small GL2 matrices.
    fn brute_force(bound: i64) -> Vec<FanoPolygon> {
        let pts: Vec<LatticeVector2> = (-bound..=bound)
            .flat_map(|x| (-bound..=bound).map(move |y| LatticeVector2::new(x, y)))
            .filter(|p| p.is_primitive())
            .collect();
        let mut found: Vec<FanoPolygon> = Vec::new();
        for mask in 1u32..(1 << pts.len()) {
            let subset: Vec<_> = (0..pts.len()).filter(|i| mask >> i & 1 == 1).map(|i| pts[i]).collect();
            if subset.len() < 3 {
                continue;
            }
            let hull = convex_hull(&subset);
            if hull.len() != subset.len() {
                continue;
            }
            let Ok(p) = FanoPolygon::new(OrientedLattice2::Positive, hull) else { continue };
            if !found.iter().any(|q| matrix_equivalent(q, &p)) {
                found.push(p);
            }
        }
        found
    }

    /// Equivalence by trying every map that sends two adjacent vertices of
    /// `p` to two adjacent vertices of `q`.
    fn matrix_equivalent(p: &FanoPolygon, q: &FanoPolygon) -> bool {
        if p.len() != q.len() || p.normalized_volume() != q.normalized_volume() {
            return false;
        }
        let mut target: Vec<_> = q.vertices().to_vec();
        target.sort();
        let (a, b) = p.edge(0);
        let d = a.det(b);
        let n = q.len();
        for j in 0..n {
            for step in [1, n - 1] {
                let (c, e) = (q.vertices()[j], q.vertices()[(j + step) % n]);
                // M = [c e] [a b]^-1, with [a b]^-1 = [[b.y, -b.x], [-a.y, a.x]] / d
                let num =
                    [[c.x * b.y - e.x * a.y, -c.x * b.x + e.x * a.x], [c.y * b.y - e.y * a.y, -c.y * b.x + e.y * a.x]];
                if num.iter().flatten().any(|x| x % d != 0) {
                    continue;
                }
                let m = num.map(|r| r.map(|x| x / d));
                if (m[0][0] * m[1][1] - m[0][1] * m[1][0]).abs() != 1 {
                    continue;
                }
                let mut img: Vec<_> = p
                    .vertices()
                    .iter()
                    .map(|v| LatticeVector2::new(m[0][0] * v.x + m[0][1] * v.y, m[1][0] * v.x + m[1][1] * v.y))
                    .collect();
                img.sort();
                if img == target {
                    return true;
                }
            }
        }
        false
    }

    #[test]
    fn small_boxes_match_subset_oracle() {
        for bound in [1, 2] {
            check_against_oracle(bound);
        }
    }

    fn check_against_oracle(bound: i64) {
        let fast = enumerate_fano_polygons(bound);
        let slow = brute_force(bound);
        assert_eq!(fast.len(), slow.len());
        for p in &slow {
            assert_eq!(fast.iter().filter(|q| polygons_equivalent(p, q, EquivalenceGroup::GL)).count(), 1);
        }
        assert!(fast.iter().any(|q| polygons_equivalent(q, &known::p2(), EquivalenceGroup::GL)));
    }

    #[test]
    fn output_is_valid_and_deterministic() {
        let a = enumerate_fano_polygons(2);
        assert_eq!(a, enumerate_fano_polygons(2));
        for p in &a {
            assert!(p.vertices().iter().all(|v| v.x.abs() <= 2 && v.y.abs() <= 2 && v.is_primitive()));
        }
        for (i, p) in a.iter().enumerate() {
            for q in &a[i + 1..] {
                assert!(!polygons_equivalent(p, q, EquivalenceGroup::GL));
            }
        }
    }
}
