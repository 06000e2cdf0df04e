use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::polygon::{angle_cmp, FanoPolygon};
use super::vector::{complete_basis, LatticeVector2};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub enum EquivalenceGroup {
    SL,
    #[default]
    GL,
}

impl FromStr for EquivalenceGroup {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_uppercase().as_str() {
            "SL" => Ok(Self::SL),
            "GL" => Ok(Self::GL),
            other => Err(format!("unknown group {other:?}, expected SL or GL")),
        }
    }
}

/// Normal form of a vertex set under `SL2(Z)` or `GL2(Z)`.
pub type CanonicalForm = Vec<(i64, i64)>;

/// Normal form of the vertex set, ignoring the lattice orientation flag.
///
/// Each edge is sent to the bottom edge `y = -l` running in the `+x`
/// direction, the residual shear is fixed by `0 <= x_start < l`, and the
/// lexicographically least vertex sequence wins.
pub fn canonical_form(p: &FanoPolygon, group: EquivalenceGroup) -> CanonicalForm {
    let mut pts: Vec<LatticeVector2> = p.vertices().to_vec();
    pts.sort_by(|&a, &b| angle_cmp(a, b));
    let mut best = sl_form(&pts);
    if group == EquivalenceGroup::GL {
        let mut mirrored: Vec<LatticeVector2> = pts.iter().map(|q| LatticeVector2::new(-q.x, q.y)).collect();
        mirrored.sort_by(|&a, &b| angle_cmp(a, b));
        best = best.min(sl_form(&mirrored));
    }
    best
}

fn sl_form(ccw: &[LatticeVector2]) -> CanonicalForm {
    let n = ccw.len();
    (0..n)
        .map(|i| {
            let a = ccw[i];
            let b = ccw[(i + 1) % n];
            let e = (b - a).primitive_part();
            let g = complete_basis(e);
            // coordinates in the basis (e, g)
            let coords = |q: LatticeVector2| (q.det(g), e.det(q));
            let (x0, y0) = coords(a);
            let l = -y0;
            let k = x0.div_euclid(l);
            (0..n)
                .map(|j| {
                    let (x, y) = coords(ccw[(i + j) % n]);
                    (x + k * y, y)
                })
                .collect::<CanonicalForm>()
        })
        .min()
        .expect("polygon has vertices")
}

pub fn polygons_equivalent(p1: &FanoPolygon, p2: &FanoPolygon, group: EquivalenceGroup) -> bool {
    p1.len() == p2.len()
        && p1.normalized_volume() == p2.normalized_volume()
        && canonical_form(p1, group) == canonical_form(p2, group)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice2d::{known, OrientedLattice2};

    fn poly(points: &[(i64, i64)]) -> FanoPolygon {
        FanoPolygon::new(OrientedLattice2::Positive, points.iter().map(|&p| p.into()).collect()).unwrap()
    }

    #[test]
    fn p113_presentations_are_gl_equivalent() {
        let a = poly(&[(0, -1), (-1, -1), (1, 4)]);
        let b = poly(&[(0, -1), (1, -1), (-3, 4)]);
        assert!(polygons_equivalent(&a, &b, EquivalenceGroup::GL));
    }

    #[test]
    fn reflexive_identity_and_distinctness() {
        let p = known::p2();
        assert!(polygons_equivalent(&p, &p, EquivalenceGroup::SL));
        assert!(!polygons_equivalent(&p, &known::p112(), EquivalenceGroup::GL));
    }

    #[test]
    fn sl_form_is_invariant_under_sl_maps() {
        let p = known::octagon();
        for m in [[[1, 1], [0, 1]], [[0, -1], [1, 0]], [[2, 1], [1, 1]], [[1, 0], [-3, 1]]] {
            let q = p.transform(m).unwrap();
            assert_eq!(canonical_form(&p, EquivalenceGroup::SL), canonical_form(&q, EquivalenceGroup::SL));
        }
        let mirrored = p.transform([[-1, 0], [0, 1]]).unwrap();
        assert!(polygons_equivalent(&p, &mirrored, EquivalenceGroup::GL));
    }

    #[test]
    fn chiral_polygon_separates_sl_from_gl() {
        // No orientation-reversing symmetry: a triangle with three distinct
        // edge lengths and asymmetric heights.
        let p = poly(&[(1, 0), (0, 1), (-1, -6)]);
        let q = p.transform([[0, 1], [1, 0]]).unwrap();
        assert!(polygons_equivalent(&p, &q, EquivalenceGroup::GL));
        assert!(!polygons_equivalent(&p, &q, EquivalenceGroup::SL) || symmetric_under_reflection(&p));
    }

    fn symmetric_under_reflection(p: &FanoPolygon) -> bool {
        let q = p.transform([[0, 1], [1, 0]]).unwrap();
        canonical_form(p, EquivalenceGroup::SL) == canonical_form(&q, EquivalenceGroup::SL)
    }

    #[test]
    fn group_parses() {
        assert_eq!("sl".parse::<EquivalenceGroup>().unwrap(), EquivalenceGroup::SL);
        assert!("SO".parse::<EquivalenceGroup>().is_err());
    }
}
