use super::cone::ConeKind;
use super::polygon::FanoPolygon;
use super::refinement::Division;
use super::vector::LatticeVector2;
use crate::error::{Error, Result};

/// Combinatorial mutation with width vector `m` and a unit-length factor.
///
/// `m` must be the inner normal of an edge whose refinement contains a
/// primitive T-cone (`w >= l`). The factor is the primitive direction of that
/// edge, taken in the positive traversal order. Slices at height `h < 0`
/// shrink by `|h|` factor lengths, slices at `h >= 0` grow by `h`.
pub fn mutate_polygon(p: &FanoPolygon, m: LatticeVector2) -> Result<FanoPolygon> {
    let cones = p.maximal_cones();
    let Some((edge, sigma)) = cones.iter().enumerate().find(|(_, c)| c.normal == m) else {
        return Err(Error::MutationUndefined(format!("{m} is not an inner normal of the polygon")));
    };
    if Division::of(sigma).alpha == 0 {
        let kind = if sigma.kind() == ConeKind::R { "an R-cone" } else { "no T-cone" };
        return Err(Error::MutationUndefined(format!(
            "edge {edge} with normal {m} is {kind} (w={}, l={}); only T-vertices mutate",
            sigma.width, sigma.local_index
        )));
    }
    let (a, b) = p.edge(edge);
    let factor = (b - a).primitive_part();
    let mut points = Vec::new();
    for &v in p.vertices() {
        let h = m.pair(v);
        if h >= 0 {
            points.push(v);
            points.push(v + factor.scale(h));
        } else {
            let shifted_up = v + factor.scale(-h);
            let shifted_down = v + factor.scale(h);
            let mut any = false;
            if p.contains(shifted_up) {
                points.push(v);
                any = true;
            }
            if p.contains(shifted_down) {
                points.push(shifted_down);
                any = true;
            }
            if !any {
                return Err(Error::Internal(format!(
                    "slice through {v} at height {h} is shorter than the factor multiple"
                )));
            }
        }
    }
    FanoPolygon::from_hull(p.lattice(), &points)
}
