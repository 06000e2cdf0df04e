use serde::Serialize;

use super::cone::{cone_data, ConeData, ConeKind};
use super::polygon::FanoPolygon;
use crate::error::Result;

/// Where the residual cone goes inside a split maximal cone.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Placement {
    /// T-cones from the first generator, residual cone last.
    #[default]
    ResidualLast,
    ResidualFirst,
}

/// The division `w = alpha*l + rho` for one maximal cone.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Division {
    pub alpha: i64,
    pub rho: i64,
    pub epsilon: i64,
}

impl Division {
    pub fn of(cone: &ConeData) -> Self {
        let alpha = cone.width / cone.local_index;
        let rho = cone.width % cone.local_index;
        Self { alpha, rho, epsilon: i64::from(rho != 0) }
    }
}

/// A cone of the standard refinement, tagged with the edge it came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct RefinedCone {
    pub edge: usize,
    #[serde(flatten)]
    pub cone: ConeData,
    pub kind: ConeKind,
}

/// Standard refinement of the spanning fan, in positive cyclic order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StandardRefinement {
    pub cones: Vec<RefinedCone>,
    pub divisions: Vec<Division>,
}

impl StandardRefinement {
    /// Multiset of `(w, l, kind)`, sorted.
    pub fn label_multiset(&self) -> Vec<(i64, i64, ConeKind)> {
        let mut v: Vec<_> = self.cones.iter().map(|c| (c.cone.width, c.cone.local_index, c.kind)).collect();
        v.sort_by_key(|&(w, l, k)| (w, l, k == ConeKind::R));
        v
    }

    pub fn t_count(&self) -> usize {
        self.cones.iter().filter(|c| c.kind == ConeKind::T).count()
    }
}

pub fn standard_refinement(p: &FanoPolygon) -> StandardRefinement {
    refine_with(p, Placement::ResidualLast).expect("maximal cones of a Fano polygon refine")
}

pub fn refine_with(p: &FanoPolygon, placement: Placement) -> Result<StandardRefinement> {
    let mut cones = Vec::new();
    let mut divisions = Vec::new();
    for (edge, sigma) in p.maximal_cones().into_iter().enumerate() {
        let d = Division::of(&sigma);
        divisions.push(d);
        let step = (sigma.v - sigma.u).primitive_part();
        let l = sigma.local_index;
        let mut cuts: Vec<i64> = match placement {
            Placement::ResidualLast => (0..=d.alpha).map(|j| j * l).collect(),
            Placement::ResidualFirst => {
                let mut c = vec![0];
                c.extend((0..=d.alpha).map(|j| d.rho + j * l));
                c
            }
        };
        cuts.push(sigma.width);
        cuts.dedup();
        for pair in cuts.windows(2) {
            let a = sigma.u + step.scale(pair[0]);
            let b = sigma.u + step.scale(pair[1]);
            let cone = cone_data(a, b, p.lattice())?;
            debug_assert_eq!(cone.normal, sigma.normal);
            let kind = cone.kind();
            debug_assert_ne!(kind, ConeKind::Composite);
            cones.push(RefinedCone { edge, cone, kind });
        }
    }
    Ok(StandardRefinement { cones, divisions })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice2d::{known, LatticeVector2};

    #[test]
    fn p112_splits_into_two_t_cones() {
        let r = standard_refinement(&known::p112());
        assert_eq!(r.cones.len(), 4);
        let split: Vec<_> = r.cones.iter().filter(|c| c.edge == 1).collect();
        assert_eq!(split.len(), 2);
        assert!(split.iter().all(|c| c.kind == ConeKind::T && c.cone.label() == (1, 1)));
        assert_eq!(split[0].cone.v, LatticeVector2::new(1, 0));
    }

    #[test]
    fn p2_refinement_is_the_fan() {
        let r = standard_refinement(&known::p2());
        assert_eq!(r.cones.len(), 3);
        assert!(r.cones.iter().all(|c| c.kind == ConeKind::T && c.cone.label() == (1, 1)));
    }

    #[test]
    fn p116_has_one_residual_cone() {
        let r = standard_refinement(&known::p116());
        assert_eq!(r.cones.len(), 3);
        assert_eq!(r.t_count(), 2);
        let res: Vec<_> = r.cones.iter().filter(|c| c.kind == ConeKind::R).collect();
        assert_eq!(res.len(), 1);
        assert_eq!(res[0].cone.label(), (2, 3));
        assert_eq!(r.divisions[2], Division { alpha: 0, rho: 2, epsilon: 1 });
    }

    #[test]
    fn placement_does_not_change_labels() {
        // width 7 edge at height 3: alpha = 2, rho = 1
        let p = FanoPolygon::new(
            crate::lattice2d::OrientedLattice2::Positive,
            vec![LatticeVector2::new(-2, -3), LatticeVector2::new(5, -3), LatticeVector2::new(0, 1)],
        );
        let p = p.unwrap();
        let last = refine_with(&p, Placement::ResidualLast).unwrap();
        let first = refine_with(&p, Placement::ResidualFirst).unwrap();
        assert_eq!(last.label_multiset(), first.label_multiset());
        assert_ne!(last.cones, first.cones);
        assert_eq!(last.divisions[0], Division { alpha: 2, rho: 1, epsilon: 1 });
    }
}
