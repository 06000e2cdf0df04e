use std::collections::BTreeMap;
use std::fmt;

use num_rational::Rational64;
use serde::Serialize;

use super::hamiltonian::hamiltonian;
use super::{build_bquiv, build_quiv, PolygonalQuiver};
use crate::error::Result;
use crate::lattice2d::{standard_refinement, ConeKind, CyclicQuotient, FanoPolygon};
use crate::quiver::DecoratedQuiver;

/// `sum_k A(c_k, c_{k+1}) / (l_k l_{k+1})` around a cyclic vertex sequence.
pub fn degree_along(q: &DecoratedQuiver, cycle: &[usize]) -> Rational64 {
    let n = cycle.len();
    (0..n)
        .map(|i| {
            let (a, b) = (cycle[i], cycle[(i + 1) % n]);
            Rational64::new(q.arrows(a, b), q.local_index(a) * q.local_index(b))
        })
        .sum()
}

/// Degree of the toric surface read off `quiv(P)`, taking the lowest
/// vertex id on each edge.
pub fn degree_from_quiver(pq: &PolygonalQuiver) -> Rational64 {
    degree_along(&pq.quiver, &pq.edge_representatives())
}

/// Degree read off a block quiver along its Hamiltonian cycle.
pub fn degree_from_block(q: &DecoratedQuiver) -> Result<Rational64> {
    let h = hamiltonian(q);
    Ok(degree_along(q, h.cycle()?))
}

/// `(tau, basket)`: primitive T-cones and residual classes of a standard refinement.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct SingularityContent {
    pub tau: usize,
    /// Sorted residual classes.
    pub basket: Vec<CyclicQuotient>,
}

impl fmt::Display for SingularityContent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let classes: Vec<String> = self.basket.iter().map(|c| c.to_string()).collect();
        write!(f, "({}, {{{}}})", self.tau, classes.join(", "))
    }
}

pub fn singularity_content(p: &FanoPolygon) -> SingularityContent {
    let r = standard_refinement(p);
    let mut basket: Vec<CyclicQuotient> =
        r.cones.iter().filter(|c| c.kind == ConeKind::R).map(|c| c.cone.quotient()).collect();
    basket.sort();
    SingularityContent { tau: r.t_count(), basket }
}

/// Sum of the residual contributions: `(-K)^2 - 12 + tau`.
pub fn residual_sum(p: &FanoPolygon) -> Rational64 {
    p.dual_degree() - Rational64::from(12) + Rational64::from(singularity_content(p).tau as i64)
}

/// Checks `degree = 12 - tau + residual` with the degree taken from
/// `quiv(P)`, from the Hamiltonian cycle of `bquiv(P)`, and from the dual polygon.
pub fn quiver_degree_check(p: &FanoPolygon) -> bool {
    let content = singularity_content(p);
    let lhs = degree_from_quiver(&build_quiv(p));
    let rhs = Rational64::from(12 - content.tau as i64) + residual_sum(p);
    let block = degree_from_block(&build_bquiv(p).quiver);
    lhs == rhs && block == Ok(lhs) && lhs == p.dual_degree()
}

/// Per-class residual contributions learned from witness polygons whose
/// basket is a single class.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ResidualTable {
    pub values: BTreeMap<CyclicQuotient, Rational64>,
    /// Classes whose witnesses disagreed: `(class, first value, other value)`.
    pub conflicts: Vec<(CyclicQuotient, Rational64, Rational64)>,
}

impl ResidualTable {
    pub fn from_witnesses<'a>(polygons: impl IntoIterator<Item = &'a FanoPolygon>) -> Self {
        let mut table = Self::default();
        for p in polygons {
            let content = singularity_content(p);
            if let [class] = content.basket[..] {
                let value = residual_sum(p);
                match table.values.get(&class) {
                    None => {
                        table.values.insert(class, value);
                    }
                    Some(&v) if v != value => table.conflicts.push((class, v, value)),
                    Some(_) => {}
                }
            }
        }
        table
    }

    pub fn get(&self, class: &CyclicQuotient) -> Option<Rational64> {
        self.values.get(class).copied()
    }

    /// Additive prediction for a basket, if every class is known.
    pub fn predict(&self, basket: &[CyclicQuotient]) -> Option<Rational64> {
        basket.iter().map(|c| self.get(c)).sum()
    }

    /// Polygons whose residual sum differs from the additive prediction.
    pub fn additivity_counterexamples<'a>(
        &self,
        polygons: impl IntoIterator<Item = &'a FanoPolygon>,
    ) -> Vec<(FanoPolygon, Rational64, Rational64)> {
        polygons
            .into_iter()
            .filter_map(|p| {
                let predicted = self.predict(&singularity_content(p).basket)?;
                let actual = residual_sum(p);
                (predicted != actual).then(|| (p.clone(), predicted, actual))
            })
            .collect()
    }
}
