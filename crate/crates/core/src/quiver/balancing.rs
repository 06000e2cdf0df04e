use serde::Serialize;

use super::DecoratedQuiver;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct VertexBalance {
    pub balanced: bool,
    /// `S(v) = sum_y w_y * A(v, y)`.
    pub defect: i64,
    /// Weighted out-degree, present only at balanced vertices.
    pub diameter: Option<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BalancingReport {
    pub vertices: Vec<VertexBalance>,
}

impl BalancingReport {
    pub fn all_balanced(&self) -> bool {
        self.vertices.iter().all(|v| v.balanced)
    }

    pub fn diameter(&self, v: usize) -> Option<i64> {
        self.vertices.get(v).and_then(|b| b.diameter)
    }

    pub fn balanced_count(&self) -> usize {
        self.vertices.iter().filter(|v| v.balanced).count()
    }
}

pub(crate) fn defect(q: &DecoratedQuiver, v: usize) -> i64 {
    (0..q.len()).map(|y| q.weight(y) * q.arrows(v, y)).sum()
}

pub(crate) fn out_weight(q: &DecoratedQuiver, v: usize) -> i64 {
    (0..q.len()).filter(|&y| q.arrows(v, y) > 0).map(|y| q.weight(y) * q.arrows(v, y)).sum()
}

pub fn balancing(q: &DecoratedQuiver) -> BalancingReport {
    let vertices = (0..q.len())
        .map(|v| {
            let s = defect(q, v);
            VertexBalance { balanced: s == 0, defect: s, diameter: (s == 0).then(|| out_weight(q, v)) }
        })
        .collect();
    BalancingReport { vertices }
}

pub fn balanced_vertex_count(q: &DecoratedQuiver) -> usize {
    (0..q.len()).filter(|&v| defect(q, v) == 0).count()
}
