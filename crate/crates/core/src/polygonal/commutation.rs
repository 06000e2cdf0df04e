use serde::Serialize;

use super::build_quiv;
use crate::error::{Error, Result};
use crate::lattice2d::{mutate_polygon, FanoPolygon};
use crate::quiver::{mutate, quivers_isomorphic, DecoratedQuiver};

/// Checks quiver mutation against polygon mutation at vertex `v` of `quiv(P)`.
///
/// At a T-vertex both routes must give isomorphic quivers. At an R-vertex
/// the mutated quiver must carry a label with `w > l`, so it is not polygonal.
pub fn commutation_check(p: &FanoPolygon, v: usize) -> Result<bool> {
    let pq = build_quiv(p);
    pq.quiver.check_vertex(v)?;
    let mutated = mutate(&pq.quiver, v, 1)?;
    if pq.is_t_vertex(v) {
        let polygon = mutate_polygon(p, pq.normals[v])?;
        Ok(quivers_isomorphic(&mutated, &build_quiv(&polygon).quiver))
    } else {
        Ok(mutated.labels().iter().any(|&(w, l)| w > l))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum BlockShape {
    /// Cyclic triangle.
    Triangle,
    /// Four-cycle with arrows along both diagonals.
    QuadrilateralNoParallel,
    /// Four-cycle with exactly one arrow-free diagonal.
    QuadrilateralOneParallel,
    /// Four-cycle with both diagonals arrow-free.
    QuadrilateralTwoParallel,
    None,
}

/// Shape of a block quiver on three or four vertices.
pub fn block_shape_classifier(q: &DecoratedQuiver) -> Result<BlockShape> {
    match q.len() {
        3 => {
            let cyc = [q.arrows(0, 1), q.arrows(1, 2), q.arrows(2, 0)];
            let cyclic = cyc.iter().all(|&a| a > 0) || cyc.iter().all(|&a| a < 0);
            Ok(if cyclic { BlockShape::Triangle } else { BlockShape::None })
        }
        4 => {
            for [a, b, c] in [[1, 2, 3], [1, 3, 2], [2, 1, 3], [2, 3, 1], [3, 1, 2], [3, 2, 1]] {
                let order = [0, a, b, c];
                if (0..4).all(|i| q.arrows(order[i], order[(i + 1) % 4]) > 0) {
                    let parallel = [(order[0], order[2]), (order[1], order[3])]
                        .iter()
                        .filter(|&&(x, y)| q.arrows(x, y) == 0)
                        .count();
                    return Ok(match parallel {
                        0 => BlockShape::QuadrilateralNoParallel,
                        1 => BlockShape::QuadrilateralOneParallel,
                        _ => BlockShape::QuadrilateralTwoParallel,
                    });
                }
            }
            Ok(BlockShape::None)
        }
        n => Err(Error::NotApplicable(format!("shape classification needs 3 or 4 vertices, got {n}"))),
    }
}
