//! Small named polygons that recur in examples and tests.

use super::polygon::FanoPolygon;
use super::vector::{LatticeVector2, OrientedLattice2};

fn polygon(points: &[(i64, i64)]) -> FanoPolygon {
    FanoPolygon::new(OrientedLattice2::Positive, points.iter().map(|&p| LatticeVector2::from(p)).collect())
        .expect("named polygon is Fano")
}

/// The projective plane.
pub fn p2() -> FanoPolygon {
    polygon(&[(1, 0), (0, 1), (-1, -1)])
}

pub fn p1xp1() -> FanoPolygon {
    polygon(&[(0, -1), (1, 0), (0, 1), (-1, 0)])
}

pub fn p112() -> FanoPolygon {
    polygon(&[(-1, 0), (2, -1), (0, 1)])
}

pub fn p113() -> FanoPolygon {
    polygon(&[(0, -1), (1, 4), (-1, -1)])
}

pub fn p116() -> FanoPolygon {
    polygon(&[(1, 0), (0, 1), (-1, -6)])
}

/// An octagon whose block quiver carries an eight-cycle that is not the
/// edge-order cycle.
pub fn octagon() -> FanoPolygon {
    polygon(&[(2, 1), (2, 3), (1, 4), (-1, 4), (-2, 3), (-2, 1), (-1, -1), (1, -1)])
}
