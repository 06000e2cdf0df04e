use std::cmp::Ordering;

use num_rational::Rational64;
use serde::{Deserialize, Serialize};

use super::cone::{cone_data, ConeData};
use super::vector::{LatticeVector2, OrientedLattice2};
use crate::error::{Error, Result};

/// A Fano polygon in an oriented rank-2 lattice.
///
/// Vertices are primitive, in strictly convex position, with the origin in
/// the strict interior, and are stored positively oriented with respect to
/// the lattice orientation (`det(v_i, v_{i+1}) > 0` after applying the sign).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FanoPolygon {
    lattice: OrientedLattice2,
    vertices: Vec<LatticeVector2>,
}

/// Angular comparison around the origin, counterclockwise from the positive x-axis.
pub(crate) fn angle_cmp(a: LatticeVector2, b: LatticeVector2) -> Ordering {
    let half = |p: LatticeVector2| if p.y > 0 || (p.y == 0 && p.x > 0) { 0 } else { 1 };
    half(a).cmp(&half(b)).then_with(|| 0.cmp(&a.det(b)))
}

impl FanoPolygon {
    /// Validates and stores `points`, re-sorting them into positive order.
    /// The first input vertex stays first.
    pub fn new(lattice: OrientedLattice2, points: Vec<LatticeVector2>) -> Result<Self> {
        if points.len() < 3 {
            return Err(Error::InvalidPolygon(format!("{} vertices, need at least 3", points.len())));
        }
        for &p in &points {
            if p == LatticeVector2::ZERO {
                return Err(Error::InvalidPolygon("the origin cannot be a vertex".into()));
            }
            if !p.is_primitive() {
                return Err(Error::NotPrimitive(p));
            }
        }
        let first = points[0];
        let mut sorted = points.clone();
        sorted.sort_by(|&a, &b| angle_cmp(a, b));
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidPolygon("repeated vertex".into()));
        }
        if lattice == OrientedLattice2::Negative {
            sorted.reverse();
        }
        let start = sorted.iter().position(|&p| p == first).unwrap_or(0);
        sorted.rotate_left(start);
        let polygon = Self { lattice, vertices: sorted };
        polygon.validate()?;
        Ok(polygon)
    }

    /// Convex hull of a point set, which must contain the origin strictly inside.
    pub fn from_hull(lattice: OrientedLattice2, points: &[LatticeVector2]) -> Result<Self> {
        let hull = convex_hull(points);
        let mut hull = hull;
        // Start at the lexicographically least vertex for determinism.
        if let Some(i) = hull.iter().enumerate().min_by_key(|(_, p)| (p.x, p.y)).map(|(i, _)| i) {
            hull.rotate_left(i);
        }
        Self::new(lattice, hull)
    }

    fn validate(&self) -> Result<()> {
        let n = self.vertices.len();
        for i in 0..n {
            let a = self.vertices[i];
            let b = self.vertices[(i + 1) % n];
            let c = self.vertices[(i + 2) % n];
            if self.lattice.det(a, b) <= 0 {
                return Err(Error::InvalidPolygon(format!("origin is not strictly interior (edge {a}-{b})")));
            }
            if self.lattice.det(b - a, c - b) <= 0 {
                return Err(Error::InvalidPolygon(format!("{b} is not a strictly convex vertex")));
            }
        }
        Ok(())
    }

    pub fn lattice(&self) -> OrientedLattice2 {
        self.lattice
    }

    pub fn vertices(&self) -> &[LatticeVector2] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// The same vertex set in the oppositely oriented lattice.
    pub fn with_reversed_orientation(&self) -> Self {
        let mut vertices = self.vertices.clone();
        vertices.reverse();
        Self { lattice: self.lattice.reversed(), vertices }
    }

    /// Applies an integer linear map given row-wise; `det` must be ±1.
    pub fn transform(&self, m: [[i64; 2]; 2]) -> Result<Self> {
        let det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
        if det.abs() != 1 {
            return Err(Error::InvalidPolygon(format!("map has determinant {det}")));
        }
        let pts = self
            .vertices
            .iter()
            .map(|p| LatticeVector2::new(m[0][0] * p.x + m[0][1] * p.y, m[1][0] * p.x + m[1][1] * p.y))
            .collect();
        Self::new(self.lattice, pts)
    }

    /// Edge `i` joins vertex `i` to vertex `i + 1`.
    pub fn edge(&self, i: usize) -> (LatticeVector2, LatticeVector2) {
        let n = self.vertices.len();
        (self.vertices[i % n], self.vertices[(i + 1) % n])
    }

    /// Cones of the spanning fan, one per edge, in edge order.
    pub fn maximal_cones(&self) -> Vec<ConeData> {
        (0..self.len())
            .map(|i| {
                let (u, v) = self.edge(i);
                cone_data(u, v, self.lattice).expect("validated polygon has valid cones")
            })
            .collect()
    }

    /// Normalized volume (an empty lattice triangle has volume 1).
    pub fn normalized_volume(&self) -> i64 {
        (0..self.len())
            .map(|i| {
                let (a, b) = self.edge(i);
                self.lattice.det(a, b)
            })
            .sum()
    }

    /// Normalized volume of the dual polygon, whose vertices are `m_i / l_i`.
    pub fn dual_degree(&self) -> Rational64 {
        let duals: Vec<(LatticeVector2, i64)> =
            self.maximal_cones().iter().map(|c| (c.normal, c.local_index)).collect();
        let n = duals.len();
        (0..n)
            .map(|i| {
                let (m1, l1) = duals[i];
                let (m2, l2) = duals[(i + 1) % n];
                Rational64::new(self.lattice.det(m1, m2), l1 * l2)
            })
            .sum()
    }

    /// Height range `(h_min, h_max)` of `<m, .>` over the polygon.
    pub fn height_range(&self, m: LatticeVector2) -> (i64, i64) {
        let hs = self.vertices.iter().map(|&p| m.pair(p));
        let (lo, hi) = hs.fold((i64::MAX, i64::MIN), |(lo, hi), h| (lo.min(h), hi.max(h)));
        (lo, hi)
    }

    /// Closed containment test for a rational point `p / den`.
    pub(crate) fn contains_scaled(&self, p: LatticeVector2, den: i64) -> bool {
        (0..self.len()).all(|i| {
            let (a, b) = self.edge(i);
            self.lattice.det(b - a, p - a.scale(den)) >= 0
        })
    }

    pub fn contains(&self, p: LatticeVector2) -> bool {
        self.contains_scaled(p, 1)
    }
}

/// Strict convex hull (no collinear points), counterclockwise in standard orientation.
pub fn convex_hull(points: &[LatticeVector2]) -> Vec<LatticeVector2> {
    let mut pts: Vec<LatticeVector2> = points.to_vec();
    pts.sort_by_key(|p| (p.x, p.y));
    pts.dedup();
    if pts.len() < 3 {
        return pts;
    }
    let cross = |o: LatticeVector2, a: LatticeVector2, b: LatticeVector2| (a - o).det(b - o);
    let mut lower: Vec<LatticeVector2> = Vec::new();
    for &p in &pts {
        while lower.len() >= 2 && cross(lower[lower.len() - 2], lower[lower.len() - 1], p) <= 0 {
            lower.pop();
        }
        lower.push(p);
    }
    let mut upper: Vec<LatticeVector2> = Vec::new();
    for &p in pts.iter().rev() {
        while upper.len() >= 2 && cross(upper[upper.len() - 2], upper[upper.len() - 1], p) <= 0 {
            upper.pop();
        }
        upper.push(p);
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    lower
}

/// Polygon JSON: `{"orientation": 1, "vertices": [[x,y],...]}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PolygonJson {
    #[serde(default = "default_orientation")]
    pub orientation: i64,
    pub vertices: Vec<LatticeVector2>,
}

fn default_orientation() -> i64 {
    1
}

impl From<&FanoPolygon> for PolygonJson {
    fn from(p: &FanoPolygon) -> Self {
        Self { orientation: p.lattice.sign(), vertices: p.vertices.clone() }
    }
}

impl TryFrom<PolygonJson> for FanoPolygon {
    type Error = Error;
    fn try_from(j: PolygonJson) -> Result<Self> {
        let lattice = OrientedLattice2::from_sign(j.orientation)
            .ok_or_else(|| Error::InvalidPolygon(format!("orientation {} is not ±1", j.orientation)))?;
        FanoPolygon::new(lattice, j.vertices)
    }
}

impl Serialize for FanoPolygon {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        PolygonJson::from(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for FanoPolygon {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = PolygonJson::deserialize(d)?;
        FanoPolygon::try_from(j).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice2d::known;

    impl FanoPolygon {
        fn rotated_to(&self, first: LatticeVector2) -> Self {
            let mut vertices = self.vertices.clone();
            let i = vertices.iter().position(|&p| p == first).unwrap();
            vertices.rotate_left(i);
            Self { lattice: self.lattice, vertices }
        }
    }

    fn v(x: i64, y: i64) -> LatticeVector2 {
        LatticeVector2::new(x, y)
    }

    /// Twice the Euclidean area of the hull, by triangle fan from vertex 0.
    fn shoelace(points: &[LatticeVector2]) -> i64 {
        let p0 = points[0];
        points.windows(2).skip(1).map(|w| (w[0] - p0).det(w[1] - p0)).sum::<i64>().abs()
    }

    #[test]
    fn loader_sorts_and_keeps_first_vertex() {
        let p = FanoPolygon::new(OrientedLattice2::Positive, vec![v(0, 1), v(-1, -1), v(1, 0)]).unwrap();
        assert_eq!(p.vertices(), &[v(0, 1), v(-1, -1), v(1, 0)]);
        let p = FanoPolygon::new(OrientedLattice2::Positive, vec![v(0, 1), v(1, 0), v(-1, -1)]).unwrap();
        assert_eq!(p.vertices(), &[v(0, 1), v(-1, -1), v(1, 0)]);
    }

    #[test]
    fn volumes() {
        assert_eq!(known::p113().normalized_volume(), 5);
        assert_eq!(known::p2().normalized_volume(), 3);
        assert_eq!(known::p112().normalized_volume(), 4);
        for p in [known::p113(), known::p2(), known::p112(), known::p116(), known::p1xp1()] {
            let mut pts = p.vertices().to_vec();
            pts.sort_by(|&a, &b| angle_cmp(a, b));
            assert_eq!(p.normalized_volume(), shoelace(&pts));
        }
    }

    #[test]
    fn dual_degrees() {
        assert_eq!(known::p112().dual_degree(), Rational64::from_integer(8));
        assert_eq!(known::p116().dual_degree(), Rational64::new(32, 3));
        assert_eq!(known::p2().dual_degree(), Rational64::from_integer(9));
    }

    #[test]
    fn rejects_invalid_polygons() {
        let pos = OrientedLattice2::Positive;
        assert!(FanoPolygon::new(pos, vec![v(1, 0), v(0, 1)]).is_err());
        assert!(matches!(FanoPolygon::new(pos, vec![v(2, 0), v(0, 1), v(-1, -1)]), Err(Error::NotPrimitive(_))));
        // origin on the boundary
        assert!(FanoPolygon::new(pos, vec![v(1, 0), v(-1, 0), v(0, 1)]).is_err());
        // origin outside
        assert!(FanoPolygon::new(pos, vec![v(1, 0), v(1, 1), v(2, 1)]).is_err());
        // (1,1) lies between (1,0) and (1,2)... not a vertex of the hull
        assert!(FanoPolygon::new(pos, vec![v(1, 0), v(1, 1), v(1, 2), v(-1, -1)]).is_err());
    }

    #[test]
    fn negative_orientation_reverses_order() {
        let p = FanoPolygon::new(OrientedLattice2::Negative, vec![v(1, 0), v(0, 1), v(-1, -1)]).unwrap();
        assert_eq!(p.vertices(), &[v(1, 0), v(-1, -1), v(0, 1)]);
        assert_eq!(p.normalized_volume(), 3);
        assert_eq!(p, known::p2().with_reversed_orientation().rotated_to(v(1, 0)));
    }

    #[test]
    fn json_round_trip_and_default_orientation() {
        let p: FanoPolygon = serde_json::from_str(r#"{"vertices": [[0,-1],[1,0],[0,1],[-1,0]]}"#).unwrap();
        assert_eq!(p.lattice(), OrientedLattice2::Positive);
        let back: FanoPolygon = serde_json::from_str(&serde_json::to_string(&p).unwrap()).unwrap();
        assert_eq!(back, p);
        assert!(
            serde_json::from_str::<FanoPolygon>(r#"{"orientation": 2, "vertices": [[1,0],[0,1],[-1,-1]]}"#).is_err()
        );
    }

    #[test]
    fn hull_drops_interior_and_collinear_points() {
        let pts = [v(1, 0), v(0, 1), v(-1, -1), v(0, 0), v(1, 1), v(0, 2), v(2, 0)];
        let hull = convex_hull(&pts);
        assert_eq!(hull.len(), 3);
    }
}
