//! Deciding whether a balanced block quiver comes from a Fano polygon, and
//! rebuilding the polygon when it does.

mod general;
mod triangle;

use std::fmt;

use num_integer::Integer;
use num_rational::Rational64;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::lattice2d::{polygons_equivalent, EquivalenceGroup, FanoPolygon, LatticeVector2, OrientedLattice2};
use crate::polygonal::build_bquiv;
use crate::quiver::{balancing, block, DecoratedQuiver};

pub use general::{reconstruct_all, reconstruct_general};
pub use triangle::{expected_volume_gap, reconstruct_triangle, reconstruct_triangle_at};

/// Numbered reconstruction condition, serialized as `"C1"` to `"C9"`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Condition(pub u8);

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "C{}", self.0)
    }
}

impl Serialize for Condition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Outcome {
    Success,
    Failure,
}

/// Values computed for one nomination and one choice of `x`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Transcript {
    /// Quiver vertex behind each position of the cyclic order.
    pub order: Vec<usize>,
    pub y: Vec<i64>,
    #[serde(serialize_with = "rationals")]
    pub x: Vec<Rational64>,
    pub s: Vec<i64>,
    #[serde(serialize_with = "rationals")]
    pub t: Vec<Rational64>,
}

fn rationals<S: Serializer>(v: &[Rational64], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|r| r.to_string()))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConditionFailure {
    pub condition: Condition,
    pub witness: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReconstructionReport {
    pub outcome: Outcome,
    pub polygon: Option<FanoPolygon>,
    pub nominated_vertex: usize,
    pub x_choice: Option<i64>,
    pub failed_condition: Option<ConditionFailure>,
    pub transcript: Transcript,
}

impl ReconstructionReport {
    pub fn is_success(&self) -> bool {
        self.outcome == Outcome::Success
    }

    pub fn failed_condition_id(&self) -> Option<Condition> {
        self.failed_condition.as_ref().map(|f| f.condition)
    }
}

/// One attempt's result: the polygon, or the first broken condition. The
/// transcript is kept either way.
pub(crate) type Attempt = std::result::Result<FanoPolygon, ConditionFailure>;

pub(crate) fn fail(c: u8, witness: impl Into<String>) -> ConditionFailure {
    ConditionFailure { condition: Condition(c), witness: witness.into() }
}

/// Inputs must be balanced block quivers with at least three vertices.
pub(crate) fn check_input(q: &DecoratedQuiver) -> Result<()> {
    if q.len() < 3 {
        return Err(Error::NotApplicable(format!("a polygonal quiver has at least three vertices, got {}", q.len())));
    }
    if block(q) != *q {
        return Err(Error::NotApplicable("input is not a block quiver".into()));
    }
    if let Some((v, b)) = balancing(q).vertices.iter().enumerate().find(|(_, b)| !b.balanced) {
        return Err(Error::Unbalanced { vertex: v, defect: b.defect });
    }
    Ok(())
}

pub(crate) fn integral(r: Rational64) -> Option<i64> {
    r.is_integer().then(|| r.to_integer())
}

/// Builds the polygon from `(x_i, y_i)` and confirms that its block quiver
/// is `q` with vertex `order[i]` on edge `i`.
pub(crate) fn assemble(q: &DecoratedQuiver, order: &[usize], xs: &[i64], ys: &[i64]) -> Result<Attempt> {
    let pts: Vec<LatticeVector2> = xs.iter().zip(ys).map(|(&x, &y)| LatticeVector2::new(x, y)).collect();
    let p = match FanoPolygon::new(OrientedLattice2::Positive, pts) {
        Ok(p) => p,
        Err(e) => return Ok(Err(fail(9, format!("vertices do not form a Fano polygon: {e}")))),
    };
    if build_bquiv(&p).quiver != q.permuted(order) {
        return Err(Error::Internal(format!(
            "all conditions hold but the block quiver of {:?} differs from the input",
            p.vertices()
        )));
    }
    Ok(Ok(p))
}

pub(crate) fn coprime(a: i64, b: i64) -> bool {
    a.gcd(&b) == 1
}

/// Result of rebuilding a polygon from its own block quiver.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RoundTrip {
    pub report: ReconstructionReport,
    pub gl_equivalent: bool,
    /// `false` flags a result that matches only after a reflection.
    pub sl_equivalent: bool,
}

pub fn round_trip(p: &FanoPolygon) -> Result<RoundTrip> {
    let report = reconstruct_general(&build_bquiv(p).quiver)?;
    let (gl, sl) = match &report.polygon {
        Some(r) => (polygons_equivalent(p, r, EquivalenceGroup::GL), polygons_equivalent(p, r, EquivalenceGroup::SL)),
        None => (false, false),
    };
    Ok(RoundTrip { report, gl_equivalent: gl, sl_equivalent: sl })
}
