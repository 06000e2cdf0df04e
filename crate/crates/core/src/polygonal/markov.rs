use std::fmt;

use num_integer::Integer;
use num_rational::Rational64;
use serde::Serialize;

use super::build_bquiv;
use super::degree::{residual_sum, singularity_content};
use super::hamiltonian::hamiltonian;
use crate::error::{Error, Result};
use crate::lattice2d::FanoPolygon;
use crate::quiver::gcd_arrows;

/// Affine point `(x, y, z, t)` attached to a polygon, with the value of the
/// Markov-type polynomial at it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MarkovPoint {
    pub x: Vec<i64>,
    pub y: Vec<i64>,
    pub z: i64,
    #[serde(serialize_with = "crate::serialize_rational")]
    pub t: Rational64,
    #[serde(serialize_with = "crate::serialize_rational")]
    pub residual: Rational64,
}

/// `y_1 ... y_n * (z * sum_i x_i / (y_i y_{i+1}) - t)`.
pub fn markov_residual(x: &[i64], y: &[i64], z: i64, t: Rational64) -> Rational64 {
    let n = x.len();
    let prod: i64 = y.iter().product();
    let sum: Rational64 = (0..n).map(|i| Rational64::new(x[i], y[i] * y[(i + 1) % n])).sum();
    Rational64::from(prod) * (Rational64::from(z) * sum - t)
}

/// The point read off the Hamiltonian cycle of `bquiv(P)`: normalized
/// arrows, local indices, the arrow gcd and the right-hand side of the
/// quiver degree formula.
pub fn markov_point(p: &FanoPolygon) -> MarkovPoint {
    let q = build_bquiv(p).quiver;
    let h = hamiltonian(&q);
    let cycle = h.cycle().expect("block quivers of polygons are Hamiltonian").to_vec();
    let g = gcd_arrows(&q).expect("polygonal quivers have arrows");
    let n = cycle.len();
    let x: Vec<i64> = (0..n).map(|i| q.arrows(cycle[i], cycle[(i + 1) % n]) / g).collect();
    let y: Vec<i64> = cycle.iter().map(|&v| q.local_index(v)).collect();
    let tau = singularity_content(p).tau as i64;
    let t = Rational64::from(12 - tau) + residual_sum(p);
    let residual = markov_residual(&x, &y, g, t);
    MarkovPoint { x, y, z: g, t, residual }
}

/// Outcome of solving `g * sum w_i l_i = (12 - tau + residual) * l_1 l_2 l_3`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct TriangleFeasibility {
    pub coefficient: i64,
    #[serde(serialize_with = "crate::serialize_rational")]
    pub rhs: Rational64,
    pub g: Option<i64>,
}

impl fmt::Display for TriangleFeasibility {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.g {
            Some(g) => write!(f, "feasible: g = {g}"),
            None => write!(f, "infeasible: {}g = {}", self.coefficient, self.rhs),
        }
    }
}

pub fn triangle_feasibility(w: [i64; 3], l: [i64; 3], tau: i64, residual: Rational64) -> Result<TriangleFeasibility> {
    if w.iter().chain(&l).any(|&v| v < 1) {
        return Err(Error::NotApplicable("weights and local indices must be positive".into()));
    }
    for i in 0..3 {
        for j in i + 1..3 {
            if w[i].gcd(&w[j]) != 1 {
                return Err(Error::NotApplicable(format!("weights {} and {} are not coprime", w[i], w[j])));
            }
        }
    }
    let coefficient: i64 = (0..3).map(|i| w[i] * l[i]).sum();
    let rhs = (Rational64::from(12 - tau) + residual) * Rational64::from(l[0] * l[1] * l[2]);
    let g = rhs / Rational64::from(coefficient);
    let g = (g.is_integer() && g > Rational64::from(0)).then(|| g.to_integer());
    Ok(TriangleFeasibility { coefficient, rhs, g })
}
