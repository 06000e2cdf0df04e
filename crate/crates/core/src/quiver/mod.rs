//! Decorated quivers stored as labelled antisymmetric exchange matrices.

mod balancing;
mod block;
mod iso;
mod kernel;
mod mutation;

use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use balancing::{balanced_vertex_count, balancing, BalancingReport, VertexBalance};
pub use block::{block, block_classes, split_vertex};
pub use iso::{find_isomorphism, quivers_isomorphic};
pub use kernel::{balanced_weight_space, integer_kernel};
pub use mutation::{classical_mutation, mutate, mutation_group_check};

/// Vertex decoration `(w, l)`.
pub type Label = (i64, i64);

/// A quiver without loops or 2-cycles whose vertices carry labels `(w, l)`.
///
/// `exchange[i][j] > 0` counts arrows `i -> j`; the matrix is antisymmetric.
/// Vertex ids are positions and stay stable under mutation.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct DecoratedQuiver {
    labels: Vec<Label>,
    exchange: Vec<Vec<i64>>,
}

#[derive(Deserialize)]
struct QuiverJson {
    labels: Vec<Label>,
    exchange: Vec<Vec<i64>>,
}

impl<'de> Deserialize<'de> for DecoratedQuiver {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = QuiverJson::deserialize(d)?;
        Self::new(j.labels, j.exchange).map_err(serde::de::Error::custom)
    }
}

impl DecoratedQuiver {
    pub fn new(labels: Vec<Label>, exchange: Vec<Vec<i64>>) -> Result<Self> {
        let n = labels.len();
        if exchange.len() != n || exchange.iter().any(|row| row.len() != n) {
            return Err(Error::InvalidQuiver(format!("exchange matrix is not {n}x{n}")));
        }
        for i in 0..n {
            if exchange[i][i] != 0 {
                return Err(Error::InvalidQuiver(format!("self-loop at vertex {i}")));
            }
            for j in 0..i {
                if exchange[i][j] != -exchange[j][i] {
                    return Err(Error::InvalidQuiver(format!("exchange matrix not antisymmetric at ({i},{j})")));
                }
            }
        }
        Ok(Self { labels, exchange })
    }

    /// Builds a quiver from arrow bundles `(tail, head, count)`. Bundles in
    /// both directions between one pair would form a 2-cycle and are rejected.
    pub fn from_arrows(labels: Vec<Label>, arrows: &[(usize, usize, i64)]) -> Result<Self> {
        let n = labels.len();
        let mut exchange = vec![vec![0; n]; n];
        for &(t, h, c) in arrows {
            if t >= n {
                return Err(Error::VertexOutOfRange(t));
            }
            if h >= n {
                return Err(Error::VertexOutOfRange(h));
            }
            if t == h {
                return Err(Error::InvalidQuiver(format!("self-loop at vertex {t}")));
            }
            if c < 0 || exchange[h][t] > 0 {
                return Err(Error::InvalidQuiver(format!("2-cycle between {t} and {h}")));
            }
            exchange[t][h] += c;
            exchange[h][t] -= c;
        }
        Ok(Self { labels, exchange })
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[Label] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> Label {
        self.labels[v]
    }

    pub fn weight(&self, v: usize) -> i64 {
        self.labels[v].0
    }

    pub fn local_index(&self, v: usize) -> i64 {
        self.labels[v].1
    }

    pub fn exchange(&self) -> &[Vec<i64>] {
        &self.exchange
    }

    /// Signed arrow count `A(i, j)`.
    pub fn arrows(&self, i: usize, j: usize) -> i64 {
        self.exchange[i][j]
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.len() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange(v))
        }
    }

    /// Heads of arrows leaving `m`.
    pub fn out_set(&self, m: usize) -> Vec<usize> {
        (0..self.len()).filter(|&y| self.exchange[m][y] > 0).collect()
    }

    /// Tails of arrows entering `m`.
    pub fn in_set(&self, m: usize) -> Vec<usize> {
        (0..self.len()).filter(|&y| self.exchange[y][m] > 0).collect()
    }

    /// Same labels, every arrow reversed.
    pub fn opposite(&self) -> Self {
        let exchange = self.exchange.iter().map(|row| row.iter().map(|a| -a).collect()).collect();
        Self { labels: self.labels.clone(), exchange }
    }

    /// Reorders vertices: vertex `i` of the result is vertex `perm[i]` of `self`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        let labels = perm.iter().map(|&p| self.labels[p]).collect();
        let exchange = perm.iter().map(|&i| perm.iter().map(|&j| self.exchange[i][j]).collect()).collect();
        Self { labels, exchange }
    }

    pub fn with_labels(&self, labels: Vec<Label>) -> Result<Self> {
        Self::new(labels, self.exchange.clone())
    }
}

pub fn opposite(q: &DecoratedQuiver) -> DecoratedQuiver {
    q.opposite()
}

/// `g(Q)`: gcd of all exchange entries.
pub fn gcd_arrows(q: &DecoratedQuiver) -> Result<i64> {
    let g = q.exchange.iter().flatten().fold(0i64, |g, a| g.gcd(a));
    if g == 0 {
        Err(Error::GcdUndefined)
    } else {
        Ok(g)
    }
}

/// `w(Q)`: gcd of all vertex weights.
pub fn gcd_weights(q: &DecoratedQuiver) -> Result<i64> {
    let g = q.labels.iter().fold(0i64, |g, l| g.gcd(&l.0));
    if g == 0 {
        Err(Error::GcdUndefined)
    } else {
        Ok(g)
    }
}

impl fmt::Display for DecoratedQuiver {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (w, l)) in self.labels.iter().enumerate() {
            write!(f, "{i}:({w},{l})")?;
            let outs: Vec<String> = (0..self.len())
                .filter(|&j| self.exchange[i][j] > 0)
                .map(|j| format!("{}x->{j}", self.exchange[i][j]))
                .collect();
            if !outs.is_empty() {
                write!(f, " {}", outs.join(" "))?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}
