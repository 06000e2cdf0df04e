use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::quiver::DecoratedQuiver;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum HamiltonianFailure {
    /// The vertex has no outgoing arrows, so its radius is undefined.
    NoOutgoing {
        vertex: usize,
    },
    Radius {
        vertex: usize,
        radius: usize,
    },
    Count {
        vertex: usize,
        count: usize,
    },
    /// Following radius-one successors from vertex 0 closes up after `length` steps.
    ShortCycle {
        length: usize,
    },
}

impl fmt::Display for HamiltonianFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::NoOutgoing { vertex } => write!(f, "vertex {vertex} has no outgoing arrows"),
            Self::Radius { vertex, radius } => write!(f, "vertex {vertex} has radius {radius}"),
            Self::Count { vertex, count } => write!(f, "vertex {vertex} attains its radius {count} times"),
            Self::ShortCycle { length } => write!(f, "successor sequence closes after {length} vertices"),
        }
    }
}

/// Radial distances and, when the property holds, the Hamiltonian cycle.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HamiltonianData {
    /// `r(v)`, absent when `out(v)` is empty.
    pub radius: Vec<Option<usize>>,
    /// `h(v)`: how many `x` in `out(v)` attain `r(v)`.
    pub count: Vec<usize>,
    /// Vertices of `out(v)` at radial distance 1.
    pub successor: Vec<Option<usize>>,
    /// `seq(0)` when it visits every vertex.
    pub cycle: Option<Vec<usize>>,
    pub failure: Option<HamiltonianFailure>,
}

impl HamiltonianData {
    pub fn has_property(&self) -> bool {
        self.failure.is_none()
    }

    pub fn cycle(&self) -> Result<&[usize]> {
        match (&self.cycle, self.failure) {
            (Some(c), None) => Ok(c),
            (_, Some(f)) => Err(Error::NotApplicable(format!("no Hamiltonian property: {f}"))),
            (None, None) => unreachable!("cycle is set whenever the property holds"),
        }
    }

    /// The subquiver keeping only the arrows between cyclically consecutive vertices.
    pub fn subquiver(&self, q: &DecoratedQuiver) -> Result<DecoratedQuiver> {
        let c = self.cycle()?;
        let n = c.len();
        let arrows: Vec<_> = (0..n).map(|i| (c[i], c[(i + 1) % n], q.arrows(c[i], c[(i + 1) % n]))).collect();
        DecoratedQuiver::from_arrows(q.labels().to_vec(), &arrows)
    }
}

/// `r(m, x)` for every `x` in `out(m)`: the most vertices of `out(m)` a path
/// from `m` can visit, without repeats, before ending at `x`.
pub fn radial_distances(q: &DecoratedQuiver, m: usize) -> Vec<(usize, usize)> {
    let outs = q.out_set(m);
    let k = outs.len();
    assert!(k < 24, "out-degree {k} too large for exhaustive path search");
    // reach[mask] has bit j set when some path through exactly `mask` ends at outs[j]
    let mut reach = vec![0u32; 1 << k];
    for j in 0..k {
        reach[1 << j] |= 1 << j;
    }
    let mut best = vec![0usize; k];
    for mask in 1usize..(1 << k) {
        let ends = reach[mask];
        if ends == 0 {
            continue;
        }
        let len = mask.count_ones() as usize;
        for j in 0..k {
            if ends >> j & 1 == 0 {
                continue;
            }
            best[j] = best[j].max(len);
            for nx in 0..k {
                if mask >> nx & 1 == 0 && q.arrows(outs[j], outs[nx]) > 0 {
                    reach[mask | 1 << nx] |= 1 << nx;
                }
            }
        }
    }
    outs.into_iter().zip(best).collect()
}

pub fn hamiltonian(q: &DecoratedQuiver) -> HamiltonianData {
    let n = q.len();
    let mut radius = vec![None; n];
    let mut count = vec![0; n];
    let mut successor = vec![None; n];
    let mut failure = None;
    for v in 0..n {
        let dist = radial_distances(q, v);
        let Some(r) = dist.iter().map(|d| d.1).min() else {
            failure.get_or_insert(HamiltonianFailure::NoOutgoing { vertex: v });
            continue;
        };
        let at_min: Vec<usize> = dist.iter().filter(|d| d.1 == r).map(|d| d.0).collect();
        radius[v] = Some(r);
        count[v] = at_min.len();
        if r != 1 {
            failure.get_or_insert(HamiltonianFailure::Radius { vertex: v, radius: r });
        } else if at_min.len() != 1 {
            failure.get_or_insert(HamiltonianFailure::Count { vertex: v, count: at_min.len() });
        } else {
            successor[v] = Some(at_min[0]);
        }
    }
    let mut cycle = None;
    if failure.is_none() && n > 0 {
        let mut seq = vec![0];
        let mut seen = vec![false; n];
        seen[0] = true;
        let mut cur = 0;
        loop {
            let next = successor[cur].expect("successor exists when r = h = 1");
            if seen[next] {
                if next == 0 && seq.len() == n {
                    cycle = Some(seq);
                } else {
                    failure = Some(HamiltonianFailure::ShortCycle { length: seq.len() });
                }
                break;
            }
            seen[next] = true;
            seq.push(next);
            cur = next;
        }
    }
    HamiltonianData { radius, count, successor, cycle, failure }
}
