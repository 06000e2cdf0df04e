use super::balancing::{defect, out_weight};
use super::DecoratedQuiver;
use crate::error::{Error, Result};

/// `mut^k_m(Q)`. The vertex `m` must be balanced, since its diameter
/// enters the new label `(k*D - w, D - l)`.
pub fn mutate(q: &DecoratedQuiver, m: usize, k: i64) -> Result<DecoratedQuiver> {
    q.check_vertex(m)?;
    let s = defect(q, m);
    if s != 0 {
        return Err(Error::Unbalanced { vertex: m, defect: s });
    }
    let d = out_weight(q, m);
    let n = q.len();
    let a = q.exchange();
    let pos = |x: i64| x.max(0);
    let mut exchange = vec![vec![0; n]; n];
    for t in 0..n {
        for h in 0..n {
            exchange[t][h] = if t == m || h == m {
                -a[t][h]
            } else {
                a[t][h] + k * pos(a[t][m]) * pos(a[m][h]) - k * pos(a[h][m]) * pos(a[m][t])
            };
        }
    }
    if k == 1 {
        debug_assert_eq!(exchange, classical_mutation(a, m));
    }
    let mut labels = q.labels().to_vec();
    let (w, l) = labels[m];
    labels[m] = (k * d - w, d - l);
    DecoratedQuiver::new(labels, exchange)
}

/// Matrix mutation `b'_ij = -b_ij` on row and column `m`, otherwise
/// `b_ij + (|b_im| b_mj + b_im |b_mj|) / 2`.
pub fn classical_mutation(b: &[Vec<i64>], m: usize) -> Vec<Vec<i64>> {
    let n = b.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == m || j == m {
                        -b[i][j]
                    } else {
                        b[i][j] + (b[i][m].abs() * b[m][j] + b[i][m] * b[m][j].abs()) / 2
                    }
                })
                .collect()
        })
        .collect()
}

/// Compares `mut^t(mut^s(Q))` with `mut^0(mut^(s-t)(Q))` at `m`.
pub fn mutation_group_check(q: &DecoratedQuiver, m: usize, s: i64, t: i64) -> Result<bool> {
    let lhs = mutate(&mutate(q, m, s)?, m, t)?;
    let rhs = mutate(&mutate(q, m, s - t)?, m, 0)?;
    Ok(lhs == rhs)
}
