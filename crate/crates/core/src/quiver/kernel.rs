use super::DecoratedQuiver;

/// Hermite-reduced basis of `{x in Z^cols : a x = 0}`.
pub fn integer_kernel(a: &[Vec<i64>], cols: usize) -> Vec<Vec<i64>> {
    // Column operations on the stacked matrix [a; I] keep the lower block
    // unimodular, so the columns whose upper part vanishes span the kernel.
    let rows = a.len();
    let mut m: Vec<Vec<i128>> = a
        .iter()
        .map(|r| r.iter().map(|&x| x as i128).collect())
        .chain((0..cols).map(|i| (0..cols).map(|j| i128::from(i == j)).collect()))
        .collect();
    let mut pivot = 0;
    for r in 0..rows {
        if pivot == cols {
            break;
        }
        loop {
            let nonzero: Vec<usize> = (pivot..cols).filter(|&c| m[r][c] != 0).collect();
            let Some(&best) = nonzero.iter().min_by_key(|&&c| m[r][c].abs()) else { break };
            swap_cols(&mut m, pivot, best);
            let mut done = true;
            for c in pivot + 1..cols {
                let q = m[r][c].div_euclid(m[r][pivot]);
                if q != 0 {
                    for row in m.iter_mut() {
                        row[c] -= q * row[pivot];
                    }
                }
                if m[r][c] != 0 {
                    done = false;
                }
            }
            if done {
                pivot += 1;
                break;
            }
        }
    }
    let basis: Vec<Vec<i128>> = (pivot..cols).map(|c| (rows..rows + cols).map(|r| m[r][c]).collect()).collect();
    hermite_rows(basis).into_iter().map(|v| v.into_iter().map(|x| x as i64).collect()).collect()
}

fn swap_cols(m: &mut [Vec<i128>], a: usize, b: usize) {
    if a != b {
        for row in m.iter_mut() {
            row.swap(a, b);
        }
    }
}

/// Row Hermite normal form: positive pivots, entries above each pivot reduced.
fn hermite_rows(mut b: Vec<Vec<i128>>) -> Vec<Vec<i128>> {
    let n = b.len();
    let cols = b.first().map_or(0, |r| r.len());
    let mut top = 0;
    for c in 0..cols {
        if top == n {
            break;
        }
        while let Some(best) = (top..n).filter(|&r| b[r][c] != 0).min_by_key(|&r| b[r][c].abs()) {
            b.swap(top, best);
            let mut done = true;
            for r in top + 1..n {
                let q = b[r][c].div_euclid(b[top][c]);
                if q != 0 {
                    let p = b[top].clone();
                    for (x, y) in b[r].iter_mut().zip(&p) {
                        *x -= q * y;
                    }
                }
                if b[r][c] != 0 {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if b[top][c] == 0 {
            continue;
        }
        if b[top][c] < 0 {
            for x in b[top].iter_mut() {
                *x = -*x;
            }
        }
        for r in 0..top {
            let q = b[r][c].div_euclid(b[top][c]);
            if q != 0 {
                let p = b[top].clone();
                for (x, y) in b[r].iter_mut().zip(&p) {
                    *x -= q * y;
                }
            }
        }
        top += 1;
    }
    b
}

/// Basis of the integer weight vectors that balance every vertex of `q`.
pub fn balanced_weight_space(q: &DecoratedQuiver) -> Vec<Vec<i64>> {
    integer_kernel(q.exchange(), q.len())
}
