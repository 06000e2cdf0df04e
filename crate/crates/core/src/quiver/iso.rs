use super::DecoratedQuiver;

/// Per-vertex invariant: label and sorted exchange row.
fn signature(q: &DecoratedQuiver, v: usize) -> ((i64, i64), Vec<i64>) {
    let mut row = q.exchange()[v].clone();
    row.sort_unstable();
    (q.label(v), row)
}

/// A bijection `f` with `label(f(i)) = label(i)` and `A2(f(i), f(j)) = A1(i, j)`.
pub fn find_isomorphism(q1: &DecoratedQuiver, q2: &DecoratedQuiver) -> Option<Vec<usize>> {
    let n = q1.len();
    if n != q2.len() {
        return None;
    }
    let s1: Vec<_> = (0..n).map(|v| signature(q1, v)).collect();
    let s2: Vec<_> = (0..n).map(|v| signature(q2, v)).collect();
    let mut a = s1.clone();
    let mut b = s2.clone();
    a.sort();
    b.sort();
    if a != b {
        return None;
    }
    let candidates: Vec<Vec<usize>> = (0..n).map(|i| (0..n).filter(|&j| s1[i] == s2[j]).collect()).collect();
    // most constrained vertices first
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&i| candidates[i].len());
    let mut image = vec![usize::MAX; n];
    let mut used = vec![false; n];
    search(q1, q2, &order, 0, &candidates, &mut image, &mut used).then_some(image)
}

fn search(
    q1: &DecoratedQuiver,
    q2: &DecoratedQuiver,
    order: &[usize],
    depth: usize,
    candidates: &[Vec<usize>],
    image: &mut [usize],
    used: &mut [bool],
) -> bool {
    let Some(&i) = order.get(depth) else { return true };
    let mut tried: Vec<usize> = Vec::new();
    for &j in &candidates[i] {
        if used[j] {
            continue;
        }
        // a candidate that is a twin of one already refuted leads nowhere new
        if tried.iter().any(|&k| twins(q2, j, k, used)) {
            continue;
        }
        let consistent = order[..depth].iter().all(|&p| q1.arrows(i, p) == q2.arrows(j, image[p]));
        if consistent {
            image[i] = j;
            used[j] = true;
            if search(q1, q2, order, depth + 1, candidates, image, used) {
                return true;
            }
            used[j] = false;
            image[i] = usize::MAX;
        }
        tried.push(j);
    }
    false
}

/// Interchangeable in `q`: equal labels, no arrows between them, equal rows.
fn twins(q: &DecoratedQuiver, a: usize, b: usize, used: &[bool]) -> bool {
    !used[b]
        && q.label(a) == q.label(b)
        && q.arrows(a, b) == 0
        && (0..q.len()).all(|y| y == a || y == b || q.arrows(a, y) == q.arrows(b, y))
}

pub fn quivers_isomorphic(q1: &DecoratedQuiver, q2: &DecoratedQuiver) -> bool {
    find_isomorphism(q1, q2).is_some()
}

#[cfg(test)]
mod tests {
    use super::super::fixtures;
    use super::*;

    #[test]
    fn reflexive_and_cyclic_symmetry() {
        let q = fixtures::p112();
        assert!(quivers_isomorphic(&q, &q));
        let p2 = fixtures::p2();
        assert!(quivers_isomorphic(&p2, &p2.opposite()));
    }

    #[test]
    fn labels_separate() {
        assert!(!quivers_isomorphic(&fixtures::p2(), &fixtures::p116()));
    }

    #[test]
    fn permutations_are_found() {
        let q = fixtures::p116();
        let perm = [2, 0, 1];
        let p = q.permuted(&perm);
        let f = find_isomorphism(&p, &q).unwrap();
        for i in 0..3 {
            assert_eq!(p.label(i), q.label(f[i]));
            for j in 0..3 {
                assert_eq!(p.arrows(i, j), q.arrows(f[i], f[j]));
            }
        }
        // swapping the two (1,1) vertices reverses the cycle
        assert!(quivers_isomorphic(&q, &q.opposite()));
        let chiral =
            DecoratedQuiver::from_arrows(vec![(1, 1), (2, 1), (3, 1)], &[(0, 1, 1), (1, 2, 2), (2, 0, 3)]).unwrap();
        assert!(!quivers_isomorphic(&chiral, &chiral.opposite()));
    }
}
