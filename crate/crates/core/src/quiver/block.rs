use super::DecoratedQuiver;
use crate::error::{Error, Result};

fn equivalent(q: &DecoratedQuiver, a: usize, b: usize) -> bool {
    q.local_index(a) == q.local_index(b)
        && q.arrows(a, b) == 0
        && (0..q.len()).all(|y| y == a || y == b || q.arrows(a, y) == q.arrows(b, y))
}

/// Classes of the block relation, each sorted, ordered by least member.
pub fn block_classes(q: &DecoratedQuiver) -> Vec<Vec<usize>> {
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for v in 0..q.len() {
        // the relation is transitive, so comparing with a representative suffices
        match classes.iter_mut().find(|c| equivalent(q, c[0], v)) {
            Some(c) => c.push(v),
            None => classes.push(vec![v]),
        }
    }
    classes
}

/// The block quiver: equivalent vertices merged, weights summed.
pub fn block(q: &DecoratedQuiver) -> DecoratedQuiver {
    let classes = block_classes(q);
    let labels = classes.iter().map(|c| (c.iter().map(|&v| q.weight(v)).sum(), q.local_index(c[0]))).collect();
    let exchange = classes.iter().map(|a| classes.iter().map(|b| q.arrows(a[0], b[0])).collect()).collect();
    DecoratedQuiver::new(labels, exchange).expect("block of an antisymmetric matrix is antisymmetric")
}

/// Replaces `v`, labelled `(w, l)` with `w = tau*l + rho`, by `v1 = (k*l, l)`
/// at position `v` and `v2 = ((tau-k)*l + rho, l)` at position `v + 1`.
/// Both copies keep the arrows of `v` and are not joined to each other.
pub fn split_vertex(qb: &DecoratedQuiver, v: usize, k: i64) -> Result<DecoratedQuiver> {
    qb.check_vertex(v)?;
    let (w, l) = qb.label(v);
    if l < 1 || w < 0 {
        return Err(Error::NotApplicable(format!("vertex {v} has label ({w},{l})")));
    }
    let tau = w / l;
    let rho = w % l;
    if k < 1 || k > tau {
        return Err(Error::OutOfRange(format!("k = {k} must lie in 1..={tau}")));
    }
    let mut perm: Vec<usize> = (0..qb.len()).collect();
    perm.insert(v + 1, v);
    let split = qb.permuted(&perm);
    let mut labels = split.labels().to_vec();
    labels[v] = (k * l, l);
    labels[v + 1] = ((tau - k) * l + rho, l);
    split.with_labels(labels)
}
