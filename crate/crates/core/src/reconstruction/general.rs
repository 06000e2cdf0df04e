use num_rational::Rational64;

use super::{
    assemble, check_input, coprime, fail, integral, Attempt, ConditionFailure, Outcome, ReconstructionReport,
    Transcript,
};
use crate::error::{Error, Result};
use crate::lattice2d::{polygons_equivalent, EquivalenceGroup, FanoPolygon};
use crate::polygonal::hamiltonian;
use crate::quiver::DecoratedQuiver;

/// Reconstruction for any number of vertices.
///
/// The edge of the nominated vertex is placed at height `-l` under the
/// normal `(0,1)`. Heights then follow from the arrows out of the nominated
/// vertex and `x` coordinates from a forward recursion; every remaining
/// shear class `x mod l` is tried. Conditions:
///
/// * `C1` every vertex is adjacent to all but at most one other vertex
/// * `C2` Hamiltonian property, and the arrows at the nominated vertex are
///   arranged as outgoing, at most one non-adjacent, then incoming
/// * `C3` every weight and local index is at least one
/// * `C4` the far side of the polygon sits at the right height
/// * `C5` the first edge has primitive endpoints
/// * `C6` a vertex on the `x`-axis has the coordinate the cone forces
/// * `C7` coordinates and normals are integral, primitive and close up
/// * `C8` arrow counts between every pair of edges match the normals
/// * `C9` the vertices are in strictly convex position around the origin
pub fn reconstruct_general(q: &DecoratedQuiver) -> Result<ReconstructionReport> {
    check_input(q)?;
    let n = q.len();
    let report = |m, x, attempt: Attempt, transcript| {
        let (outcome, polygon, failed) = match attempt {
            Ok(p) => (Outcome::Success, Some(p), None),
            Err(f) => (Outcome::Failure, None, Some(f)),
        };
        ReconstructionReport {
            outcome,
            polygon,
            nominated_vertex: m,
            x_choice: x,
            failed_condition: failed,
            transcript,
        }
    };

    if let Some(v) = (0..n).find(|&v| q.out_set(v).len() + q.in_set(v).len() + 2 < n) {
        return Ok(report(
            0,
            None,
            Err(fail(1, format!("vertex {v} is not adjacent to at least n - 2 vertices"))),
            Transcript::default(),
        ));
    }
    let h = hamiltonian(q);
    let cycle = match h.cycle() {
        Ok(c) => c.to_vec(),
        Err(_) => {
            let f = h.failure.expect("cycle is missing only on failure");
            return Ok(report(0, None, Err(fail(2, format!("no Hamiltonian property: {f}"))), Transcript::default()));
        }
    };
    if let Some(v) = (0..n).find(|&v| q.weight(v) < 1 || q.local_index(v) < 1) {
        let (w, l) = q.label(v);
        return Ok(report(0, None, Err(fail(3, format!("vertex {v} has label ({w},{l})"))), Transcript::default()));
    }

    let mut first = None;
    for start in 0..n {
        let mut order = cycle.clone();
        order.rotate_left(start);
        let (attempt, x, transcript) = nominate(q, &order)?;
        if attempt.is_ok() {
            return Ok(report(order[0], x, attempt, transcript));
        }
        if first.is_none() {
            first = Some(report(order[0], x, attempt, transcript));
        }
    }
    Ok(first.expect("at least three nominations"))
}

/// Heights, normals' first coordinates and admissible `x` values for one nomination.
struct Prepared {
    w: Vec<i64>,
    l: Vec<i64>,
    y: Vec<i64>,
    s: Vec<i64>,
    xs: Vec<i64>,
    transcript: Transcript,
}

fn prepare(
    q: &DecoratedQuiver,
    order: &[usize],
) -> Result<std::result::Result<Prepared, (ConditionFailure, Transcript)>> {
    let n = order.len();
    let a = |i: usize, j: usize| q.arrows(order[i], order[j]);
    let w: Vec<i64> = order.iter().map(|&v| q.weight(v)).collect();
    let l: Vec<i64> = order.iter().map(|&v| q.local_index(v)).collect();
    let mut tr = Transcript { order: order.to_vec(), ..Transcript::default() };

    // Arrows from the nominated edge: out, then at most one parallel edge, then in.
    let signs: Vec<i64> = (1..n).map(|i| a(0, i).signum()).collect();
    let p = signs.iter().take_while(|&&s| s > 0).count();
    let zeros = signs[p..].iter().take_while(|&&s| s == 0).count();
    if p == 0 || zeros > 1 || signs[p + zeros..].iter().any(|&s| s >= 0) || p + zeros == n - 1 {
        let f = fail(2, format!("arrows at vertex {} are not arranged out, opposite, in along the cycle", order[0]));
        return Ok(Err((f, tr)));
    }
    let opposite = (zeros == 1).then_some(p + 1);

    let s: Vec<i64> = (0..n).map(|i| -a(0, i)).collect();
    let mut y = vec![-l[0]; n + 1];
    for i in 1..n {
        y[i + 1] = y[i] - w[i] * s[i];
    }
    tr.y = y[..n].to_vec();
    tr.s = s.clone();
    if y[n] != y[0] {
        return Err(Error::Internal("heights fail to close at a balanced vertex".into()));
    }
    match opposite {
        Some(k) if y[k] != l[k] => {
            let f = fail(4, format!("opposite edge at height {} but its local index is {}", y[k], l[k]));
            return Ok(Err((f, tr)));
        }
        None if y[p + 1] <= 0 => {
            let f = fail(4, format!("top vertex at height {} is not above the origin", y[p + 1]));
            return Ok(Err((f, tr)));
        }
        _ => {}
    }

    let xs: Vec<i64> = (0..l[0]).filter(|&x| coprime(x, l[0]) && coprime(x + w[0], l[0])).collect();
    if xs.is_empty() {
        let f = fail(5, format!("no x with gcd(x, {0}) = gcd(x + {1}, {0}) = 1", l[0], w[0]));
        return Ok(Err((f, tr)));
    }
    Ok(Ok(Prepared { w, l, y, s, xs, transcript: tr }))
}

fn nominate(q: &DecoratedQuiver, order: &[usize]) -> Result<(Attempt, Option<i64>, Transcript)> {
    let pre = match prepare(q, order)? {
        Ok(pre) => pre,
        Err((f, tr)) => return Ok((Err(f), None, tr)),
    };
    let mut best: Option<(Attempt, i64, Transcript)> = None;
    for &x in &pre.xs {
        let (attempt, t) = try_x(q, order, &pre, x)?;
        let rank = |a: &Attempt| a.as_ref().err().map_or(u8::MAX, |f| f.condition.0);
        if best.as_ref().is_none_or(|(b, _, _)| rank(&attempt) > rank(b)) {
            let done = attempt.is_ok();
            best = Some((attempt, x, t));
            if done {
                break;
            }
        }
    }
    let (attempt, x, t) = best.expect("at least one x");
    Ok((attempt, Some(x), t))
}

/// Every polygon whose block quiver is `q`, one per GL-class.
///
/// The block quiver does not always pin the polygon down: different `x`
/// can give inequivalent polygons with the same quiver, differing in the
/// cyclic quotient types of their cones.
pub fn reconstruct_all(q: &DecoratedQuiver) -> Result<Vec<FanoPolygon>> {
    let first = reconstruct_general(q)?;
    if !first.is_success() {
        return Ok(Vec::new());
    }
    let cycle = first.transcript.order.clone();
    let mut found: Vec<FanoPolygon> = Vec::new();
    for start in 0..cycle.len() {
        let mut order = cycle.clone();
        order.rotate_left(start);
        let Ok(pre) = prepare(q, &order)? else { continue };
        for &x in &pre.xs {
            if let (Ok(p), _) = try_x(q, &order, &pre, x)? {
                if !found.iter().any(|f| polygons_equivalent(f, &p, EquivalenceGroup::GL)) {
                    found.push(p);
                }
            }
        }
    }
    Ok(found)
}

fn try_x(q: &DecoratedQuiver, order: &[usize], pre: &Prepared, x: i64) -> Result<(Attempt, Transcript)> {
    let Prepared { w, l, y, s, .. } = pre;
    let mut tr = pre.transcript.clone();
    let n = order.len();
    let a = |i: usize, j: usize| q.arrows(order[i], order[j]);
    let r = Rational64::from;
    let mut xs = vec![r(0); n + 1];
    let mut t = vec![r(0); n];
    xs[0] = r(x);
    xs[1] = r(x + w[0]);
    t[0] = r(1);
    let mut c6: Option<ConditionFailure> = None;
    for i in 1..n {
        if y[i] != 0 {
            xs[i + 1] = (xs[i] * r(y[i + 1]) - r(w[i] * l[i])) / r(y[i]);
            t[i] = (xs[i + 1] - xs[i]) / r(w[i]);
        } else {
            let forced = r(w[i] * l[i]) / r(y[i + 1]);
            if xs[i] != forced && c6.is_none() {
                c6 = Some(fail(6, format!("x{} = {} but the cone forces {forced}", i, xs[i])));
            }
            t[i] = (r(a(1, i)) + t[1] * r(s[i])) / r(s[1]);
            xs[i + 1] = xs[i] + r(w[i]) * t[i];
        }
    }
    tr.x = xs[..n].to_vec();
    tr.t = t.clone();
    if let Some(f) = c6 {
        return Ok((Err(f), tr));
    }

    let mut xi = Vec::with_capacity(n + 1);
    let mut ti = Vec::with_capacity(n);
    for i in 0..=n {
        match integral(xs[i]) {
            Some(v) => xi.push(v),
            None => return Ok((Err(fail(7, format!("x{i} = {} is not an integer", xs[i]))), tr)),
        }
        if i < n {
            match integral(t[i]) {
                Some(v) => ti.push(v),
                None => return Ok((Err(fail(7, format!("t{i} = {} is not an integer", t[i]))), tr)),
            }
        }
    }
    for i in 0..n {
        if !coprime(xi[i], y[i]) {
            return Ok((Err(fail(7, format!("vertex {i} = ({},{}) is not primitive", xi[i], y[i]))), tr));
        }
        if !coprime(s[i], ti[i]) {
            return Ok((Err(fail(7, format!("normal {i} = ({},{}) is not primitive", s[i], ti[i]))), tr));
        }
    }
    if xi[n] != xi[0] {
        return Ok((Err(fail(7, format!("x{n} = {} does not return to x0 = {}", xi[n], xi[0]))), tr));
    }

    for i in 0..n {
        for j in i + 1..n {
            let det = s[i] * ti[j] - s[j] * ti[i];
            if det != a(i, j) {
                return Ok((Err(fail(8, format!("normals {i}, {j} give {det} arrows, quiver has {}", a(i, j)))), tr));
            }
        }
    }
    for i in 0..n {
        for j in (0..n).filter(|&j| j != i && j != (i + 1) % n) {
            let h = s[i] * xi[j] + ti[i] * y[j];
            if h <= -l[i] {
                return Ok((Err(fail(9, format!("vertex {j} at height {h} under normal {i}, bound {}", -l[i]))), tr));
            }
        }
    }
    let attempt = assemble(q, order, &xi[..n], &y[..n])?;
    Ok((attempt, tr))
}
