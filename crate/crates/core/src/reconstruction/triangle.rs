use num_rational::Rational64;

use super::{assemble, check_input, coprime, fail, integral, Attempt, Outcome, ReconstructionReport, Transcript};
use crate::error::{Error, Result};
use crate::quiver::DecoratedQuiver;

/// Cyclic order starting at `m1`, if the three vertices form an oriented triangle.
fn cyclic_order(q: &DecoratedQuiver, m1: usize) -> Option<[usize; 3]> {
    let m2 = (0..3).find(|&v| v != m1 && q.arrows(m1, v) > 0)?;
    let m3 = 3 - m1 - m2;
    (q.arrows(m1, m2) > 0 && q.arrows(m2, m3) > 0 && q.arrows(m3, m1) > 0).then_some([m1, m2, m3])
}

/// `(sum w_i l_i, w_1 w_2 A(m_1, m_2))`: twice-computed volume of the
/// would-be triangle. Equality is necessary for polygonality.
pub fn expected_volume_gap(q: &DecoratedQuiver) -> Result<(i64, i64)> {
    if q.len() != 3 {
        return Err(Error::NotApplicable(format!("expected a triangle quiver, got {} vertices", q.len())));
    }
    let [m1, m2, _] =
        cyclic_order(q, 0).ok_or_else(|| Error::NotApplicable("quiver is not a cyclic triangle".into()))?;
    let lhs = (0..3).map(|v| q.weight(v) * q.local_index(v)).sum();
    let rhs = q.weight(m1) * q.weight(m2) * q.arrows(m1, m2);
    Ok((lhs, rhs))
}

/// Triangle reconstruction with conditions 1 to 7, trying every nomination.
pub fn reconstruct_triangle(q: &DecoratedQuiver) -> Result<ReconstructionReport> {
    let mut first_failure = None;
    for m1 in 0..3 {
        let report = reconstruct_triangle_at(q, m1)?;
        if report.is_success() {
            return Ok(report);
        }
        first_failure.get_or_insert(report);
    }
    Ok(first_failure.expect("three nominations were tried"))
}

/// Triangle reconstruction with `m1` as the nominated vertex.
pub fn reconstruct_triangle_at(q: &DecoratedQuiver, m1: usize) -> Result<ReconstructionReport> {
    if q.len() != 3 {
        return Err(Error::NotApplicable(format!("expected 3 vertices, got {}", q.len())));
    }
    q.check_vertex(m1)?;
    check_input(q)?;
    let (attempt, x_choice, transcript) = nominate(q, m1)?;
    let (outcome, polygon, failed_condition) = match attempt {
        Ok(p) => (Outcome::Success, Some(p), None),
        Err(f) => (Outcome::Failure, None, Some(f)),
    };
    Ok(ReconstructionReport { outcome, polygon, nominated_vertex: m1, x_choice, failed_condition, transcript })
}

fn nominate(q: &DecoratedQuiver, m1: usize) -> Result<(Attempt, Option<i64>, Transcript)> {
    let mut tr = Transcript::default();
    let Some(order) = cyclic_order(q, m1) else {
        return Ok((Err(fail(1, "the three vertices do not form an oriented cycle")), None, tr));
    };
    tr.order = order.to_vec();
    let w: Vec<i64> = order.iter().map(|&v| q.weight(v)).collect();
    let l: Vec<i64> = order.iter().map(|&v| q.local_index(v)).collect();
    if let Some(i) = (0..3).find(|&i| w[i] < 1 || l[i] < 1) {
        return Ok((Err(fail(2, format!("label ({},{}) is not positive", w[i], l[i]))), None, tr));
    }
    let a12 = q.arrows(order[0], order[1]);
    let y = [-l[0], -l[0], -l[0] + w[1] * a12];
    tr.y = y.to_vec();
    tr.s = vec![0, -a12, -q.arrows(order[0], order[2])];
    if y[2] <= 0 {
        return Ok((Err(fail(3, format!("y3 = {} is not positive", y[2]))), None, tr));
    }
    let candidates: Vec<i64> = (0..l[0]).filter(|&x| coprime(x, y[0]) && coprime(x + w[0], y[1])).collect();
    if candidates.is_empty() {
        return Ok((Err(fail(4, format!("no x with gcd(x, {}) = gcd(x + {}, {}) = 1", y[0], w[0], y[1]))), None, tr));
    }
    // keep the attempt that gets furthest
    let mut best: Option<(Attempt, i64, Transcript)> = None;
    for x in candidates {
        let (attempt, t) = try_x(q, &order, &w, &l, &y, x, tr.clone())?;
        let rank = |a: &Attempt| a.as_ref().err().map_or(u8::MAX, |f| f.condition.0);
        if best.as_ref().is_none_or(|(b, _, _)| rank(&attempt) > rank(b)) {
            let done = attempt.is_ok();
            best = Some((attempt, x, t));
            if done {
                break;
            }
        }
    }
    let (attempt, x, t) = best.expect("at least one candidate");
    Ok((attempt, Some(x), t))
}

fn try_x(
    q: &DecoratedQuiver,
    order: &[usize; 3],
    w: &[i64],
    l: &[i64],
    y: &[i64; 3],
    x: i64,
    mut tr: Transcript,
) -> Result<(Attempt, Transcript)> {
    let r = Rational64::from;
    let x1 = r(x);
    let x2 = r(x + w[0]);
    let x3 = (r(w[2] * l[2]) + x1 * r(y[2])) / r(y[0]);
    let x3p = (x2 * r(y[2]) - r(w[1] * l[1])) / r(y[1]);
    let xs = [x1, x2, x3];
    let t: Vec<Rational64> = std::iter::once(r(1)).chain((1..3).map(|j| (xs[(j + 1) % 3] - xs[j]) / r(w[j]))).collect();
    tr.x = xs.to_vec();
    tr.t = t.clone();
    let (Some(t2), Some(t3), Some(x3i)) = (integral(t[1]), integral(t[2]), integral(x3)) else {
        return Ok((Err(fail(5, format!("t2 = {}, t3 = {} are not both integers", t[1], t[2]))), tr));
    };
    if x3 != x3p {
        return Ok((Err(fail(6, format!("x3 = {x3} but x3' = {x3p}"))), tr));
    }
    if !coprime(x3i, y[2]) {
        return Ok((Err(fail(7, format!("gcd(x3, y3) = gcd({x3i}, {}) != 1", y[2]))), tr));
    }
    for (j, tj) in [(1, t2), (2, t3)] {
        if !coprime(tr.s[j], tj) {
            return Ok((Err(fail(7, format!("gcd(s{}, t{}) = gcd({}, {tj}) != 1", j + 1, j + 1, tr.s[j]))), tr));
        }
    }
    let attempt = assemble(q, order, &[x, x + w[0], x3i], y)?;
    Ok((attempt, tr))
}
