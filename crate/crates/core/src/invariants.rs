//! Identities every Fano polygon must satisfy, run one polygon at a time.
//! Used by the `check` command and by the corpus-wide tests.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::lattice2d::{mutate_polygon, polygons_equivalent, EquivalenceGroup, FanoPolygon};
use crate::polygonal::{
    build_bquiv, build_quiv, commutation_check, degree_along, degree_from_quiver, hamiltonian, markov_point,
    quiver_degree_check, residual_sum, singularity_content,
};
use crate::quiver::{
    balancing, block, gcd_arrows, gcd_weights, mutate, mutation_group_check, quivers_isomorphic, DecoratedQuiver,
};
use crate::reconstruction::{reconstruct_all, reconstruct_general, reconstruct_triangle};
use crate::Result;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Check {
    /// Degree from the quiver, the block quiver and the dual polygon all equal `12 - tau + residual`.
    DegreeFormula,
    /// The degree does not depend on which vertex represents each edge.
    RepresentativeChoice,
    /// Normalized volume is `sum w*l` over the vertices of `quiv(P)`.
    VolumeIdentity,
    /// `quiv(P)` is balanced and `D(m)` is the height range of `m` on `P`.
    GeometricBalancing,
    /// With every local index 1, labels are `(1,1)` and in-degree equals out-degree.
    ReflexiveSpecialization,
    /// `block(quiv(P))` is isomorphic to `bquiv(P)`.
    BlockOfQuiver,
    /// `bquiv(P)` has the Hamiltonian property and its cycle is the edge order.
    HamiltonianCycle,
    /// Every vertex of `bquiv(P)` is adjacent to all but at most one other.
    NearCompleteness,
    /// Balancing survives `mut^k` for `k` in `-2..=2` at every vertex.
    MutationBalancing,
    /// Arrow and weight gcds are unchanged by `mut^k`.
    MutationGcds,
    /// `D(m)` is unchanged by `mut^k` at `m`.
    MutationDiameter,
    /// `mut^k` applied twice at the same vertex is the identity.
    MutationInvolution,
    /// `mut^t . mut^s = mut^0 . mut^(s-t)` for `s, t` in `0..=2`.
    MutationGroup,
    /// Quiver and polygon mutation commute at T-vertices; R-vertices break a label.
    Commutation,
    /// Content, degree, residual and gcds survive polygon mutation.
    PolygonMutationInvariants,
    /// Reconstruction from `bquiv(P)` succeeds and `P` is among the polygons it finds.
    RoundTrip,
    /// Triangle and general reconstruction agree on three-vertex block quivers.
    TriangleAgreement,
    /// The Markov-type residual vanishes.
    MarkovPoint,
}

impl Check {
    pub const ALL: [Check; 18] = [
        Check::DegreeFormula,
        Check::RepresentativeChoice,
        Check::VolumeIdentity,
        Check::GeometricBalancing,
        Check::ReflexiveSpecialization,
        Check::BlockOfQuiver,
        Check::HamiltonianCycle,
        Check::NearCompleteness,
        Check::MutationBalancing,
        Check::MutationGcds,
        Check::MutationDiameter,
        Check::MutationInvolution,
        Check::MutationGroup,
        Check::Commutation,
        Check::PolygonMutationInvariants,
        Check::RoundTrip,
        Check::TriangleAgreement,
        Check::MarkovPoint,
    ];
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = serde_json::to_value(self).expect("unit variant");
        f.write_str(s.as_str().expect("string"))
    }
}

/// A failed check with a short description of the counterexample.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub check: Check,
    pub detail: String,
}

struct Collector(Vec<Violation>);

impl Collector {
    fn expect(&mut self, check: Check, ok: bool, detail: impl FnOnce() -> String) {
        if !ok {
            self.0.push(Violation { check, detail: detail() });
        }
    }

    fn expect_ok(&mut self, check: Check, r: Result<bool>, detail: impl FnOnce() -> String) {
        match r {
            Ok(ok) => self.expect(check, ok, detail),
            Err(e) => self.0.push(Violation { check, detail: format!("{}: {e}", detail()) }),
        }
    }
}

/// Runs every check on `p`; the round trip requires equivalence under `group`.
pub fn check_polygon(p: &FanoPolygon, group: EquivalenceGroup) -> Vec<Violation> {
    let mut c = Collector(Vec::new());
    let pq = build_quiv(p);
    let q = &pq.quiver;
    let bq = build_bquiv(p).quiver;

    c.expect(Check::DegreeFormula, quiver_degree_check(p), || "degree formula".into());
    let last_reps: Vec<usize> =
        (0..p.len()).map(|e| pq.edges.iter().rposition(|&x| x == e).expect("every edge has a cone")).collect();
    c.expect(Check::RepresentativeChoice, degree_along(q, &last_reps) == degree_from_quiver(&pq), || {
        "highest-id representatives give another degree".into()
    });

    let vol: i64 = q.labels().iter().map(|&(w, l)| w * l).sum();
    c.expect(Check::VolumeIdentity, vol == p.normalized_volume(), || {
        format!("sum w*l = {vol}, volume {}", p.normalized_volume())
    });

    let bal = balancing(q);
    for v in 0..q.len() {
        let (lo, hi) = p.height_range(pq.normals[v]);
        c.expect(Check::GeometricBalancing, bal.diameter(v) == Some(hi - lo), || {
            format!("vertex {v}: D = {:?}, height range {}", bal.diameter(v), hi - lo)
        });
    }

    if q.labels().iter().all(|&(_, l)| l == 1) {
        let ok = q.labels().iter().all(|&lab| lab == (1, 1))
            && (0..q.len()).all(|v| {
                let (out, inn): (i64, i64) = (0..q.len()).fold((0, 0), |(o, i), y| {
                    let a = q.arrows(v, y);
                    (o + a.max(0), i + (-a).max(0))
                });
                out == inn
            });
        c.expect(Check::ReflexiveSpecialization, ok, || "reflexive polygon with unbalanced degrees".into());
    }

    c.expect(Check::BlockOfQuiver, quivers_isomorphic(&block(q), &bq), || "block(quiv) differs from bquiv".into());

    let h = hamiltonian(&bq);
    let n = bq.len();
    let edge_order: Vec<usize> = (0..n).collect();
    c.expect(Check::HamiltonianCycle, h.cycle.as_deref() == Some(&edge_order[..]), || {
        format!("cycle {:?}, failure {:?}", h.cycle, h.failure)
    });
    for v in 0..n {
        c.expect(Check::NearCompleteness, bq.out_set(v).len() + bq.in_set(v).len() + 2 >= n, || {
            format!("vertex {v} misses more than one vertex")
        });
    }

    quiver_mutations(&mut c, q);

    let content = singularity_content(p);
    for v in 0..q.len() {
        c.expect_ok(Check::Commutation, commutation_check(p, v), || format!("vertex {v}"));
        if !pq.is_t_vertex(v) {
            continue;
        }
        match mutate_polygon(p, pq.normals[v]) {
            Ok(m) => {
                let mq = build_quiv(&m).quiver;
                let same = singularity_content(&m) == content
                    && m.dual_degree() == p.dual_degree()
                    && residual_sum(&m) == residual_sum(p)
                    && gcd_arrows(&mq) == gcd_arrows(q)
                    && gcd_weights(&mq) == gcd_weights(q);
                c.expect(Check::PolygonMutationInvariants, same, || format!("mutation at vertex {v}"));
            }
            Err(e) => {
                c.0.push(Violation { check: Check::PolygonMutationInvariants, detail: format!("vertex {v}: {e}") })
            }
        }
    }

    match reconstruct_general(&bq) {
        Ok(r) => {
            let all = reconstruct_all(&bq);
            let found = all.as_ref().is_ok_and(|all| all.iter().any(|r| polygons_equivalent(p, r, group)));
            c.expect(Check::RoundTrip, r.is_success() && found, || match &r.failed_condition {
                Some(f) => format!("failed {}: {}", f.condition, f.witness),
                None => format!("no reconstruction is {group:?}-equivalent"),
            });
            if n == 3 {
                let t = reconstruct_triangle(&bq).map(|t| t.is_success());
                c.expect(Check::TriangleAgreement, t == Ok(r.is_success()), || {
                    format!("triangle algorithm gives {t:?}")
                });
            }
        }
        Err(e) => c.0.push(Violation { check: Check::RoundTrip, detail: e.to_string() }),
    }

    let mp = markov_point(p);
    c.expect(Check::MarkovPoint, mp.residual == 0.into(), || format!("residual {}", mp.residual));
    c.0
}

fn quiver_mutations(c: &mut Collector, q: &DecoratedQuiver) {
    let (g, w) = (gcd_arrows(q), gcd_weights(q));
    let bal = balancing(q);
    for m in 0..q.len() {
        for k in -2..=2 {
            let mq = match mutate(q, m, k) {
                Ok(mq) => mq,
                Err(e) => {
                    c.0.push(Violation { check: Check::MutationBalancing, detail: format!("mut^{k} at {m}: {e}") });
                    continue;
                }
            };
            let mb = balancing(&mq);
            c.expect(Check::MutationBalancing, mb.all_balanced(), || format!("mut^{k} at {m}"));
            c.expect(Check::MutationGcds, gcd_arrows(&mq) == g && gcd_weights(&mq) == w, || format!("mut^{k} at {m}"));
            c.expect(Check::MutationDiameter, mb.diameter(m) == bal.diameter(m), || format!("mut^{k} at {m}"));
            let back = mutate(&mq, m, k);
            c.expect(Check::MutationInvolution, back.as_ref() == Ok(q), || format!("mut^{k} at {m}"));
        }
        for s in 0..=2 {
            for t in 0..=2 {
                c.expect_ok(Check::MutationGroup, mutation_group_check(q, m, s, t), || format!("s={s}, t={t} at {m}"));
            }
        }
    }
}

/// Violation counts per check over many polygons.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CorpusSummary {
    pub polygons: usize,
    pub violations: BTreeMap<Check, usize>,
    /// First counterexample for each failing check.
    pub examples: BTreeMap<Check, (FanoPolygon, String)>,
}

impl CorpusSummary {
    pub fn add(&mut self, p: &FanoPolygon, found: Vec<Violation>) {
        self.polygons += 1;
        let mut seen = Vec::new();
        for v in found {
            if seen.contains(&v.check) {
                continue;
            }
            seen.push(v.check);
            *self.violations.entry(v.check).or_default() += 1;
            self.examples.entry(v.check).or_insert_with(|| (p.clone(), v.detail));
        }
    }

    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }

    /// Polygons failing `check`.
    pub fn count(&self, check: Check) -> usize {
        self.violations.get(&check).copied().unwrap_or(0)
    }
}

pub fn check_corpus<'a>(polygons: impl IntoIterator<Item = &'a FanoPolygon>, group: EquivalenceGroup) -> CorpusSummary {
    let mut s = CorpusSummary::default();
    for p in polygons {
        s.add(p, check_polygon(p, group));
    }
    s
}
