use std::sync::OnceLock;

use fanoq::complex3::{self, block_complex3};
use fanoq::lattice2d::{canonical_form, enumerate_fano_polygons, polygons_equivalent, EquivalenceGroup, FanoPolygon};
use fanoq::polygonal::{build_bquiv, build_quiv, singularity_content};
use fanoq::quiver::{
    balanced_weight_space, balancing, block, classical_mutation, mutate, opposite, quivers_isomorphic, DecoratedQuiver,
};
use fanoq::reconstruction::{reconstruct_general, reconstruct_triangle, reconstruct_triangle_at};
use proptest::prelude::*;

fn corpus() -> &'static [FanoPolygon] {
    static CORPUS: OnceLock<Vec<FanoPolygon>> = OnceLock::new();
    CORPUS.get_or_init(|| enumerate_fano_polygons(2))
}

/// Antisymmetric matrix from its strict upper triangle.
fn antisymmetric(n: usize, upper: &[i64]) -> Vec<Vec<i64>> {
    let mut b = vec![vec![0; n]; n];
    let mut it = upper.iter();
    for i in 0..n {
        for j in i + 1..n {
            let v = *it.next().expect("enough entries");
            b[i][j] = v;
            b[j][i] = -v;
        }
    }
    b
}

fn matrix_and_vertex() -> impl Strategy<Value = (Vec<Vec<i64>>, usize)> {
    (2usize..=6).prop_flat_map(|n| (prop::collection::vec(-4i64..=4, n * (n - 1) / 2), 0..n)).prop_map(|(upper, m)| {
        let n = (1..=6).find(|k| k * (k - 1) / 2 == upper.len()).expect("triangular length");
        (antisymmetric(n, &upper), m)
    })
}

/// Adjusts one entry in row `m` so that `m` is balanced with unit weights.
fn balance_row(mut b: Vec<Vec<i64>>, m: usize) -> Vec<Vec<i64>> {
    let n = b.len();
    let other = if m == n - 1 { 0 } else { n - 1 };
    let rest: i64 = (0..n).filter(|&j| j != other).map(|j| b[m][j]).sum();
    b[m][other] = -rest;
    b[other][m] = rest;
    b
}

fn unimodular2() -> impl Strategy<Value = [[i64; 2]; 2]> {
    prop::collection::vec((0usize..3, -3i64..=3), 1..6).prop_map(|ops| {
        let mut m = [[1, 0], [0, 1]];
        for (kind, k) in ops {
            let e = match kind {
                0 => [[1, k], [0, 1]],
                1 => [[1, 0], [k, 1]],
                _ => [[0, 1], [1, 0]],
            };
            m = [
                [e[0][0] * m[0][0] + e[0][1] * m[1][0], e[0][0] * m[0][1] + e[0][1] * m[1][1]],
                [e[1][0] * m[0][0] + e[1][1] * m[1][0], e[1][0] * m[0][1] + e[1][1] * m[1][1]],
            ];
        }
        m
    })
}

fn unimodular3() -> impl Strategy<Value = [[i64; 3]; 3]> {
    prop::collection::vec((0usize..3, 0usize..3, -2i64..=2), 1..5).prop_map(|ops| {
        let mut m = [[1, 0, 0], [0, 1, 0], [0, 0, 1]];
        for (i, j, k) in ops {
            if i == j {
                m.swap(i, (i + 1) % 3);
            } else {
                for c in 0..3 {
                    m[i][c] += k * m[j][c];
                }
            }
        }
        m
    })
}

fn cyclic_triangle(arrows: [i64; 3], l: [i64; 3]) -> Option<DecoratedQuiver> {
    let shape =
        DecoratedQuiver::from_arrows(vec![(1, 1); 3], &[(0, 1, arrows[0]), (1, 2, arrows[1]), (2, 0, arrows[2])])
            .ok()?;
    let kernel = balanced_weight_space(&shape);
    let [w] = kernel.as_slice() else { return None };
    let sign = w[0].signum();
    let labels = (0..3).map(|i| (sign * w[i], l[i])).collect();
    shape.with_labels(labels).ok()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn unit_mutation_is_classical((b, m) in matrix_and_vertex()) {
        let b = balance_row(b, m);
        let n = b.len();
        let q = DecoratedQuiver::new(vec![(1, 1); n], b.clone()).unwrap();
        let mq = mutate(&q, m, 1).unwrap();
        let expected = classical_mutation(&b, m);
        prop_assert_eq!(mq.exchange(), expected.as_slice());
    }

    #[test]
    fn block_is_idempotent_and_commutes_with_opposite((b, _) in matrix_and_vertex(), l in prop::collection::vec(1i64..=2, 6)) {
        let n = b.len();
        let q = DecoratedQuiver::new((0..n).map(|i| (1, l[i])).collect(), b).unwrap();
        let bq = block(&q);
        prop_assert_eq!(&block(&bq), &bq);
        prop_assert_eq!(block(&opposite(&q)), opposite(&bq));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn triangle_and_general_agree(a in 1i64..=12, b in 1i64..=12, c in 1i64..=12, l in prop::array::uniform3(1i64..=6)) {
        let q = cyclic_triangle([a, b, c], l);
        prop_assume!(q.is_some());
        let q = q.unwrap();
        prop_assume!(block(&q) == q && balancing(&q).all_balanced());
        let t = reconstruct_triangle(&q).unwrap();
        let g = reconstruct_general(&q).unwrap();
        prop_assert_eq!(t.is_success(), g.is_success());
        if let (Some(pt), Some(pg)) = (&t.polygon, &g.polygon) {
            prop_assert!(polygons_equivalent(pt, pg, EquivalenceGroup::GL));
        }
        let by_nomination: Vec<bool> = (0..3).map(|m| reconstruct_triangle_at(&q, m).unwrap().is_success()).collect();
        prop_assert!(by_nomination.iter().all(|&s| s == t.is_success()), "{:?}", by_nomination);
    }

    #[test]
    fn unimodular_maps_preserve_everything(i in 0usize..156, m in unimodular2()) {
        let p = &corpus()[i];
        let image = p.transform(m).unwrap();
        let det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
        prop_assert_eq!(canonical_form(p, EquivalenceGroup::GL), canonical_form(&image, EquivalenceGroup::GL));
        if det == 1 {
            prop_assert_eq!(canonical_form(p, EquivalenceGroup::SL), canonical_form(&image, EquivalenceGroup::SL));
        }
        prop_assert_eq!(p.dual_degree(), image.dual_degree());
        prop_assert_eq!(p.normalized_volume(), image.normalized_volume());
        prop_assert_eq!(singularity_content(p), singularity_content(&image));
        let q = build_bquiv(p).quiver;
        let qi = build_bquiv(&image).quiver;
        let expected = if det == 1 { q } else { opposite(&q) };
        prop_assert!(quivers_isomorphic(&qi, &expected));
    }

    #[test]
    fn block_complex_is_unimodular_invariant(m in unimodular3(), which in 0usize..3) {
        let p = [complex3::known::p3(), complex3::known::p1119_mod3(), complex3::known::standard_simplex()][which].clone();
        let sorted = |p: &complex3::FanoPolytope3| {
            let mut v: Vec<i64> = block_complex3(p).simplices.iter().map(|s| s.multiplicity).collect();
            v.sort_unstable();
            v
        };
        prop_assert_eq!(sorted(&p), sorted(&p.transform(m).unwrap()));
    }
}

#[test]
fn reversed_orientation_gives_opposite_quiver() {
    for p in corpus() {
        let q = build_quiv(p).quiver;
        let r = build_quiv(&p.with_reversed_orientation()).quiver;
        assert!(quivers_isomorphic(&r, &opposite(&q)), "{:?}", p.vertices());
    }
}

#[test]
fn corpus_polygons_are_pairwise_distinct() {
    let forms: std::collections::BTreeSet<_> =
        corpus().iter().map(|p| canonical_form(p, EquivalenceGroup::GL)).collect();
    assert_eq!(forms.len(), corpus().len());
}

#[test]
fn triangle_grid_agreement() {
    let (mut successes, mut failures) = (0, 0);
    for a in 1..=9 {
        for b in 1..=9 {
            for c in 1..=9 {
                for l in [[1, 1, 1], [1, 1, 3], [1, 3, 2], [2, 1, 1], [1, 2, 5]] {
                    let Some(q) = cyclic_triangle([a, b, c], l) else { continue };
                    if block(&q) != q {
                        continue;
                    }
                    let t = reconstruct_triangle(&q).unwrap().is_success();
                    assert_eq!(t, reconstruct_general(&q).unwrap().is_success(), "{q}");
                    if t {
                        successes += 1;
                    } else {
                        failures += 1;
                    }
                }
            }
        }
    }
    assert!(successes > 0 && failures > 0, "{successes} successes, {failures} failures");
}
