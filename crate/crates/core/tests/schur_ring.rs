mod common;

use common::*;
use grassline::{Partition2, Rational, SchurClass};
use proptest::prelude::*;

/// Random class on `G(1,n)` with terms of codimension at most `max_codim`.
fn arb_class(n: u32, max_codim: u32) -> impl Strategy<Value = SchurClass> {
    let max_row = n - 1;
    let term = (0..=max_row, 0..=max_row, -5i64..=5)
        .prop_filter("two-row, bounded codim", move |(a, b, _)| {
            a >= b && a + b <= max_codim
        });
    prop::collection::vec(term, 0..4).prop_map(move |terms| {
        SchurClass::from_terms(
            ctx(n),
            terms
                .into_iter()
                .map(|(a, b, c)| (Partition2::new(a, b).unwrap(), int(c))),
        )
        .unwrap()
    })
}

fn arb_triple() -> impl Strategy<Value = (SchurClass, SchurClass, SchurClass)> {
    (2u32..=9).prop_flat_map(|n| (arb_class(n, 6), arb_class(n, 6), arb_class(n, 6)))
}

fn arb_partition(size: u32) -> impl Strategy<Value = Partition2> {
    (size.div_ceil(2)..=size).prop_map(move |a| Partition2::new(a, size - a).unwrap())
}

/// `n` and two partitions whose sizes add up to at most `n - 1`.
fn arb_untruncated_pair() -> impl Strategy<Value = (u32, Partition2, Partition2)> {
    (2u32..=9)
        .prop_flat_map(|n| (Just(n), 0..n))
        .prop_flat_map(|(n, k1)| (Just(n), Just(k1), 0..=(n - 1 - k1)))
        .prop_flat_map(|(n, k1, k2)| (Just(n), arb_partition(k1), arb_partition(k2)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn ring_axioms((u, v, w) in arb_triple()) {
        prop_assert_eq!(&u * &v, &v * &u);
        prop_assert_eq!(&(&u * &v) * &w, &u * &(&v * &w));
        prop_assert_eq!(&u * &(&v + &w), &(&u * &v) + &(&u * &w));
    }

    #[test]
    fn grading_is_additive((u, v, _w) in arb_triple()) {
        for (j, uj) in u.graded_components() {
            for (k, vk) in v.graded_components() {
                let prod = &uj * &vk;
                prop_assert!(prod.is_homogeneous_of(j + k));
            }
        }
    }

    /// Products that stay inside the box agree with multiplying the
    /// bialternant polynomials.
    #[test]
    fn matches_bialternant_oracle((n, p, q) in arb_untruncated_pair()) {
        let u = SchurClass::schubert(ctx(n), p);
        let v = SchurClass::schubert(ctx(n), q);
        prop_assert_eq!(class_as_map(&(&u * &v)), oracle_product(&u, &v));
    }
}

#[test]
fn truncated_products_match_oracle_after_dropping_box_overflow() {
    // On n = 2 the oracle gives s(2,0) + s(1,1); the box keeps s(1,1).
    let c = ctx(2);
    let l = SchurClass::l(c);
    let oracle = oracle_product(&l, &l);
    assert_eq!(oracle.len(), 2);
    let kept: std::collections::BTreeMap<_, _> =
        oracle.into_iter().filter(|((a, _), _)| *a <= 1).collect();
    assert_eq!(class_as_map(&(&l * &l)), kept);
}

#[test]
fn poincare_duality_exhaustive() {
    for n in 2..=6 {
        let c = ctx(n);
        for k in 0..=c.dim() {
            for p in c.schubert_basis(k).unwrap() {
                let sp = SchurClass::schubert(c, p);
                for q in c.schubert_basis(c.dim() - k).unwrap() {
                    let v = (&sp * &SchurClass::schubert(c, q)).integrate();
                    let expected = if q == c.dual(p).unwrap() { 1 } else { 0 };
                    assert_eq!(v, int(expected), "n={n} p={p} q={q}");
                }
            }
        }
    }
}

#[test]
fn l_powers_match_iterated_pieri() {
    for n in 2..=7 {
        let c = ctx(n);
        for k in 0..=c.dim() {
            let lib = SchurClass::l(c).pow(k);
            let oracle: std::collections::BTreeMap<_, _> = l_power_by_pieri(n, k)
                .into_iter()
                .map(|(key, v)| (key, Rational::from_integer(v)))
                .collect();
            assert_eq!(class_as_map(&lib), oracle, "n={n} k={k}");
        }
    }
    // classical degree of G(1,3) in the Plücker embedding
    assert_eq!(SchurClass::l(ctx(3)).pow(4).integrate(), int(2));
    assert_eq!(l_power_by_pieri(3, 4)[&(2, 2)], 2.into());
}

#[test]
fn lc2_images_match_bialternant_expansion() {
    // 18 l^2 c2 + 9 c2^2 = 9xy(2x^2 + 5xy + 2y^2)
    let p = grassline::LC2Poly::from_terms([((2, 1), int(18)), ((0, 2), int(9))]);
    let oracle = schur_decompose(&lc2_to_xy(&p));
    let lib = SchurClass::from_lc2(&p, ctx(8));
    assert_eq!(class_as_map(&lib), oracle);
    assert_eq!(oracle[&(3, 1)], int(18));
    assert_eq!(oracle[&(2, 2)], int(27));
}
