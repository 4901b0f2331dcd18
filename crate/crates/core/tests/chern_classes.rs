mod common;

use common::*;
use grassline::chern::{self, class_f, class_fg, q_class, top_chern_of_sym_power};
use grassline::{LC2Poly, MultiDegree, RootBundle};

/// `Σ_k c_k(S^m E)` term by term against the direct expansion of
/// `∏ (1 + root·t)`, compared in `x, y`.
#[test]
fn whitney_product_matches_direct_expansion() {
    for m in 0..=8u32 {
        let bundle = RootBundle::symmetric_power(m);
        let classes = bundle.chern_classes().unwrap();
        let forms = sym_power_forms(m);
        // e_k via the coefficient of t^k in ∏(1 + r t): enumerate subsets
        let rank = forms.len();
        let mut by_k = vec![XY::new(); rank + 1];
        for mask in 0u32..(1 << rank) {
            let chosen: Vec<_> = (0..rank)
                .filter(|i| mask & (1 << i) != 0)
                .map(|i| forms[i])
                .collect();
            let prod = product_of_forms(&chosen);
            let k = chosen.len();
            by_k[k] = {
                let mut acc = by_k[k].clone();
                for (key, c) in prod {
                    let e = acc.entry(key).or_default();
                    *e += c;
                }
                acc.retain(|_, v| *v != 0.into());
                acc
            };
        }
        for (k, class) in classes.iter().enumerate() {
            let lc = class.clone().into_lc2().unwrap();
            assert_eq!(lc2_to_xy(&lc), xy_to_rat(&by_k[k]), "m={m} k={k}");
        }
    }
}

#[test]
fn first_chern_class_of_symmetric_powers() {
    for m in 0..=8u32 {
        let c1 = RootBundle::symmetric_power(m)
            .chern_class(1)
            .unwrap()
            .into_lc2()
            .unwrap();
        let expected = LC2Poly::l().scale(&int(i64::from(m * (m + 1) / 2)));
        assert_eq!(c1, expected, "m={m}");
    }
}

#[test]
fn top_class_factors_through_q() {
    for m in 2..=10u32 {
        let lhs = top_chern_of_sym_power(m).unwrap();
        let rhs = (&LC2Poly::c2() * &q_class(m).unwrap()).scale(&int(i64::from(m * m)));
        assert_eq!(lhs, rhs, "m={m}");
        assert_eq!(
            lc2_to_xy(&lhs),
            xy_to_rat(&product_of_forms(&sym_power_forms(m))),
            "m={m}"
        );
    }
}

#[test]
fn homogeneity_of_fano_classes() {
    for n in 2..=14u32 {
        for d in 1..n {
            let md = MultiDegree::hypersurface(n, d).unwrap();
            let fg = class_fg(&md).unwrap();
            if n - d >= 2 {
                assert_eq!(fg.homogeneous_degree(), Some(n - d), "n={n} d={d}");
            }
            assert_eq!(class_f(&md).homogeneous_degree(), Some(d + 1));
        }
    }
    let md = MultiDegree::new(12, vec![2, 3, 3]).unwrap();
    assert_eq!(class_f(&md).homogeneous_degree(), Some(3 + 4 + 4));
    assert_eq!(class_fg(&md).unwrap().homogeneous_degree(), Some(4));
}

#[test]
fn degenerate_fano_index_one() {
    // n - D = 1: c1 of the trivial bundle vanishes
    let md = MultiDegree::hypersurface(5, 4).unwrap();
    assert!(class_fg(&md).unwrap().is_zero());
}

#[test]
fn twisted_bundles_symmetrize() {
    let b = RootBundle::symmetric_power(2).twist_by_h(3);
    let top = b.top_chern_class().unwrap();
    let forms: Vec<_> = b.roots().iter().map(|r| (r.px, r.py, r.ph)).collect();
    let direct = product_of_xyh_forms(&forms);
    // compare every h-coefficient in x, y
    for (k, coef) in top.terms() {
        let slice: XY = direct
            .iter()
            .filter(|((_, _, hk), _)| *hk == k)
            .map(|(&(a, b, _), c)| ((a, b), c.clone()))
            .collect();
        assert_eq!(lc2_to_xy(coef), xy_to_rat(&slice), "h^{k}");
    }
    let _ = chern::symmetric_xy_to_lc2(std::iter::empty()).unwrap();
}
