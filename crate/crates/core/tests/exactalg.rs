mod common;

use std::sync::Arc;

use gkm_workbench::exactalg::{
    scalar, Bidegree, ExactScalar, GradedSlice, Monomial, MonomialBasis, MultiPoly, RationalSeries,
    Ring, SparseVec,
};
use num::Zero;
use proptest::prelude::*;

fn basis() -> Arc<MonomialBasis> {
    MonomialBasis::slice(
        &Ring::polynomial_xy(2, false),
        &Bidegree::algebraic(2, 1),
        None,
    )
    .unwrap()
}

fn vectors(ncols: usize) -> impl Strategy<Value = Vec<SparseVec>> {
    let entry = (0..ncols, -3i64..=3).prop_map(|(c, v)| (c, scalar::int(v)));
    let vec = proptest::collection::vec(entry, 0..4).prop_map(|mut v| {
        v.sort_by_key(|e| e.0);
        v.dedup_by_key(|e| e.0);
        v.retain(|e| !e.1.is_zero());
        v
    });
    proptest::collection::vec(vec, 0..6)
}

fn rational() -> impl Strategy<Value = ExactScalar> {
    (-1000i64..=1000, 1i64..=1000).prop_map(|(n, d)| scalar::frac(n, d))
}

proptest! {
    #[test]
    fn span_is_idempotent_and_order_free(vs in vectors(6), seed in 0usize..100) {
        let b = basis();
        prop_assert_eq!(b.len(), 6);
        let s = GradedSlice::span(&b, vs.clone());
        let again = GradedSlice::span(&b, s.rows().to_vec());
        prop_assert_eq!(again.rows(), s.rows());
        let mut shuffled = vs;
        if !shuffled.is_empty() {
            let k = seed % shuffled.len();
            shuffled.rotate_left(k);
            shuffled.reverse();
        }
        let t = GradedSlice::span(&b, shuffled);
        prop_assert_eq!(t.rank(), s.rank());
        prop_assert_eq!(t.rows(), s.rows());
    }

    #[test]
    fn grassmann_identity(a in vectors(6), b in vectors(6)) {
        let basis = basis();
        let sa = GradedSlice::span(&basis, a);
        let sb = GradedSlice::span(&basis, b);
        let sum = sa.sum(&sb).unwrap();
        let meet = sa.intersect(&sb).unwrap();
        prop_assert_eq!(sa.rank() + sb.rank(), sum.rank() + meet.rank());
        prop_assert!(sum.contains_slice(&sa).unwrap());
        prop_assert!(sa.contains_slice(&meet).unwrap() && sb.contains_slice(&meet).unwrap());
    }

    #[test]
    fn division_is_exact(a in rational(), b in rational()) {
        prop_assume!(!b.is_zero());
        prop_assert_eq!(&(&a / &b) * &b, a);
    }

    #[test]
    fn expansion_times_denominator_is_numerator(
        num in proptest::collection::vec((-4i64..=4, 0i32..=3, 0i32..=2), 1..5),
        den in proptest::collection::vec((-3i64..=3, 0i32..=2, 0i32..=2), 0..4),
        order in 1u32..=6,
    ) {
        let ring = Ring::formal(&["q", "L"], &[]);
        let poly = |terms: &[(i64, i32, i32)]| MultiPoly::from_terms(&ring, terms.iter().map(|&(c, i, j)| (Monomial(vec![i, j]), scalar::int(c))));
        let n = poly(&num);
        // Constant term 1 keeps the denominator invertible in q, L.
        let mut dt: Vec<(i64, i32, i32)> = den.into_iter().filter(|t| t.1 + t.2 > 0).collect();
        dt.push((1, 0, 0));
        let d = poly(&dt);
        let s = RationalSeries::new(n.clone(), d.clone()).unwrap();
        let orders = [(0, order), (1, order)];
        let e = s.expand(&orders).unwrap();
        let back = gkm_workbench::exactalg::series::truncate(&(&(&e * &d) - &n), &orders);
        prop_assert!(back.is_zero(), "{}", back);
    }
}

#[test]
fn geometric_series_matches_local_expansion() {
    let ring = Ring::formal(&["q", "t"], &[]);
    let one = MultiPoly::one(&ring);
    let q = MultiPoly::named(&ring, "q");
    let t = MultiPoly::named(&ring, "t");
    let den = &(&one - &q).pow(2) * &(&one - &(&q * &t.pow(2))).pow(2);
    let num = &(&one - &q) + &(&q.pow(2) * &t.pow(2));
    let s = RationalSeries::new(num, den).unwrap();
    let e = s.expand(&[(0, 6)]).unwrap();
    let local = common::expand_over(6, &[(1, 0, 0), (-1, 1, 0), (1, 2, 2)], 2, 2, 2);
    for (m, c) in e.terms() {
        assert_eq!(
            *c,
            scalar::int(local.get(m.0[0] as i64, m.0[1] as i64) as i64),
            "{m:?}"
        );
    }
    assert_eq!(e.len(), local.c.len());
}

#[test]
fn normal_form_cancels_common_factors() {
    let ring = Ring::formal(&["q", "t"], &[]);
    let one = MultiPoly::one(&ring);
    let q = MultiPoly::named(&ring, "q");
    let f = &one - &q;
    let s = RationalSeries::new(&f * &(&one + &q), f.pow(2)).unwrap();
    let expected = RationalSeries::new(&one + &q, f.clone()).unwrap();
    assert_eq!(s, expected);
    assert_eq!(s.render(), expected.render());
}
