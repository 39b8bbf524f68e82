mod common;

use std::collections::BTreeSet;

use gkm_workbench::exactalg::{scalar, MultiPoly, Window};
use gkm_workbench::gkm::classes::specialization_ring;
use gkm_workbench::gkm::{
    build_flag_graph, build_gkm_graph, flag_rank1_classes, residue_antisymmetry_check, sl2_classes,
    specialize_t0, verify_residue_conditions, FixedPoint,
};
use gkm_workbench::rootdata::{build_root_datum, parse_group, Label, RootDatum};
use proptest::prelude::*;

fn all_data() -> Vec<RootDatum> {
    let mut v: Vec<RootDatum> = [2, 3]
        .iter()
        .map(|&n| build_root_datum(Label::GL, Some(n)).unwrap())
        .collect();
    v.push(build_root_datum(Label::SL, Some(2)).unwrap());
    for l in [Label::A1xA1, Label::A2, Label::B2, Label::G2] {
        v.push(build_root_datum(l, None).unwrap());
    }
    v
}

#[test]
fn reflections_negate_their_root_and_fix_its_hyperplane() {
    for rd in all_data() {
        for (i, a) in rd.roots.iter().enumerate() {
            let neg: Vec<i64> = a.root.iter().map(|x| -x).collect();
            assert_eq!(rd.reflect_root(i, &a.root), neg, "{}", rd.label);
            // Lattice vectors with <α, λ> = 0 are fixed.
            let s = rd.reflection(i);
            for lam in Window::cube(rd.rank, -2, 2).points() {
                let lam: Vec<i64> = lam.into_iter().map(i64::from).collect();
                if rd.pair(&a.root, &lam) == 0 {
                    let img: Vec<i64> = s
                        .iter()
                        .map(|row| row.iter().zip(&lam).map(|(x, y)| x * y).sum())
                        .collect();
                    assert_eq!(img, lam);
                }
            }
        }
    }
}

#[test]
fn weyl_group_orders() {
    for (rd, order) in [
        (build_root_datum(Label::GL, Some(2)).unwrap(), 2),
        (build_root_datum(Label::GL, Some(3)).unwrap(), 6),
        (build_root_datum(Label::B2, None).unwrap(), 8),
        (build_root_datum(Label::G2, None).unwrap(), 12),
    ] {
        assert_eq!(rd.weyl_group().len(), order, "{}", rd.label);
    }
}

type EdgeKey = (Vec<i64>, Vec<i64>, Vec<i64>, i64);

fn edge_set(rd: &RootDatum, d: u32, w: &Window) -> BTreeSet<EdgeKey> {
    let g = build_gkm_graph(rd, d, w).unwrap();
    g.edges
        .iter()
        .map(|e| {
            let (FixedPoint::Lattice(a), FixedPoint::Lattice(b)) = (&e.a, &e.b) else {
                panic!("lattice graph")
            };
            (a.clone(), b.clone(), e.weight.y.clone(), e.weight.t)
        })
        .collect()
}

#[test]
fn sl2_edges_by_hand() {
    // Edges λ to λ+k for 1 <= k <= d, weight y + (2λ+k) t.
    let rd = parse_group("SL2").unwrap();
    for d in 1..=3 {
        let mut expected = BTreeSet::new();
        for lam in -3i64..=3 {
            for k in 1..=d as i64 {
                if lam + k <= 3 {
                    expected.insert((vec![lam], vec![lam + k], vec![1], 2 * lam + k));
                }
            }
        }
        assert_eq!(edge_set(&rd, d, &Window::cube(1, -3, 3)), expected);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn graphs_translate(which in 0usize..7, d in 1u32..=2, shift in proptest::collection::vec(-2i32..=2, 3)) {
        let rd = all_data().swap_remove(which);
        let w = Window::cube(rd.rank, -1, 1);
        let nu: Vec<i32> = shift[..rd.rank].to_vec();
        let nu64: Vec<i64> = nu.iter().map(|&x| x as i64).collect();
        let moved: BTreeSet<EdgeKey> = edge_set(&rd, d, &w)
            .into_iter()
            .map(|(a, b, y, t)| {
                let tr = |p: &Vec<i64>| p.iter().zip(&nu64).map(|(x, s)| x + s).collect::<Vec<_>>();
                let dt = rd.pair(&y, &nu64);
                (tr(&a), tr(&b), y, t + dt)
            })
            .collect();
        prop_assert_eq!(moved, edge_set(&rd, d, &w.translate(&nu)));
    }

    #[test]
    fn residue_check_ignores_scaling(d in 1u32..=3, k in -3i64..=3, num in -20i64..=20, den in 1i64..=9) {
        prop_assume!(num != 0);
        let rd = parse_group("SL2").unwrap();
        let g = build_gkm_graph(&rd, d, &Window::cube(1, -4, 7)).unwrap();
        let c = scalar::frac(num, den);
        let b = sl2_classes(d, k);
        prop_assert!(verify_residue_conditions(&b.scale(&c), &g).unwrap().pass);
        let bad = b.perturbed(&FixedPoint::lattice(&[k]), &scalar::int(1));
        prop_assert!(!verify_residue_conditions(&bad, &g).unwrap().pass);
        prop_assert!(!verify_residue_conditions(&bad.scale(&c), &g).unwrap().pass);
    }
}

#[test]
fn denominator_lcm_clears_poles() {
    for d in 1..=3 {
        for k in -3..=3 {
            let b = sl2_classes(d, k);
            let lcm = b.denominator_lcm();
            for f in b.entries.values() {
                assert!(lcm.div_exact(&f.den_poly()).is_some(), "d={d} k={k}");
            }
        }
    }
}

#[test]
fn t0_specialization_is_binomial() {
    let ring = specialization_ring();
    for d in 1..=3u32 {
        for k in -3..=3i64 {
            let s = specialize_t0(&sl2_classes(d, k)).unwrap();
            let yd = MultiPoly::var_pow(&ring, 1, d as i32);
            let mut expected = MultiPoly::zero(&ring);
            for j in 0..=d {
                let c =
                    common::binomial(d as u64, j as u64) as i64 * if j % 2 == 0 { 1 } else { -1 };
                expected = &expected
                    + &MultiPoly::var_pow(&ring, 0, (k + j as i64) as i32).scale(&scalar::int(c));
            }
            assert_eq!(&s * &yd, expected, "d={d} k={k}");
        }
    }
}

#[test]
fn flag_classes_and_antisymmetry() {
    let g = build_flag_graph(-5, 5).unwrap();
    for k in -3..=3 {
        for (c, t) in flag_rank1_classes(k) {
            assert!(verify_residue_conditions(&t, &g).unwrap().pass, "{c:?}");
        }
    }
    for d in 1..=4 {
        for k in -2..=2 {
            for j in 0..d {
                for jp in j + 1..=d {
                    assert!(residue_antisymmetry_check(d, k, j, jp).unwrap());
                }
            }
        }
    }
}
