//! Explicit homology classes for SL_2 and the rank-one affine flag chain.

use std::sync::Arc;

use num::{One, Zero};
use serde::{Deserialize, Serialize};

use super::forms::{form_ring, LinearForm, RationalForm, RationalFormTuple};
use super::graph::FixedPoint;
use super::residue::residue_sum;
use crate::error::{Error, Result};
use crate::exactalg::{scalar, ExactScalar, MultiPoly, Ring, Role, Var};

/// Linear factors `y + (2k+i+j)t` for `i ∈ {0..d} \ {j}`.
pub fn f_factors(d: u32, k: i64, j: u32) -> Result<Vec<LinearForm>> {
    if j > d {
        return Err(Error::OutOfRange(format!("j = {j} exceeds d = {d}")));
    }
    Ok((0..=d)
        .filter(|&i| i != j)
        .map(|i| LinearForm::from_ints(&[1, 2 * k + i as i64 + j as i64]))
        .collect())
}

/// `f_k^(j) = ∏_{i ∈ {0..d} \ {j}} (y + (2k+i+j)t)`.
pub fn f_poly(d: u32, k: i64, j: u32) -> Result<MultiPoly> {
    let ring = form_ring(1);
    Ok(f_factors(d, k, j)?
        .iter()
        .fold(MultiPoly::one(&ring), |acc, f| &acc * &f.to_poly(&ring)))
}

/// `b_k`: entry `(-1)^j C(d,j) / f_k^(j)` at position `k+j`.
pub fn sl2_classes(d: u32, k: i64) -> RationalFormTuple {
    let ring = form_ring(1);
    let mut t = RationalFormTuple::new(&ring);
    for j in 0..=d {
        let c = ExactScalar::from_integer(scalar::binomial(d as u64, j as u64))
            * scalar::int(if j % 2 == 0 { 1 } else { -1 });
        let f = RationalForm::new(MultiPoly::constant(&ring, c), f_factors(d, k, j).unwrap());
        t.insert(FixedPoint::lattice(&[k + j as i64]), f);
    }
    t
}

/// The point class `a_0 = (.., 0, 1, 0, ..)` at the origin.
pub fn point_class(rank: usize) -> RationalFormTuple {
    let ring = form_ring(rank);
    let mut t = RationalFormTuple::new(&ring);
    t.insert(
        FixedPoint::lattice(&vec![0; rank]),
        RationalForm::constant(&ring, ExactScalar::one()),
    );
    t
}

/// Whether the residues of the `j` and `j'` entries of `b_k` along
/// `y + (2k+j+j')t` cancel.
pub fn residue_antisymmetry_check(d: u32, k: i64, j: u32, jp: u32) -> Result<bool> {
    if !(j < jp && jp <= d) {
        return Err(Error::OutOfRange(format!(
            "need 0 <= j < j' <= d, got j={j}, j'={jp}, d={d}"
        )));
    }
    let ring = form_ring(1);
    let entry = |j: u32| -> Result<RationalForm> {
        let c = ExactScalar::from_integer(scalar::binomial(d as u64, j as u64))
            * scalar::int(if j % 2 == 0 { 1 } else { -1 });
        Ok(RationalForm::new(
            MultiPoly::constant(&ring, c),
            f_factors(d, k, j)?,
        ))
    };
    let chi = LinearForm::from_ints(&[1, 2 * k + j as i64 + jp as i64]);
    Ok(residue_sum(&entry(j)?, &entry(jp)?, &chi)?.is_zero())
}

/// The ring `x^±, y^±` in which `t = 0` specializations live.
pub fn specialization_ring() -> Arc<Ring> {
    Ring::new(vec![
        Var::new("x", Role::X, true),
        Var::new("y", Role::Y, true),
    ])
}

/// Sets `t = 0` and rewrites the tuple as `Σ_λ (entry at λ) x^λ`.
/// Every denominator must become a power of `y`.
pub fn specialize_t0(tuple: &RationalFormTuple) -> Result<MultiPoly> {
    let target = specialization_ring();
    let src = &tuple.ring;
    if src.nvars() != 2 {
        return Err(Error::Invalid(
            "specialization is defined in rank one".into(),
        ));
    }
    let mut out = MultiPoly::zero(&target);
    for (p, f) in &tuple.entries {
        let FixedPoint::Lattice(lam) = p else {
            return Err(Error::Invalid("flag points have no monomial form".into()));
        };
        let mut scale = ExactScalar::one();
        for l in &f.den {
            let (a, b) = (&l.0[0], &l.0[1]);
            if !b.is_zero() && a.is_zero() {
                return Err(Error::ResidualPole(format!(
                    "{} at {}",
                    l.to_poly(src).render(),
                    p
                )));
            }
            if a.is_zero() {
                return Err(Error::ResidualPole(format!("zero factor at {p}")));
            }
            scale *= a;
        }
        let y = MultiPoly::var(&target, 1);
        let x = MultiPoly::var_pow(&target, 0, lam[0] as i32);
        let num = f.num.map_into(&target, &[y, MultiPoly::zero(&target)])?;
        let ypow = MultiPoly::var_pow(&target, 1, -(f.den.len() as i32));
        out = &out + &(&(&num * &ypow) * &x).scale(&scale.recip());
    }
    Ok(out)
}

/// Classes of the rank-one affine flag chain.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum FlagClass {
    A0,
    B(i64),
    BPrime(i64),
}

impl std::str::FromStr for FlagClass {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("unknown class {s:?} (expected a0, b<k> or bp<k>)"));
        if s == "a0" {
            return Ok(FlagClass::A0);
        }
        if let Some(k) = s.strip_prefix("bp") {
            return Ok(FlagClass::BPrime(k.parse().map_err(|_| bad())?));
        }
        if let Some(k) = s.strip_prefix('b') {
            return Ok(FlagClass::B(k.parse().map_err(|_| bad())?));
        }
        Err(bad())
    }
}

/// `a_0`, `b_k` (±1/(y+2kt) at (k,1),(k,s)) or `b_k'` (±1/(y+(2k-1)t) at (k,1),(k-1,s)).
pub fn flag_rank1_class(c: FlagClass) -> RationalFormTuple {
    let ring = form_ring(1);
    let mut t = RationalFormTuple::new(&ring);
    let pole = |sign: i64, w: i64| {
        RationalForm::new(
            MultiPoly::int(&ring, sign),
            vec![LinearForm::from_ints(&[1, w])],
        )
    };
    match c {
        FlagClass::A0 => t.insert(
            FixedPoint::flag(0, false),
            RationalForm::constant(&ring, ExactScalar::one()),
        ),
        FlagClass::B(k) => {
            t.insert(FixedPoint::flag(k, false), pole(1, 2 * k));
            t.insert(FixedPoint::flag(k, true), pole(-1, 2 * k));
        }
        FlagClass::BPrime(k) => {
            t.insert(FixedPoint::flag(k, false), pole(1, 2 * k - 1));
            t.insert(FixedPoint::flag(k - 1, true), pole(-1, 2 * k - 1));
        }
    }
    t
}

/// The three classes at index `k`.
pub fn flag_rank1_classes(k: i64) -> Vec<(FlagClass, RationalFormTuple)> {
    [FlagClass::A0, FlagClass::B(k), FlagClass::BPrime(k)]
        .into_iter()
        .map(|c| (c, flag_rank1_class(c)))
        .collect()
}

/// `y · tuple` at `t = 0`, as `(point, coefficient)` pairs. Fails unless
/// every entry has at most a simple pole along `y`.
pub fn flag_times_y_at_t0(tuple: &RationalFormTuple) -> Result<Vec<(FixedPoint, ExactScalar)>> {
    let mut out = Vec::new();
    for (p, f) in &tuple.entries {
        if f.den.len() > 1 || !f.num.is_constant() {
            return Err(Error::Invalid(
                "expected a constant over at most one factor".into(),
            ));
        }
        let c = f.num.constant_term();
        let v = match f.den.first() {
            None => {
                return Err(Error::Invalid(
                    "y·(constant) is not a flag point combination".into(),
                ))
            }
            Some(l) => {
                if l.0[0].is_zero() {
                    return Err(Error::ResidualPole(p.to_string()));
                }
                c / &l.0[0]
            }
        };
        if !v.is_zero() {
            out.push((p.clone(), v));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::Window;
    use crate::gkm::graph::{build_flag_graph, build_gkm_graph};
    use crate::gkm::residue::verify_residue_conditions;
    use crate::rootdata::{build_root_datum, Label};

    #[test]
    fn f_poly_examples() {
        let r = form_ring(1);
        let y = MultiPoly::named(&r, "y");
        let t = MultiPoly::named(&r, "t");
        assert_eq!(f_poly(1, 0, 0).unwrap(), &y + &t);
        assert_eq!(f_poly(1, 3, 1).unwrap(), &y + &t.scale(&scalar::int(7)));
        assert_eq!(
            f_poly(2, 0, 1).unwrap(),
            &(&y + &t) * &(&y + &t.scale(&scalar::int(3)))
        );
        assert!(f_poly(2, 0, 3).is_err());
    }

    #[test]
    fn p1_class() {
        let b = sl2_classes(1, 0);
        let v: Vec<String> = b.entries.values().map(|f| f.to_series().render()).collect();
        assert_eq!(v, ["(1)/(y + t)", "(-1)/(y + t)"]);
    }

    #[test]
    fn sl2_classes_pass() {
        let rd = build_root_datum(Label::SL, Some(2)).unwrap();
        for d in 1..=3 {
            let g = build_gkm_graph(&rd, d, &Window::cube(1, -4, 7)).unwrap();
            for k in -3..=3 {
                let r = verify_residue_conditions(&sl2_classes(d, k), &g).unwrap();
                assert!(r.pass, "d={d} k={k} {r:?}");
            }
        }
    }

    #[test]
    fn t0_specialization() {
        let s = specialize_t0(&sl2_classes(1, 0)).unwrap();
        assert_eq!(s.render(), "y^-1 - x*y^-1");
        let ring = specialization_ring();
        let a0 = specialize_t0(&point_class(1)).unwrap();
        assert_eq!(a0, MultiPoly::one(&ring));
    }

    #[test]
    fn flag_classes_pass() {
        let g = build_flag_graph(-4, 4).unwrap();
        for k in -3..=3 {
            for (c, t) in flag_rank1_classes(k) {
                assert!(verify_residue_conditions(&t, &g).unwrap().pass, "{c:?}");
            }
        }
    }

    #[test]
    fn antisymmetry() {
        assert!(residue_antisymmetry_check(1, 0, 0, 1).unwrap());
        assert!(residue_antisymmetry_check(2, 0, 0, 2).unwrap());
        assert!(residue_antisymmetry_check(3, 1, 1, 2).unwrap());
        assert!(residue_antisymmetry_check(2, 0, 2, 1).is_err());
    }
}
