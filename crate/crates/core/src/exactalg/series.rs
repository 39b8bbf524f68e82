//! Rational functions `N/D` in a normal form, and their truncated
//! power-series expansions.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::sync::Arc;

use num::{One, Zero};
use serde::{Deserialize, Serialize};

use super::gcd::gcd;
use super::poly::{MultiPoly, PolyJson};
use super::ring::{Monomial, Ring};
use super::scalar::ExactScalar;
use crate::error::{Error, Result};

/// A rational function kept in normal form: no negative exponents, no
/// common factor, and the lowest denominator term (canonical order) has
/// coefficient 1. Equal functions have identical normal forms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalSeries {
    num: MultiPoly,
    den: MultiPoly,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesJson {
    pub num: PolyJson,
    pub den: PolyJson,
}

impl RationalSeries {
    pub fn new(num: MultiPoly, den: MultiPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        let ring = num.ring().clone();
        if num.is_zero() {
            return Ok(Self {
                num,
                den: MultiPoly::one(&ring),
            });
        }
        // Clear negative exponents on both sides at once.
        let lo_n = num.min_exponents().unwrap();
        let lo_d = den.min_exponents().unwrap();
        let shift = Monomial(
            lo_n.0
                .iter()
                .zip(&lo_d.0)
                .map(|(a, b)| -(*a.min(b)).min(0))
                .collect(),
        );
        let (num, den) = if shift.is_one() {
            (num, den)
        } else {
            (num.mul_monomial(&shift), den.mul_monomial(&shift))
        };
        // Monomial factors first, which keeps the gcd small.
        let mn = num.min_exponents().unwrap();
        let md = den.min_exponents().unwrap();
        let common = Monomial(mn.0.iter().zip(&md.0).map(|(a, b)| -*a.min(b)).collect());
        let (num, den) = if common.is_one() {
            (num, den)
        } else {
            (num.mul_monomial(&common), den.mul_monomial(&common))
        };
        let g = gcd(&num, &den);
        let (num, den) = if g.is_constant() {
            (num, den)
        } else {
            (
                num.div_exact(&g).expect("gcd divides"),
                den.div_exact(&g).expect("gcd divides"),
            )
        };
        let c = den.trailing().unwrap().1.clone();
        if c.is_one() {
            Ok(Self { num, den })
        } else {
            let inv = c.recip();
            Ok(Self {
                num: num.scale(&inv),
                den: den.scale(&inv),
            })
        }
    }

    pub fn from_poly(p: MultiPoly) -> Self {
        let one = MultiPoly::one(p.ring());
        Self::new(p, one).expect("nonzero denominator")
    }

    pub fn zero(ring: &Arc<Ring>) -> Self {
        Self::from_poly(MultiPoly::zero(ring))
    }

    pub fn one(ring: &Arc<Ring>) -> Self {
        Self::from_poly(MultiPoly::one(ring))
    }

    pub fn ring(&self) -> &Arc<Ring> {
        self.num.ring()
    }

    pub fn numerator(&self) -> &MultiPoly {
        &self.num
    }

    pub fn denominator(&self) -> &MultiPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn recip(&self) -> Result<Self> {
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn powi(&self, e: i32) -> Result<Self> {
        if e >= 0 {
            Self::new(self.num.pow(e as u32), self.den.pow(e as u32))
        } else {
            Self::new(self.den.pow((-e) as u32), self.num.pow((-e) as u32))
        }
    }

    pub fn scale(&self, c: &ExactScalar) -> Self {
        Self::new(self.num.scale(c), self.den.clone()).expect("nonzero denominator")
    }

    /// Sends variable `k` to the Laurent polynomial `images[k]` of `target`.
    pub fn map_into(&self, target: &Arc<Ring>, images: &[MultiPoly]) -> Result<Self> {
        Self::new(
            self.num.map_into(target, images)?,
            self.den.map_into(target, images)?,
        )
    }

    /// Truncated expansion: keeps monomials whose exponent on each listed
    /// variable is at most the given order. Requires the denominator to be
    /// a nonzero constant once the listed variables are set to zero, so the
    /// coefficients are polynomials in the remaining variables.
    pub fn expand(&self, orders: &[(usize, u32)]) -> Result<MultiPoly> {
        let ring = self.ring().clone();
        let mut d0 = self.den.clone();
        for &(v, _) in orders {
            d0 = d0.eval_var(v, &ExactScalar::zero())?;
        }
        if !d0.is_constant() || d0.is_zero() {
            return Err(Error::NotExpandable(format!(
                "denominator {} does not reduce to a nonzero constant",
                self.den
            )));
        }
        let c = d0.constant_term();
        let trunc = |p: &MultiPoly| -> MultiPoly {
            MultiPoly::from_terms(
                &ring,
                p.terms()
                    .iter()
                    .filter(|(m, _)| orders.iter().all(|&(v, o)| m.0[v] <= o as i32))
                    .map(|(m, c)| (m.clone(), c.clone())),
            )
        };
        // 1/D = (1/c) * sum E^k with E = 1 - D/c in the truncation ideal.
        let e = &MultiPoly::one(&ring) - &self.den.scale(&c.recip());
        let kmax: u32 = orders.iter().map(|o| o.1).sum();
        let mut inv = MultiPoly::one(&ring);
        let mut ek = MultiPoly::one(&ring);
        for _ in 0..kmax {
            ek = trunc(&(&ek * &e));
            if ek.is_zero() {
                break;
            }
            inv = &inv + &ek;
        }
        Ok(trunc(&(&self.num * &inv)).scale(&c.recip()))
    }

    pub fn render(&self) -> String {
        if self.den.is_one_poly() {
            self.num.render()
        } else {
            format!("({})/({})", self.num.render(), self.den.render())
        }
    }

    pub fn to_json(&self) -> SeriesJson {
        SeriesJson {
            num: self.num.to_json(),
            den: self.den.to_json(),
        }
    }

    pub fn from_json(ring: &Arc<Ring>, j: &SeriesJson) -> Result<Self> {
        Self::new(
            MultiPoly::from_json(ring, &j.num)?,
            MultiPoly::from_json(ring, &j.den)?,
        )
    }
}

impl MultiPoly {
    fn is_one_poly(&self) -> bool {
        self.is_constant() && self.constant_term().is_one()
    }
}

/// Truncates `p` to exponents at most `order` in variable `v`.
pub fn truncate(p: &MultiPoly, orders: &[(usize, u32)]) -> MultiPoly {
    MultiPoly::from_terms(
        p.ring(),
        p.terms()
            .iter()
            .filter(|(m, _)| orders.iter().all(|&(v, o)| m.0[v] <= o as i32))
            .map(|(m, c)| (m.clone(), c.clone())),
    )
}

impl fmt::Display for RationalSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl<'a> Add<&'a RationalSeries> for &'a RationalSeries {
    type Output = RationalSeries;
    fn add(self, rhs: &'a RationalSeries) -> RationalSeries {
        if self.den == rhs.den {
            return RationalSeries::new(&self.num + &rhs.num, self.den.clone()).unwrap();
        }
        RationalSeries::new(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
        .unwrap()
    }
}

impl<'a> Sub<&'a RationalSeries> for &'a RationalSeries {
    type Output = RationalSeries;
    fn sub(self, rhs: &'a RationalSeries) -> RationalSeries {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a RationalSeries> for &'a RationalSeries {
    type Output = RationalSeries;
    fn mul(self, rhs: &'a RationalSeries) -> RationalSeries {
        RationalSeries::new(&self.num * &rhs.num, &self.den * &rhs.den).unwrap()
    }
}

impl<'a> Div<&'a RationalSeries> for &'a RationalSeries {
    type Output = RationalSeries;
    /// Panics on division by zero.
    fn div(self, rhs: &'a RationalSeries) -> RationalSeries {
        RationalSeries::new(&self.num * &rhs.den, &self.den * &rhs.num)
            .expect("division by zero series")
    }
}

impl Neg for &RationalSeries {
    type Output = RationalSeries;
    fn neg(self) -> RationalSeries {
        RationalSeries {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}
