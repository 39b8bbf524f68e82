//! Sparse multivariate (Laurent) polynomials with rational coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::ring::{same_ring, Monomial, Ring};
use super::scalar::{self, ExactScalar};
use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub struct MultiPoly {
    ring: Arc<Ring>,
    terms: BTreeMap<Monomial, ExactScalar>,
}

impl PartialEq for MultiPoly {
    fn eq(&self, other: &Self) -> bool {
        same_ring(&self.ring, &other.ring) && self.terms == other.terms
    }
}

impl Eq for MultiPoly {}

impl MultiPoly {
    pub fn zero(ring: &Arc<Ring>) -> Self {
        Self {
            ring: ring.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(ring: &Arc<Ring>, c: ExactScalar) -> Self {
        Self::term(ring, Monomial::one(ring.nvars()), c)
    }

    pub fn one(ring: &Arc<Ring>) -> Self {
        Self::constant(ring, ExactScalar::one())
    }

    pub fn int(ring: &Arc<Ring>, c: i64) -> Self {
        Self::constant(ring, scalar::int(c))
    }

    pub fn term(ring: &Arc<Ring>, m: Monomial, c: ExactScalar) -> Self {
        assert_eq!(m.0.len(), ring.nvars(), "exponent arity");
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Self {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn monomial(ring: &Arc<Ring>, exps: &[i32]) -> Self {
        Self::term(ring, Monomial(exps.to_vec()), ExactScalar::one())
    }

    pub fn var(ring: &Arc<Ring>, i: usize) -> Self {
        Self::term(ring, Monomial::unit(ring.nvars(), i, 1), ExactScalar::one())
    }

    /// `var^e`; negative `e` only for Laurent variables.
    pub fn var_pow(ring: &Arc<Ring>, i: usize, e: i32) -> Self {
        Self::term(ring, Monomial::unit(ring.nvars(), i, e), ExactScalar::one())
    }

    pub fn named(ring: &Arc<Ring>, name: &str) -> Self {
        let i = ring
            .index_of(name)
            .unwrap_or_else(|| panic!("no variable {name}"));
        Self::var(ring, i)
    }

    /// Builds from (exponents, coefficient) pairs, summing repeats.
    pub fn from_terms(
        ring: &Arc<Ring>,
        terms: impl IntoIterator<Item = (Monomial, ExactScalar)>,
    ) -> Self {
        let mut p = Self::zero(ring);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, ExactScalar> {
        &self.terms
    }

    pub fn into_terms(self) -> BTreeMap<Monomial, ExactScalar> {
        self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &Monomial) -> ExactScalar {
        self.terms.get(m).cloned().unwrap_or_else(ExactScalar::zero)
    }

    pub fn constant_term(&self) -> ExactScalar {
        self.coeff(&Monomial::one(self.ring.nvars()))
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.is_one())
    }

    pub fn add_term(&mut self, m: Monomial, c: ExactScalar) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn check_ring(&self, other: &Self) {
        assert!(
            same_ring(&self.ring, &other.ring),
            "polynomials from different rings"
        );
    }

    pub fn scale(&self, c: &ExactScalar) -> Self {
        if c.is_zero() {
            return Self::zero(&self.ring);
        }
        Self {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Self {
        Self {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(k, v)| (k.mul(m), v.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(&self.ring);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Leading term in the canonical order (the maximum monomial).
    pub fn leading(&self) -> Option<(&Monomial, &ExactScalar)> {
        self.terms.iter().next_back()
    }

    /// Lowest term in the canonical order.
    pub fn trailing(&self) -> Option<(&Monomial, &ExactScalar)> {
        self.terms.iter().next()
    }

    pub fn degree_in(&self, i: usize) -> Option<i32> {
        self.terms.keys().map(|m| m.0[i]).max()
    }

    pub fn min_degree_in(&self, i: usize) -> Option<i32> {
        self.terms.keys().map(|m| m.0[i]).min()
    }

    pub fn total_degree(&self) -> Option<i64> {
        self.terms.keys().map(|m| m.degree()).max()
    }

    pub fn involves(&self, i: usize) -> bool {
        self.terms.keys().any(|m| m.0[i] != 0)
    }

    /// Coefficients with respect to variable `i`: exponent ↦ polynomial free of `i`.
    pub fn coefficients_in(&self, i: usize) -> BTreeMap<i32, MultiPoly> {
        let mut out: BTreeMap<i32, MultiPoly> = BTreeMap::new();
        for (m, c) in &self.terms {
            let e = m.0[i];
            let mut k = m.clone();
            k.0[i] = 0;
            out.entry(e)
                .or_insert_with(|| Self::zero(&self.ring))
                .add_term(k, c.clone());
        }
        out
    }

    pub fn derivative(&self, i: usize) -> Self {
        let mut out = Self::zero(&self.ring);
        for (m, c) in &self.terms {
            let e = m.0[i];
            if e != 0 {
                let mut k = m.clone();
                k.0[i] -= 1;
                out.add_term(k, c * scalar::int(e as i64));
            }
        }
        out
    }

    /// Derivation sending variable `i` to the constant `dir[i]`.
    pub fn directional_derivative(&self, dir: &[ExactScalar]) -> Self {
        let mut out = Self::zero(&self.ring);
        for (i, d) in dir.iter().enumerate() {
            if !d.is_zero() {
                out = &out + &self.derivative(i).scale(d);
            }
        }
        out
    }

    /// Replaces variable `i` by `value` (nonnegative powers of `i` only,
    /// unless `value` is a monomial).
    pub fn substitute(&self, i: usize, value: &MultiPoly) -> Result<Self> {
        self.check_ring(value);
        let inverse = if self.min_degree_in(i).unwrap_or(0) < 0 {
            Some(invert_monomial(value).ok_or_else(|| {
                Error::Invalid("negative power substituted by a non-monomial".into())
            })?)
        } else {
            None
        };
        let mut out = Self::zero(&self.ring);
        let mut pows: BTreeMap<i32, MultiPoly> = BTreeMap::new();
        for (e, coef) in self.coefficients_in(i) {
            let p = pows
                .entry(e)
                .or_insert_with(|| {
                    if e >= 0 {
                        value.pow(e as u32)
                    } else {
                        inverse.as_ref().unwrap().pow((-e) as u32)
                    }
                })
                .clone();
            out = &out + &(&coef * &p);
        }
        Ok(out)
    }

    /// Evaluates variable `i` at a scalar.
    pub fn eval_var(&self, i: usize, v: &ExactScalar) -> Result<Self> {
        self.substitute(i, &Self::constant(&self.ring, v.clone()))
    }

    /// Transports into `target`, sending variable `k` of `self` to
    /// `images[k]` (a polynomial of `target`).
    pub fn map_into(&self, target: &Arc<Ring>, images: &[MultiPoly]) -> Result<Self> {
        if images.len() != self.ring.nvars() {
            return Err(Error::RingMismatch("image count".into()));
        }
        let mut out = Self::zero(target);
        for (m, c) in &self.terms {
            let mut t = Self::constant(target, c.clone());
            for (k, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let img = if e > 0 {
                    images[k].pow(e as u32)
                } else {
                    invert_monomial(&images[k])
                        .ok_or_else(|| {
                            Error::Invalid("negative power of a non-monomial image".into())
                        })?
                        .pow((-e) as u32)
                };
                t = &t * &img;
            }
            out = &out + &t;
        }
        Ok(out)
    }

    /// Same terms re-read in a ring with the same number of variables.
    pub fn with_ring(&self, ring: &Arc<Ring>) -> Self {
        assert_eq!(ring.nvars(), self.ring.nvars());
        Self {
            ring: ring.clone(),
            terms: self.terms.clone(),
        }
    }

    /// Componentwise minimum exponent over all terms.
    pub fn min_exponents(&self) -> Option<Monomial> {
        let mut it = self.terms.keys();
        let first = it.next()?.clone();
        Some(it.fold(first, |acc, m| {
            Monomial(acc.0.iter().zip(&m.0).map(|(a, b)| *a.min(b)).collect())
        }))
    }

    /// Exact quotient `self / d`, or `None` if `d` does not divide.
    pub fn div_exact(&self, d: &MultiPoly) -> Option<MultiPoly> {
        self.check_ring(d);
        let (lm, lc) = d.leading()?;
        let (lm, lc) = (lm.clone(), lc.clone());
        let ring = self.ring.clone();
        let allow = |i: usize| ring.var(i).laurent;
        let mut rem = self.clone();
        let mut quo = Self::zero(&self.ring);
        while let Some((m, c)) = rem.leading() {
            let qm = m.div(&lm, allow)?;
            let qc = c / &lc;
            let t = Self::term(&self.ring, qm, qc);
            rem = &rem - &(&t * d);
            quo = &quo + &t;
            if rem.len() > 0 && rem.leading().unwrap().0 < &lm {
                return None;
            }
        }
        Some(quo)
    }

    pub fn render(&self) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut s = String::new();
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if k == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let mono = m.render(&self.ring);
            if m.is_one() {
                s.push_str(&scalar::render_short(&a));
            } else if a.is_one() {
                s.push_str(&mono);
            } else {
                s.push_str(&format!("{}*{}", scalar::render_short(&a), mono));
            }
        }
        s
    }

    pub fn to_json(&self) -> PolyJson {
        PolyJson {
            vars: self.ring.names(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| TermJson {
                    exp: m.0.clone(),
                    num: c.numer().to_string(),
                    den: c.denom().to_string(),
                })
                .collect(),
        }
    }

    /// Reads the canonical JSON form into `ring` (variable names must match).
    pub fn from_json(ring: &Arc<Ring>, j: &PolyJson) -> Result<Self> {
        if j.vars != ring.names() {
            return Err(Error::RingMismatch(format!(
                "expected variables {:?}, got {:?}",
                ring.names(),
                j.vars
            )));
        }
        let mut p = Self::zero(ring);
        for t in &j.terms {
            if t.exp.len() != ring.nvars() {
                return Err(Error::Parse("exponent arity".into()));
            }
            for (i, &e) in t.exp.iter().enumerate() {
                if e < 0 && !ring.var(i).laurent {
                    return Err(Error::Parse(format!(
                        "negative exponent on {}",
                        ring.var(i).name
                    )));
                }
            }
            p.add_term(Monomial(t.exp.clone()), scalar::from_parts(&t.num, &t.den)?);
        }
        Ok(p)
    }
}

fn invert_monomial(p: &MultiPoly) -> Option<MultiPoly> {
    if p.len() != 1 {
        return None;
    }
    let (m, c) = p.terms.iter().next().unwrap();
    let inv = Monomial(m.0.iter().map(|e| -e).collect());
    Some(MultiPoly::term(&p.ring, inv, c.recip()))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub exp: Vec<i32>,
    pub num: String,
    pub den: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyJson {
    pub vars: Vec<String>,
    pub terms: Vec<TermJson>,
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl<'a> Add<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &'a MultiPoly) -> MultiPoly {
        self.check_ring(rhs);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl<'a> Sub<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &'a MultiPoly) -> MultiPoly {
        self.check_ring(rhs);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl<'a> Mul<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &'a MultiPoly) -> MultiPoly {
        self.check_ring(rhs);
        let mut out = MultiPoly::zero(&self.ring);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        self.scale(&-ExactScalar::one())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr<MultiPoly> for MultiPoly {
            type Output = MultiPoly;
            fn $f(self, rhs: MultiPoly) -> MultiPoly {
                (&self).$f(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
