//! Multivariate polynomial gcd over the rationals by recursive primitive
//! pseudo-remainder sequences. Inputs must have nonnegative exponents.

use num::{BigInt, Integer, One, Zero};

use super::poly::MultiPoly;
use super::ring::Monomial;
use super::scalar::ExactScalar;

/// Scales `p` so its leading coefficient is 1 (zero stays zero).
pub fn monic(p: &MultiPoly) -> MultiPoly {
    match p.leading() {
        Some((_, c)) if !c.is_one() => p.scale(&c.recip()),
        _ => p.clone(),
    }
}

/// `p` scaled to integer coefficients with no common factor; keeps
/// pseudo-remainder sequences from growing their numbers.
pub fn numeric_primitive(p: &MultiPoly) -> MultiPoly {
    let mut den = BigInt::one();
    let mut num = BigInt::zero();
    for c in p.terms().values() {
        den = den.lcm(c.denom());
        num = num.gcd(c.numer());
    }
    if num.is_zero() {
        return p.clone();
    }
    p.scale(&ExactScalar::new(den, num))
}

/// Greatest common divisor, normalized monic; `gcd(0, 0) = 0`.
pub fn gcd(a: &MultiPoly, b: &MultiPoly) -> MultiPoly {
    if a.is_zero() {
        return monic(b);
    }
    if b.is_zero() {
        return monic(a);
    }
    if a.is_constant() || b.is_constant() {
        return MultiPoly::one(a.ring());
    }
    let n = a.ring().nvars();
    let v = (0..n)
        .rev()
        .find(|&i| a.involves(i) || b.involves(i))
        .unwrap();
    if !a.involves(v) {
        return gcd(a, &content(b, v));
    }
    if !b.involves(v) {
        return gcd(&content(a, v), b);
    }
    let (ca, cb) = (content(a, v), content(b, v));
    let c = gcd(&ca, &cb);
    let mut p = numeric_primitive(&a.div_exact(&ca).expect("content divides"));
    let mut q = numeric_primitive(&b.div_exact(&cb).expect("content divides"));
    if p.degree_in(v) < q.degree_in(v) {
        std::mem::swap(&mut p, &mut q);
    }
    let g = loop {
        let r = prem(&p, &q, v);
        if r.is_zero() {
            break q;
        }
        if r.degree_in(v) == Some(0) {
            break MultiPoly::one(a.ring());
        }
        p = q;
        q = numeric_primitive(&primitive_part(&r, v));
    };
    monic(&(&primitive_part(&g, v) * &c))
}

/// Gcd of the coefficients of `p` viewed as a polynomial in variable `v`.
pub fn content(p: &MultiPoly, v: usize) -> MultiPoly {
    let mut acc = MultiPoly::zero(p.ring());
    for c in p.coefficients_in(v).into_values() {
        acc = gcd(&acc, &c);
        if acc.is_constant() && !acc.is_zero() {
            break;
        }
    }
    acc
}

pub fn primitive_part(p: &MultiPoly, v: usize) -> MultiPoly {
    if p.is_zero() {
        return p.clone();
    }
    p.div_exact(&content(p, v)).expect("content divides")
}

/// Pseudo-remainder of `a` by `b` with respect to variable `v`.
pub fn prem(a: &MultiPoly, b: &MultiPoly, v: usize) -> MultiPoly {
    let db = b.degree_in(v).unwrap_or(0);
    let lb = b.coefficients_in(v).remove(&db).unwrap();
    let n = a.ring().nvars();
    let mut r = a.clone();
    while let Some(dr) = r.degree_in(v) {
        if r.is_zero() || dr < db {
            break;
        }
        let lr = r.coefficients_in(v).remove(&dr).unwrap();
        let shift = Monomial::unit(n, v, dr - db);
        r = numeric_primitive(&(&(&lb * &r) - &(&lr * &b.mul_monomial(&shift))));
    }
    r
}
