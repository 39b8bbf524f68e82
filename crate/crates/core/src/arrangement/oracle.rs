//! Membership in `⋂_{i<j} ⟨x_i - x_j, y_i - y_j⟩^d` by vanishing order.
//!
//! Each pair ideal is generated by two independent linear forms, so its
//! `d`-th power is exactly the polynomials vanishing to order `d` along
//! `x_i = x_j, y_i = y_j`. After `x_j = x_i + u`, `y_j = y_i + v` this is a
//! condition on the terms of `(u, v)`-degree below `d`. None of this goes
//! through spanning sets or row reduction over ℚ: the slice count is a
//! fraction-free integer rank.

use std::collections::BTreeMap;

use num::{BigInt, Integer, Zero};

use crate::error::{Error, Result};
use crate::exactalg::{ExactScalar, MultiPoly, Role};

/// Low-order coefficients of `f` (as exponent map) after the substitution
/// for the pair `(i, j)`. Keys are `(rest exponents, p, q)`.
fn low_order(
    terms: impl Iterator<Item = (Vec<i32>, ExactScalar)>,
    n: usize,
    i: usize,
    j: usize,
    d: u32,
) -> BTreeMap<(Vec<i32>, u32, u32), ExactScalar> {
    let mut out: BTreeMap<(Vec<i32>, u32, u32), ExactScalar> = BTreeMap::new();
    for (e, c) in terms {
        // e = [x_1..x_n, y_1..y_n]; x_j and y_j are rewritten.
        let (aj, bj) = (e[j] as u32, e[n + j] as u32);
        for p in 0..=aj.min(d.saturating_sub(1)) {
            for q in 0..=bj {
                if p + q >= d {
                    break;
                }
                let mut rest = e.clone();
                rest[j] = 0;
                rest[n + j] = 0;
                rest[i] += (aj - p) as i32;
                rest[n + i] += (bj - q) as i32;
                let k = binom(aj, p) * binom(bj, q);
                let v = out.entry((rest, p, q)).or_insert_with(ExactScalar::zero);
                *v += &c * ExactScalar::from_integer(k);
            }
        }
    }
    out.retain(|_, v| !v.is_zero());
    out
}

fn binom(n: u32, k: u32) -> BigInt {
    let mut r = BigInt::from(1);
    for t in 0..k {
        r = r * BigInt::from(n - t) / BigInt::from(t + 1);
    }
    r
}

/// Exponents of `f` over `x_1..x_n, y_1..y_n`, shifted by a monomial unit so
/// all are nonnegative.
fn cleared_terms(f: &MultiPoly, n: usize) -> Result<Vec<(Vec<i32>, ExactScalar)>> {
    let ring = f.ring();
    let xs = ring.indices_with_role(Role::X);
    let ys = ring.indices_with_role(Role::Y);
    if xs.len() != n || ys.len() != n || xs.len() + ys.len() != ring.nvars() {
        return Err(Error::RingMismatch(format!(
            "expected x1..x{n}, y1..y{n}, got {:?}",
            ring.names()
        )));
    }
    let order: Vec<usize> = xs.into_iter().chain(ys).collect();
    let mut terms: Vec<(Vec<i32>, ExactScalar)> = f
        .terms()
        .iter()
        .map(|(m, c)| (order.iter().map(|&k| m.0[k]).collect(), c.clone()))
        .collect();
    for k in 0..2 * n {
        let lo = terms.iter().map(|(e, _)| e[k]).min().unwrap_or(0);
        if lo < 0 {
            for (e, _) in terms.iter_mut() {
                e[k] -= lo;
            }
        }
    }
    Ok(terms)
}

/// Whether `f` lies in the `d`-th symbolic power of the diagonal arrangement
/// (equivalently, vanishes to order `d` along every `x_i = x_j, y_i = y_j`).
/// Laurent inputs are first multiplied by a monomial unit.
pub fn symbolic_power_oracle(n: usize, d: u32, f: &MultiPoly) -> Result<bool> {
    let terms = cleared_terms(f, n)?;
    for i in 0..n {
        for j in i + 1..n {
            if !low_order(terms.iter().cloned(), n, i, j, d).is_empty() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Exponent vectors of degree `(a, b)` in `x_1..x_n, y_1..y_n`.
fn degree_monomials(n: usize, a: u32, b: u32) -> Vec<Vec<i32>> {
    fn parts(total: u32, k: usize, cur: &mut Vec<i32>, out: &mut Vec<Vec<i32>>) {
        if k == 1 {
            cur.push(total as i32);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for e in 0..=total {
            cur.push(e as i32);
            parts(total - e, k - 1, cur, out);
            cur.pop();
        }
    }
    let (mut xs, mut ys) = (Vec::new(), Vec::new());
    parts(a, n, &mut Vec::new(), &mut xs);
    parts(b, n, &mut Vec::new(), &mut ys);
    let mut out = Vec::new();
    for x in &xs {
        for y in &ys {
            out.push(x.iter().chain(y).copied().collect());
        }
    }
    out
}

/// Rank of an integer matrix by fraction-free (Bareiss) elimination.
pub fn bareiss_rank(mut m: Vec<Vec<BigInt>>) -> usize {
    let rows = m.len();
    let cols = m.first().map_or(0, |r| r.len());
    let mut prev = BigInt::from(1);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows).find(|&r| !m[r][c].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        for r in rank + 1..rows {
            if m[r][c].is_zero() {
                // Still needs the common rescaling by pivot / prev.
                for k in c + 1..cols {
                    if !m[r][k].is_zero() {
                        m[r][k] = &m[r][k] * &m[rank][c] / &prev;
                    }
                }
                continue;
            }
            for k in c + 1..cols {
                let v = &m[r][k] * &m[rank][c] - &m[r][c] * &m[rank][k];
                m[r][k] = v / &prev;
            }
            m[r][c] = BigInt::zero();
        }
        prev = m[rank][c].clone();
        rank += 1;
    }
    rank
}

/// Dimension of `J^(d)_(a,b)` in `ℚ[x_1..x_n, y_1..y_n]`, counted as the
/// slice dimension minus the rank of all low-order conditions.
pub fn oracle_slice_dim(n: usize, d: u32, a: u32, b: u32) -> usize {
    let monos = degree_monomials(n, a, b);
    if d == 0 || n < 2 {
        return monos.len();
    }
    // One row per (pair, low-order key); one column per monomial.
    let mut rows: BTreeMap<(usize, usize, Vec<i32>, u32, u32), Vec<BigInt>> = BTreeMap::new();
    for (col, e) in monos.iter().enumerate() {
        for i in 0..n {
            for j in i + 1..n {
                let one = std::iter::once((e.clone(), ExactScalar::from_integer(1.into())));
                for ((rest, p, q), c) in low_order(one, n, i, j, d) {
                    debug_assert!(c.is_integer());
                    let row = rows
                        .entry((i, j, rest, p, q))
                        .or_insert_with(|| vec![BigInt::zero(); monos.len()]);
                    row[col] = c.to_integer();
                }
            }
        }
    }
    let mut mat: Vec<Vec<BigInt>> = rows.into_values().collect();
    // Content reduction keeps Bareiss entries small.
    for r in mat.iter_mut() {
        let g = r.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
        if !g.is_zero() && g != BigInt::from(1) {
            r.iter_mut().for_each(|x| *x = &*x / &g);
        }
    }
    monos.len() - bareiss_rank(mat)
}
