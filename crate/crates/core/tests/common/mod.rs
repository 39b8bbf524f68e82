//! Reference computations used by the integration tests. Nothing here calls
//! into the library: slice dimensions, series coefficients and Catalan data
//! are recomputed from first principles.

#![allow(dead_code)]

use std::collections::BTreeMap;

use num::{BigInt, BigRational, One, Zero};

/// Exponent vectors of length `k` summing to `total`.
pub fn compositions(total: u32, k: usize) -> Vec<Vec<u32>> {
    if k == 0 {
        return if total == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for first in (0..=total).rev() {
        for mut rest in compositions(total - first, k - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Monomials `x^e y^f` in `2n` variables with `|e| = a`, `|f| = b`.
pub fn bidegree_monomials(n: usize, a: u32, b: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    for e in compositions(a, n) {
        for f in compositions(b, n) {
            let mut m = e.clone();
            m.extend(f);
            out.push(m);
        }
    }
    out
}

fn falling(n: u32, k: u32) -> BigInt {
    (0..k).fold(BigInt::one(), |acc, i| acc * BigInt::from(n - i))
}

/// Rank over ℚ by plain Gaussian elimination.
pub fn rank(mut rows: Vec<Vec<BigRational>>) -> usize {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let pivot = rows[r][c].clone();
        for i in r + 1..rows.len() {
            if rows[i][c].is_zero() {
                continue;
            }
            let f = &rows[i][c] / &pivot;
            for j in c..ncols {
                let v = &rows[r][j] * &f;
                rows[i][j] -= v;
            }
        }
        r += 1;
    }
    r
}

/// `dim J^(d)` in bidegree `(a, b)` of `ℚ[x_1..x_n, y_1..y_n]`: the
/// polynomials whose partial derivatives in `x_i, y_i` of order below `d`
/// vanish on `x_i = x_j, y_i = y_j` for every pair.
pub fn jd_dim(n: usize, d: u32, a: u32, b: u32) -> usize {
    let cols = bidegree_monomials(n, a, b);
    if d == 0 {
        return cols.len();
    }
    let mut conds: BTreeMap<(usize, usize, u32, u32, Vec<u32>), Vec<(usize, BigInt)>> =
        BTreeMap::new();
    for (c, m) in cols.iter().enumerate() {
        for i in 0..n {
            for j in i + 1..n {
                for p in 0..d {
                    for q in 0..d - p {
                        if m[i] < p || m[n + i] < q {
                            continue;
                        }
                        let coeff = falling(m[i], p) * falling(m[n + i], q);
                        let mut r = m.clone();
                        r[j] += m[i] - p;
                        r[n + j] += m[n + i] - q;
                        r[i] = 0;
                        r[n + i] = 0;
                        conds.entry((i, j, p, q, r)).or_default().push((c, coeff));
                    }
                }
            }
        }
    }
    let rows: Vec<Vec<BigRational>> = conds
        .into_values()
        .map(|entries| {
            let mut row = vec![BigRational::zero(); cols.len()];
            for (c, v) in entries {
                row[c] += BigRational::from_integer(v);
            }
            row
        })
        .collect();
    cols.len() - rank(rows)
}

pub fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

pub fn catalan(n: u64) -> u64 {
    binomial(2 * n, n) / (n + 1)
}

/// `C_n(q, t)` as `Σ q^dinv t^area` over Dyck paths, given by area sequences.
pub fn qt_catalan(n: usize) -> BTreeMap<(i64, i64), usize> {
    fn go(seq: &mut Vec<i64>, n: usize, out: &mut BTreeMap<(i64, i64), usize>) {
        if seq.len() == n {
            let area: i64 = seq.iter().sum();
            let mut dinv = 0;
            for i in 0..n {
                for j in i + 1..n {
                    if seq[i] == seq[j] || seq[i] == seq[j] + 1 {
                        dinv += 1;
                    }
                }
            }
            *out.entry((dinv, area)).or_default() += 1;
            return;
        }
        let top = seq.last().map_or(0, |&a| a + 1);
        for a in 0..=top {
            seq.push(a);
            go(seq, n, out);
            seq.pop();
        }
    }
    let mut out = BTreeMap::new();
    go(&mut vec![], n, &mut out);
    out
}

/// A power series in `q` (truncated at `order`) with polynomial coefficients
/// in a second variable, integer coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Trunc {
    pub order: i64,
    pub c: BTreeMap<(i64, i64), i128>,
}

impl Trunc {
    pub fn poly(order: i64, terms: &[(i128, i64, i64)]) -> Self {
        let mut s = Trunc {
            order,
            c: BTreeMap::new(),
        };
        for &(v, i, j) in terms {
            s.add_term(i, j, v);
        }
        s
    }

    fn add_term(&mut self, i: i64, j: i64, v: i128) {
        if i > self.order || v == 0 {
            return;
        }
        let e = self.c.entry((i, j)).or_insert(0);
        *e += v;
        if *e == 0 {
            self.c.remove(&(i, j));
        }
    }

    /// `(1 - q^i s^j)^{-power}` with `i >= 1`.
    pub fn geometric(order: i64, i: i64, j: i64, power: u32) -> Self {
        let mut s = Trunc {
            order,
            c: BTreeMap::new(),
        };
        let mut k = 0;
        while k * i <= order {
            let coeff = binomial(k as u64 + power as u64 - 1, power as u64 - 1) as i128;
            s.add_term(k * i, k * j, coeff);
            k += 1;
        }
        s
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut s = Trunc {
            order: self.order.min(o.order),
            c: BTreeMap::new(),
        };
        for (&(i1, j1), &v1) in &self.c {
            for (&(i2, j2), &v2) in &o.c {
                s.add_term(i1 + i2, j1 + j2, v1 * v2);
            }
        }
        s
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut s = self.clone();
        for (&(i, j), &v) in &o.c {
            s.add_term(i, j, v);
        }
        s
    }

    pub fn scale(&self, k: i128) -> Self {
        let mut s = Trunc {
            order: self.order,
            c: BTreeMap::new(),
        };
        for (&(i, j), &v) in &self.c {
            s.add_term(i, j, k * v);
        }
        s
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.scale(-1))
    }

    pub fn get(&self, i: i64, j: i64) -> i128 {
        self.c.get(&(i, j)).copied().unwrap_or(0)
    }
}

/// `num / ((1-q)^a (1-q s^w)^b)` expanded through `order`.
pub fn expand_over(order: i64, num: &[(i128, i64, i64)], a: u32, w: i64, b: u32) -> Trunc {
    let mut s = Trunc::poly(order, num);
    if a > 0 {
        s = s.mul(&Trunc::geometric(order, 1, 0, a));
    }
    if b > 0 {
        s = s.mul(&Trunc::geometric(order, 1, w, b));
    }
    s
}

/// Whether the polynomial with the given exponent vectors (over
/// `x_1..x_n, y_1..y_n`) vanishes to order `d` along every diagonal.
pub fn vanishes_to_order(n: usize, d: u32, terms: &[(Vec<u32>, BigRational)]) -> bool {
    let mut conds: BTreeMap<(usize, usize, u32, u32, Vec<u32>), BigRational> = BTreeMap::new();
    for (m, v) in terms {
        for i in 0..n {
            for j in i + 1..n {
                for p in 0..d {
                    for q in 0..d - p {
                        if m[i] < p || m[n + i] < q {
                            continue;
                        }
                        let coeff =
                            BigRational::from_integer(falling(m[i], p) * falling(m[n + i], q)) * v;
                        let mut r = m.clone();
                        r[j] += m[i] - p;
                        r[n + j] += m[n + i] - q;
                        r[i] = 0;
                        r[n + i] = 0;
                        *conds
                            .entry((i, j, p, q, r))
                            .or_insert_with(BigRational::zero) += coeff;
                    }
                }
            }
        }
    }
    conds.values().all(Zero::is_zero)
}
