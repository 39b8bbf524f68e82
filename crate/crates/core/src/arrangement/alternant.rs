//! The type A ideal generated by diagonal alternants, its powers, and the
//! Catalan quotient `J / ⟨x, y⟩ J`.

use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactalg::{Bidegree, GradedSlice, Monomial, MonomialBasis, MultiPoly, Ring, SparseVec};

/// Permutations of `0..n` with their signs.
fn signed_permutations(n: usize) -> Vec<(Vec<usize>, i64)> {
    fn go(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                prefix.push(i);
                go(prefix, used, out);
                prefix.pop();
                used[i] = false;
            }
        }
    }
    let mut perms = Vec::new();
    go(&mut Vec::new(), &mut vec![false; n], &mut perms);
    perms
        .into_iter()
        .map(|p| {
            let inversions = (0..n)
                .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                .filter(|&(i, j)| p[i] > p[j])
                .count();
            let s = if inversions % 2 == 0 { 1 } else { -1 };
            (p, s)
        })
        .collect()
}

/// Strictly increasing lists of `n` exponent pairs summing to `(a, b)`:
/// one representative per orbit of monomials with nonzero alternant.
fn pair_sets(n: usize, a: i64, b: i64) -> Vec<Vec<(i64, i64)>> {
    fn go(
        n: usize,
        a: i64,
        b: i64,
        min: Option<(i64, i64)>,
        cur: &mut Vec<(i64, i64)>,
        out: &mut Vec<Vec<(i64, i64)>>,
    ) {
        if n == 0 {
            if a == 0 && b == 0 {
                out.push(cur.clone());
            }
            return;
        }
        for p in 0..=a {
            for q in 0..=b {
                if min.is_some_and(|m| (p, q) <= m) {
                    continue;
                }
                cur.push((p, q));
                go(n - 1, a - p, b - q, Some((p, q)), cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(n, a, b, None, &mut Vec::new(), &mut out);
    out
}

/// `Σ_σ sgn(σ) ∏_i x_{σ(i)}^{p_i} y_{σ(i)}^{q_i}` in `ℚ[x_1..x_n, y_1..y_n]`.
pub fn alternant(ring: &Arc<Ring>, pairs: &[(i64, i64)]) -> MultiPoly {
    let n = pairs.len();
    let mut f = MultiPoly::zero(ring);
    for (perm, s) in signed_permutations(n) {
        let mut e = vec![0i32; 2 * n];
        for (i, &(p, q)) in pairs.iter().enumerate() {
            e[perm[i]] = p as i32;
            e[n + perm[i]] = q as i32;
        }
        f.add_term(Monomial(e), crate::exactalg::scalar::int(s));
    }
    f
}

type Key = (u32, i64, i64);

/// Slices of `I^d` for the diagonal alternant ideal `I`, memoized by degree.
pub struct AlternantIdeal {
    n: usize,
    ring: Arc<Ring>,
    bases: HashMap<(i64, i64), Arc<MonomialBasis>>,
    alternants: HashMap<(i64, i64), GradedSlice>,
    gens: HashMap<Key, GradedSlice>,
    ideal: HashMap<Key, GradedSlice>,
    /// `(Σ x_i I^d + Σ y_i I^d)` in each degree.
    maximal: HashMap<Key, GradedSlice>,
}

impl AlternantIdeal {
    pub fn new(n: usize) -> Result<Self> {
        if !(1..=4).contains(&n) {
            return Err(Error::OutOfRange(format!(
                "alternant slices need 1 <= n <= 4, got {n}"
            )));
        }
        Ok(Self {
            n,
            ring: Ring::polynomial_xy(n, false),
            bases: HashMap::new(),
            alternants: HashMap::new(),
            gens: HashMap::new(),
            ideal: HashMap::new(),
            maximal: HashMap::new(),
        })
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    fn basis(&mut self, a: i64, b: i64) -> Arc<MonomialBasis> {
        let ring = self.ring.clone();
        self.bases
            .entry((a, b))
            .or_insert_with(|| {
                MonomialBasis::slice(&ring, &Bidegree::algebraic(a, b), None)
                    .expect("polynomial slice")
            })
            .clone()
    }

    /// Degrees `(a', b') ≤ (a, b)` in order of total degree.
    fn below(a: i64, b: i64) -> Vec<Vec<(i64, i64)>> {
        (0..=a + b)
            .map(|t| {
                (0..=a)
                    .filter_map(|p| (t - p >= 0 && t - p <= b).then_some((p, t - p)))
                    .collect()
            })
            .collect()
    }

    fn fill_alternants(&mut self, a: i64, b: i64) {
        for layer in Self::below(a, b) {
            let todo: Vec<(i64, i64)> = layer
                .into_iter()
                .filter(|k| !self.alternants.contains_key(k))
                .collect();
            let bases: Vec<_> = todo.iter().map(|&(p, q)| self.basis(p, q)).collect();
            let n = self.n;
            let ring = self.ring.clone();
            let done: Vec<GradedSlice> = todo
                .par_iter()
                .zip(&bases)
                .map(|(&(p, q), basis)| {
                    let vs: Vec<SparseVec> = pair_sets(n, p, q)
                        .iter()
                        .map(|ps| basis.coords(&alternant(&ring, ps)).expect("homogeneous"))
                        .collect();
                    GradedSlice::span(basis, vs)
                })
                .collect();
            self.alternants.extend(todo.into_iter().zip(done));
        }
    }

    fn product_slice(
        &self,
        basis: &Arc<MonomialBasis>,
        pieces: &[(&GradedSlice, &GradedSlice)],
    ) -> GradedSlice {
        let mut vs = Vec::new();
        for (f, g) in pieces {
            let gp = g.row_polys();
            for fp in f.row_polys() {
                for q in &gp {
                    vs.push(basis.coords(&(&fp * q)).expect("degrees add"));
                }
            }
        }
        GradedSlice::span(basis, vs)
    }

    fn fill_gens(&mut self, d: u32, a: i64, b: i64) {
        if d == 0 {
            return;
        }
        self.fill_alternants(a, b);
        if d > 1 {
            self.fill_gens(d - 1, a, b);
        }
        for layer in Self::below(a, b) {
            let todo: Vec<(i64, i64)> = layer
                .into_iter()
                .filter(|&(p, q)| !self.gens.contains_key(&(d, p, q)))
                .collect();
            let bases: Vec<_> = todo.iter().map(|&(p, q)| self.basis(p, q)).collect();
            let this = &*self;
            let done: Vec<GradedSlice> = todo
                .par_iter()
                .zip(&bases)
                .map(|(&(p, q), basis)| {
                    if d == 1 {
                        return this.alternants[&(p, q)].clone();
                    }
                    let mut pieces = Vec::new();
                    for p1 in 0..=p {
                        for q1 in 0..=q {
                            let f = &this.alternants[&(p1, q1)];
                            let g = &this.gens[&(d - 1, p - p1, q - q1)];
                            if f.rank() > 0 && g.rank() > 0 {
                                pieces.push((f, g));
                            }
                        }
                    }
                    this.product_slice(basis, &pieces)
                })
                .collect();
            self.gens
                .extend(todo.into_iter().map(|(p, q)| (d, p, q)).zip(done));
        }
    }

    fn shifted(&self, basis: &MonomialBasis, src: &GradedSlice, vars: &[usize]) -> Vec<SparseVec> {
        let mut out = Vec::new();
        for p in src.row_polys() {
            for &v in vars {
                let m = Monomial::unit(self.ring.nvars(), v, 1);
                out.push(basis.coords(&p.mul_monomial(&m)).expect("degree shift"));
            }
        }
        out
    }

    fn fill_ideal(&mut self, d: u32, a: i64, b: i64) {
        self.fill_gens(d, a, b);
        let n = self.n;
        let xs: Vec<usize> = (0..n).collect();
        let ys: Vec<usize> = (n..2 * n).collect();
        for layer in Self::below(a, b) {
            let todo: Vec<(i64, i64)> = layer
                .into_iter()
                .filter(|&(p, q)| !self.ideal.contains_key(&(d, p, q)))
                .collect();
            let bases: Vec<_> = todo.iter().map(|&(p, q)| self.basis(p, q)).collect();
            let this = &*self;
            let done: Vec<(GradedSlice, GradedSlice)> = todo
                .par_iter()
                .zip(&bases)
                .map(|(&(p, q), basis)| {
                    let mut vs = Vec::new();
                    if p > 0 {
                        vs.extend(this.shifted(basis, &this.ideal[&(d, p - 1, q)], &xs));
                    }
                    if q > 0 {
                        vs.extend(this.shifted(basis, &this.ideal[&(d, p, q - 1)], &ys));
                    }
                    let maximal = GradedSlice::span(basis, vs);
                    let whole = if d == 0 {
                        GradedSlice::full(basis)
                    } else {
                        maximal.sum(&this.gens[&(d, p, q)]).expect("same basis")
                    };
                    (whole, maximal)
                })
                .collect();
            for ((p, q), (whole, maximal)) in todo.into_iter().zip(done) {
                self.ideal.insert((d, p, q), whole);
                self.maximal.insert((d, p, q), maximal);
            }
        }
    }

    /// `I^d` in degree `(a, b)`.
    pub fn slice(&mut self, d: u32, a: i64, b: i64) -> Result<GradedSlice> {
        if a < 0 || b < 0 {
            return Err(Error::Invalid(format!("negative degree ({a},{b})")));
        }
        self.fill_ideal(d, a, b);
        Ok(self.ideal[&(d, a, b)].clone())
    }

    /// `dim (I^d / ⟨x, y⟩ I^d)` in degree `(a, b)`.
    pub fn minimal_generators(&mut self, d: u32, a: i64, b: i64) -> Result<usize> {
        self.slice(d, a, b)?;
        Ok(self.ideal[&(d, a, b)].rank() - self.maximal[&(d, a, b)].rank())
    }

    /// Fills every degree with `a + b <= total` at once.
    pub fn fill_total(&mut self, d: u32, total: i64) {
        // The corner degrees (total, 0) .. (0, total) cover the triangle.
        for a in 0..=total {
            self.fill_ideal(d, a, total - a);
        }
    }
}

/// `I^d` in degree `(a, b)` for the `n`-point diagonal alternant ideal.
pub fn alternant_slice(n: usize, d: u32, deg: Bidegree) -> Result<GradedSlice> {
    let (a, b) = deg
        .to_algebraic()
        .ok_or_else(|| Error::Invalid(format!("{deg:?}")))?
        .deg;
    AlternantIdeal::new(n)?.slice(d, a, b)
}

#[derive(Clone, Debug, Serialize)]
pub struct CatalanTable {
    pub n: usize,
    pub truncation: i64,
    /// Nonzero entries `(a, b) -> dim`.
    pub table: BTreeMap<(i64, i64), usize>,
    pub total: usize,
    /// Generators of `J / ⟨x, y⟩ J` sit in total degree at most `n(n-1)/2`;
    /// the table is complete when the truncation reaches that bound.
    pub top_degree: i64,
    pub certified: bool,
}

impl CatalanTable {
    pub fn is_symmetric(&self) -> bool {
        self.table
            .iter()
            .all(|(&(a, b), v)| self.table.get(&(b, a)) == Some(v))
    }
}

/// Default truncation: `n(n-1)` up to `n = 3`, one past the top degree for `n = 4`.
pub fn default_catalan_truncation(n: usize) -> i64 {
    let n = n as i64;
    if n <= 3 {
        n * (n - 1)
    } else {
        n * (n - 1) / 2 + 1
    }
}

/// Bigraded dimensions of `J / ⟨x, y⟩ J` for `a + b <= truncation`.
pub fn catalan_quotient(n: usize, truncation: Option<i64>) -> Result<CatalanTable> {
    let truncation = truncation.unwrap_or_else(|| default_catalan_truncation(n));
    if truncation < 0 {
        return Err(Error::Invalid("negative truncation".into()));
    }
    let mut ideal = AlternantIdeal::new(n)?;
    ideal.fill_total(1, truncation);
    let mut table = BTreeMap::new();
    for t in 0..=truncation {
        for a in 0..=t {
            let v = ideal.minimal_generators(1, a, t - a)?;
            if v > 0 {
                table.insert((a, t - a), v);
            }
        }
    }
    let top_degree = (n * (n - 1) / 2) as i64;
    Ok(CatalanTable {
        n,
        truncation,
        total: table.values().sum(),
        table,
        top_degree,
        certified: truncation >= top_degree,
    })
}
