//! Finite-dimensional linear algebra over a slice of monomials.
//!
//! Vectors are sparse (`(column, coefficient)` pairs sorted by column).
//! Row spaces are kept in reduced row-echelon form, so two slices span the
//! same subspace exactly when their rows are equal.

use std::collections::HashMap;
use std::sync::Arc;

use num::{One, Zero};

use super::poly::MultiPoly;
use super::ring::{same_ring, Bidegree, Monomial, Ring, Window};
use super::scalar::ExactScalar;
use crate::error::{Error, Result};

pub type SparseVec = Vec<(usize, ExactScalar)>;

/// Below this many columns a dense elimination is used.
pub const DENSE_MAX_COLS: usize = 48;

const NO_PIVOT: u32 = u32::MAX;

/// `a - c*b`.
pub fn sub_scaled(
    a: &[(usize, ExactScalar)],
    b: &[(usize, ExactScalar)],
    c: &ExactScalar,
) -> SparseVec {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
            out.push(a[i].clone());
            i += 1;
        } else if i == a.len() || b[j].0 < a[i].0 {
            out.push((b[j].0, -(c * &b[j].1)));
            j += 1;
        } else {
            let v = &a[i].1 - c * &b[j].1;
            if !v.is_zero() {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

pub fn normalize(v: &mut SparseVec) {
    v.sort_by_key(|e| e.0);
    let mut out: SparseVec = Vec::with_capacity(v.len());
    for (c, x) in v.drain(..) {
        match out.last_mut() {
            Some(last) if last.0 == c => last.1 += x,
            _ => out.push((c, x)),
        }
    }
    out.retain(|e| !e.1.is_zero());
    *v = out;
}

fn make_monic(v: &mut SparseVec) {
    if let Some(lead) = v.first().map(|e| e.1.clone()) {
        if !lead.is_one() {
            let inv = lead.recip();
            for e in v.iter_mut() {
                e.1 *= &inv;
            }
        }
    }
}

/// Incremental semi-echelon form: every stored row has a distinct leading
/// column and is zero before it.
#[derive(Clone, Debug)]
pub struct Echelon {
    ncols: usize,
    rows: Vec<SparseVec>,
    pivot_row: Vec<u32>,
}

impl Echelon {
    pub fn new(ncols: usize) -> Self {
        Self {
            ncols,
            rows: Vec::new(),
            pivot_row: vec![NO_PIVOT; ncols],
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    fn pivot(&self, col: usize) -> Option<&SparseVec> {
        match self.pivot_row[col] {
            NO_PIVOT => None,
            r => Some(&self.rows[r as usize]),
        }
    }

    /// Reduces until the leading column is not a pivot.
    pub fn reduce_leading(&self, mut v: SparseVec) -> SparseVec {
        while let Some((col, c)) = v.first() {
            match self.pivot(*col) {
                Some(row) => {
                    let c = c.clone();
                    v = sub_scaled(&v, row, &c);
                }
                None => break,
            }
        }
        v
    }

    /// Eliminates every pivot column of `v`; zero iff `v` is in the span.
    pub fn reduce_full(&self, mut v: SparseVec) -> SparseVec {
        let mut k = 0;
        while k < v.len() {
            let col = v[k].0;
            match self.pivot(col) {
                Some(row) => {
                    let c = v[k].1.clone();
                    v = sub_scaled(&v, row, &c);
                }
                None => k += 1,
            }
        }
        v
    }

    /// Adds `v`; returns whether it was independent of the current rows.
    pub fn insert(&mut self, v: SparseVec) -> bool {
        let mut v = self.reduce_leading(v);
        if v.is_empty() {
            return false;
        }
        make_monic(&mut v);
        self.pivot_row[v[0].0] = self.rows.len() as u32;
        self.rows.push(v);
        true
    }

    pub fn contains(&self, v: SparseVec) -> bool {
        self.reduce_full(v).is_empty()
    }

    pub fn rows(&self) -> &[SparseVec] {
        &self.rows
    }

    /// Fully reduced rows sorted by leading column.
    pub fn into_rref(mut self) -> Vec<SparseVec> {
        let mut order: Vec<usize> = (0..self.rows.len()).collect();
        order.sort_by_key(|&r| self.rows[r][0].0);
        for &r in order.iter().rev() {
            let row = std::mem::take(&mut self.rows[r]);
            let head = row[0].clone();
            let tail = self.reduce_full(row[1..].to_vec());
            let mut full = Vec::with_capacity(tail.len() + 1);
            full.push(head);
            full.extend(tail);
            self.rows[r] = full;
        }
        let mut rows = self.rows;
        rows.sort_by_key(|r| r[0].0);
        rows
    }
}

/// Dense Gauss-Jordan elimination; returns the reduced rows in sparse form.
pub fn dense_rref(vectors: &[SparseVec], ncols: usize) -> Vec<SparseVec> {
    let mut m: Vec<Vec<ExactScalar>> = vectors
        .iter()
        .map(|v| {
            let mut row = vec![ExactScalar::zero(); ncols];
            for (c, x) in v {
                row[*c] += x;
            }
            row
        })
        .collect();
    let mut r = 0;
    for col in 0..ncols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][col].recip();
        for x in m[r].iter_mut().skip(col) {
            *x *= &inv;
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != r && !row[col].is_zero() {
                let f = row[col].clone();
                for (x, p) in row.iter_mut().zip(&pivot_row).skip(col) {
                    if !p.is_zero() {
                        *x -= &f * p;
                    }
                }
            }
        }
        r += 1;
        if r == m.len() {
            break;
        }
    }
    m.truncate(r);
    m.into_iter()
        .map(|row| {
            row.into_iter()
                .enumerate()
                .filter(|(_, x)| !x.is_zero())
                .collect()
        })
        .collect()
}

/// Canonical reduced row-echelon basis of the span of `vectors`.
pub fn rref(vectors: impl IntoIterator<Item = SparseVec>, ncols: usize) -> Vec<SparseVec> {
    if ncols <= DENSE_MAX_COLS {
        let vs: Vec<SparseVec> = vectors.into_iter().collect();
        return dense_rref(&vs, ncols);
    }
    let mut e = Echelon::new(ncols);
    for v in vectors {
        e.insert(v);
        if e.rank() == ncols {
            break;
        }
    }
    e.into_rref()
}

/// Rank without forming the reduced basis.
pub fn rank_of(vectors: impl IntoIterator<Item = SparseVec>, ncols: usize) -> usize {
    let mut e = Echelon::new(ncols);
    for v in vectors {
        e.insert(v);
        if e.rank() == ncols {
            break;
        }
    }
    e.rank()
}

/// Given vectors over columns where every column `< split` is "unwanted",
/// returns a basis of the subspace of their span supported in columns
/// `>= split`, shifted down by `split`.
pub fn span_in_tail(
    vectors: impl IntoIterator<Item = SparseVec>,
    ncols: usize,
    split: usize,
) -> Vec<SparseVec> {
    let mut e = Echelon::new(ncols);
    for v in vectors {
        e.insert(v);
    }
    // Semi-echelon rows pivoting at or after `split` are zero before it.
    e.rows
        .into_iter()
        .filter(|r| r[0].0 >= split)
        .map(|r| r.into_iter().map(|(c, x)| (c - split, x)).collect())
        .collect()
}

/// An ordered monomial basis of a slice.
#[derive(Debug)]
pub struct MonomialBasis {
    ring: Arc<Ring>,
    monos: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
}

impl PartialEq for MonomialBasis {
    fn eq(&self, other: &Self) -> bool {
        same_ring(&self.ring, &other.ring) && self.monos == other.monos
    }
}

impl MonomialBasis {
    /// Sorts `monos` into canonical order.
    pub fn new(ring: &Arc<Ring>, mut monos: Vec<Monomial>) -> Arc<Self> {
        monos.sort();
        monos.dedup();
        let index = monos
            .iter()
            .enumerate()
            .map(|(i, m)| (m.clone(), i))
            .collect();
        Arc::new(Self {
            ring: ring.clone(),
            monos,
            index,
        })
    }

    pub fn slice(ring: &Arc<Ring>, deg: &Bidegree, window: Option<&Window>) -> Result<Arc<Self>> {
        Ok(Self::new(
            ring,
            super::ring::slice_monomials(ring, deg, window)?,
        ))
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn len(&self) -> usize {
        self.monos.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monos.is_empty()
    }

    pub fn monomials(&self) -> &[Monomial] {
        &self.monos
    }

    pub fn index_of(&self, m: &Monomial) -> Option<usize> {
        self.index.get(m).copied()
    }

    /// Coordinates of `p`; fails if `p` has a term outside the basis.
    pub fn coords(&self, p: &MultiPoly) -> Result<SparseVec> {
        let mut v = Vec::with_capacity(p.len());
        for (m, c) in p.terms() {
            let i = self
                .index_of(m)
                .ok_or_else(|| Error::OutsideBasis(m.render(&self.ring)))?;
            v.push((i, c.clone()));
        }
        v.sort_by_key(|e| e.0);
        Ok(v)
    }

    pub fn poly(&self, v: &[(usize, ExactScalar)]) -> MultiPoly {
        MultiPoly::from_terms(
            &self.ring,
            v.iter().map(|(i, c)| (self.monos[*i].clone(), c.clone())),
        )
    }

    fn same(self: &Arc<Self>, other: &Arc<Self>) -> bool {
        Arc::ptr_eq(self, other) || **self == **other
    }
}

/// A subspace of one slice, stored by its reduced row-echelon basis.
#[derive(Clone, Debug)]
pub struct GradedSlice {
    basis: Arc<MonomialBasis>,
    rows: Vec<SparseVec>,
}

impl PartialEq for GradedSlice {
    fn eq(&self, other: &Self) -> bool {
        self.basis.same(&other.basis) && self.rows == other.rows
    }
}

impl GradedSlice {
    pub fn zero(basis: &Arc<MonomialBasis>) -> Self {
        Self {
            basis: basis.clone(),
            rows: Vec::new(),
        }
    }

    pub fn full(basis: &Arc<MonomialBasis>) -> Self {
        let rows = (0..basis.len())
            .map(|i| vec![(i, ExactScalar::one())])
            .collect();
        Self {
            basis: basis.clone(),
            rows,
        }
    }

    pub fn span(basis: &Arc<MonomialBasis>, vectors: impl IntoIterator<Item = SparseVec>) -> Self {
        Self {
            basis: basis.clone(),
            rows: rref(vectors, basis.len()),
        }
    }

    pub fn span_polys<'a>(
        basis: &Arc<MonomialBasis>,
        polys: impl IntoIterator<Item = &'a MultiPoly>,
    ) -> Result<Self> {
        let vs = polys
            .into_iter()
            .map(|p| basis.coords(p))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::span(basis, vs))
    }

    /// Span of `vectors` (coordinates in `big`) intersected with the
    /// polynomials supported on `basis`, which must be a subset of `big`.
    pub fn span_restricted(
        basis: &Arc<MonomialBasis>,
        big: &MonomialBasis,
        vectors: impl IntoIterator<Item = SparseVec>,
    ) -> Self {
        // Columns outside the target come first so that echelon rows
        // pivoting inside it are supported inside it.
        let outside = big.len()
            - big
                .monos
                .iter()
                .filter(|m| basis.index_of(m).is_some())
                .count();
        let mut outside_idx = 0usize;
        let remap: Vec<usize> = big
            .monos
            .iter()
            .map(|m| match basis.index_of(m) {
                Some(i) => outside + i,
                None => {
                    outside_idx += 1;
                    outside_idx - 1
                }
            })
            .collect();
        let moved = vectors.into_iter().map(|v| {
            let mut w: SparseVec = v.into_iter().map(|(c, x)| (remap[c], x)).collect();
            w.sort_by_key(|e| e.0);
            w
        });
        let rows = span_in_tail(moved, outside + basis.len(), outside);
        Self {
            basis: basis.clone(),
            rows: rref(rows, basis.len()),
        }
    }

    pub fn basis(&self) -> &Arc<MonomialBasis> {
        &self.basis
    }

    pub fn rows(&self) -> &[SparseVec] {
        &self.rows
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.basis.len()
    }

    pub fn codim(&self) -> usize {
        self.basis.len() - self.rows.len()
    }

    pub fn row_polys(&self) -> Vec<MultiPoly> {
        self.rows.iter().map(|r| self.basis.poly(r)).collect()
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.basis.same(&other.basis) {
            Ok(())
        } else {
            Err(Error::BasisMismatch)
        }
    }

    pub fn sum(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(Self::span(
            &self.basis,
            self.rows.iter().chain(&other.rows).cloned(),
        ))
    }

    pub fn intersect(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        if self.rank() == self.ambient_dim() {
            return Ok(other.clone());
        }
        if other.rank() == other.ambient_dim() {
            return Ok(self.clone());
        }
        // Zassenhaus: rows (a | a) and (b | 0); those vanishing in the first
        // block carry the intersection in the second.
        let n = self.basis.len();
        let doubled = self.rows.iter().map(|a| {
            let mut v = a.clone();
            v.extend(a.iter().map(|(c, x)| (c + n, x.clone())));
            v
        });
        let rows = span_in_tail(doubled.chain(other.rows.iter().cloned()), 2 * n, n);
        Ok(Self::span(&self.basis, rows))
    }

    pub fn contains(&self, v: &[(usize, ExactScalar)]) -> bool {
        let mut e = Echelon::new(self.basis.len());
        for r in &self.rows {
            e.insert(r.clone());
        }
        e.contains(v.to_vec())
    }

    pub fn contains_poly(&self, p: &MultiPoly) -> Result<bool> {
        Ok(self.contains(&self.basis.coords(p)?))
    }

    /// Whether every vector of `other` lies in `self`.
    pub fn contains_slice(&self, other: &Self) -> Result<bool> {
        self.check(other)?;
        let mut e = Echelon::new(self.basis.len());
        for r in &self.rows {
            e.insert(r.clone());
        }
        Ok(other.rows.iter().all(|r| e.contains(r.clone())))
    }

    /// Kernel of the linear map sending basis vector `j` of `source` to
    /// `images[j]` (coordinates in a target of dimension `target_dim`).
    pub fn kernel(
        source: &Arc<MonomialBasis>,
        target_dim: usize,
        images: &[SparseVec],
    ) -> Result<Self> {
        if images.len() != source.len() {
            return Err(Error::Invalid("one image per source basis vector".into()));
        }
        let aug = images.iter().enumerate().map(|(j, img)| {
            let mut v = img.clone();
            v.push((target_dim + j, ExactScalar::one()));
            v
        });
        let rows = span_in_tail(aug, target_dim + source.len(), target_dim);
        Ok(Self::span(source, rows))
    }

    /// Kernel of a polynomial map on the slice, e.g. a differential operator.
    pub fn kernel_of(
        source: &Arc<MonomialBasis>,
        target: &Arc<MonomialBasis>,
        f: impl Fn(&MultiPoly) -> MultiPoly,
    ) -> Result<Self> {
        let images = source
            .monos
            .iter()
            .map(|m| {
                let p = MultiPoly::term(source.ring(), m.clone(), ExactScalar::one());
                target.coords(&f(&p))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::kernel(source, target.len(), &images)
    }
}
