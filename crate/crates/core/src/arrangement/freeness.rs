//! Regular-sequence test for `y_1, .., y_n` on a bigraded module.
//!
//! A module is presented degreewise as `G / R` with `R ⊆ G ⊆ S_(a,b)`.
//! Multiplication by `y_k` is injective on `M / (y_1..y_{k-1}) M` in
//! degree `(a, b)` exactly when, with `P = R + Σ_{i<k} y_i G`,
//! `dim (y_k G_(a,b) ∩ P_(a,b+1)) = dim P_(a,b)`.

use std::collections::HashMap;
use std::sync::Arc;

use rayon::prelude::*;
use serde::Serialize;

use super::domain::{SliceDomain, WindowPolicy};
use super::ideals::jd_slice;
use crate::error::{Error, Result};
use crate::exactalg::{
    Bidegree, GradedSlice, Monomial, MonomialBasis, MultiPoly, Ring, Role, SparseVec,
};
use crate::rootdata::{build_root_datum, Label};

pub trait GradedModule: Sync {
    fn ring(&self) -> &Arc<Ring>;
    /// `(G, R)` in degree `(a, b)`.
    fn piece(&self, a: i64, b: i64) -> Result<(GradedSlice, GradedSlice)>;
}

/// `J^(d) ⊆ ℚ[x_1..x_n, y_1..y_n]`.
pub struct SymbolicPower {
    ring: Arc<Ring>,
    n: usize,
    d: u32,
}

impl SymbolicPower {
    pub fn new(n: usize, d: u32) -> Self {
        Self {
            ring: Ring::polynomial_xy(n, false),
            n,
            d,
        }
    }
}

impl GradedModule for SymbolicPower {
    fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    fn piece(&self, a: i64, b: i64) -> Result<(GradedSlice, GradedSlice)> {
        let rd = build_root_datum(Label::GL, Some(self.n))?;
        let dom = SliceDomain::polynomial(&self.ring, Bidegree::algebraic(a, b))?;
        let g = jd_slice(&rd, self.d, &dom, &WindowPolicy::default())?.slice;
        let r = GradedSlice::zero(g.basis());
        Ok((g, r))
    }
}

/// `S / ⟨relations⟩` for homogeneous relations in a polynomial ring.
pub struct Quotient {
    ring: Arc<Ring>,
    relations: Vec<MultiPoly>,
}

impl Quotient {
    pub fn new(ring: &Arc<Ring>, relations: Vec<MultiPoly>) -> Self {
        Self {
            ring: ring.clone(),
            relations,
        }
    }
}

impl GradedModule for Quotient {
    fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    fn piece(&self, a: i64, b: i64) -> Result<(GradedSlice, GradedSlice)> {
        let dom = SliceDomain::polynomial(&self.ring, Bidegree::algebraic(a, b))?;
        let basis = dom.basis()?;
        Ok((
            GradedSlice::full(&basis),
            dom.generated(&self.relations, 0)?,
        ))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FreenessFailure {
    /// 1-based index of the `y` variable that fails to be a nonzerodivisor.
    pub stage: usize,
    pub degree: (i64, i64),
    pub kernel_dim: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct FreenessReport {
    pub pass: bool,
    /// Every degree `(a, b)` with `a + b + 1 <= truncation` was checked.
    pub truncation: i64,
    pub failure: Option<FreenessFailure>,
}

fn times_var(ring: &Ring, basis: &MonomialBasis, src: &GradedSlice, v: usize) -> Vec<SparseVec> {
    let m = Monomial::unit(ring.nvars(), v, 1);
    src.row_polys()
        .iter()
        .map(|p| basis.coords(&p.mul_monomial(&m)).expect("degree shift"))
        .collect()
}

/// Checks the `y` variables in ring order, stage by stage, in every
/// degree whose target slice has total degree at most `truncation`.
pub fn freeness_check_module(module: &dyn GradedModule, truncation: i64) -> Result<FreenessReport> {
    let ring = module.ring().clone();
    let ys: Vec<usize> = ring.indices_with_role(Role::Y);
    let degrees: Vec<(i64, i64)> = (0..=truncation)
        .flat_map(|t| (0..=t).map(move |a| (a, t - a)))
        .collect();
    let pieces: HashMap<(i64, i64), (GradedSlice, GradedSlice)> = degrees
        .par_iter()
        .map(|&(a, b)| module.piece(a, b).map(|p| ((a, b), p)))
        .collect::<Result<_>>()?;

    // P_(a,b) for stage k: R + Σ_{i<k} y_i G_(a,b-1).
    let p_space = |k: usize, a: i64, b: i64| -> Result<GradedSlice> {
        let (_, r) = &pieces[&(a, b)];
        if b == 0 || k == 0 {
            return Ok(r.clone());
        }
        let (g_below, _) = &pieces[&(a, b - 1)];
        let mut vs = Vec::new();
        for &y in &ys[..k] {
            vs.extend(times_var(&ring, r.basis(), g_below, y));
        }
        r.sum(&GradedSlice::span(r.basis(), vs))
    };

    for k in 0..ys.len() {
        let checks: Vec<(i64, i64)> = degrees
            .iter()
            .copied()
            .filter(|&(a, b)| a + b < truncation)
            .collect();
        let results: Vec<Option<FreenessFailure>> = checks
            .par_iter()
            .map(|&(a, b)| -> Result<Option<FreenessFailure>> {
                let (g, _) = &pieces[&(a, b)];
                let p_here = p_space(k, a, b)?;
                let p_up = p_space(k, a, b + 1)?;
                let image =
                    GradedSlice::span(p_up.basis(), times_var(&ring, p_up.basis(), g, ys[k]));
                let meet = image.intersect(&p_up)?.rank();
                Ok((meet != p_here.rank()).then(|| FreenessFailure {
                    stage: k + 1,
                    degree: (a, b),
                    kernel_dim: meet - p_here.rank(),
                }))
            })
            .collect::<Result<_>>()?;
        if let Some(f) = results.into_iter().flatten().next() {
            return Ok(FreenessReport {
                pass: false,
                truncation,
                failure: Some(f),
            });
        }
    }
    Ok(FreenessReport {
        pass: true,
        truncation,
        failure: None,
    })
}

/// Regular-sequence witness for `y_1..y_n` on `J^(d)`, `n <= 3`, `d <= 2`.
pub fn freeness_check(n: usize, d: u32, truncation: Option<i64>) -> Result<FreenessReport> {
    if !(2..=3).contains(&n) || !(1..=2).contains(&d) {
        return Err(Error::OutOfRange(format!(
            "freeness checks need 2 <= n <= 3 and 1 <= d <= 2, got n={n}, d={d}"
        )));
    }
    freeness_check_module(&SymbolicPower::new(n, d), truncation.unwrap_or(8))
}
