//! Ordinary equivariant homology as a quotient of `ℚ[Λ] ⊗ ℚ[y]` by the
//! `ℚ[Λ]`-span of `(1 - x^{α∨})^k · ker(∂_α^k)`, `1 <= k <= d`.

use std::sync::Arc;

use num::Zero;
use serde::Serialize;

use super::domain::{stabilize, Multipliers, SliceDomain, WindowPolicy, WindowedSlice};
use crate::error::{Error, Result};
use crate::exactalg::ring::compositions;
use crate::exactalg::{
    scalar, ExactScalar, GradedSlice, Monomial, MonomialBasis, MultiPoly, Ring, Role, Window,
};
use crate::rootdata::RootDatum;

/// `y`-monomials of degree `b` in `ring` (all other exponents zero).
fn y_basis(ring: &Arc<Ring>, b: i64) -> Arc<MonomialBasis> {
    let ys = ring.indices_with_role(Role::Y);
    let monos = compositions(b, ys.len())
        .into_iter()
        .map(|c| {
            let mut e = vec![0i32; ring.nvars()];
            for (k, &i) in ys.iter().enumerate() {
                e[i] = c[k];
            }
            Monomial(e)
        })
        .collect();
    MonomialBasis::new(ring, monos)
}

/// A basis of `ker D^k` on `y`-polynomials of degree `b`, where `D` is the
/// derivation with `D(z_i) = dir[i]` on the variables of `ring`.
pub fn directional_kernel(
    ring: &Arc<Ring>,
    dir: &[ExactScalar],
    k: u32,
    b: i64,
) -> Result<Vec<MultiPoly>> {
    let source = y_basis(ring, b);
    if b < k as i64 {
        return Ok(GradedSlice::full(&source).row_polys());
    }
    let target = y_basis(ring, b - k as i64);
    let ker = GradedSlice::kernel_of(&source, &target, |p| {
        (0..k).fold(p.clone(), |q, _| q.directional_derivative(dir))
    })?;
    Ok(ker.row_polys())
}

/// A basis of `ker ∂_α^k` on `y`-polynomials of degree `b`.
pub fn derivative_kernel(
    rd: &RootDatum,
    ring: &Arc<Ring>,
    alpha: usize,
    k: u32,
    b: i64,
) -> Result<Vec<MultiPoly>> {
    let ys = ring.indices_with_role(Role::Y);
    let mut dir = vec![ExactScalar::zero(); ring.nvars()];
    for (c, v) in rd.derivative_direction(alpha).into_iter().enumerate() {
        dir[ys[c]] = scalar::int(v);
    }
    directional_kernel(ring, &dir, k, b)
}

/// Relation generators `(1 - x^{α∨})^k K` for every root, `k <= d`, and
/// `K` in a kernel basis in one of `y_degs`.
pub fn relation_generators(
    rd: &RootDatum,
    ring: &Arc<Ring>,
    d: u32,
    y_degs: &[i64],
) -> Result<Vec<MultiPoly>> {
    let one = MultiPoly::one(ring);
    let mut out = Vec::new();
    for (a, root) in rd.roots.iter().enumerate() {
        let step = &one - &rd.x_power(ring, &root.coroot);
        for k in 1..=d {
            let lead = step.pow(k);
            for &b in y_degs {
                for kern in derivative_kernel(rd, ring, a, k, b)? {
                    out.push(&lead * &kern);
                }
            }
        }
    }
    Ok(out)
}

#[derive(Clone, Debug)]
pub struct OrdinaryQuotient {
    pub submodule: WindowedSlice,
    pub ambient_dim: usize,
    pub quotient_dim: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct OrdinaryQuotientJson {
    pub ambient_dim: usize,
    pub submodule_rank: usize,
    pub quotient_dim: usize,
    pub status: super::domain::Status,
    pub margin: i32,
    pub submodule: Vec<String>,
}

impl OrdinaryQuotient {
    pub fn to_json(&self) -> OrdinaryQuotientJson {
        OrdinaryQuotientJson {
            ambient_dim: self.ambient_dim,
            submodule_rank: self.submodule.rank(),
            quotient_dim: self.quotient_dim,
            status: self.submodule.status,
            margin: self.submodule.margin,
            submodule: self
                .submodule
                .slice
                .row_polys()
                .iter()
                .map(|p| p.render())
                .collect(),
        }
    }
}

/// The windowed slice of the relation submodule and the dimension of its
/// complement, for `y`-degrees `y_degs` and Laurent exponents in `window`.
pub fn ordinary_homology_quotient_slice(
    rd: &RootDatum,
    d: u32,
    y_degs: &[i64],
    window: &Window,
    policy: &WindowPolicy,
) -> Result<OrdinaryQuotient> {
    if rd.rank > 3 {
        return Err(Error::OutOfRange(format!("rank {} exceeds 3", rd.rank)));
    }
    if y_degs.iter().any(|&b| b < 0) {
        return Err(Error::Invalid("negative y-degree".into()));
    }
    let ring = rd.laurent_ring();
    let domain = SliceDomain::windowed(&ring, y_degs, window);
    let gens = relation_generators(rd, &ring, d, y_degs)?;
    let submodule = stabilize(true, d, policy, |m| {
        domain.generated_by(&gens, m, Multipliers::XOnly)
    })?;
    let ambient_dim = submodule.slice.ambient_dim();
    Ok(OrdinaryQuotient {
        quotient_dim: ambient_dim - submodule.rank(),
        ambient_dim,
        submodule,
    })
}
