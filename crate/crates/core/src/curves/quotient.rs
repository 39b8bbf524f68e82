//! The conjectural module `ℚ[x, y] / Σ_{i≠j} Σ_{k≤d} (x_i - x_j)^k ker(∂_{y_i} - ∂_{y_j})^k`
//! in the CURVE bigrading, and the `n = 3` subspace family `U_1, U_2, U_3`.

use std::collections::BTreeMap;
use std::sync::{Arc, LazyLock};

use num::Zero;
use rayon::prelude::*;
use serde::Serialize;

use super::msv::{msv_assemble, CurveSpec};
use crate::arrangement::ordinary::directional_kernel;
use crate::arrangement::{Multipliers, SliceDomain};
use crate::error::{Error, Result};
use crate::exactalg::{
    scalar, Bidegree, ExactScalar, GradedSlice, Monomial, MultiPoly, RationalSeries, Ring,
};

static QT_RING: LazyLock<Arc<Ring>> = LazyLock::new(|| Ring::formal(&["q", "t"], &[]));

/// `ℚ(q, t)`, the Poincaré specialization of `ℚ(q, L)`.
pub fn qt_ring() -> Arc<Ring> {
    QT_RING.clone()
}

/// `Σ c q^i t^j` from `(c, i, j)` triples.
pub fn qt_poly(terms: &[(i64, i32, i32)]) -> MultiPoly {
    let ring = qt_ring();
    MultiPoly::from_terms(
        &ring,
        terms
            .iter()
            .map(|&(c, i, j)| (Monomial(vec![i, j]), scalar::int(c))),
    )
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct QuotientModuleSpec {
    pub n: usize,
    pub d: u32,
}

impl QuotientModuleSpec {
    pub fn new(n: usize, d: u32) -> Result<Self> {
        if !(2..=3).contains(&n) || !(1..=2).contains(&d) {
            return Err(Error::OutOfRange(format!(
                "quotient modules need 2 <= n <= 3 and 1 <= d <= 2, got n={n}, d={d}"
            )));
        }
        Ok(Self { n, d })
    }

    pub fn ring(&self) -> Arc<Ring> {
        Ring::polynomial_xy(self.n, false)
    }

    /// Relation generators whose `y`-degree is `b`.
    pub fn relations(&self, ring: &Arc<Ring>, b: i64) -> Result<Vec<MultiPoly>> {
        let n = self.n;
        let mut out = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let mut dir = vec![ExactScalar::zero(); 2 * n];
                dir[n + i] = scalar::int(1);
                dir[n + j] = scalar::int(-1);
                let step = &MultiPoly::var(ring, i) - &MultiPoly::var(ring, j);
                for k in 1..=self.d {
                    let lead = step.pow(k);
                    for kern in directional_kernel(ring, &dir, k, b)? {
                        out.push(&lead * &kern);
                    }
                }
            }
        }
        Ok(out)
    }

    /// The relation submodule in one slice.
    pub fn relation_slice(&self, deg: Bidegree) -> Result<Option<GradedSlice>> {
        let Some(alg) = deg.to_algebraic() else {
            return Ok(None);
        };
        let (a, b) = alg.deg;
        if a < 0 || b < 0 {
            return Ok(None);
        }
        let ring = self.ring();
        let domain = SliceDomain::polynomial(&ring, alg)?;
        let gens = self.relations(&ring, b)?;
        Ok(Some(domain.generated_by(&gens, 0, Multipliers::XOnly)?))
    }
}

/// Dimension of the quotient module in one slice (CURVE or ALGEBRAIC).
pub fn quotient_hilbert_slice(spec: &QuotientModuleSpec, deg: Bidegree) -> Result<usize> {
    Ok(spec.relation_slice(deg)?.map_or(0, |s| s.codim()))
}

/// Curve degrees `(p, h)` with `p <= order` and `h` even, `h <= 2p`.
fn curve_degrees(order: i64) -> Vec<(i64, i64)> {
    (0..=order)
        .flat_map(|p| (0..=p).map(move |b| (p, 2 * b)))
        .collect()
}

/// Quotient dimensions in every curve degree through `order`.
pub fn quotient_hilbert_table(
    spec: &QuotientModuleSpec,
    order: i64,
) -> Result<BTreeMap<(i64, i64), usize>> {
    curve_degrees(order)
        .par_iter()
        .map(|&(p, h)| Ok(((p, h), quotient_hilbert_slice(spec, Bidegree::curve(p, h))?)))
        .collect()
}

/// Coefficient table `(p, h) -> c` of a series in `(q, t)` through q-order `order`.
pub fn coefficients(s: &RationalSeries, order: u32) -> Result<BTreeMap<(i64, i64), ExactScalar>> {
    let e = s.expand(&[(0, order)])?;
    Ok(e.terms()
        .iter()
        .map(|(m, c)| ((m.0[0] as i64, m.0[1] as i64), c.clone()))
        .collect())
}

/// `L ↦ t^2`.
pub fn poincare(s: &RationalSeries) -> Result<RationalSeries> {
    let ring = qt_ring();
    s.map_into(&ring, &[qt_poly(&[(1, 1, 0)]), qt_poly(&[(1, 0, 2)])])
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoefficientMismatch {
    /// `(points, homological degree)`.
    pub degree: (i64, i64),
    pub expected: String,
    pub computed: String,
}

/// First coefficient where `table` and the expansion of `series` differ,
/// scanning all degrees `(p, h)` with `p <= order` in canonical order.
pub fn first_mismatch(
    series: &RationalSeries,
    table: &BTreeMap<(i64, i64), usize>,
    order: u32,
) -> Result<Option<CoefficientMismatch>> {
    let coeffs = coefficients(series, order)?;
    let mut keys: Vec<(i64, i64)> = coeffs.keys().chain(table.keys()).copied().collect();
    keys.sort_unstable();
    keys.dedup();
    for k in keys {
        let want = coeffs.get(&k).cloned().unwrap_or_else(ExactScalar::zero);
        let got = scalar::int(table.get(&k).copied().unwrap_or(0) as i64);
        if want != got {
            return Ok(Some(CoefficientMismatch {
                degree: k,
                expected: scalar::render(&want),
                computed: scalar::render(&got),
            }));
        }
    }
    Ok(None)
}

#[derive(Clone, Debug, Serialize)]
pub struct ConjectureReport {
    pub n: usize,
    pub d: u32,
    pub order: u32,
    /// `"match"` or `"mismatch"`.
    pub status: String,
    pub compared: usize,
    pub msv: String,
    pub first_mismatch: Option<CoefficientMismatch>,
}

/// MSV with `L ↦ t^2` against the quotient module, coefficientwise.
pub fn conjecture_vs_msv(n: usize, d: u32, order: u32) -> Result<ConjectureReport> {
    if !matches!((n, d), (2, 1) | (3, 1) | (2, 2)) {
        return Err(Error::OutOfRange(format!(
            "no comparison data for n={n}, d={d}"
        )));
    }
    let msv = poincare(&msv_assemble(&CurveSpec::known(n, d)?)?)?;
    let table = quotient_hilbert_table(&QuotientModuleSpec::new(n, d)?, order as i64)?;
    let first = first_mismatch(&msv, &table, order)?;
    Ok(ConjectureReport {
        n,
        d,
        order,
        status: if first.is_none() { "match" } else { "mismatch" }.into(),
        compared: table.len(),
        msv: msv.render(),
        first_mismatch: first,
    })
}

/// Slice dimensions of the `n = 3` subspace family in one curve degree.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SubspaceDims {
    pub ambient: usize,
    pub u: [usize; 3],
    pub u1_cap_u2: usize,
    pub u1_plus_u2: usize,
    pub u12_cap_u3: usize,
    pub total: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct SubspaceFamily {
    pub order: i64,
    pub slices: BTreeMap<(i64, i64), SubspaceDims>,
}

/// Generators of `U_i = (x_j - x_k) ℚ[x, y_j + y_k, y_i]` in `y`-degree `b`.
fn u_generators(ring: &Arc<Ring>, i: usize, b: i64) -> Vec<MultiPoly> {
    let (j, k) = match i {
        0 => (1, 2),
        1 => (0, 2),
        _ => (0, 1),
    };
    let v = |idx| MultiPoly::var(ring, idx);
    let lead = &v(j) - &v(k);
    let pair = &v(3 + j) + &v(3 + k);
    (0..=b)
        .map(|e| &(&lead * &pair.pow(e as u32)) * &v(3 + i).pow((b - e) as u32))
        .collect()
}

fn subspace_dims(ring: &Arc<Ring>, p: i64, h: i64) -> Result<SubspaceDims> {
    let Some(alg) = Bidegree::curve(p, h).to_algebraic() else {
        return Ok(SubspaceDims::default());
    };
    let b = alg.deg.1;
    let domain = SliceDomain::polynomial(ring, alg)?;
    let u: Vec<GradedSlice> = (0..3)
        .map(|i| domain.generated_by(&u_generators(ring, i, b), 0, Multipliers::XOnly))
        .collect::<Result<_>>()?;
    let sum12 = u[0].sum(&u[1])?;
    Ok(SubspaceDims {
        ambient: domain.basis()?.len(),
        u: [u[0].rank(), u[1].rank(), u[2].rank()],
        u1_cap_u2: u[0].intersect(&u[1])?.rank(),
        u1_plus_u2: sum12.rank(),
        u12_cap_u3: sum12.intersect(&u[2])?.rank(),
        total: sum12.sum(&u[2])?.rank(),
    })
}

/// Slicewise dimensions for every curve degree with `p <= order`.
pub fn grdim_subspace_family(order: i64) -> Result<SubspaceFamily> {
    let ring = Ring::polynomial_xy(3, false);
    let slices = curve_degrees(order)
        .par_iter()
        .map(|&(p, h)| Ok(((p, h), subspace_dims(&ring, p, h)?)))
        .collect::<Result<_>>()?;
    Ok(SubspaceFamily { order, slices })
}

/// The closed forms for `gr dim U_i`, `U_1 ∩ U_2`, `(U_1 + U_2) ∩ U_3`.
pub struct ClosedForms {
    pub u: RationalSeries,
    pub u1_cap_u2: RationalSeries,
    pub u12_cap_u3: RationalSeries,
}

impl ClosedForms {
    pub fn new() -> Result<Self> {
        let one_q = qt_poly(&[(1, 0, 0), (-1, 1, 0)]).pow(3);
        let one_qt = qt_poly(&[(1, 0, 0), (-1, 1, 2)]);
        Ok(Self {
            u: RationalSeries::new(qt_poly(&[(1, 1, 0)]), &one_q * &one_qt.pow(2))?,
            u1_cap_u2: RationalSeries::new(qt_poly(&[(1, 2, 0)]), &one_q * &one_qt)?,
            u12_cap_u3: RationalSeries::new(qt_poly(&[(1, 1, 0), (1, 4, 2)]), &one_q * &one_qt)?,
        })
    }

    /// `gr dim (U_1 + U_2 + U_3)` by inclusion–exclusion.
    pub fn total(&self) -> RationalSeries {
        let three = self.u.scale(&scalar::int(3));
        &(&three - &self.u1_cap_u2) - &self.u12_cap_u3
    }

    /// `gr dim V` for the quotient by `U_1 + U_2 + U_3`.
    pub fn quotient(&self) -> Result<RationalSeries> {
        let ambient = RationalSeries::new(
            qt_poly(&[(1, 0, 0)]),
            &qt_poly(&[(1, 0, 0), (-1, 1, 0)]).pow(3) * &qt_poly(&[(1, 0, 0), (-1, 1, 2)]).pow(3),
        )?;
        Ok(&ambient - &self.total())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curves::msv::series_ring;

    #[test]
    fn low_slices() {
        for n in 2..=3 {
            for d in 1..=2 {
                let spec = QuotientModuleSpec::new(n, d).unwrap();
                assert_eq!(
                    quotient_hilbert_slice(&spec, Bidegree::curve(0, 0)).unwrap(),
                    1
                );
                assert_eq!(
                    quotient_hilbert_slice(&spec, Bidegree::curve(1, 0)).unwrap(),
                    1
                );
                assert_eq!(
                    quotient_hilbert_slice(&spec, Bidegree::curve(1, 2)).unwrap(),
                    n
                );
            }
        }
    }

    #[test]
    fn two_points_degree_two() {
        for n in 2..=3 {
            let spec = QuotientModuleSpec::new(n, 1).unwrap();
            assert_eq!(
                quotient_hilbert_slice(&spec, Bidegree::curve(2, 2)).unwrap(),
                n + 1
            );
        }
    }

    #[test]
    fn odd_degrees_vanish() {
        let spec = QuotientModuleSpec::new(2, 1).unwrap();
        assert_eq!(
            quotient_hilbert_slice(&spec, Bidegree::curve(3, 1)).unwrap(),
            0
        );
    }

    #[test]
    fn u1_first_generator() {
        let f = grdim_subspace_family(1).unwrap();
        assert_eq!(f.slices[&(1, 0)].u[0], 1);
    }

    #[test]
    fn node_series() {
        let r = conjecture_vs_msv(2, 1, 4).unwrap();
        assert_eq!(r.status, "match", "{r:?}");
    }

    #[test]
    fn series_ring_is_separate() {
        assert_ne!(series_ring(), qt_ring());
    }
}
