//! Component ideals of the arrangement, their powers, and the symbolic
//! power `J^(d)` as an intersection over components.

use std::sync::Arc;

use rayon::prelude::*;
use serde::Serialize;

use super::domain::{stabilize, SliceDomain, WindowPolicy, WindowedSlice};
use crate::error::{Error, Result};
use crate::exactalg::{GradedSlice, MultiPoly, Ring, Role, Var};
use crate::rootdata::RootDatum;

/// Which ring an ideal lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Ambient {
    /// `ℚ[x, y]`, the type A positive part.
    Polynomial,
    /// `ℚ[Λ] ⊗ ℚ[y]`.
    LaurentX,
    /// `ℚ[Λ] ⊗ ℚ[Y]`, both Laurent (K-theory).
    DoublyLaurent,
    /// `ℚ[W̃] ⊗ ℚ[y]` in rank one: `x^±`, a Weyl coordinate `s`, and `y`.
    Flag,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    /// `⟨x_i - x_j, y_i - y_j⟩` (0-based indices).
    PairDiagonal { i: usize, j: usize },
    /// `⟨y_α, 1 - x^{α∨}⟩` for the positive root with this index.
    Root { alpha: usize },
    /// `⟨1 - y^α, 1 - x^{α∨}⟩`.
    KTheory { alpha: usize },
    /// Generated by the diagonal alternants.
    Alternant,
    /// `{1 - s, 1 - x, y}`.
    FlagRank1,
}

#[derive(Clone, Debug)]
pub struct IdealSpec {
    pub ring: Arc<Ring>,
    pub ambient: Ambient,
    pub family: Family,
    pub d: u32,
    /// Needed for `Root` and `KTheory`.
    pub datum: Option<RootDatum>,
}

/// `x^±, s, y` for the rank-one flag module.
pub fn flag_ring() -> Arc<Ring> {
    Ring::new(vec![
        Var::new("x", Role::X, true),
        Var::new("s", Role::S, false),
        Var::new("y", Role::Y, false),
    ])
}

impl IdealSpec {
    pub fn pair(n: usize, i: usize, j: usize, d: u32) -> Result<Self> {
        if i >= n || j >= n || i == j {
            return Err(Error::OutOfRange(format!("pair ({i},{j}) for n = {n}")));
        }
        Ok(Self {
            ring: Ring::polynomial_xy(n, false),
            ambient: Ambient::Polynomial,
            family: Family::PairDiagonal { i, j },
            d,
            datum: None,
        })
    }

    pub fn root(rd: &RootDatum, alpha: usize, d: u32) -> Result<Self> {
        Self::check_root(rd, alpha)?;
        Ok(Self {
            ring: rd.laurent_ring(),
            ambient: Ambient::LaurentX,
            family: Family::Root { alpha },
            d,
            datum: Some(rd.clone()),
        })
    }

    pub fn ktheory(rd: &RootDatum, alpha: usize, d: u32) -> Result<Self> {
        Self::check_root(rd, alpha)?;
        Ok(Self {
            ring: Ring::doubly_laurent(rd.rank),
            ambient: Ambient::DoublyLaurent,
            family: Family::KTheory { alpha },
            d,
            datum: Some(rd.clone()),
        })
    }

    pub fn alternant(n: usize, d: u32) -> Self {
        Self {
            ring: Ring::polynomial_xy(n, false),
            ambient: Ambient::Polynomial,
            family: Family::Alternant,
            d,
            datum: None,
        }
    }

    pub fn flag_rank1() -> Self {
        Self {
            ring: flag_ring(),
            ambient: Ambient::Flag,
            family: Family::FlagRank1,
            d: 1,
            datum: None,
        }
    }

    fn check_root(rd: &RootDatum, alpha: usize) -> Result<()> {
        if alpha >= rd.num_positive() {
            return Err(Error::OutOfRange(format!("root {alpha} of {}", rd.label)));
        }
        Ok(())
    }

    /// Whether the family makes sense in the ambient ring.
    pub fn validate(&self) -> Result<()> {
        let ok = matches!(
            (&self.family, self.ambient),
            (
                Family::PairDiagonal { .. } | Family::Alternant,
                Ambient::Polynomial
            ) | (Family::Root { .. }, Ambient::LaurentX)
                | (Family::KTheory { .. }, Ambient::DoublyLaurent)
                | (Family::FlagRank1, Ambient::Flag)
        );
        if !ok {
            return Err(Error::Invalid(format!(
                "{:?} does not live in {:?}",
                self.family, self.ambient
            )));
        }
        Ok(())
    }

    /// The two generators `g1, g2` of a two-generator component ideal.
    pub fn pair_generators(&self) -> Result<(MultiPoly, MultiPoly)> {
        let r = &self.ring;
        let one = MultiPoly::one(r);
        match &self.family {
            Family::PairDiagonal { i, j } => {
                let n = r.nvars() / 2;
                let g1 = &MultiPoly::var(r, *i) - &MultiPoly::var(r, *j);
                let g2 = &MultiPoly::var(r, n + i) - &MultiPoly::var(r, n + j);
                Ok((g1, g2))
            }
            Family::Root { alpha } => {
                let rd = self.datum.as_ref().expect("root spec carries its datum");
                let xa = rd.x_power(r, &rd.roots[*alpha].coroot);
                Ok((rd.y_form(r, *alpha), &one - &xa))
            }
            Family::KTheory { alpha } => {
                let rd = self.datum.as_ref().expect("root spec carries its datum");
                let xa = rd.x_power(r, &rd.roots[*alpha].coroot);
                Ok((&one - &rd.y_character(r, *alpha), &one - &xa))
            }
            other => Err(Error::Invalid(format!(
                "{other:?} is not a two-generator ideal"
            ))),
        }
    }

    /// Generators of the `d`-th power: `g1^e1 g2^e2` with `e1 + e2 = d`.
    /// For the flag family, the three module generators.
    pub fn power_generators(&self) -> Result<Vec<MultiPoly>> {
        self.validate()?;
        if self.family == Family::FlagRank1 {
            let r = &self.ring;
            let one = MultiPoly::one(r);
            return Ok(vec![
                &one - &MultiPoly::named(r, "s"),
                &one - &MultiPoly::named(r, "x"),
                MultiPoly::named(r, "y"),
            ]);
        }
        if self.family == Family::Alternant {
            return Err(Error::Invalid(
                "alternant powers are computed by AlternantIdeal".into(),
            ));
        }
        let (g1, g2) = self.pair_generators()?;
        Ok((0..=self.d)
            .map(|e1| &g1.pow(e1) * &g2.pow(self.d - e1))
            .collect())
    }
}

/// The `d`-th power of one component ideal, in `domain`.
pub fn ideal_power_slice(
    spec: &IdealSpec,
    domain: &SliceDomain,
    policy: &WindowPolicy,
) -> Result<WindowedSlice> {
    if !crate::exactalg::ring::same_ring(&spec.ring, &domain.ring) {
        return Err(Error::RingMismatch(format!(
            "{:?} vs {:?}",
            spec.ring.names(),
            domain.ring.names()
        )));
    }
    let gens = spec.power_generators()?;
    stabilize(domain.window.is_some(), spec.d, policy, |m| {
        domain.generated(&gens, m)
    })
}

/// Component ideals of `J^(d)` for the ring of `domain`: diagonal pairs in
/// a polynomial ring, roots in a Laurent one, characters when `y` is Laurent.
pub fn components(rd: &RootDatum, d: u32, domain: &SliceDomain) -> Result<Vec<IdealSpec>> {
    let ring = &domain.ring;
    let y_laurent = ring.vars().iter().any(|v| v.role == Role::Y && v.laurent);
    let mut out = Vec::new();
    if !ring.has_laurent() {
        if !rd.label.starts_with("GL") {
            return Err(Error::UnsupportedDatum(format!(
                "polynomial positive part needs GL_n, got {}",
                rd.label
            )));
        }
        let n = rd.rank;
        for i in 0..n {
            for j in i + 1..n {
                out.push(IdealSpec::pair(n, i, j, d)?);
            }
        }
    } else {
        for a in 0..rd.num_positive() {
            out.push(if y_laurent {
                IdealSpec::ktheory(rd, a, d)?
            } else {
                IdealSpec::root(rd, a, d)?
            });
        }
    }
    for c in &out {
        if !crate::exactalg::ring::same_ring(&c.ring, ring) {
            return Err(Error::RingMismatch(format!(
                "{:?} vs {:?}",
                c.ring.names(),
                ring.names()
            )));
        }
    }
    Ok(out)
}

/// `J^(d) = ⋂_α J_α^d` in `domain`. In a windowed domain the whole
/// intersection is recomputed at each margin until its rank settles.
/// `d = 0` gives the full slice.
pub fn jd_slice(
    rd: &RootDatum,
    d: u32,
    domain: &SliceDomain,
    policy: &WindowPolicy,
) -> Result<WindowedSlice> {
    let comps = components(rd, d, domain)?;
    let gens: Vec<Vec<MultiPoly>> = comps
        .iter()
        .map(|c| c.power_generators())
        .collect::<Result<_>>()?;
    let basis = domain.basis()?;
    stabilize(domain.window.is_some(), d, policy, |m| {
        if d == 0 {
            return Ok(GradedSlice::full(&basis));
        }
        let parts: Vec<GradedSlice> = gens
            .par_iter()
            .map(|g| domain.generated(g, m))
            .collect::<Result<_>>()?;
        let mut acc = GradedSlice::full(&basis);
        for p in &parts {
            acc = acc.intersect(p)?;
        }
        Ok(acc)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{Bidegree, Window};
    use crate::rootdata::{build_root_datum, Label};

    fn gl(n: usize) -> RootDatum {
        build_root_datum(Label::GL, Some(n)).unwrap()
    }

    #[test]
    fn pair_power_slices() {
        let spec = IdealSpec::pair(2, 0, 1, 1).unwrap();
        let dom = SliceDomain::polynomial(&spec.ring, Bidegree::algebraic(1, 0)).unwrap();
        let s = ideal_power_slice(&spec, &dom, &WindowPolicy::default()).unwrap();
        assert_eq!(s.rank(), 1);
        assert_eq!(s.slice.row_polys()[0].render(), "x1 - x2");
        let dom = SliceDomain::polynomial(&spec.ring, Bidegree::algebraic(1, 1)).unwrap();
        assert_eq!(
            ideal_power_slice(&spec, &dom, &WindowPolicy::default())
                .unwrap()
                .rank(),
            3
        );
    }

    #[test]
    fn sl2_root_slice() {
        let rd = build_root_datum(Label::SL, Some(2)).unwrap();
        let spec = IdealSpec::root(&rd, 0, 1).unwrap();
        let dom = SliceDomain::windowed(&spec.ring, &[0, 1], &Window::cube(1, 0, 1));
        let s = ideal_power_slice(&spec, &dom, &WindowPolicy::default()).unwrap();
        assert_eq!(s.rank(), 3);
        assert_eq!(s.status, super::super::domain::Status::Stabilized);
        let y = MultiPoly::named(&spec.ring, "y");
        let x = MultiPoly::named(&spec.ring, "x");
        assert!(s.slice.contains_poly(&y).unwrap());
        assert!(s.slice.contains_poly(&(&x * &y)).unwrap());
        assert!(s
            .slice
            .contains_poly(&(&MultiPoly::one(&spec.ring) - &x))
            .unwrap());
    }

    #[test]
    fn jd_examples() {
        let r = Ring::polynomial_xy(2, false);
        let dom = SliceDomain::polynomial(&r, Bidegree::algebraic(2, 0)).unwrap();
        let s = jd_slice(&gl(2), 2, &dom, &WindowPolicy::default()).unwrap();
        assert_eq!(s.rank(), 1);
        let x = &MultiPoly::named(&r, "x1") - &MultiPoly::named(&r, "x2");
        assert!(s.slice.contains_poly(&x.pow(2)).unwrap());
    }

    #[test]
    fn validation() {
        let mut spec = IdealSpec::pair(2, 0, 1, 1).unwrap();
        spec.ambient = Ambient::LaurentX;
        assert!(spec.validate().is_err());
        assert!(IdealSpec::pair(2, 1, 1, 1).is_err());
    }
}
