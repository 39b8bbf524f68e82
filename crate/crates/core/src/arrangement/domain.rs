//! Where a slice lives (ring, degrees, optional window) and how submodules
//! generated by polynomials are cut down to it.
//!
//! In Laurent rings a graded piece is infinite-dimensional in `x`, so the
//! span of `g · x^μ · y^β` is formed over the window enlarged by a margin
//! and then intersected with the polynomials supported in the window. The
//! result can only grow with the margin; it is reported as stabilized once
//! one more margin step leaves the rank unchanged.

use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactalg::ring::compositions;
use crate::exactalg::{
    Bidegree, GradedSlice, Monomial, MonomialBasis, MultiPoly, Ring, Role, SparseVec, Window,
};

/// Which monomials multiply the generators.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Multipliers {
    /// Every monomial without a Weyl component.
    All,
    /// Monomials in the `x` variables only (a `ℚ[Λ]`- or `ℚ[x]`-span); the
    /// `y`-degree of each generator is kept.
    XOnly,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SliceDomain {
    pub ring: Arc<Ring>,
    /// Algebraic bidegrees; components carried by Laurent variables are ignored.
    pub degs: Vec<Bidegree>,
    pub window: Option<Window>,
}

/// Degree of a monomial counted on polynomial variables only.
pub fn graded_degree(ring: &Ring, m: &Monomial) -> (i64, i64) {
    let (mut a, mut b) = (0, 0);
    for (i, &e) in m.0.iter().enumerate() {
        let v = ring.var(i);
        if v.laurent {
            continue;
        }
        match v.role {
            Role::X => a += e as i64,
            Role::Y | Role::T => b += e as i64,
            _ => {}
        }
    }
    (a, b)
}

impl SliceDomain {
    pub fn polynomial(ring: &Arc<Ring>, deg: Bidegree) -> Result<Self> {
        let deg = deg
            .to_algebraic()
            .ok_or_else(|| Error::Invalid(format!("empty slice {deg:?}")))?;
        if ring.has_laurent() {
            return Err(Error::Unbounded(
                ring.var(ring.laurent_indices()[0]).name.clone(),
            ));
        }
        Ok(Self {
            ring: ring.clone(),
            degs: vec![deg],
            window: None,
        })
    }

    /// All `y`-degrees in `y_degs`, every Laurent exponent in `window`.
    pub fn windowed(ring: &Arc<Ring>, y_degs: &[i64], window: &Window) -> Self {
        Self {
            ring: ring.clone(),
            degs: y_degs.iter().map(|&b| Bidegree::algebraic(0, b)).collect(),
            window: Some(window.clone()),
        }
    }

    pub fn basis(&self) -> Result<Arc<MonomialBasis>> {
        let monos = crate::exactalg::ring::slice_monomials_in(
            &self.ring,
            &self.degs,
            self.window.as_ref(),
        )?;
        Ok(MonomialBasis::new(&self.ring, monos))
    }

    pub fn enlarged(&self, m: i32) -> Self {
        Self {
            ring: self.ring.clone(),
            degs: self.degs.clone(),
            window: self.window.as_ref().map(|w| w.enlarge(m)),
        }
    }

    fn x_graded(&self) -> bool {
        self.ring
            .vars()
            .iter()
            .any(|v| v.role == Role::X && !v.laurent)
    }

    /// Monomials `m` (no Weyl component) with `g · m` inside the domain.
    pub fn multipliers(&self, g: &MultiPoly) -> Result<Vec<Monomial>> {
        self.multipliers_in(g, Multipliers::All)
    }

    fn multipliers_in(&self, g: &MultiPoly, kind: Multipliers) -> Result<Vec<Monomial>> {
        let ring = &self.ring;
        let Some((first, _)) = g.trailing() else {
            return Ok(vec![]);
        };
        let gd = graded_degree(ring, first);
        if g.terms().keys().any(|m| graded_degree(ring, m) != gd) {
            return Err(Error::Invalid(format!("generator {g} is not homogeneous")));
        }
        let n = ring.nvars();
        let poly_x: Vec<usize> = (0..n)
            .filter(|&i| ring.var(i).role == Role::X && !ring.var(i).laurent)
            .collect();
        let poly_y: Vec<usize> = (0..n)
            .filter(|&i| matches!(ring.var(i).role, Role::Y | Role::T) && !ring.var(i).laurent)
            .collect();
        let laurent = ring.laurent_indices();
        let boxes: Vec<Vec<i32>> = match &self.window {
            Some(w) if !laurent.is_empty() => {
                let lo: Vec<i32> = laurent
                    .iter()
                    .enumerate()
                    .map(|(c, &i)| w.lo[c] - g.min_degree_in(i).unwrap())
                    .collect();
                let hi: Vec<i32> = laurent
                    .iter()
                    .enumerate()
                    .map(|(c, &i)| w.hi[c] - g.degree_in(i).unwrap())
                    .collect();
                Window::new(lo, hi).points()
            }
            _ => vec![vec![]],
        };
        let mut out = Vec::new();
        for deg in &self.degs {
            let (a, b) = deg.deg;
            if kind == Multipliers::XOnly && b != gd.1 {
                continue;
            }
            let xs = if self.x_graded() {
                compositions(a - gd.0, poly_x.len())
            } else {
                vec![vec![]]
            };
            let ys = if poly_y.is_empty() {
                if b == gd.1 {
                    vec![vec![]]
                } else {
                    vec![]
                }
            } else {
                compositions(b - gd.1, poly_y.len())
            };
            for xp in &xs {
                for yp in &ys {
                    if kind == Multipliers::XOnly && yp.iter().any(|&e| e != 0) {
                        continue;
                    }
                    for lp in &boxes {
                        let mut e = vec![0i32; n];
                        for (k, &i) in poly_x.iter().enumerate() {
                            e[i] = xp[k];
                        }
                        for (k, &i) in poly_y.iter().enumerate() {
                            e[i] = yp[k];
                        }
                        for (k, &i) in laurent.iter().enumerate() {
                            e[i] = lp[k];
                        }
                        out.push(Monomial(e));
                    }
                }
            }
        }
        Ok(out)
    }

    /// Coordinates of every `g · m` inside this domain.
    pub fn generated_vectors(
        &self,
        basis: &MonomialBasis,
        gens: &[MultiPoly],
        kind: Multipliers,
    ) -> Result<Vec<SparseVec>> {
        let mut out = Vec::new();
        for g in gens {
            for m in self.multipliers_in(g, kind)? {
                let p = g.mul_monomial(&m);
                out.push(basis.coords(&p)?);
            }
        }
        Ok(out)
    }

    /// The submodule generated by `gens` (multiplied by monomials free of
    /// Weyl components), exactly in a polynomial domain, or formed at
    /// `margin` and restricted in a windowed one.
    pub fn generated(&self, gens: &[MultiPoly], margin: i32) -> Result<GradedSlice> {
        self.generated_by(gens, margin, Multipliers::All)
    }

    pub fn generated_by(
        &self,
        gens: &[MultiPoly],
        margin: i32,
        kind: Multipliers,
    ) -> Result<GradedSlice> {
        let basis = self.basis()?;
        if self.window.is_none() {
            return Ok(GradedSlice::span(
                &basis,
                self.generated_vectors(&basis, gens, kind)?,
            ));
        }
        let big_dom = self.enlarged(margin);
        let big = big_dom.basis()?;
        let vs = big_dom.generated_vectors(&big, gens, kind)?;
        Ok(GradedSlice::span_restricted(&basis, &big, vs))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    /// No window involved.
    Exact,
    /// Rank unchanged under one more margin step.
    Stabilized,
    /// Still growing at the largest allowed margin.
    Inconclusive,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct WindowPolicy {
    /// Starting margin; defaults to `2d` (never below `d`).
    pub margin: Option<i32>,
    pub max_margin: Option<i32>,
}

impl Default for WindowPolicy {
    fn default() -> Self {
        Self {
            margin: None,
            max_margin: None,
        }
    }
}

impl WindowPolicy {
    pub fn with_margin(m: i32) -> Self {
        Self {
            margin: Some(m),
            max_margin: None,
        }
    }

    pub fn start(&self, d: u32) -> i32 {
        self.margin.unwrap_or(2 * d as i32).max(d as i32)
    }

    pub fn limit(&self, d: u32) -> i32 {
        self.max_margin
            .unwrap_or(self.start(d) + 2 * d as i32 + 4)
            .max(self.start(d) + 1)
    }
}

#[derive(Clone, Debug)]
pub struct WindowedSlice {
    pub slice: GradedSlice,
    pub status: Status,
    pub margin: i32,
    /// `(margin, rank)` for every margin tried.
    pub history: Vec<(i32, usize)>,
}

impl WindowedSlice {
    pub fn exact(slice: GradedSlice) -> Self {
        let r = slice.rank();
        Self {
            slice,
            status: Status::Exact,
            margin: 0,
            history: vec![(0, r)],
        }
    }

    pub fn rank(&self) -> usize {
        self.slice.rank()
    }
}

/// Evaluates `f` at growing margins until the rank stops changing.
pub fn stabilize(
    windowed: bool,
    d: u32,
    policy: &WindowPolicy,
    f: impl Fn(i32) -> Result<GradedSlice>,
) -> Result<WindowedSlice> {
    if !windowed {
        return Ok(WindowedSlice::exact(f(0)?));
    }
    let (start, limit) = (policy.start(d), policy.limit(d));
    let mut m = start;
    let mut cur = f(m)?;
    let mut history = vec![(m, cur.rank())];
    while m < limit {
        let next = f(m + 1)?;
        history.push((m + 1, next.rank()));
        if next.rank() == cur.rank() {
            return Ok(WindowedSlice {
                slice: cur,
                status: Status::Stabilized,
                margin: m,
                history,
            });
        }
        m += 1;
        cur = next;
    }
    Ok(WindowedSlice {
        slice: cur,
        status: Status::Inconclusive,
        margin: m,
        history,
    })
}
