//! Variable sets, monomials, the canonical monomial order and slice
//! enumeration.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// What a variable stands for. The role decides how it is graded.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Role {
    /// Group-algebra coordinate `x^λ` (degree (1,0)).
    X,
    /// Linear coordinate on the Lie algebra (degree (0,1)).
    Y,
    /// Loop rotation parameter (graded like `y`).
    T,
    /// Weyl-group component in the rank-one flag module (degree 0).
    S,
    /// Abstract series variable (q, L, Q, T, A, ...).
    Formal,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Var {
    pub name: String,
    pub role: Role,
    pub laurent: bool,
}

impl Var {
    pub fn new(name: impl Into<String>, role: Role, laurent: bool) -> Self {
        Self {
            name: name.into(),
            role,
            laurent,
        }
    }
}

/// An ordered tuple of variables. Rings are shared through `Arc`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Ring {
    vars: Vec<Var>,
}

impl Ring {
    pub fn new(vars: Vec<Var>) -> Arc<Self> {
        Arc::new(Self { vars })
    }

    /// `x1..xn, y1..yn` (plus `t` if asked) with all exponents nonnegative.
    pub fn polynomial_xy(n: usize, with_t: bool) -> Arc<Self> {
        Self::xy(n, false, false, with_t)
    }

    /// `x1^±..xr^±, y1..yr`.
    pub fn laurent_x(r: usize) -> Arc<Self> {
        Self::xy(r, true, false, false)
    }

    /// `x^±` and `y^±` both Laurent (K-theory).
    pub fn doubly_laurent(r: usize) -> Arc<Self> {
        Self::xy(r, true, true, false)
    }

    pub fn xy(n: usize, x_laurent: bool, y_laurent: bool, with_t: bool) -> Arc<Self> {
        let single = n == 1;
        let name = |p: &str, i: usize| {
            if single {
                p.to_string()
            } else {
                format!("{p}{}", i + 1)
            }
        };
        let mut vars: Vec<Var> = (0..n)
            .map(|i| Var::new(name("x", i), Role::X, x_laurent))
            .collect();
        vars.extend((0..n).map(|i| Var::new(name("y", i), Role::Y, y_laurent)));
        if with_t {
            vars.push(Var::new("t", Role::T, false));
        }
        Self::new(vars)
    }

    /// Formal variables, Laurent when the name is listed in `laurent`.
    pub fn formal(names: &[&str], laurent: &[&str]) -> Arc<Self> {
        Self::new(
            names
                .iter()
                .map(|n| Var::new(*n, Role::Formal, laurent.contains(n)))
                .collect(),
        )
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn vars(&self) -> &[Var] {
        &self.vars
    }

    pub fn var(&self, i: usize) -> &Var {
        &self.vars[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v.name == name)
    }

    pub fn indices_with_role(&self, role: Role) -> Vec<usize> {
        (0..self.vars.len())
            .filter(|&i| self.vars[i].role == role)
            .collect()
    }

    pub fn names(&self) -> Vec<String> {
        self.vars.iter().map(|v| v.name.clone()).collect()
    }

    pub fn has_laurent(&self) -> bool {
        self.vars.iter().any(|v| v.laurent)
    }

    pub fn laurent_indices(&self) -> Vec<usize> {
        (0..self.vars.len())
            .filter(|&i| self.vars[i].laurent)
            .collect()
    }
}

pub fn same_ring(a: &Arc<Ring>, b: &Arc<Ring>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

/// Exponent vector. Ordered by total degree (ascending) and, within one
/// degree, lexicographically with the larger exponent on the earliest
/// variable coming first. For `x1,x2,y1,y2` in degree (1,1) this lists
/// `x1y1, x1y2, x2y1, x2y2`; for one Laurent variable it lists
/// `x^-1, 1, x`. The order is multiplicative, so the maximum is a valid
/// leading term for division.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Monomial(pub Vec<i32>);

impl Monomial {
    pub fn one(n: usize) -> Self {
        Self(vec![0; n])
    }

    pub fn unit(n: usize, i: usize, e: i32) -> Self {
        let mut v = vec![0; n];
        v[i] = e;
        Self(v)
    }

    pub fn degree(&self) -> i64 {
        self.0.iter().map(|&e| e as i64).sum()
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `self / other` if every exponent stays nonnegative where `allow_neg` is false.
    pub fn div(&self, other: &Self, allow_neg: impl Fn(usize) -> bool) -> Option<Self> {
        let mut out = Vec::with_capacity(self.0.len());
        for (i, (a, b)) in self.0.iter().zip(&other.0).enumerate() {
            let e = a - b;
            if e < 0 && !allow_neg(i) {
                return None;
            }
            out.push(e);
        }
        Some(Self(out))
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn render(&self, ring: &Ring) -> String {
        let mut parts = Vec::new();
        for (i, &e) in self.0.iter().enumerate() {
            match e {
                0 => {}
                1 => parts.push(ring.var(i).name.clone()),
                _ => parts.push(format!("{}^{}", ring.var(i).name, e)),
            }
        }
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join("*")
        }
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| {
            for (a, b) in self.0.iter().zip(&other.0) {
                if a != b {
                    return b.cmp(a);
                }
            }
            self.0.len().cmp(&other.0.len())
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// How degrees are assigned to `x` and `y` variables.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Convention {
    /// `deg x = (1,0)`, `deg y = (0,1)`.
    Algebraic,
    /// `deg x = (1,0)`, `deg y = (1,2)`: (number of points, homological degree).
    Curve,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Bidegree {
    pub convention: Convention,
    pub deg: (i64, i64),
}

impl Bidegree {
    pub fn algebraic(a: i64, b: i64) -> Self {
        Self {
            convention: Convention::Algebraic,
            deg: (a, b),
        }
    }

    pub fn curve(p: i64, h: i64) -> Self {
        Self {
            convention: Convention::Curve,
            deg: (p, h),
        }
    }

    /// The same slice in the algebraic convention, if it exists.
    pub fn to_algebraic(self) -> Option<Self> {
        match self.convention {
            Convention::Algebraic => Some(self),
            Convention::Curve => {
                let (p, h) = self.deg;
                if h % 2 != 0 || p < h / 2 {
                    return None;
                }
                Some(Self::algebraic(p - h / 2, h / 2))
            }
        }
    }

    pub fn of(convention: Convention, ring: &Ring, m: &Monomial) -> Self {
        let (mut a, mut b) = (0i64, 0i64);
        for (i, &e) in m.0.iter().enumerate() {
            match ring.var(i).role {
                Role::X => a += e as i64,
                Role::Y | Role::T => b += e as i64,
                Role::S | Role::Formal => {}
            }
        }
        let deg = match convention {
            Convention::Algebraic => (a, b),
            Convention::Curve => (a + b, 2 * b),
        };
        Self { convention, deg }
    }
}

/// A box of allowed exponents on the Laurent variables of a ring, listed in
/// ring order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Window {
    pub lo: Vec<i32>,
    pub hi: Vec<i32>,
}

impl Window {
    pub fn new(lo: Vec<i32>, hi: Vec<i32>) -> Self {
        assert_eq!(lo.len(), hi.len());
        Self { lo, hi }
    }

    pub fn cube(dim: usize, lo: i32, hi: i32) -> Self {
        Self::new(vec![lo; dim], vec![hi; dim])
    }

    pub fn dim(&self) -> usize {
        self.lo.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lo.iter().zip(&self.hi).any(|(l, h)| l > h)
    }

    pub fn enlarge(&self, m: i32) -> Self {
        Self::new(
            self.lo.iter().map(|l| l - m).collect(),
            self.hi.iter().map(|h| h + m).collect(),
        )
    }

    pub fn translate(&self, by: &[i32]) -> Self {
        Self::new(
            self.lo.iter().zip(by).map(|(l, b)| l + b).collect(),
            self.hi.iter().zip(by).map(|(h, b)| h + b).collect(),
        )
    }

    pub fn contains(&self, p: &[i32]) -> bool {
        p.iter()
            .zip(self.lo.iter().zip(&self.hi))
            .all(|(x, (l, h))| l <= x && x <= h)
    }

    /// Every lattice point of the box, first coordinate varying slowest.
    pub fn points(&self) -> Vec<Vec<i32>> {
        let mut out = vec![Vec::new()];
        for (l, h) in self.lo.iter().zip(&self.hi) {
            let mut next = Vec::new();
            for p in &out {
                for v in *l..=*h {
                    let mut q = p.clone();
                    q.push(v);
                    next.push(q);
                }
            }
            out = next;
        }
        out
    }

    pub fn contains_monomial(&self, ring: &Ring, m: &Monomial) -> bool {
        let idx = ring.laurent_indices();
        let p: Vec<i32> = idx.iter().map(|&i| m.0[i]).collect();
        self.contains(&p)
    }
}

/// All exponent vectors of length `k` with nonnegative entries summing to `total`.
pub fn compositions(total: i64, k: usize) -> Vec<Vec<i32>> {
    if k == 0 {
        return if total == 0 { vec![vec![]] } else { vec![] };
    }
    if total < 0 {
        return vec![];
    }
    let mut out = Vec::new();
    for first in (0..=total).rev() {
        for mut rest in compositions(total - first, k - 1) {
            rest.insert(0, first as i32);
            out.push(rest);
        }
    }
    out
}

/// Every monomial of `ring` in the slice `deg`, in canonical order.
///
/// Laurent variables are enumerated over `window` (whose coordinates are the
/// ring's Laurent variables in order); for them the corresponding degree
/// component is not imposed, since a windowed slice collects every exponent
/// in the box. Polynomial variables are graded by `deg`. Variables of role
/// `S` range over `{0, 1}` and formal variables must be absent.
pub fn slice_monomials(
    ring: &Ring,
    deg: &Bidegree,
    window: Option<&Window>,
) -> Result<Vec<Monomial>> {
    let laurent = ring.laurent_indices();
    if let Some(&i) = laurent.first() {
        let Some(w) = window else {
            return Err(Error::Unbounded(ring.var(i).name.clone()));
        };
        if w.dim() != laurent.len() {
            return Err(Error::Invalid(format!(
                "window has {} coordinates but the ring has {} Laurent variables",
                w.dim(),
                laurent.len()
            )));
        }
    }
    let alg = deg
        .to_algebraic()
        .ok_or_else(|| Error::Invalid(format!("no monomials in {deg:?}")))?;
    let (a, b) = alg.deg;
    let n = ring.nvars();
    let poly_x: Vec<usize> = ring
        .indices_with_role(Role::X)
        .into_iter()
        .filter(|&i| !ring.var(i).laurent)
        .collect();
    let poly_y: Vec<usize> = (0..n)
        .filter(|&i| matches!(ring.var(i).role, Role::Y | Role::T) && !ring.var(i).laurent)
        .collect();
    let s_vars = ring.indices_with_role(Role::S);
    if (0..n).any(|i| ring.var(i).role == Role::Formal) {
        return Err(Error::Invalid(
            "slices of formal-variable rings are not graded".into(),
        ));
    }
    let x_laurent = laurent.iter().any(|&i| ring.var(i).role == Role::X);
    let y_laurent = laurent.iter().any(|&i| ring.var(i).role != Role::X);
    let x_parts = if x_laurent && poly_x.is_empty() {
        vec![vec![]]
    } else {
        compositions(a, poly_x.len())
    };
    let y_parts = if y_laurent && poly_y.is_empty() {
        vec![vec![]]
    } else {
        compositions(b, poly_y.len())
    };
    let l_parts = match window {
        Some(w) if !laurent.is_empty() => w.points(),
        _ => vec![vec![]],
    };
    let s_parts = compositions_01(s_vars.len());

    let mut out = Vec::new();
    for xp in &x_parts {
        for yp in &y_parts {
            for lp in &l_parts {
                for sp in &s_parts {
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
                    for (k, &i) in s_vars.iter().enumerate() {
                        e[i] = sp[k];
                    }
                    out.push(Monomial(e));
                }
            }
        }
    }
    out.sort();
    out.dedup();
    Ok(out)
}

/// Union of several slices, in canonical order.
pub fn slice_monomials_in(
    ring: &Ring,
    degs: &[Bidegree],
    window: Option<&Window>,
) -> Result<Vec<Monomial>> {
    let mut out = Vec::new();
    for d in degs {
        out.extend(slice_monomials(ring, d, window)?);
    }
    out.sort();
    out.dedup();
    Ok(out)
}

fn compositions_01(k: usize) -> Vec<Vec<i32>> {
    (0..1usize << k)
        .map(|mask| (0..k).map(|i| ((mask >> (k - 1 - i)) & 1) as i32).collect())
        .collect()
}

impl fmt::Display for Bidegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.deg.0, self.deg.1)
    }
}
