//! Slicewise inclusion checks: Weyl alternants inside `J^(d)`, and the
//! multiplicativity `J^(d1) · J^(d2) ⊆ J^(d1+d2)`.

use std::collections::BTreeSet;
use std::sync::Arc;

use rayon::prelude::*;
use serde::Serialize;

use super::domain::{SliceDomain, Status, WindowPolicy};
use super::ideals::jd_slice;
use crate::error::{Error, Result};
use crate::exactalg::ring::compositions;
use crate::exactalg::{scalar, Bidegree, MultiPoly, Ring, Role, Window};
use crate::rootdata::{IntMatrix, RootDatum};

#[derive(Clone, Debug, Serialize)]
pub struct InclusionReport {
    pub pass: bool,
    /// Number of elements tested.
    pub checked: usize,
    /// Worst stabilization status among the target slices.
    pub status: Status,
    /// First element found outside the target, rendered.
    pub failure: Option<String>,
}

fn worse(a: Status, b: Status) -> Status {
    use Status::*;
    match (a, b) {
        (Inconclusive, _) | (_, Inconclusive) => Inconclusive,
        (Stabilized, _) | (_, Stabilized) => Stabilized,
        _ => Exact,
    }
}

fn det(m: &IntMatrix) -> i64 {
    let n = m.len();
    if n == 1 {
        return m[0][0];
    }
    (0..n)
        .map(|c| {
            let minor: IntMatrix = m[1..]
                .iter()
                .map(|row| {
                    row.iter()
                        .enumerate()
                        .filter(|&(j, _)| j != c)
                        .map(|(_, &v)| v)
                        .collect()
                })
                .collect();
            let s = if c % 2 == 0 { 1 } else { -1 };
            s * m[0][c] * det(&minor)
        })
        .sum()
}

fn mat_mul(a: &IntMatrix, b: &IntMatrix) -> IntMatrix {
    let n = b[0].len();
    a.iter()
        .map(|row| {
            (0..n)
                .map(|j| row.iter().zip(b).map(|(x, br)| x * br[j]).sum())
                .collect()
        })
        .collect()
}

/// The Weyl group as pairs (action on the lattice, action on root
/// coordinates of `y`), with signs.
pub fn weyl_pairs(rd: &RootDatum) -> Vec<(IntMatrix, IntMatrix, i64)> {
    let r = rd.rank;
    let id: IntMatrix = (0..r)
        .map(|i| (0..r).map(|j| i64::from(i == j)).collect())
        .collect();
    let gens: Vec<(IntMatrix, IntMatrix)> = (0..rd.num_positive())
        .map(|i| {
            let cols: Vec<Vec<i64>> = (0..r)
                .map(|j| rd.reflect_root(i, &(0..r).map(|k| i64::from(k == j)).collect::<Vec<_>>()))
                .collect();
            let n: IntMatrix = (0..r)
                .map(|row| (0..r).map(|col| cols[col][row]).collect())
                .collect();
            (rd.reflection(i), n)
        })
        .collect();
    let mut seen: BTreeSet<(IntMatrix, IntMatrix)> = BTreeSet::new();
    seen.insert((id.clone(), id.clone()));
    let mut frontier = vec![(id.clone(), id)];
    while let Some((m, n)) = frontier.pop() {
        for (gm, gn) in &gens {
            let h = (mat_mul(gm, &m), mat_mul(gn, &n));
            if seen.insert(h.clone()) {
                frontier.push(h);
            }
        }
    }
    seen.into_iter()
        .map(|(m, n)| {
            let s = det(&m);
            (m, n, s)
        })
        .collect()
}

/// `w · x^λ y^b` with `y_i ↦ Σ_j N[j][i] y_j`.
fn act(ring: &Arc<Ring>, m: &IntMatrix, n: &IntMatrix, lam: &[i64], b: &[i32]) -> MultiPoly {
    let xs = ring.indices_with_role(Role::X);
    let ys = ring.indices_with_role(Role::Y);
    let r = lam.len();
    let mut e = vec![0i32; ring.nvars()];
    for i in 0..r {
        e[xs[i]] = (0..r).map(|j| m[i][j] * lam[j]).sum::<i64>() as i32;
    }
    let mut out = MultiPoly::monomial(ring, &e);
    for (i, &bi) in b.iter().enumerate() {
        let mut form = MultiPoly::zero(ring);
        for (j, &y) in ys.iter().enumerate() {
            form = &form + &MultiPoly::var(ring, y).scale(&scalar::int(n[j][i]));
        }
        out = &out * &form.pow(bi as u32);
    }
    out
}

/// `Σ_w sgn(w) w · x^λ y^b`.
pub fn weyl_alternant(rd: &RootDatum, ring: &Arc<Ring>, lam: &[i64], b: &[i32]) -> MultiPoly {
    weyl_pairs(rd)
        .iter()
        .fold(MultiPoly::zero(ring), |acc, (m, n, s)| {
            &acc + &act(ring, m, n, lam, b).scale(&scalar::int(*s))
        })
}

/// Every product of `d` Weyl alternants of monomials `x^λ y^b` (with `λ` in
/// the window) whose support stays in the window and whose `y`-degree is in
/// `y_degs` lies in the windowed `J^(d)`.
pub fn anti_invariant_inclusion_check(
    rd: &RootDatum,
    d: u32,
    y_degs: &[i64],
    window: &Window,
    policy: &WindowPolicy,
) -> Result<InclusionReport> {
    if rd.rank > 2 {
        return Err(Error::OutOfRange(format!("rank {} exceeds 2", rd.rank)));
    }
    if d == 0 {
        return Err(Error::Invalid("d must be at least 1".into()));
    }
    let ring = rd.laurent_ring();
    let top = y_degs.iter().copied().max().unwrap_or(0);
    let mut alts: Vec<(i64, MultiPoly)> = Vec::new();
    for lam in window.points() {
        let lam: Vec<i64> = lam.into_iter().map(i64::from).collect();
        for by in 0..=top {
            for b in compositions(by, rd.rank) {
                let a = weyl_alternant(rd, &ring, &lam, &b);
                if !a.is_zero() {
                    alts.push((by, a));
                }
            }
        }
    }
    // d-fold products, one factor list at a time.
    let mut products: Vec<(i64, MultiPoly)> = alts.clone();
    for _ in 1..d {
        let mut next = Vec::new();
        for (b1, p) in &products {
            for (b2, q) in &alts {
                if b1 + b2 <= top {
                    next.push((b1 + b2, p * q));
                }
            }
        }
        products = next;
    }
    let domain = SliceDomain::windowed(&ring, y_degs, window);
    let inside: Vec<MultiPoly> = products
        .into_iter()
        .filter(|(b, p)| {
            y_degs.contains(b) && p.terms().keys().all(|m| window.contains_monomial(&ring, m))
        })
        .map(|(_, p)| p)
        .collect();
    let target = jd_slice(rd, d, &domain, policy)?;
    let failure = inside
        .par_iter()
        .find_first(|p| !target.slice.contains_poly(p).unwrap_or(false));
    Ok(InclusionReport {
        pass: failure.is_none(),
        checked: inside.len(),
        status: target.status,
        failure: failure.map(|p| p.render()),
    })
}

/// Degree ranges for [`graded_product_check`].
#[derive(Clone, Debug)]
pub enum ProductRange {
    /// `ℚ[x, y]` for `GL_n`, all factor degrees with total at most `max_total`.
    Polynomial { max_total: i64 },
    /// Laurent in `x`: factors over `window` with `y`-degree sum at most
    /// `max_y`; products land in the doubled window.
    Windowed { max_y: i64, window: Window },
}

/// Products of basis vectors of `J^(d1)` and `J^(d2)` lie in `J^(d1+d2)`.
pub fn graded_product_check(
    rd: &RootDatum,
    d1: u32,
    d2: u32,
    range: &ProductRange,
    policy: &WindowPolicy,
) -> Result<InclusionReport> {
    let pieces: Vec<(SliceDomain, SliceDomain, SliceDomain)> = match range {
        ProductRange::Polynomial { max_total } => {
            let ring = Ring::polynomial_xy(rd.rank, false);
            let degs: Vec<(i64, i64)> = (0..=*max_total)
                .flat_map(|t| (0..=t).map(move |a| (a, t - a)))
                .collect();
            let mut v = Vec::new();
            for &(a1, b1) in &degs {
                for &(a2, b2) in &degs {
                    if a1 + b1 + a2 + b2 <= *max_total {
                        let dom = |a, b| SliceDomain::polynomial(&ring, Bidegree::algebraic(a, b));
                        v.push((dom(a1, b1)?, dom(a2, b2)?, dom(a1 + a2, b1 + b2)?));
                    }
                }
            }
            v
        }
        ProductRange::Windowed { max_y, window } => {
            let ring = rd.laurent_ring();
            let doubled = Window::new(
                window.lo.iter().map(|x| 2 * x).collect(),
                window.hi.iter().map(|x| 2 * x).collect(),
            );
            let mut v = Vec::new();
            for b1 in 0..=*max_y {
                for b2 in 0..=*max_y - b1 {
                    v.push((
                        SliceDomain::windowed(&ring, &[b1], window),
                        SliceDomain::windowed(&ring, &[b2], window),
                        SliceDomain::windowed(&ring, &[b1 + b2], &doubled),
                    ));
                }
            }
            v
        }
    };
    let results: Vec<(usize, Status, Option<String>)> = pieces
        .par_iter()
        .map(|(da, db, dt)| -> Result<(usize, Status, Option<String>)> {
            let sa = jd_slice(rd, d1, da, policy)?;
            let sb = jd_slice(rd, d2, db, policy)?;
            let st = jd_slice(rd, d1 + d2, dt, policy)?;
            let status = worse(worse(sa.status, sb.status), st.status);
            let mut checked = 0;
            for p in sa.slice.row_polys() {
                for q in sb.slice.row_polys() {
                    let prod = &p * &q;
                    checked += 1;
                    if !st.slice.contains_poly(&prod)? {
                        return Ok((checked, status, Some(prod.render())));
                    }
                }
            }
            Ok((checked, status, None))
        })
        .collect::<Result<_>>()?;
    let mut report = InclusionReport {
        pass: true,
        checked: 0,
        status: Status::Exact,
        failure: None,
    };
    for (c, s, f) in results {
        report.checked += c;
        report.status = worse(report.status, s);
        if report.failure.is_none() && f.is_some() {
            report.pass = false;
            report.failure = f;
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootdata::{build_root_datum, Label};

    #[test]
    fn weyl_orders() {
        for (l, n, order) in [
            (Label::GL, Some(2), 2),
            (Label::A2, None, 6),
            (Label::B2, None, 8),
            (Label::G2, None, 12),
        ] {
            let rd = build_root_datum(l, n).unwrap();
            let w = weyl_pairs(&rd);
            assert_eq!(w.len(), order);
            assert_eq!(w.iter().map(|x| x.2).sum::<i64>(), 0);
        }
    }

    #[test]
    fn gl2_alternant() {
        let rd = build_root_datum(Label::GL, Some(2)).unwrap();
        let ring = rd.laurent_ring();
        let a = weyl_alternant(&rd, &ring, &[1, 0], &[1, 0]);
        assert_eq!(a.render(), "x1*y1 - x2*y2");
    }

    #[test]
    fn inclusion_low_slices() {
        let w = Window::cube(2, -1, 1);
        for l in [Label::A2, Label::B2] {
            let rd = build_root_datum(l, None).unwrap();
            let r =
                anti_invariant_inclusion_check(&rd, 1, &[0, 1, 2, 3], &w, &WindowPolicy::default())
                    .unwrap();
            assert!(r.pass, "{l:?} {r:?}");
            assert!(r.checked > 0);
        }
    }

    #[test]
    fn products() {
        let rd = build_root_datum(Label::GL, Some(3)).unwrap();
        let r = graded_product_check(
            &rd,
            1,
            1,
            &ProductRange::Polynomial { max_total: 4 },
            &WindowPolicy::default(),
        )
        .unwrap();
        assert!(r.pass);
        let r = graded_product_check(
            &rd,
            1,
            0,
            &ProductRange::Polynomial { max_total: 3 },
            &WindowPolicy::default(),
        )
        .unwrap();
        assert!(r.pass);
    }
}
