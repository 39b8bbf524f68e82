//! The rank-one affine flag module `{1 - s, 1 - x, y} · ℚ[Λ] ⊗ ℚ[y]` inside
//! `ℚ[W̃] ⊗ ℚ[y]`.
//!
//! A monomial `x^λ s^w y^b` of the flag ring stands for the group element
//! `x^λ w` times `y^b`; products use `s x^μ = x^{-μ} s`. With a single
//! positive root the intersection over roots is the module itself.

use std::sync::Arc;

use super::domain::{stabilize, SliceDomain, WindowPolicy, WindowedSlice};
use super::ideals::{flag_ring, IdealSpec};
use crate::error::{Error, Result};
use crate::exactalg::{GradedSlice, Monomial, MultiPoly, Ring, Window};
use crate::gkm::classes::{flag_rank1_class, flag_times_y_at_t0, FlagClass};
use crate::gkm::graph::{FixedPoint, WeylPart};

const X: usize = 0;
const S: usize = 1;
const Y: usize = 2;

/// `g · x^μ y^β` in `ℚ[W̃] ⊗ ℚ[y]`.
pub fn right_multiply(g: &MultiPoly, mu: i32, beta: i32) -> MultiPoly {
    let ring = g.ring();
    let mut out = MultiPoly::zero(ring);
    for (m, c) in g.terms() {
        let shift = if m.0[S] == 1 { -mu } else { mu };
        let e = vec![m.0[X] + shift, m.0[S], m.0[Y] + beta];
        out.add_term(Monomial(e), c.clone());
    }
    out
}

/// `(λ, w) ↦ x^λ s^w`.
pub fn point_element(ring: &Arc<Ring>, p: &FixedPoint) -> Result<MultiPoly> {
    match p {
        FixedPoint::Flag { k, w } => {
            let s = i32::from(*w == WeylPart::S);
            Ok(MultiPoly::monomial(ring, &[*k as i32, s, 0]))
        }
        FixedPoint::Lattice(_) => Err(Error::Invalid(format!("{p} is not a flag point"))),
    }
}

/// `y · class` at `t = 0` as an element of the flag ring.
pub fn flag_class_image(c: FlagClass) -> Result<MultiPoly> {
    let ring = flag_ring();
    if c == FlagClass::A0 {
        return Ok(MultiPoly::named(&ring, "y"));
    }
    let mut out = MultiPoly::zero(&ring);
    for (p, coeff) in flag_times_y_at_t0(&flag_rank1_class(c))? {
        out = &out + &point_element(&ring, &p)?.scale(&coeff);
    }
    Ok(out)
}

fn generated(domain: &SliceDomain, gens: &[MultiPoly], margin: i32) -> Result<GradedSlice> {
    let basis = domain.basis()?;
    let big_dom = domain.enlarged(margin);
    let big = big_dom.basis()?;
    let w = big_dom.window.as_ref().expect("flag slices are windowed");
    let mut vs = Vec::new();
    for g in gens {
        let gy = g.degree_in(Y).unwrap_or(0) as i64;
        for deg in &domain.degs {
            let beta = deg.deg.1 - gy;
            if beta < 0 {
                continue;
            }
            // Any μ keeping g · x^μ inside the window satisfies |μ| <= reach.
            let gx = g.terms().keys().map(|m| m.0[X].abs()).max().unwrap_or(0);
            let reach = w.lo[0].abs().max(w.hi[0].abs()) + gx;
            for mu in -reach..=reach {
                let p = right_multiply(g, mu, beta as i32);
                if p.terms().keys().all(|m| big.index_of(m).is_some()) {
                    vs.push(big.coords(&p)?);
                }
            }
        }
    }
    Ok(GradedSlice::span_restricted(&basis, &big, vs))
}

/// The module slice in `y`-degrees `y_degs` over the `x`-window.
pub fn flag_rank1_module_slice(
    y_degs: &[i64],
    window: &Window,
    policy: &WindowPolicy,
) -> Result<WindowedSlice> {
    if window.dim() != 1 {
        return Err(Error::Invalid("the flag module has rank one".into()));
    }
    let spec = IdealSpec::flag_rank1();
    let gens = spec.power_generators()?;
    let domain = SliceDomain::windowed(&spec.ring, y_degs, window);
    stabilize(true, 1, policy, |m| generated(&domain, &gens, m))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classes_land_in_the_module() {
        let w = Window::cube(1, -3, 3);
        let s = flag_rank1_module_slice(&[0, 1], &w, &WindowPolicy::default()).unwrap();
        for k in -2..=2 {
            for c in [FlagClass::A0, FlagClass::B(k), FlagClass::BPrime(k)] {
                let img = flag_class_image(c).unwrap();
                assert!(s.slice.contains_poly(&img).unwrap(), "{c:?}");
            }
        }
        // y-degree 0 is the augmentation ideal: 2·7 points, one condition.
        let s0 = flag_rank1_module_slice(&[0], &w, &WindowPolicy::default()).unwrap();
        assert_eq!(s0.rank(), 13);
    }

    #[test]
    fn b0_is_one_minus_s() {
        let ring = flag_ring();
        let one = MultiPoly::one(&ring);
        assert_eq!(
            flag_class_image(FlagClass::B(0)).unwrap(),
            &one - &MultiPoly::named(&ring, "s")
        );
        let g = &one - &MultiPoly::named(&ring, "s");
        assert_eq!(
            right_multiply(&g, 2, 0),
            &MultiPoly::monomial(&ring, &[2, 0, 0]) - &MultiPoly::monomial(&ring, &[-2, 1, 0])
        );
    }
}
