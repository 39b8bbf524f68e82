//! Punctual series against the torus-link homology series of `T(3,3)` and
//! `T(2,4)` under `q ↦ Q`, `qL ↦ T^-1`.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use serde::Serialize;

use super::msv::{msv_assemble, punctual_series, punctual_series_text_factor, CurveSpec};
use crate::error::{Error, Result};
use crate::exactalg::{scalar, Monomial, MultiPoly, RationalSeries, Ring};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Link {
    T33,
    T24,
}

impl Link {
    /// The curve whose link this is: `(n, d)` for `x^n = y^(dn)`.
    pub fn curve(self) -> (usize, u32) {
        match self {
            Link::T33 => (3, 1),
            Link::T24 => (2, 2),
        }
    }
}

impl FromStr for Link {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_uppercase().replace(['(', ')', ','], "").as_str() {
            "T33" => Ok(Link::T33),
            "T24" => Ok(Link::T24),
            _ => Err(Error::Parse(format!(
                "unknown link {s:?}; expected T33 or T24"
            ))),
        }
    }
}

impl fmt::Display for Link {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Link::T33 => "T33",
            Link::T24 => "T24",
        })
    }
}

/// `ℚ(Q, T)`.
pub fn knot_ring() -> Arc<Ring> {
    Ring::formal(&["Q", "T"], &["Q", "T"])
}

fn poly(ring: &Arc<Ring>, terms: &[(i64, &[i32])]) -> MultiPoly {
    MultiPoly::from_terms(
        ring,
        terms
            .iter()
            .map(|&(c, e)| (Monomial(e.to_vec()), scalar::int(c))),
    )
}

/// `f_000(Q, 0, T)` from the Elias–Hogancamp computation, as printed
/// (including the `A` terms, which drop out at `A = 0`).
pub fn eh_f000() -> Result<RationalSeries> {
    let qat = Ring::formal(&["Q", "A", "T"], &[]);
    let a0 = poly(
        &qat,
        &[
            (1, &[2, 0, 3]),
            (1, &[3, 0, 2]),
            (-2, &[2, 0, 2]),
            (-2, &[3, 0, 1]),
            (-2, &[1, 0, 3]),
            (1, &[0, 0, 3]),
            (1, &[3, 0, 0]),
            (1, &[2, 0, 1]),
            (1, &[1, 0, 2]),
            (1, &[1, 0, 1]),
        ],
    );
    let a1 = poly(
        &qat,
        &[
            (1, &[2, 0, 2]),
            (-2, &[2, 0, 1]),
            (-2, &[1, 0, 2]),
            (1, &[0, 0, 2]),
            (1, &[2, 0, 0]),
            (1, &[1, 0, 1]),
            (1, &[0, 0, 1]),
            (1, &[0, 0, 1]),
        ],
    );
    let a = MultiPoly::named(&qat, "A");
    let inner = &(&a0 + &(&a1 * &a)) + &a.pow(2);
    let num = &(&MultiPoly::one(&qat) + &a) * &inner;
    let den = poly(&qat, &[(1, &[0, 0, 0]), (-1, &[1, 0, 0])]).pow(3);
    let at_zero = RationalSeries::new(num, den)?;
    let at_zero = RationalSeries::new(
        at_zero.numerator().eval_var(1, &scalar::int(0))?,
        at_zero.denominator().eval_var(1, &scalar::int(0))?,
    )?;
    let ring = knot_ring();
    let images = [
        MultiPoly::named(&ring, "Q"),
        MultiPoly::zero(&ring),
        MultiPoly::named(&ring, "T"),
    ];
    at_zero.map_into(&ring, &images)
}

/// `(Q^2 + (1-Q)(T^2 + QT)) / ((1-Q)^2 T^2)` from Oblomkov–Rasmussen–Shende.
pub fn ors_t24() -> Result<RationalSeries> {
    let ring = knot_ring();
    let one_q = poly(&ring, &[(1, &[0, 0]), (-1, &[1, 0])]);
    let num =
        &poly(&ring, &[(1, &[2, 0])]) + &(&one_q * &poly(&ring, &[(1, &[0, 2]), (1, &[1, 1])]));
    RationalSeries::new(num, &one_q.pow(2) * &poly(&ring, &[(1, &[0, 2])]))
}

pub fn reference(link: Link) -> Result<RationalSeries> {
    match link {
        Link::T33 => eh_f000(),
        Link::T24 => ors_t24(),
    }
}

/// `q ↦ Q`, `L ↦ Q^-1 T^-1`.
pub fn substitute(s: &RationalSeries) -> Result<RationalSeries> {
    let ring = knot_ring();
    s.map_into(
        &ring,
        &[poly(&ring, &[(1, &[1, 0])]), poly(&ring, &[(1, &[-1, -1])])],
    )
}

/// The `g` with `reference = T^g · computed`, if one exists.
pub fn t_normalization(
    computed: &RationalSeries,
    reference: &RationalSeries,
) -> Result<Option<i32>> {
    if computed.is_zero() || reference.is_zero() {
        return Ok((computed.is_zero() && reference.is_zero()).then_some(0));
    }
    let ratio = reference / computed;
    let single = |p: &MultiPoly| -> Option<i32> {
        let (m, c) = p.leading()?;
        (p.len() == 1 && c == &scalar::int(1) && m.0[0] == 0).then_some(m.0[1])
    };
    Ok(
        match (single(ratio.numerator()), single(ratio.denominator())) {
            (Some(a), Some(b)) => Some(a - b),
            _ => None,
        },
    )
}

#[derive(Clone, Debug, Serialize)]
pub struct KnotReport {
    pub link: Link,
    /// `"equal"` or `"unequal"`.
    pub status: String,
    pub equal: bool,
    /// `T^g` with `reference = T^g · substituted`.
    pub normalization: Option<String>,
    pub substituted: String,
    pub reference: String,
    /// Whether the factor `(1 - L^2)^r` written in the tacnode text also
    /// matches up to `T^g`; reported alongside, never used for `equal`.
    pub text_factor_equal: Option<bool>,
}

/// Compares the punctual series of `link`'s curve against `reference`.
pub fn knot_compare_with(link: Link, reference: &RationalSeries) -> Result<KnotReport> {
    let (n, d) = link.curve();
    let global = msv_assemble(&CurveSpec::known(n, d)?)?;
    let sub = substitute(&punctual_series(&global, n as u32))?;
    let g = t_normalization(&sub, reference)?;
    let text_factor_equal = match link {
        Link::T24 => Some(
            t_normalization(
                &substitute(&punctual_series_text_factor(&global, n as u32))?,
                reference,
            )?
            .is_some(),
        ),
        Link::T33 => None,
    };
    Ok(KnotReport {
        link,
        status: if g.is_some() { "equal" } else { "unequal" }.into(),
        equal: g.is_some(),
        normalization: g.map(|g| format!("T^{g}")),
        substituted: sub.render(),
        reference: reference.render(),
        text_factor_equal,
    })
}

pub fn knot_compare(link: Link) -> Result<KnotReport> {
    knot_compare_with(link, &reference(link)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_links() {
        assert_eq!("T(3,3)".parse::<Link>().unwrap(), Link::T33);
        assert_eq!("t24".parse::<Link>().unwrap(), Link::T24);
        assert!("T25".parse::<Link>().is_err());
    }

    #[test]
    fn normalization_of_a_shift() {
        let r = ors_t24().unwrap();
        let ring = knot_ring();
        let t3 = RationalSeries::from_poly(MultiPoly::monomial(&ring, &[0, 3]));
        assert_eq!(t_normalization(&r, &(&r * &t3)).unwrap(), Some(3));
        let q = RationalSeries::from_poly(MultiPoly::monomial(&ring, &[1, 0]));
        assert_eq!(t_normalization(&r, &(&r * &q)).unwrap(), None);
    }
}
