//! MSV assembly for the curves `x^n = y^(dn)` from per-subcurve central
//! numerators, and punctual-series extraction.
//!
//! A subcurve made of `m` components is again of the form `x^m = y^(dm)`,
//! with arithmetic genus `d·C(m,2) - m + 1`. A decomposition of the
//! components into blocks `S` contributes
//! `(qL)^(g-1) ∏_S (qL)^(1-g_S) N_S / ((1-q)(1-qL))`.

use std::collections::BTreeMap;
use std::sync::{Arc, LazyLock};

use crate::error::{Error, Result};
use crate::exactalg::{scalar, Monomial, MultiPoly, RationalSeries, Ring};

static SERIES_RING: LazyLock<Arc<Ring>> = LazyLock::new(|| Ring::formal(&["q", "L"], &[]));

/// `ℚ(q, L)` with `L` formal.
pub fn series_ring() -> Arc<Ring> {
    SERIES_RING.clone()
}

/// `Σ c q^i L^j` from `(c, i, j)` triples.
pub fn ql_poly(terms: &[(i64, i32, i32)]) -> MultiPoly {
    let ring = series_ring();
    MultiPoly::from_terms(
        &ring,
        terms
            .iter()
            .map(|&(c, i, j)| (Monomial(vec![i, j]), scalar::int(c))),
    )
}

#[derive(Clone, Debug)]
pub struct CurveSpec {
    pub n: usize,
    pub d: u32,
    /// Central-fiber numerator of a subcurve with `m` components, for
    /// `m = 1..=n`; the entry for `m = n` is the trivial decomposition.
    pub numerators: BTreeMap<usize, MultiPoly>,
}

impl CurveSpec {
    pub fn new(n: usize, d: u32, numerators: BTreeMap<usize, MultiPoly>) -> Result<Self> {
        let spec = Self { n, d, numerators };
        spec.validate()?;
        Ok(spec)
    }

    /// The decomposition data worked out for the node, three lines and the
    /// tacnode.
    pub fn known(n: usize, d: u32) -> Result<Self> {
        let mut nums = BTreeMap::from([(1, ql_poly(&[(1, 0, 0)]))]);
        match (n, d) {
            (2, 1) => {
                nums.insert(2, ql_poly(&[(1, 0, 0)]));
            }
            (3, 1) => {
                nums.insert(2, ql_poly(&[(1, 0, 0)]));
                nums.insert(3, ql_poly(&[(1, 0, 0), (2, 1, 1), (1, 2, 1)]));
            }
            (2, 2) => {
                nums.insert(2, ql_poly(&[(1, 0, 0), (1, 1, 1), (1, 2, 1)]));
            }
            _ => {
                return Err(Error::OutOfRange(format!(
                    "no decomposition data for n={n}, d={d}"
                )))
            }
        }
        Self::new(n, d, nums)
    }

    pub fn validate(&self) -> Result<()> {
        if self.n < 2 || self.d < 1 {
            return Err(Error::Invalid(format!(
                "curves need n >= 2 and d >= 1, got n={}, d={}",
                self.n, self.d
            )));
        }
        for m in 1..=self.n {
            let num = self
                .numerators
                .get(&m)
                .ok_or_else(|| Error::Invalid(format!("missing numerator for {m} components")))?;
            if num.constant_term() != scalar::int(1) {
                return Err(Error::Invalid(format!(
                    "numerator {} has constant term other than 1",
                    num.render()
                )));
            }
        }
        Ok(())
    }

    /// Arithmetic genus of a subcurve with `m` components.
    pub fn genus(&self, m: usize) -> i64 {
        let m = m as i64;
        self.d as i64 * m * (m - 1) / 2 - m + 1
    }
}

/// Set partitions of `0..n` as block-size lists, via restricted growth strings.
pub fn set_partitions(n: usize) -> Vec<Vec<usize>> {
    fn go(i: usize, n: usize, rgs: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if i == n {
            let blocks = rgs.iter().max().map_or(0, |m| m + 1);
            out.push(
                (0..blocks)
                    .map(|b| rgs.iter().filter(|&&x| x == b).count())
                    .collect(),
            );
            return;
        }
        let next = rgs.iter().max().map_or(0, |m| m + 1);
        for b in 0..=next {
            rgs.push(b);
            go(i + 1, n, rgs, out);
            rgs.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, &mut Vec::new(), &mut out);
    out
}

/// `(qL)^e` as a rational function.
fn ql_power(e: i64) -> Result<RationalSeries> {
    RationalSeries::from_poly(ql_poly(&[(1, 1, 1)])).powi(e as i32)
}

/// The global series `Σ_n q^n [C^[n]]` from the MSV formula.
pub fn msv_assemble(spec: &CurveSpec) -> Result<RationalSeries> {
    spec.validate()?;
    let ring = series_ring();
    let base = ql_poly(&[(1, 0, 0), (-1, 1, 0)]) * ql_poly(&[(1, 0, 0), (-1, 1, 1)]);
    let shift = ql_power(spec.genus(spec.n) - 1)?;
    let mut total = RationalSeries::zero(&ring);
    for blocks in set_partitions(spec.n) {
        let mut term = shift.clone();
        for m in blocks {
            let block = RationalSeries::new(spec.numerators[&m].clone(), base.clone())?;
            term = &term * &(&ql_power(1 - spec.genus(m))? * &block);
        }
        total = &total + &term;
    }
    Ok(total)
}

/// The closed forms displayed for the node, three lines and the tacnode.
pub fn pinned_global(n: usize, d: u32) -> Result<Option<RationalSeries>> {
    let base = ql_poly(&[(1, 0, 0), (-1, 1, 0)]) * ql_poly(&[(1, 0, 0), (-1, 1, 1)]);
    let num = match (n, d) {
        (2, 1) => ql_poly(&[(1, 0, 0), (-1, 1, 0), (1, 2, 1)]),
        (3, 1) => ql_poly(&[
            (1, 6, 3),
            (-2, 5, 2),
            (1, 4, 2),
            (1, 3, 2),
            (1, 4, 1),
            (-2, 3, 1),
            (1, 2, 1),
            (1, 2, 0),
            (-2, 1, 0),
            (1, 0, 0),
        ]),
        (2, 2) => ql_poly(&[(1, 4, 2), (-1, 3, 1), (1, 2, 1), (-1, 1, 0), (1, 0, 0)]),
        _ => return Ok(None),
    };
    Ok(Some(RationalSeries::new(num, base.pow(n as u32))?))
}

/// `global · (1 - qL)^r`.
pub fn punctual_series(global: &RationalSeries, r: u32) -> RationalSeries {
    let factor = RationalSeries::from_poly(ql_poly(&[(1, 0, 0), (-1, 1, 1)]).pow(r));
    global * &factor
}

/// `global · (1 - L^2)^r`, the factor written in the tacnode text.
pub fn punctual_series_text_factor(global: &RationalSeries, r: u32) -> RationalSeries {
    let factor = RationalSeries::from_poly(ql_poly(&[(1, 0, 0), (-1, 0, 2)]).pow(r));
    global * &factor
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bell_numbers() {
        let counts: Vec<usize> = (1..=5).map(|n| set_partitions(n).len()).collect();
        assert_eq!(counts, vec![1, 2, 5, 15, 52]);
    }

    #[test]
    fn genera() {
        let three = CurveSpec::known(3, 1).unwrap();
        assert_eq!((three.genus(1), three.genus(2), three.genus(3)), (0, 0, 1));
        assert_eq!(CurveSpec::known(2, 2).unwrap().genus(2), 1);
    }

    #[test]
    fn node() {
        let s = msv_assemble(&CurveSpec::known(2, 1).unwrap()).unwrap();
        let want = RationalSeries::new(
            ql_poly(&[(1, 0, 0), (-1, 1, 0), (1, 2, 1)]),
            (ql_poly(&[(1, 0, 0), (-1, 1, 0)]) * ql_poly(&[(1, 0, 0), (-1, 1, 1)])).pow(2),
        )
        .unwrap();
        assert_eq!(s, want);
    }

    #[test]
    fn bad_numerator() {
        let nums = BTreeMap::from([(1, ql_poly(&[(1, 0, 0)])), (2, ql_poly(&[(2, 0, 0)]))]);
        assert!(CurveSpec::new(2, 1, nums).is_err());
    }

    #[test]
    fn zero_components_is_identity() {
        let s = msv_assemble(&CurveSpec::known(2, 2).unwrap()).unwrap();
        assert_eq!(punctual_series(&s, 0), s);
    }
}
