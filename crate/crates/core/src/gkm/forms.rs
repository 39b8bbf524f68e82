//! Rational forms on fixed points: a polynomial numerator over a product of
//! linear characters.

use std::collections::BTreeMap;
use std::sync::Arc;

use num::Zero;
use serde::{Deserialize, Serialize};

use super::graph::FixedPoint;
use crate::error::{Error, Result};
use crate::exactalg::poly::PolyJson;
use crate::exactalg::{scalar, ExactScalar, MultiPoly, RationalSeries, Ring, Role, Var};

/// `y` (or `y1..yr`) and `t`.
pub fn form_ring(rank: usize) -> Arc<Ring> {
    let mut vars: Vec<Var> = if rank == 1 {
        vec![Var::new("y", Role::Y, false)]
    } else {
        (1..=rank)
            .map(|i| Var::new(format!("y{i}"), Role::Y, false))
            .collect()
    };
    vars.push(Var::new("t", Role::T, false));
    Ring::new(vars)
}

/// Homogeneous linear form, coefficients in ring order.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LinearForm(pub Vec<ExactScalar>);

impl LinearForm {
    pub fn from_ints(c: &[i64]) -> Self {
        Self(c.iter().map(|&x| scalar::int(x)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|c| c.is_zero())
    }

    /// Index of the first variable with nonzero coefficient.
    pub fn first_var(&self) -> Option<usize> {
        self.0.iter().position(|c| !c.is_zero())
    }

    /// Scaled so the first nonzero coefficient is 1.
    pub fn normalized(&self) -> Self {
        match self.first_var() {
            Some(i) => {
                let inv = self.0[i].recip();
                Self(self.0.iter().map(|c| c * &inv).collect())
            }
            None => self.clone(),
        }
    }

    /// `c` with `self = c * other`, if the two are proportional.
    pub fn ratio_to(&self, other: &Self) -> Option<ExactScalar> {
        let i = other.first_var()?;
        let c = &self.0[i] / &other.0[i];
        if c.is_zero() {
            return None;
        }
        let same = self.0.iter().zip(&other.0).all(|(a, b)| *a == &c * b);
        same.then_some(c)
    }

    pub fn to_poly(&self, ring: &Arc<Ring>) -> MultiPoly {
        let mut p = MultiPoly::zero(ring);
        for (i, c) in self.0.iter().enumerate() {
            p = &p + &MultiPoly::var(ring, i).scale(c);
        }
        p
    }

    pub fn from_poly(p: &MultiPoly) -> Result<Self> {
        let n = p.ring().nvars();
        let mut c = vec![ExactScalar::zero(); n];
        for (m, v) in p.terms() {
            if m.degree() != 1 || m.0.iter().any(|&e| e < 0) {
                return Err(Error::Invalid(format!("{p} is not a linear form")));
            }
            let i = m.0.iter().position(|&e| e == 1).unwrap();
            c[i] = v.clone();
        }
        let f = Self(c);
        if f.is_zero() {
            return Err(Error::Invalid("zero denominator factor".into()));
        }
        Ok(f)
    }

    fn render_json(&self) -> Vec<String> {
        self.0.iter().map(scalar::render_short).collect()
    }
}

/// `num / ∏ den`.
#[derive(Clone, Debug, PartialEq)]
pub struct RationalForm {
    pub num: MultiPoly,
    pub den: Vec<LinearForm>,
}

impl RationalForm {
    pub fn new(num: MultiPoly, den: Vec<LinearForm>) -> Self {
        Self { num, den }
    }

    pub fn constant(ring: &Arc<Ring>, c: ExactScalar) -> Self {
        Self {
            num: MultiPoly::constant(ring, c),
            den: vec![],
        }
    }

    pub fn ring(&self) -> &Arc<Ring> {
        self.num.ring()
    }

    pub fn den_poly(&self) -> MultiPoly {
        let ring = self.ring().clone();
        self.den
            .iter()
            .fold(MultiPoly::one(&ring), |acc, f| &acc * &f.to_poly(&ring))
    }

    pub fn to_series(&self) -> RationalSeries {
        RationalSeries::new(self.num.clone(), self.den_poly()).expect("linear factors are nonzero")
    }

    pub fn scale(&self, c: &ExactScalar) -> Self {
        Self {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Cancels denominator factors that divide the numerator.
    pub fn simplified(&self) -> Self {
        let ring = self.ring().clone();
        let mut num = self.num.clone();
        let mut den = Vec::new();
        for f in &self.den {
            match num.div_exact(&f.to_poly(&ring)) {
                Some(q) if !num.is_zero() => num = q,
                _ => den.push(f.clone()),
            }
        }
        Self { num, den }
    }
}

/// Forms indexed by fixed points; absent points carry 0.
#[derive(Clone, Debug, PartialEq)]
pub struct RationalFormTuple {
    pub ring: Arc<Ring>,
    pub entries: BTreeMap<FixedPoint, RationalForm>,
}

impl RationalFormTuple {
    pub fn new(ring: &Arc<Ring>) -> Self {
        Self {
            ring: ring.clone(),
            entries: BTreeMap::new(),
        }
    }

    pub fn insert(&mut self, p: FixedPoint, f: RationalForm) {
        if !f.is_zero() {
            self.entries.insert(p, f);
        }
    }

    pub fn scale(&self, c: &ExactScalar) -> Self {
        let mut out = Self::new(&self.ring);
        for (p, f) in &self.entries {
            out.insert(p.clone(), f.scale(c));
        }
        out
    }

    /// Adds `c` to the numerator scalar of the entry at `p` (a falsifiability probe).
    pub fn perturbed(&self, p: &FixedPoint, c: &ExactScalar) -> Self {
        let mut out = self.clone();
        let ring = self.ring.clone();
        let f = out
            .entries
            .remove(p)
            .unwrap_or_else(|| RationalForm::constant(&ring, ExactScalar::zero()));
        let bump = MultiPoly::constant(&ring, c.clone());
        out.insert(p.clone(), RationalForm::new(&f.num + &bump, f.den));
        out
    }

    pub fn to_json(&self) -> TupleJson {
        TupleJson {
            vars: self.ring.names(),
            entries: self
                .entries
                .iter()
                .map(|(p, f)| EntryJson {
                    point: p.clone(),
                    num: f.num.to_json(),
                    den: f.den.iter().map(|l| l.render_json()).collect(),
                })
                .collect(),
        }
    }

    pub fn from_json(j: &TupleJson) -> Result<Self> {
        let rank = j
            .vars
            .len()
            .checked_sub(1)
            .filter(|&r| r >= 1)
            .ok_or_else(|| Error::Parse("no variables".into()))?;
        let ring = form_ring(rank);
        if ring.names() != j.vars {
            return Err(Error::RingMismatch(format!(
                "expected variables {:?}",
                ring.names()
            )));
        }
        let mut t = Self::new(&ring);
        for e in &j.entries {
            let num = MultiPoly::from_json(&ring, &e.num)?;
            let den = e
                .den
                .iter()
                .map(|c| {
                    if c.len() != ring.nvars() {
                        return Err(Error::Parse("linear form arity".into()));
                    }
                    let f = LinearForm(
                        c.iter()
                            .map(|s| scalar::parse(s))
                            .collect::<Result<Vec<_>>>()?,
                    );
                    if f.is_zero() {
                        return Err(Error::Parse("zero denominator factor".into()));
                    }
                    Ok(f)
                })
                .collect::<Result<Vec<_>>>()?;
            if t.entries.contains_key(&e.point) {
                return Err(Error::Parse(format!("duplicate entry at {}", e.point)));
            }
            t.insert(e.point.clone(), RationalForm::new(num, den));
        }
        Ok(t)
    }

    /// Least common multiple of the denominators (distinct factors up to scale).
    pub fn denominator_lcm(&self) -> MultiPoly {
        let mut seen: Vec<LinearForm> = Vec::new();
        for f in self.entries.values() {
            let mut local: Vec<LinearForm> = Vec::new();
            for l in &f.den {
                let n = l.normalized();
                let have = seen.iter().filter(|s| **s == n).count();
                let need = local.iter().filter(|s| **s == n).count() + 1;
                if need > have {
                    seen.push(n.clone());
                }
                local.push(n);
            }
        }
        seen.iter().fold(MultiPoly::one(&self.ring), |acc, l| {
            &acc * &l.to_poly(&self.ring)
        })
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct EntryJson {
    pub point: FixedPoint,
    pub num: PolyJson,
    pub den: Vec<Vec<String>>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct TupleJson {
    pub vars: Vec<String>,
    pub entries: Vec<EntryJson>,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn proportionality() {
        let a = LinearForm::from_ints(&[2, 6]);
        let b = LinearForm::from_ints(&[1, 3]);
        assert_eq!(a.ratio_to(&b), Some(scalar::int(2)));
        assert_eq!(a.normalized(), b);
        assert!(LinearForm::from_ints(&[1, 2]).ratio_to(&b).is_none());
    }

    #[test]
    fn json_round_trip() {
        let ring = form_ring(1);
        let mut t = RationalFormTuple::new(&ring);
        t.insert(
            FixedPoint::lattice(&[0]),
            RationalForm::new(MultiPoly::one(&ring), vec![LinearForm::from_ints(&[1, 1])]),
        );
        t.insert(
            FixedPoint::flag(1, true),
            RationalForm::constant(&ring, scalar::frac(-1, 2)),
        );
        let j = serde_json::to_string(&t.to_json()).unwrap();
        let back = RationalFormTuple::from_json(&serde_json::from_str(&j).unwrap()).unwrap();
        assert_eq!(back, t);
    }
}
