//! Root data for GL_n, SL_n and the rank-two types.
//!
//! Roots are written over a basis of linear forms `y_1..y_r` and coroots
//! over a basis of the cocharacter lattice. A pairing matrix `P` gives
//! `<β, λ> = βᵀ P λ`. For GL_n both bases are standard and `P = I`; for
//! the other types the bases are the simple roots and simple coroots and
//! `P[i][j] = <α_i, α_j∨>`.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactalg::{scalar, ExactScalar, Monomial, MultiPoly, Ring, Role};

pub type IntMatrix = Vec<Vec<i64>>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Label {
    GL,
    SL,
    A1,
    A1xA1,
    A2,
    B2,
    G2,
}

impl FromStr for Label {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s.to_ascii_uppercase().as_str() {
            "GL" => Label::GL,
            "SL" => Label::SL,
            "A1" => Label::A1,
            "A1XA1" | "A1×A1" => Label::A1xA1,
            "A2" => Label::A2,
            "B2" => Label::B2,
            "G2" => Label::G2,
            other => return Err(Error::UnsupportedDatum(other.into())),
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PositiveRoot {
    /// Coefficients of `y_α` over the `y` basis.
    pub root: Vec<i64>,
    /// `α∨` in the cocharacter lattice.
    pub coroot: Vec<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RootDatum {
    pub label: String,
    pub rank: usize,
    pub pairing: IntMatrix,
    pub roots: Vec<PositiveRoot>,
    /// `s_α` acting on the cocharacter lattice, one per positive root.
    pub reflections: Vec<IntMatrix>,
    pub coxeter_number: usize,
}

fn identity(r: usize) -> IntMatrix {
    (0..r)
        .map(|i| (0..r).map(|j| i64::from(i == j)).collect())
        .collect()
}

fn mat_vec(m: &IntMatrix, v: &[i64]) -> Vec<i64> {
    m.iter()
        .map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum())
        .collect()
}

fn mat_mul(a: &IntMatrix, b: &IntMatrix) -> IntMatrix {
    let n = b[0].len();
    a.iter()
        .map(|row| {
            (0..n)
                .map(|j| row.iter().zip(b).map(|(x, brow)| x * brow[j]).sum())
                .collect()
        })
        .collect()
}

/// Builds the datum. `n` is required for GL and SL and ignored otherwise.
pub fn build_root_datum(label: Label, n: Option<usize>) -> Result<RootDatum> {
    let (name, pairing, roots, coxeter): (String, IntMatrix, Vec<(Vec<i64>, Vec<i64>)>, usize) =
        match label {
            Label::GL => {
                let n = n
                    .filter(|&n| n >= 2)
                    .ok_or_else(|| Error::UnsupportedDatum("GL needs n >= 2".into()))?;
                let mut roots = Vec::new();
                for i in 0..n {
                    for j in i + 1..n {
                        let mut v = vec![0; n];
                        v[i] = 1;
                        v[j] = -1;
                        roots.push((v.clone(), v));
                    }
                }
                (format!("GL{n}"), identity(n), roots, n)
            }
            Label::SL | Label::A1 | Label::A2 => {
                let n = match label {
                    Label::A1 => 2,
                    Label::A2 => 3,
                    _ => n
                        .filter(|&n| n >= 2)
                        .ok_or_else(|| Error::UnsupportedDatum("SL needs n >= 2".into()))?,
                };
                let r = n - 1;
                let cartan: IntMatrix = (0..r)
                    .map(|i| {
                        (0..r)
                            .map(|j| {
                                if i == j {
                                    2
                                } else if i.abs_diff(j) == 1 {
                                    -1
                                } else {
                                    0
                                }
                            })
                            .collect()
                    })
                    .collect();
                let mut roots = Vec::new();
                for i in 0..r {
                    for j in i..r {
                        let v: Vec<i64> = (0..r).map(|k| i64::from(i <= k && k <= j)).collect();
                        roots.push((v.clone(), v));
                    }
                }
                let name = match label {
                    Label::A1 => "A1".to_string(),
                    Label::A2 => "A2".to_string(),
                    _ => format!("SL{n}"),
                };
                (name, cartan, roots, n)
            }
            Label::A1xA1 => (
                "A1xA1".into(),
                vec![vec![2, 0], vec![0, 2]],
                vec![(vec![1, 0], vec![1, 0]), (vec![0, 1], vec![0, 1])],
                2,
            ),
            Label::B2 => (
                "B2".into(),
                vec![vec![2, -2], vec![-1, 2]],
                vec![
                    (vec![1, 0], vec![1, 0]),
                    (vec![0, 1], vec![0, 1]),
                    (vec![1, 1], vec![2, 1]),
                    (vec![1, 2], vec![1, 1]),
                ],
                4,
            ),
            Label::G2 => (
                "G2".into(),
                vec![vec![2, -1], vec![-3, 2]],
                vec![
                    (vec![1, 0], vec![1, 0]),
                    (vec![0, 1], vec![0, 1]),
                    (vec![1, 1], vec![1, 3]),
                    (vec![2, 1], vec![2, 3]),
                    (vec![3, 1], vec![1, 1]),
                    (vec![3, 2], vec![1, 2]),
                ],
                6,
            ),
        };
    let rank = pairing.len();
    let roots: Vec<PositiveRoot> = roots
        .into_iter()
        .map(|(root, coroot)| PositiveRoot { root, coroot })
        .collect();
    let mut rd = RootDatum {
        label: name,
        rank,
        pairing,
        roots,
        reflections: Vec::new(),
        coxeter_number: coxeter,
    };
    rd.reflections = (0..rd.roots.len()).map(|i| rd.reflection(i)).collect();
    Ok(rd)
}

impl RootDatum {
    /// `<β, λ>` for `β` over the y basis and `λ` in the lattice.
    pub fn pair(&self, beta: &[i64], lambda: &[i64]) -> i64 {
        let pl = mat_vec(&self.pairing, lambda);
        beta.iter().zip(&pl).map(|(a, b)| a * b).sum()
    }

    pub fn num_positive(&self) -> usize {
        self.roots.len()
    }

    /// `s_α` on the lattice: `λ ↦ λ - <α, λ> α∨`.
    pub fn reflection(&self, i: usize) -> IntMatrix {
        let a = &self.roots[i];
        let r = self.rank;
        // Row vector αᵀP.
        let ap: Vec<i64> = (0..r)
            .map(|j| (0..r).map(|k| a.root[k] * self.pairing[k][j]).sum())
            .collect();
        (0..r)
            .map(|row| {
                (0..r)
                    .map(|col| i64::from(row == col) - a.coroot[row] * ap[col])
                    .collect()
            })
            .collect()
    }

    /// `s_α` on root coordinates: `β ↦ β - <β, α∨> α`.
    pub fn reflect_root(&self, i: usize, beta: &[i64]) -> Vec<i64> {
        let a = &self.roots[i];
        let c = self.pair(beta, &a.coroot);
        beta.iter().zip(&a.root).map(|(b, x)| b - c * x).collect()
    }

    /// The Weyl group generated by the stored reflections.
    pub fn weyl_group(&self) -> BTreeSet<IntMatrix> {
        let mut group: BTreeSet<IntMatrix> = BTreeSet::new();
        group.insert(identity(self.rank));
        let mut frontier = vec![identity(self.rank)];
        while let Some(g) = frontier.pop() {
            for s in &self.reflections {
                let h = mat_mul(s, &g);
                if group.insert(h.clone()) {
                    frontier.push(h);
                }
            }
        }
        group
    }

    /// `∂_α(y_i)`: the derivative along `α∨` sends `y_i` to `(P α∨)_i`.
    pub fn derivative_direction(&self, i: usize) -> Vec<i64> {
        mat_vec(&self.pairing, &self.roots[i].coroot)
    }

    /// The ring `x_1^±..x_r^±, y_1..y_r` (Laurent in `x`).
    pub fn laurent_ring(&self) -> Arc<Ring> {
        Ring::laurent_x(self.rank)
    }

    /// `y_α` in `ring`, whose `Y` variables are the y basis.
    pub fn y_form(&self, ring: &Arc<Ring>, i: usize) -> MultiPoly {
        let ys = ring.indices_with_role(Role::Y);
        assert_eq!(
            ys.len(),
            self.rank,
            "ring has the wrong number of y variables"
        );
        let mut p = MultiPoly::zero(ring);
        for (k, &c) in self.roots[i].root.iter().enumerate() {
            p = &p + &MultiPoly::var(ring, ys[k]).scale(&scalar::int(c));
        }
        p
    }

    /// `y^α` as a Laurent monomial (K-theory).
    pub fn y_character(&self, ring: &Arc<Ring>, i: usize) -> MultiPoly {
        let ys = ring.indices_with_role(Role::Y);
        let mut e = vec![0i32; ring.nvars()];
        for (k, &c) in self.roots[i].root.iter().enumerate() {
            e[ys[k]] = c as i32;
        }
        MultiPoly::term(ring, Monomial(e), ExactScalar::from_integer(1.into()))
    }

    /// `x^λ` in `ring`, whose `X` variables are the lattice basis.
    pub fn x_power(&self, ring: &Arc<Ring>, lambda: &[i64]) -> MultiPoly {
        let xs = ring.indices_with_role(Role::X);
        let mut e = vec![0i32; ring.nvars()];
        for (k, &c) in lambda.iter().enumerate() {
            e[xs[k]] = c as i32;
        }
        MultiPoly::term(ring, Monomial(e), ExactScalar::from_integer(1.into()))
    }

    /// `∂_α` applied to `p` (acts on the `y` variables).
    pub fn derivative(&self, p: &MultiPoly, i: usize) -> MultiPoly {
        let ring = p.ring();
        let ys = ring.indices_with_role(Role::Y);
        let mut dir = vec![ExactScalar::from_integer(0.into()); ring.nvars()];
        for (k, c) in self.derivative_direction(i).into_iter().enumerate() {
            dir[ys[k]] = scalar::int(c);
        }
        p.directional_derivative(&dir)
    }
}

/// `Δ^d = ∏_{α>0} y_α^d` in `ring`.
pub fn vandermonde(rd: &RootDatum, d: u32, ring: &Arc<Ring>) -> MultiPoly {
    (0..rd.num_positive()).fold(MultiPoly::one(ring), |acc, i| {
        &acc * &rd.y_form(ring, i).pow(d)
    })
}

/// `Δ' = ∏_{α>0} (1 - y^α)` over a ring with Laurent `y`.
pub fn vandermonde_ktheory(rd: &RootDatum, ring: &Arc<Ring>) -> MultiPoly {
    (0..rd.num_positive()).fold(MultiPoly::one(ring), |acc, i| {
        &acc * &(&MultiPoly::one(ring) - &rd.y_character(ring, i))
    })
}

impl fmt::Display for RootDatum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} (rank {}, {} positive roots)",
            self.label,
            self.rank,
            self.roots.len()
        )
    }
}

/// Parses `GL3`, `SL2`, `A2`, `B2`, `G2`, `A1xA1`.
pub fn parse_group(s: &str) -> Result<RootDatum> {
    let up = s.to_ascii_uppercase();
    for prefix in ["GL", "SL"] {
        if let Some(rest) = up.strip_prefix(prefix) {
            let n: usize = rest
                .parse()
                .map_err(|_| Error::UnsupportedDatum(s.into()))?;
            return build_root_datum(prefix.parse()?, Some(n));
        }
    }
    build_root_datum(up.parse()?, None)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn all() -> Vec<RootDatum> {
        let mut v: Vec<RootDatum> = [2, 3, 4]
            .iter()
            .map(|&n| build_root_datum(Label::GL, Some(n)).unwrap())
            .collect();
        v.extend(
            [2, 3]
                .iter()
                .map(|&n| build_root_datum(Label::SL, Some(n)).unwrap()),
        );
        for l in [Label::A1, Label::A1xA1, Label::A2, Label::B2, Label::G2] {
            v.push(build_root_datum(l, None).unwrap());
        }
        v
    }

    #[test]
    fn cartan_integers() {
        for rd in all() {
            for a in &rd.roots {
                assert_eq!(rd.pair(&a.root, &a.coroot), 2, "{}", rd.label);
            }
        }
    }

    #[test]
    fn reflections_are_involutions_that_permute_roots() {
        for rd in all() {
            let mut signed: BTreeSet<Vec<i64>> = rd.roots.iter().map(|a| a.root.clone()).collect();
            signed.extend(
                rd.roots
                    .iter()
                    .map(|a| a.root.iter().map(|x| -x).collect::<Vec<_>>()),
            );
            for (i, s) in rd.reflections.iter().enumerate() {
                assert_eq!(mat_mul(s, s), identity(rd.rank));
                let a = &rd.roots[i];
                assert_eq!(
                    mat_vec(s, &a.coroot),
                    a.coroot.iter().map(|x| -x).collect::<Vec<_>>()
                );
                assert_eq!(
                    rd.reflect_root(i, &a.root),
                    a.root.iter().map(|x| -x).collect::<Vec<_>>()
                );
                for b in &signed {
                    assert!(signed.contains(&rd.reflect_root(i, b)));
                }
            }
        }
    }

    #[test]
    fn weyl_group_orders() {
        let order = |l, n| build_root_datum(l, n).unwrap().weyl_group().len();
        assert_eq!(order(Label::GL, Some(2)), 2);
        assert_eq!(order(Label::GL, Some(3)), 6);
        assert_eq!(order(Label::A1xA1, None), 4);
        assert_eq!(order(Label::A2, None), 6);
        assert_eq!(order(Label::B2, None), 8);
        assert_eq!(order(Label::G2, None), 12);
    }

    #[test]
    fn positive_root_counts() {
        assert_eq!(
            build_root_datum(Label::GL, Some(4)).unwrap().num_positive(),
            6
        );
        assert_eq!(build_root_datum(Label::B2, None).unwrap().num_positive(), 4);
        let g2 = build_root_datum(Label::G2, None).unwrap();
        assert_eq!((g2.num_positive(), g2.coxeter_number), (6, 6));
        let sl2 = build_root_datum(Label::SL, Some(2)).unwrap();
        assert_eq!((sl2.num_positive(), sl2.rank), (1, 1));
        assert!(build_root_datum(Label::GL, Some(1)).is_err());
    }

    #[test]
    fn gl3_forms_and_vandermonde() {
        let rd = build_root_datum(Label::GL, Some(3)).unwrap();
        let ring = Ring::polynomial_xy(3, false);
        let forms: Vec<String> = (0..3).map(|i| rd.y_form(&ring, i).render()).collect();
        assert_eq!(forms, ["y1 - y2", "y1 - y3", "y2 - y3"]);
        let v = vandermonde(&rd, 1, &ring);
        assert_eq!(v.total_degree(), Some(3));
        let gl2 = build_root_datum(Label::GL, Some(2)).unwrap();
        let r2 = Ring::polynomial_xy(2, false);
        assert_eq!(vandermonde(&gl2, 2, &r2), rd_form_sq(&r2));
    }

    fn rd_form_sq(r: &Arc<Ring>) -> MultiPoly {
        (&MultiPoly::named(r, "y1") - &MultiPoly::named(r, "y2")).pow(2)
    }

    #[test]
    fn derivative_kills_invariants() {
        let rd = build_root_datum(Label::GL, Some(2)).unwrap();
        let ring = rd.laurent_ring();
        let s = &MultiPoly::named(&ring, "y1") + &MultiPoly::named(&ring, "y2");
        assert!(rd.derivative(&s, 0).is_zero());
        assert_eq!(
            rd.derivative(&rd.y_form(&ring, 0), 0),
            MultiPoly::int(&ring, 2)
        );
    }
}
