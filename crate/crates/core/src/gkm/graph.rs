//! Windowed GKM graphs: lattice points joined along coroot directions, and
//! the rank-one affine flag chain.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::forms::{form_ring, LinearForm};
use crate::error::{Error, Result};
use crate::exactalg::{scalar, Ring, Window};
use crate::rootdata::RootDatum;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum WeylPart {
    #[serde(rename = "1")]
    One,
    #[serde(rename = "s")]
    S,
}

/// A torus-fixed point: a cocharacter, or `(k, w)` in the rank-one flag case.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(untagged)]
pub enum FixedPoint {
    Lattice(Vec<i64>),
    Flag { k: i64, w: WeylPart },
}

impl FixedPoint {
    pub fn lattice(v: &[i64]) -> Self {
        Self::Lattice(v.to_vec())
    }

    pub fn flag(k: i64, s: bool) -> Self {
        Self::Flag {
            k,
            w: if s { WeylPart::S } else { WeylPart::One },
        }
    }
}

impl fmt::Display for FixedPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FixedPoint::Lattice(v) if v.len() == 1 => write!(f, "{}", v[0]),
            FixedPoint::Lattice(v) => {
                let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
                write!(f, "({})", parts.join(","))
            }
            FixedPoint::Flag { k, w } => {
                write!(f, "({},{})", k, if *w == WeylPart::S { "s" } else { "1" })
            }
        }
    }
}

/// An affine character `y_α + c t`, stored un-normalized.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Weight {
    pub y: Vec<i64>,
    pub t: i64,
}

impl Weight {
    pub fn form(&self) -> LinearForm {
        let mut c: Vec<_> = self.y.iter().map(|&v| scalar::int(v)).collect();
        c.push(scalar::int(self.t));
        LinearForm(c)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Edge {
    pub a: FixedPoint,
    pub b: FixedPoint,
    pub weight: Weight,
    /// Index of the positive root, for lattice graphs.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub root: Option<usize>,
    /// `a - b = ±k α∨`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<i64>,
}

#[derive(Clone, Debug, Serialize)]
pub struct GkmGraph {
    pub label: String,
    pub d: u32,
    pub rank: usize,
    pub window: Window,
    pub vertices: Vec<FixedPoint>,
    pub edges: Vec<Edge>,
}

impl GkmGraph {
    pub fn form_ring(&self) -> Arc<Ring> {
        form_ring(self.rank)
    }

    pub fn has_vertex(&self, p: &FixedPoint) -> bool {
        self.vertices.binary_search(p).is_ok()
    }

    pub fn incident(&self, p: &FixedPoint) -> impl Iterator<Item = &Edge> {
        let p = p.clone();
        self.edges.iter().filter(move |e| e.a == p || e.b == p)
    }

    pub fn to_dot(&self) -> String {
        let mut s = format!("graph \"{} d={}\" {{\n", self.label, self.d);
        for v in &self.vertices {
            s.push_str(&format!("  \"{v}\";\n"));
        }
        for e in &self.edges {
            s.push_str(&format!(
                "  \"{}\" -- \"{}\" [label=\"{}\"];\n",
                e.a,
                e.b,
                e.weight.form().to_poly(&self.form_ring()).render()
            ));
        }
        s.push_str("}\n");
        s
    }
}

/// Vertices are the lattice points of `window`; `λ` and `μ` are joined when
/// `λ - μ = k α∨` with `1 <= k <= d`, with weight `y_α + ½(<α,λ>+<α,μ>) t`.
pub fn build_gkm_graph(rd: &RootDatum, d: u32, window: &Window) -> Result<GkmGraph> {
    if window.dim() != rd.rank {
        return Err(Error::Invalid(format!(
            "window dimension {} for rank {}",
            window.dim(),
            rd.rank
        )));
    }
    if window.is_empty() {
        return Err(Error::Invalid("empty window".into()));
    }
    let pts: Vec<Vec<i64>> = window
        .points()
        .into_iter()
        .map(|p| p.into_iter().map(i64::from).collect())
        .collect();
    let inside = |p: &[i64]| window.contains(&p.iter().map(|&x| x as i32).collect::<Vec<_>>());
    let mut edges = Vec::new();
    for lam in &pts {
        for (i, a) in rd.roots.iter().enumerate() {
            for k in 1..=d as i64 {
                let mu: Vec<i64> = lam.iter().zip(&a.coroot).map(|(l, c)| l + k * c).collect();
                if !inside(&mu) {
                    continue;
                }
                let twice = rd.pair(&a.root, lam) + rd.pair(&a.root, &mu);
                debug_assert_eq!(twice % 2, 0);
                edges.push(Edge {
                    a: FixedPoint::Lattice(lam.clone()),
                    b: FixedPoint::Lattice(mu),
                    weight: Weight {
                        y: a.root.clone(),
                        t: twice / 2,
                    },
                    root: Some(i),
                    k: Some(k),
                });
            }
        }
    }
    let mut vertices: Vec<FixedPoint> = pts.into_iter().map(FixedPoint::Lattice).collect();
    vertices.sort();
    edges.sort_by(|x, y| (&x.a, &x.b).cmp(&(&y.a, &y.b)));
    Ok(GkmGraph {
        label: rd.label.clone(),
        d,
        rank: rd.rank,
        window: window.clone(),
        vertices,
        edges,
    })
}

/// The rank-one affine flag chain on `k ∈ [lo, hi]`: `(k,1)–(k,s)` with
/// weight `y + 2kt` and `(k,1)–(k-1,s)` with weight `y + (2k-1)t`.
pub fn build_flag_graph(lo: i64, hi: i64) -> Result<GkmGraph> {
    if lo > hi {
        return Err(Error::Invalid("empty window".into()));
    }
    let mut vertices = Vec::new();
    let mut edges = Vec::new();
    for k in lo..=hi {
        vertices.push(FixedPoint::flag(k, false));
        vertices.push(FixedPoint::flag(k, true));
        edges.push(Edge {
            a: FixedPoint::flag(k, false),
            b: FixedPoint::flag(k, true),
            weight: Weight {
                y: vec![1],
                t: 2 * k,
            },
            root: None,
            k: None,
        });
        if k > lo {
            edges.push(Edge {
                a: FixedPoint::flag(k, false),
                b: FixedPoint::flag(k - 1, true),
                weight: Weight {
                    y: vec![1],
                    t: 2 * k - 1,
                },
                root: None,
                k: None,
            });
        }
    }
    vertices.sort();
    edges.sort_by(|x, y| (&x.a, &x.b).cmp(&(&y.a, &y.b)));
    Ok(GkmGraph {
        label: "SL2 flag".into(),
        d: 1,
        rank: 1,
        window: Window::new(vec![lo as i32], vec![hi as i32]),
        vertices,
        edges,
    })
}
