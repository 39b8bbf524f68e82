//! Residue conditions characterizing equivariant homology inside the
//! localized fixed-point homology.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use super::forms::{LinearForm, RationalForm, RationalFormTuple};
use super::graph::{Edge, FixedPoint, GkmGraph};
use crate::error::{Error, Result};
use crate::exactalg::{MultiPoly, RationalSeries};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    /// A denominator factor that is not the weight of an incident edge.
    StrayPole { vertex: String, factor: String },
    /// Two proportional denominator factors at one vertex.
    DoublePole { vertex: String, factor: String },
    /// Residues along an edge weight do not cancel on a connected component.
    Residue {
        edge: (String, String),
        weight: String,
        sum: String,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ResidueReport {
    pub pass: bool,
    pub certificate: Option<Violation>,
}

/// Residue of `form` along the hyperplane `chi = 0`, as a rational function
/// on that hyperplane parametrized by eliminating the first variable of
/// `chi`. `None` when `form` has no pole along `chi`.
pub fn residue_along(form: &RationalForm, chi: &LinearForm) -> Result<Option<RationalSeries>> {
    let ring = form.ring().clone();
    let chi = chi.normalized();
    let mut scale = None;
    let mut others = Vec::new();
    for f in &form.den {
        match f.ratio_to(&chi) {
            Some(c) if scale.is_none() => scale = Some(c),
            Some(_) => return Err(Error::Invalid("pole of order two".into())),
            None => others.push(f.to_poly(&ring)),
        }
    }
    let Some(c) = scale else {
        return Ok(None);
    };
    let v = chi.first_var().expect("nonzero weight");
    // chi = z_v + rest, so z_v = -rest on the hyperplane.
    let mut rest = MultiPoly::zero(&ring);
    for (i, a) in chi.0.iter().enumerate().skip(v + 1) {
        rest = &rest + &MultiPoly::var(&ring, i).scale(a);
    }
    let value = -&rest;
    let num = form.num.substitute(v, &value)?;
    let mut den = MultiPoly::constant(&ring, c);
    for o in &others {
        den = &den * &o.substitute(v, &value)?;
    }
    Ok(Some(RationalSeries::new(num, den)?))
}

fn render_form(f: &LinearForm, g: &GkmGraph) -> String {
    f.to_poly(&g.form_ring()).render()
}

/// Checks both residue conditions for `tuple` on the graph `g`.
pub fn verify_residue_conditions(tuple: &RationalFormTuple, g: &GkmGraph) -> Result<ResidueReport> {
    for p in tuple.entries.keys() {
        if !g.has_vertex(p) {
            return Err(Error::OutsideWindow(p.to_string()));
        }
    }
    let forms: BTreeMap<&FixedPoint, RationalForm> = tuple
        .entries
        .iter()
        .map(|(p, f)| (p, f.simplified()))
        .collect();

    // Poles only along incident edge weights, each of order at most one.
    for (p, f) in &forms {
        for (i, factor) in f.den.iter().enumerate() {
            if f.den[..i].iter().any(|o| o.ratio_to(factor).is_some()) {
                return Ok(fail(Violation::DoublePole {
                    vertex: p.to_string(),
                    factor: render_form(factor, g),
                }));
            }
            if !g
                .incident(p)
                .any(|e| factor.ratio_to(&e.weight.form()).is_some())
            {
                return Ok(fail(Violation::StrayPole {
                    vertex: p.to_string(),
                    factor: render_form(factor, g),
                }));
            }
        }
    }

    // Group edges by weight up to scale, then into connected components.
    let mut classes: BTreeMap<LinearForm, Vec<&Edge>> = BTreeMap::new();
    for e in &g.edges {
        classes
            .entry(e.weight.form().normalized())
            .or_default()
            .push(e);
    }
    let index = |p: &FixedPoint| {
        g.vertices
            .binary_search(p)
            .expect("edge endpoints are vertices")
    };
    let mut components: Vec<(LinearForm, Vec<usize>, Vec<&Edge>)> = Vec::new();
    for (chi, edges) in &classes {
        let mut uf = UnionFind::new(g.vertices.len());
        for e in edges {
            uf.union(index(&e.a), index(&e.b));
        }
        let mut comps: BTreeMap<usize, (Vec<usize>, Vec<&Edge>)> = BTreeMap::new();
        for e in edges {
            let root = uf.find(index(&e.a));
            comps.entry(root).or_default().1.push(e);
        }
        for (root, (verts, es)) in comps.iter_mut() {
            *verts = (0..g.vertices.len())
                .filter(|&v| uf.find(v) == *root)
                .collect();
            components.push((chi.clone(), verts.clone(), es.clone()));
        }
    }

    let sums: Vec<Result<Option<RationalSeries>>> = components
        .par_iter()
        .map(|(chi, verts, _)| {
            let mut sum: Option<RationalSeries> = None;
            for &v in verts {
                if let Some(f) = forms.get(&g.vertices[v]) {
                    if let Some(r) = residue_along(f, chi)? {
                        sum = Some(match sum {
                            Some(s) => &s + &r,
                            None => r,
                        });
                    }
                }
            }
            Ok(sum.filter(|s| !s.is_zero()))
        })
        .collect();

    let mut failing: Vec<(&Edge, String, String)> = Vec::new();
    for ((chi, _, edges), s) in components.iter().zip(sums) {
        if let Some(s) = s? {
            let first = edges
                .iter()
                .min_by(|x, y| (&x.a, &x.b).cmp(&(&y.a, &y.b)))
                .unwrap();
            failing.push((first, render_form(chi, g), s.render()));
        }
    }
    failing.sort_by(|x, y| (&x.0.a, &x.0.b).cmp(&(&y.0.a, &y.0.b)));
    Ok(match failing.into_iter().next() {
        Some((e, weight, sum)) => fail(Violation::Residue {
            edge: (e.a.to_string(), e.b.to_string()),
            weight,
            sum,
        }),
        None => ResidueReport {
            pass: true,
            certificate: None,
        },
    })
}

fn fail(v: Violation) -> ResidueReport {
    ResidueReport {
        pass: false,
        certificate: Some(v),
    }
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> Self {
        Self((0..n).collect())
    }

    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.0[r] != r {
            r = self.0[r];
        }
        let mut y = x;
        while self.0[y] != r {
            let next = self.0[y];
            self.0[y] = r;
            y = next;
        }
        r
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.0[ra.max(rb)] = ra.min(rb);
        }
    }
}

/// Sum of the residues of two forms along `chi`; zero means they cancel.
pub fn residue_sum(a: &RationalForm, b: &RationalForm, chi: &LinearForm) -> Result<RationalSeries> {
    let ring = a.ring().clone();
    let zero = RationalSeries::zero(&ring);
    let ra = residue_along(a, chi)?.unwrap_or_else(|| zero.clone());
    let rb = residue_along(b, chi)?.unwrap_or(zero);
    Ok(&ra + &rb)
}
