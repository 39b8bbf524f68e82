//! The thirteen acceptance criteria, exact, one report line each.
//! Runs as a plain binary so the lines show in `cargo test` output.

mod common;

use std::collections::BTreeMap;
use std::process::Command;
use std::time::{Duration, Instant};

use gkm_workbench::arrangement::alternant::{catalan_quotient, AlternantIdeal};
use gkm_workbench::arrangement::{
    freeness_check, jd_slice, oracle_slice_dim, ordinary_homology_quotient_slice,
    symbolic_power_oracle, SliceDomain, Status, WindowPolicy,
};
use gkm_workbench::curves::msv::ql_poly;
use gkm_workbench::curves::quotient::QuotientModuleSpec;
use gkm_workbench::curves::{
    conjecture_vs_msv, knot_compare, msv_assemble, quotient_hilbert_slice, CurveSpec, Link,
};
use gkm_workbench::exactalg::{scalar, Bidegree, MultiPoly, RationalSeries, Ring, Window};
use gkm_workbench::gkm::classes::specialization_ring;
use gkm_workbench::gkm::{
    build_flag_graph, build_gkm_graph, flag_rank1_classes, residue_antisymmetry_check, sl2_classes,
    specialize_t0, verify_residue_conditions, RationalFormTuple,
};
use gkm_workbench::rootdata::{build_root_datum, parse_group, Label};
use rayon::prelude::*;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn secs(d: Duration) -> String {
    format!("{:.2}s", d.as_secs_f64())
}

fn c1_catalan_totals() -> Outcome {
    let mut notes = Vec::new();
    for (n, total, limit) in [(2, 2, 10.0), (3, 5, 10.0), (4, 14, 300.0)] {
        let start = Instant::now();
        let t = catalan_quotient(n, None).map_err(|e| e.to_string())?;
        let took = start.elapsed();
        ensure(t.total == total, || {
            format!("n={n}: total {} != {total}", t.total)
        })?;
        ensure(t.certified, || {
            format!("n={n}: truncation {} below top degree", t.truncation)
        })?;
        ensure(took.as_secs_f64() < limit, || {
            format!("n={n}: {} over {limit}s", secs(took))
        })?;
        notes.push(format!("C_{n}={total} in {}", secs(took)));
    }
    Ok(notes.join(", "))
}

fn c2_qt_symmetry() -> Outcome {
    let t = catalan_quotient(3, None).map_err(|e| e.to_string())?;
    let expected: BTreeMap<(i64, i64), usize> = [
        ((3, 0), 1),
        ((2, 1), 1),
        ((1, 2), 1),
        ((0, 3), 1),
        ((1, 1), 1),
    ]
    .into();
    ensure(t.table == expected, || format!("table {:?}", t.table))?;
    ensure(t.is_symmetric(), || "not symmetric".into())?;
    ensure(t.table == common::qt_catalan(3), || {
        "differs from the Dyck path count".into()
    })?;
    Ok("n=3 table symmetric, equals the Dyck path q,t-count".into())
}

fn polynomial_degrees(max: i64) -> Vec<(i64, i64)> {
    (0..=max)
        .flat_map(|t| (0..=t).map(move |a| (a, t - a)))
        .collect()
}

fn jd_rank(
    n: usize,
    d: u32,
    a: i64,
    b: i64,
) -> Result<gkm_workbench::exactalg::GradedSlice, String> {
    let rd = build_root_datum(Label::GL, Some(n)).map_err(|e| e.to_string())?;
    let ring = Ring::polynomial_xy(n, false);
    let dom =
        SliceDomain::polynomial(&ring, Bidegree::algebraic(a, b)).map_err(|e| e.to_string())?;
    Ok(jd_slice(&rd, d, &dom, &WindowPolicy::default())
        .map_err(|e| e.to_string())?
        .slice)
}

fn c3_haiman_slices() -> Outcome {
    let mut checked = 0;
    for n in 2..=3 {
        for d in 1..=2 {
            let mut ideal = AlternantIdeal::new(n).map_err(|e| e.to_string())?;
            ideal.fill_total(d, 8);
            for (a, b) in polynomial_degrees(8) {
                let alt = ideal.slice(d, a, b).map_err(|e| e.to_string())?.rank();
                let jd = jd_rank(n, d, a, b)?.rank();
                ensure(alt == jd, || {
                    format!("n={n} d={d} ({a},{b}): I^d rank {alt}, J^(d) rank {jd}")
                })?;
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} slices, n<=3, d<=2, a+b<=8"))
}

fn c4_oracle_equivalence() -> Outcome {
    let cases: Vec<(usize, u32, i64, i64)> = (2..=3)
        .flat_map(|n| {
            (1..=2).flat_map(move |d| {
                polynomial_degrees(8)
                    .into_iter()
                    .map(move |(a, b)| (n, d, a, b))
            })
        })
        .collect();
    cases.par_iter().try_for_each(|&(n, d, a, b)| {
        let s = jd_rank(n, d, a, b)?;
        let oracle = oracle_slice_dim(n, d, a as u32, b as u32);
        ensure(s.rank() == oracle, || {
            format!(
                "n={n} d={d} ({a},{b}): spanning {} vs oracle {oracle}",
                s.rank()
            )
        })?;
        for f in s.row_polys() {
            let ok = symbolic_power_oracle(n, d, &f).map_err(|e| e.to_string())?;
            ensure(ok, || {
                format!("n={n} d={d}: row {} rejected by the oracle", f.render())
            })?;
        }
        Ok::<(), String>(())
    })?;
    Ok(format!("{} slices agree", cases.len()))
}

fn c5_freeness() -> Outcome {
    for (n, d) in [(2, 1), (2, 2), (3, 1)] {
        let r = freeness_check(n, d, Some(8)).map_err(|e| e.to_string())?;
        ensure(r.pass, || format!("n={n} d={d}: {:?}", r.failure))?;
    }
    Ok("(2,1), (2,2), (3,1) through total degree 8".into())
}

/// Entries whose +1 perturbation still passes the residue check.
fn perturbation_survivors(
    t: &RationalFormTuple,
    g: &gkm_workbench::gkm::GkmGraph,
) -> Result<Vec<String>, String> {
    let mut out = Vec::new();
    for p in t.entries.keys() {
        let bad = t.perturbed(p, &scalar::int(1));
        if verify_residue_conditions(&bad, g)
            .map_err(|e| e.to_string())?
            .pass
        {
            out.push(p.to_string());
        }
    }
    Ok(out)
}

fn c6_gkm_classes() -> Outcome {
    let rd = parse_group("SL2").map_err(|e| e.to_string())?;
    let mut count = 0;
    let mut survivors = std::collections::BTreeSet::new();
    for d in 1..=3u32 {
        let g = build_gkm_graph(&rd, d, &Window::cube(1, -6, 9)).map_err(|e| e.to_string())?;
        for k in -3..=3 {
            let b = sl2_classes(d, k);
            let r = verify_residue_conditions(&b, &g).map_err(|e| e.to_string())?;
            ensure(r.pass, || format!("b_{k} at d={d}: {:?}", r.certificate))?;
            for p in perturbation_survivors(&b, &g)? {
                survivors.insert(format!("b_{k} (d={d}) at {p}"));
            }
            count += 1;
        }
    }
    let g = build_flag_graph(-5, 5).map_err(|e| e.to_string())?;
    for k in -3..=3 {
        for (c, t) in flag_rank1_classes(k) {
            let r = verify_residue_conditions(&t, &g).map_err(|e| e.to_string())?;
            ensure(r.pass, || format!("flag {c:?}: {:?}", r.certificate))?;
            for p in perturbation_survivors(&t, &g)? {
                survivors.insert(format!("flag {c:?} at {p}"));
            }
            count += 1;
        }
    }
    let mut pairs = 0;
    for d in 1..=4u32 {
        for k in -3..=3 {
            for j in 0..d {
                for jp in j + 1..=d {
                    let ok = residue_antisymmetry_check(d, k, j, jp).map_err(|e| e.to_string())?;
                    ensure(ok, || format!("antisymmetry d={d} k={k} ({j},{jp})"))?;
                    pairs += 1;
                }
            }
        }
    }
    ensure(survivors.is_empty(), || {
        format!("{count} classes pass, {pairs} residue pairs cancel, but +1 perturbations still pass: {}", survivors.into_iter().collect::<Vec<_>>().join("; "))
    })?;
    Ok(format!(
        "{count} classes pass and fail when perturbed, {pairs} residue pairs cancel"
    ))
}

fn c7_specialization() -> Outcome {
    let ring = specialization_ring();
    for d in 1..=3u32 {
        for k in -3..=3i64 {
            let s = specialize_t0(&sl2_classes(d, k)).map_err(|e| e.to_string())?;
            let one = MultiPoly::one(&ring);
            let x = MultiPoly::var(&ring, 0);
            let expected = &(&MultiPoly::var_pow(&ring, 0, k as i32) * &(&one - &x).pow(d))
                * &MultiPoly::var_pow(&ring, 1, -(d as i32));
            ensure(s == expected, || format!("d={d} k={k}: {}", s.render()))?;
        }
    }
    Ok("b'_k = x^k (1-x)^d / y^d for d<=3, |k|<=3".into())
}

fn over_base(num: &[(i64, i32, i32)], n: u32) -> Result<RationalSeries, String> {
    let den = &ql_poly(&[(1, 0, 0), (-1, 1, 0)]).pow(n) * &ql_poly(&[(1, 0, 0), (-1, 1, 1)]).pow(n);
    RationalSeries::new(ql_poly(num), den).map_err(|e| e.to_string())
}

fn c8_msv_golden() -> Outcome {
    let start = Instant::now();
    let lines = msv_assemble(&CurveSpec::known(3, 1).map_err(|e| e.to_string())?)
        .map_err(|e| e.to_string())?;
    let tac = msv_assemble(&CurveSpec::known(2, 2).map_err(|e| e.to_string())?)
        .map_err(|e| e.to_string())?;
    let took = start.elapsed();
    let lines_displayed = over_base(
        &[
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
        ],
        3,
    )?;
    let tac_displayed = over_base(
        &[(1, 4, 2), (-1, 3, 1), (1, 2, 1), (-1, 1, 0), (1, 0, 0)],
        2,
    )?;
    ensure(lines == lines_displayed, || {
        format!("three lines: {}", lines.render())
    })?;
    ensure(tac == tac_displayed, || {
        format!("tacnode: {}", tac.render())
    })?;
    ensure(took < Duration::from_secs(1), || {
        format!("took {}", secs(took))
    })?;
    Ok(format!(
        "three lines and tacnode in normal form, {}",
        secs(took)
    ))
}

fn c9_knots() -> Outcome {
    let mut notes = Vec::new();
    for (link, g) in [(Link::T24, "T^0"), (Link::T33, "T^3")] {
        let r = knot_compare(link).map_err(|e| e.to_string())?;
        ensure(r.equal && r.normalization.as_deref() == Some(g), || {
            format!("{link}: {:?}", r.normalization)
        })?;
        notes.push(format!("{link} equal with {g}"));
    }
    Ok(notes.join(", "))
}

fn c10_conjecture() -> Outcome {
    for (n, d) in [(3, 1), (2, 1)] {
        let r = conjecture_vs_msv(n, d, 6).map_err(|e| e.to_string())?;
        ensure(r.status == "match", || {
            format!("({n},{d}): {:?}", r.first_mismatch)
        })?;
    }
    let r = conjecture_vs_msv(2, 2, 6).map_err(|e| e.to_string())?;
    Ok(format!(
        "(3,1) and (2,1) match through q^6; (2,2) report: {} over {} degrees",
        r.status, r.compared
    ))
}

fn c11_h2() -> Outcome {
    for n in 2..=3 {
        let spec = QuotientModuleSpec::new(n, 1).map_err(|e| e.to_string())?;
        let v = quotient_hilbert_slice(&spec, Bidegree::curve(2, 2)).map_err(|e| e.to_string())?;
        ensure(v == n + 1, || format!("n={n}: {v}"))?;
    }
    Ok("dim H_2(C^[2]) = n+1 for n = 2, 3".into())
}

fn c12_ordinary_quotient() -> Outcome {
    let rd = build_root_datum(Label::GL, Some(2)).map_err(|e| e.to_string())?;
    let q = ordinary_homology_quotient_slice(
        &rd,
        1,
        &[0],
        &Window::cube(2, 0, 1),
        &WindowPolicy::default(),
    )
    .map_err(|e| e.to_string())?;
    ensure(q.quotient_dim == 3, || {
        format!("quotient {}", q.quotient_dim)
    })?;
    ensure(q.submodule.status == Status::Stabilized, || {
        format!("{:?}", q.submodule.status)
    })?;
    let ring = rd.laurent_ring();
    let gen = &MultiPoly::one(&ring) - &MultiPoly::monomial(&ring, &[1, -1, 0, 0]);
    let inside = &gen * &MultiPoly::monomial(&ring, &[0, 1, 0, 0]);
    ensure(q.submodule.rank() == 1, || {
        format!("rank {}", q.submodule.rank())
    })?;
    ensure(
        q.submodule
            .slice
            .contains_poly(&inside)
            .map_err(|e| e.to_string())?,
        || "generator missing".into(),
    )?;
    Ok(format!(
        "quotient 3, stabilized at margin {}, spanned by (1 - x1/x2)x2",
        q.submodule.margin
    ))
}

fn c13_determinism() -> Outcome {
    let configs: &[&[&str]] = &[
        &["catalan", "--n", "3"],
        &["gkm-verify", "--group", "SL2", "--d", "2", "--class", "b0"],
        &["compare-knot", "--link", "T33"],
        &["msv", "--curve", "2,4"],
        &["conjecture-check", "--n", "3", "--d", "1", "--order", "6"],
        &[
            "jd-series",
            "--group",
            "A2",
            "--d",
            "1",
            "--maxdeg",
            "2",
            "--window",
            "-1,1",
        ],
        &[
            "ordinary-quotient",
            "--group",
            "GL",
            "--n",
            "2",
            "--d",
            "1",
            "--window",
            "0,1",
        ],
    ];
    for args in configs {
        let out = |threads: &str| {
            Command::new(env!("CARGO_BIN_EXE_gkm-workbench"))
                .args(*args)
                .env("GKM_WORKBENCH_THREADS", threads)
                .output()
                .map_err(|e| e.to_string())
        };
        let (a, b) = (out("1")?, out("4")?);
        ensure(!a.stdout.is_empty(), || format!("{args:?}: empty output"))?;
        ensure(
            a.stdout == b.stdout && a.status.code() == b.status.code(),
            || format!("{args:?} differs between runs"),
        )?;
    }
    Ok(format!(
        "{} configs byte-identical across runs",
        configs.len()
    ))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 13] = [
        ("Catalan totals", c1_catalan_totals),
        ("q,t-symmetry", c2_qt_symmetry),
        ("Haiman equality slicewise", c3_haiman_slices),
        ("oracle equivalence", c4_oracle_equivalence),
        ("freeness witness", c5_freeness),
        ("GKM classes", c6_gkm_classes),
        ("t=0 specialization", c7_specialization),
        ("MSV golden identities", c8_msv_golden),
        ("knot comparisons", c9_knots),
        ("conjecture cross-check", c10_conjecture),
        ("H_2(C^[2]) coefficient", c11_h2),
        ("ordinary-homology quotient", c12_ordinary_quotient),
        ("determinism", c13_determinism),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = f();
        let took = secs(start.elapsed());
        match outcome {
            Ok(note) => println!("criterion {:>2} {name}: PASS ({note}) [{took}]", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} {name}: FAIL ({why}) [{took}]", i + 1);
            }
        }
    }
    println!(
        "acceptance: {} of {} criteria pass",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
