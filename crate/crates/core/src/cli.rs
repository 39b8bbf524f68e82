//! Command-line front end. Every subcommand builds a [`Report`]; output is
//! rendered after all computation, so the bytes depend only on the config.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::fs;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::arrangement::{
    catalan_quotient, flag_class_image, flag_rank1_module_slice, freeness_check, jd_slice,
    ordinary_homology_quotient_slice, SliceDomain, Status, WindowPolicy,
};
use crate::curves::{
    conjecture_vs_msv, knot_compare, msv_assemble, pinned_global, punctual_series, CurveSpec, Link,
};
use crate::error::{Error, Result};
use crate::exactalg::{Bidegree, Ring, Window};
use crate::gkm::classes::{flag_rank1_class, point_class, sl2_classes, FlagClass};
use crate::gkm::forms::{RationalFormTuple, TupleJson};
use crate::gkm::graph::{build_flag_graph, build_gkm_graph, FixedPoint, GkmGraph};
use crate::gkm::residue::verify_residue_conditions;
use crate::rootdata::{build_root_datum, parse_group, Label, RootDatum};

/// Environment variable capping the number of worker threads.
pub const THREADS_ENV: &str = "GKM_WORKBENCH_THREADS";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Exit {
    Ok = 0,
    Mismatch = 1,
    Inconclusive = 2,
    Usage = 64,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Json,
    Csv,
    Human,
    /// Graphviz, for `gkm-graph` only.
    Dot,
}

#[derive(Debug, Parser)]
#[command(
    name = "gkm-workbench",
    version,
    about = "Exact slicewise algebra for affine Springer fibers and curve Hilbert series"
)]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    pub format: Format,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args, Clone)]
pub struct GroupArgs {
    /// `GL`, `SL`, `A1`, `A1xA1`, `A2`, `B2`, `G2`, or a fused form like `SL2`.
    #[arg(long, default_value = "GL")]
    pub group: String,
    /// Rank parameter for `GL`/`SL`.
    #[arg(long)]
    pub n: Option<usize>,
}

impl GroupArgs {
    pub fn datum(&self) -> Result<RootDatum> {
        match self.n {
            Some(n) => build_root_datum(self.group.parse::<Label>()?, Some(n)),
            None => parse_group(&self.group),
        }
    }
}

#[derive(Debug, Args, Clone)]
pub struct WindowArgs {
    /// Lattice window `lo,hi`, applied to every coordinate.
    #[arg(long, allow_hyphen_values = true)]
    pub window: Option<String>,
    /// Starting margin (defaults to `2d`).
    #[arg(long)]
    pub margin: Option<i32>,
    /// Largest margin tried before reporting inconclusive.
    #[arg(long)]
    pub max_margin: Option<i32>,
}

impl WindowArgs {
    fn policy(&self) -> Result<WindowPolicy> {
        if self.margin.is_some_and(|m| m < 0) || self.max_margin.is_some_and(|m| m < 0) {
            return Err(Error::Invalid("margins must be nonnegative".into()));
        }
        Ok(WindowPolicy {
            margin: self.margin,
            max_margin: self.max_margin,
        })
    }

    fn window(&self, dim: usize) -> Result<Option<Window>> {
        self.window
            .as_deref()
            .map(|w| parse_window(w, dim))
            .transpose()
    }
}

pub fn parse_window(s: &str, dim: usize) -> Result<Window> {
    let parts: Vec<i32> = s
        .split(',')
        .map(|x| {
            x.trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad window {s:?}; expected lo,hi")))
        })
        .collect::<Result<_>>()?;
    match parts[..] {
        [lo, hi] if lo <= hi => Ok(Window::cube(dim, lo, hi)),
        _ => Err(Error::Parse(format!(
            "bad window {s:?}; expected lo,hi with lo <= hi"
        ))),
    }
}

fn parse_list(s: &str) -> Result<Vec<i64>> {
    s.split(',')
        .map(|x| {
            x.trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad integer list {s:?}")))
        })
        .collect()
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Ranks of `J^(d)` slices.
    JdSeries {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long, default_value_t = 1)]
        d: u32,
        /// Largest total degree (or `y`-degree over a window).
        #[arg(long, default_value_t = 8)]
        maxdeg: i64,
        #[command(flatten)]
        window: WindowArgs,
    },
    /// Bigraded dimensions of `J / ⟨x, y⟩ J`.
    Catalan {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        maxdeg: Option<i64>,
    },
    /// Regular-sequence check for `y_1..y_n` on `J^(d)`.
    Freeness {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 1)]
        d: u32,
        #[arg(long, default_value_t = 8)]
        maxdeg: i64,
    },
    /// The GKM graph over a window (or the rank-one flag chain with `--flag`).
    GkmGraph {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long, default_value_t = 1)]
        d: u32,
        #[arg(long, allow_hyphen_values = true, default_value = "-2,2")]
        window: String,
        #[arg(long)]
        flag: bool,
    },
    /// Residue conditions for a built-in class or a JSON tuple.
    GkmVerify {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long, default_value_t = 1)]
        d: u32,
        /// `a0`, `b<k>`, or with `--flag` also `bp<k>`.
        #[arg(long)]
        class: Option<String>,
        /// A tuple of forms in the canonical JSON layout.
        #[arg(long)]
        tuple: Option<PathBuf>,
        /// Window `lo,hi`; defaults to the support widened by `d`.
        #[arg(long, allow_hyphen_values = true)]
        window: Option<String>,
        #[arg(long)]
        flag: bool,
    },
    /// MSV series of the curve `x^a = y^b` given as `a,b`.
    Msv {
        #[arg(long)]
        curve: String,
    },
    /// The conjectural module against the MSV series.
    ConjectureCheck {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: u32,
        #[arg(long, default_value_t = 6)]
        order: u32,
    },
    /// Punctual series against torus-link homology.
    CompareKnot {
        #[arg(long)]
        link: String,
    },
    /// Ordinary equivariant homology as a quotient over a window.
    OrdinaryQuotient {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long, default_value_t = 1)]
        d: u32,
        /// Comma-separated `y`-degrees.
        #[arg(long, default_value = "0")]
        ydeg: String,
        #[command(flatten)]
        window: WindowArgs,
    },
    /// The rank-one affine flag module and its classes.
    FlagRank1 {
        #[arg(long, default_value = "0,1")]
        ydeg: String,
        #[command(flatten)]
        window: WindowArgs,
    },
}

/// A finished report: JSON body plus optional tabular and text forms.
pub struct Report {
    pub json: Value,
    pub csv: Option<String>,
    pub human: String,
    pub dot: Option<String>,
    pub exit: Exit,
}

impl Report {
    fn new(body: &impl Serialize, human: String, exit: Exit) -> Result<Self> {
        Ok(Self {
            json: serde_json::to_value(body)?,
            csv: None,
            human,
            dot: None,
            exit,
        })
    }

    pub fn render(&self, format: Format) -> Result<String> {
        match format {
            // `Value` objects are key-sorted, which fixes the byte layout.
            Format::Json => Ok(serde_json::to_string_pretty(&self.json)? + "\n"),
            Format::Human => Ok(self.human.clone() + "\n"),
            Format::Csv => self
                .csv
                .clone()
                .ok_or_else(|| Error::Invalid("csv output is not available here".into())),
            Format::Dot => self
                .dot
                .clone()
                .ok_or_else(|| Error::Invalid("dot output is only available for gkm-graph".into())),
        }
    }
}

fn status_exit(s: Status) -> Exit {
    if s == Status::Inconclusive {
        Exit::Inconclusive
    } else {
        Exit::Ok
    }
}

fn pass_word(pass: bool) -> &'static str {
    if pass {
        "PASS"
    } else {
        "FAIL"
    }
}

fn jd_series(group: &GroupArgs, d: u32, maxdeg: i64, wargs: &WindowArgs) -> Result<Report> {
    if maxdeg < 0 {
        return Err(Error::Invalid("maxdeg must be nonnegative".into()));
    }
    let rd = group.datum()?;
    let policy = wargs.policy()?;
    let mut rows = Vec::new();
    let mut worst = Status::Exact;
    match wargs.window(rd.rank)? {
        None => {
            if !rd.label.starts_with("GL") {
                return Err(Error::Invalid(format!("{} needs --window", rd.label)));
            }
            let ring = Ring::polynomial_xy(rd.rank, false);
            for t in 0..=maxdeg {
                for a in (0..=t).rev() {
                    let dom = SliceDomain::polynomial(&ring, Bidegree::algebraic(a, t - a))?;
                    let s = jd_slice(&rd, d, &dom, &policy)?;
                    rows.push(json!({"a": a, "b": t - a, "rank": s.rank(), "dim": s.slice.ambient_dim(), "status": s.status}));
                }
            }
        }
        Some(w) => {
            let ring = rd.laurent_ring();
            for b in 0..=maxdeg {
                let dom = SliceDomain::windowed(&ring, &[b], &w);
                let s = jd_slice(&rd, d, &dom, &policy)?;
                if s.status == Status::Inconclusive {
                    worst = Status::Inconclusive;
                } else if worst == Status::Exact {
                    worst = s.status;
                }
                rows.push(json!({"b": b, "rank": s.rank(), "dim": s.slice.ambient_dim(), "status": s.status, "margin": s.margin}));
            }
        }
    }
    let body = json!({"group": rd.label.to_string(), "rank": rd.rank, "d": d, "maxdeg": maxdeg, "status": worst, "rows": rows});
    let mut csv = String::from("a,b,rank,dim,status\n");
    let mut human = format!(
        "J^({d}) for {} ({})",
        rd.label,
        serde_json::to_string(&worst)?
    );
    for r in &rows {
        let a = r.get("a").map_or(String::new(), |v| v.to_string());
        csv.push_str(&format!(
            "{},{},{},{},{}\n",
            a,
            r["b"],
            r["rank"],
            r["dim"],
            r["status"].as_str().unwrap_or("")
        ));
        human.push_str(&format!(
            "\n  a={:<3} b={:<3} rank {} of {}",
            a, r["b"], r["rank"], r["dim"]
        ));
    }
    let mut rep = Report::new(&body, human, status_exit(worst))?;
    rep.csv = Some(csv);
    Ok(rep)
}

fn catalan(n: usize, maxdeg: Option<i64>) -> Result<Report> {
    let t = catalan_quotient(n, maxdeg)?;
    let table: BTreeMap<String, usize> = t
        .table
        .iter()
        .map(|(&(a, b), &v)| (format!("{a},{b}"), v))
        .collect();
    let body = json!({
        "n": t.n, "truncation": t.truncation, "total": t.total, "table": table,
        "top_degree": t.top_degree, "certified": t.certified, "symmetric": t.is_symmetric(),
        "status": if t.certified { "complete" } else { "inconclusive" },
    });
    let mut csv = String::from("a,b,dim\n");
    for (&(a, b), v) in &t.table {
        csv.push_str(&format!("{a},{b},{v}\n"));
    }
    let human = format!(
        "n={} total {} over a+b <= {}{}",
        n,
        t.total,
        t.truncation,
        if t.certified {
            ""
        } else {
            " (truncated below the top degree)"
        }
    );
    let mut rep = Report::new(
        &body,
        human,
        if t.certified {
            Exit::Ok
        } else {
            Exit::Inconclusive
        },
    )?;
    rep.csv = Some(csv);
    Ok(rep)
}

fn freeness(n: usize, d: u32, maxdeg: i64) -> Result<Report> {
    if maxdeg < 1 {
        return Err(Error::Invalid("maxdeg must be positive".into()));
    }
    let r = freeness_check(n, d, Some(maxdeg))?;
    let failed = r.failure.as_ref().map(|f| f.stage);
    let stages: Vec<Value> = (1..=n)
        .map(|k| {
            let status = match failed {
                Some(s) if s == k => "FAIL",
                Some(s) if s < k => "UNCHECKED",
                _ => "PASS",
            };
            json!({"stage": k, "variable": format!("y{k}"), "status": status})
        })
        .collect();
    let human = stages
        .iter()
        .map(|s| format!("y{}: {}", s["stage"], s["status"].as_str().unwrap_or("")))
        .collect::<Vec<_>>()
        .join("\n");
    let body = json!({"n": n, "d": d, "truncation": r.truncation, "status": pass_word(r.pass), "stages": stages, "failure": r.failure});
    Report::new(&body, human, if r.pass { Exit::Ok } else { Exit::Mismatch })
}

fn gkm_graph(group: &GroupArgs, d: u32, window: &str, flag: bool) -> Result<Report> {
    let g = if flag {
        let w = parse_window(window, 1)?;
        build_flag_graph(w.lo[0] as i64, w.hi[0] as i64)?
    } else {
        let rd = group.datum()?;
        build_gkm_graph(&rd, d, &parse_window(window, rd.rank)?)?
    };
    let human = format!(
        "{} d={}: {} vertices, {} edges",
        g.label,
        g.d,
        g.vertices.len(),
        g.edges.len()
    );
    let mut rep = Report::new(&g, human, Exit::Ok)?;
    rep.dot = Some(g.to_dot());
    Ok(rep)
}

/// The smallest window containing the support of `t`, widened by `d`.
fn support_window(t: &RationalFormTuple, rank: usize, d: u32) -> Window {
    let mut lo = vec![0i32; rank];
    let mut hi = vec![0i32; rank];
    for (i, p) in t.entries.keys().enumerate() {
        let coords: Vec<i32> = match p {
            FixedPoint::Lattice(v) => v.iter().map(|&x| x as i32).collect(),
            FixedPoint::Flag { k, .. } => vec![*k as i32],
        };
        for c in 0..rank {
            lo[c] = if i == 0 {
                coords[c]
            } else {
                lo[c].min(coords[c])
            };
            hi[c] = if i == 0 {
                coords[c]
            } else {
                hi[c].max(coords[c])
            };
        }
    }
    let d = d as i32;
    Window::new(
        lo.iter().map(|x| x - d).collect(),
        hi.iter().map(|x| x + d).collect(),
    )
}

fn gkm_verify(
    group: &GroupArgs,
    d: u32,
    class: Option<&str>,
    tuple: Option<&PathBuf>,
    window: Option<&str>,
    flag: bool,
) -> Result<Report> {
    let (tuple, name) = match (class, tuple) {
        (Some(_), Some(_)) | (None, None) => {
            return Err(Error::Invalid(
                "give exactly one of --class and --tuple".into(),
            ))
        }
        (None, Some(path)) => {
            let j: TupleJson = serde_json::from_str(&fs::read_to_string(path)?)?;
            (
                RationalFormTuple::from_json(&j)?,
                path.display().to_string(),
            )
        }
        (Some(c), None) if flag => (flag_rank1_class(c.parse::<FlagClass>()?), c.to_string()),
        (Some(c), None) => {
            let rd = group.datum()?;
            let t = if c == "a0" {
                point_class(rd.rank)
            } else if let Some(k) = c.strip_prefix('b') {
                if rd.rank != 1 {
                    return Err(Error::Invalid("b<k> classes exist in rank one only".into()));
                }
                sl2_classes(
                    d,
                    k.parse()
                        .map_err(|_| Error::Parse(format!("bad class {c:?}")))?,
                )
            } else {
                return Err(Error::Parse(format!(
                    "unknown class {c:?} (expected a0 or b<k>)"
                )));
            };
            (t, c.to_string())
        }
    };
    let graph: GkmGraph = if flag {
        let w = match window {
            Some(w) => parse_window(w, 1)?,
            None => support_window(&tuple, 1, 1),
        };
        build_flag_graph(w.lo[0] as i64, w.hi[0] as i64)?
    } else {
        let rd = group.datum()?;
        let w = match window {
            Some(w) => parse_window(w, rd.rank)?,
            None => support_window(&tuple, rd.rank, d),
        };
        build_gkm_graph(&rd, d, &w)?
    };
    let r = verify_residue_conditions(&tuple, &graph)?;
    let human = match &r.certificate {
        None => "PASS".to_string(),
        Some(v) => format!("FAIL {}", serde_json::to_string(v)?),
    };
    let body = json!({"class": name, "graph": graph.label, "d": graph.d, "status": pass_word(r.pass), "certificate": r.certificate});
    Report::new(&body, human, if r.pass { Exit::Ok } else { Exit::Mismatch })
}

fn msv(curve: &str) -> Result<Report> {
    let parts = parse_list(curve)?;
    let (n, d) = match parts[..] {
        [a, b] if a >= 2 && b > 0 && b % a == 0 => (a as usize, (b / a) as u32),
        _ => {
            return Err(Error::Invalid(format!(
                "curve {curve:?} must be a,b with b a positive multiple of a >= 2"
            )))
        }
    };
    let global = msv_assemble(&CurveSpec::known(n, d)?)?;
    let punctual = punctual_series(&global, n as u32);
    let pinned = pinned_global(n, d)?;
    let status = match &pinned {
        Some(p) if *p == global => "match",
        Some(_) => "mismatch",
        None => "computed",
    };
    let body = json!({
        "curve": [n, n * d as usize], "n": n, "d": d, "status": status,
        "global": global.render(), "punctual": punctual.render(),
        "global_json": global.to_json(), "normalization": null, "first_mismatch": null,
    });
    let human = format!(
        "{status}\nglobal   {}\npunctual {}",
        global.render(),
        punctual.render()
    );
    Report::new(
        &body,
        human,
        if status == "mismatch" {
            Exit::Mismatch
        } else {
            Exit::Ok
        },
    )
}

fn conjecture(n: usize, d: u32, order: u32) -> Result<Report> {
    let r = conjecture_vs_msv(n, d, order)?;
    let human = match &r.first_mismatch {
        None => format!("match through q^{order} ({} degrees)", r.compared),
        Some(m) => format!(
            "mismatch at {:?}: msv {} vs module {}",
            m.degree, m.expected, m.computed
        ),
    };
    let mut body = serde_json::to_value(&r)?;
    body["normalization"] = Value::Null;
    let exit = if r.first_mismatch.is_none() {
        Exit::Ok
    } else {
        Exit::Mismatch
    };
    Ok(Report {
        json: body,
        csv: None,
        human,
        dot: None,
        exit,
    })
}

fn compare_knot(link: &str) -> Result<Report> {
    let r = knot_compare(link.parse::<Link>()?)?;
    let human = format!("{} {}", r.status, r.normalization.as_deref().unwrap_or("-"));
    let mut body = serde_json::to_value(&r)?;
    body["first_mismatch"] = Value::Null;
    let exit = if r.equal { Exit::Ok } else { Exit::Mismatch };
    Ok(Report {
        json: body,
        csv: None,
        human,
        dot: None,
        exit,
    })
}

fn ordinary(group: &GroupArgs, d: u32, ydeg: &str, wargs: &WindowArgs) -> Result<Report> {
    let rd = group.datum()?;
    let w = wargs
        .window(rd.rank)?
        .ok_or_else(|| Error::Invalid("ordinary-quotient needs --window".into()))?;
    let q = ordinary_homology_quotient_slice(&rd, d, &parse_list(ydeg)?, &w, &wargs.policy()?)?;
    let j = q.to_json();
    let human = format!(
        "quotient {} = {} - {} ({})",
        j.quotient_dim,
        j.ambient_dim,
        j.submodule_rank,
        serde_json::to_string(&j.status)?
    );
    Report::new(&j, human, status_exit(j.status))
}

fn flag_rank1(ydeg: &str, wargs: &WindowArgs) -> Result<Report> {
    let w = wargs.window(1)?.unwrap_or_else(|| Window::cube(1, -3, 3));
    let degs = parse_list(ydeg)?;
    let s = flag_rank1_module_slice(&degs, &w, &wargs.policy()?)?;
    // Classes whose image stays inside the window and the listed y-degrees.
    let mut classes = Vec::new();
    let mut all_in = true;
    for k in w.lo[0] + 1..=w.hi[0] {
        for c in [FlagClass::B(k as i64), FlagClass::BPrime(k as i64)] {
            let img = flag_class_image(c)?;
            let inside = s.slice.contains_poly(&img).unwrap_or(false);
            all_in &= inside;
            classes.push(
                json!({"class": format!("{c:?}"), "image": img.render(), "contained": inside}),
            );
        }
    }
    if degs.contains(&1) {
        let inside = s
            .slice
            .contains_poly(&flag_class_image(FlagClass::A0)?)
            .unwrap_or(false);
        all_in &= inside;
        classes.push(json!({"class": "A0", "image": "y", "contained": inside}));
    }
    let body = json!({"rank": s.rank(), "dim": s.slice.ambient_dim(), "status": s.status, "margin": s.margin, "classes": classes});
    let human = format!(
        "rank {} of {}, classes {}",
        s.rank(),
        s.slice.ambient_dim(),
        pass_word(all_in)
    );
    let exit = if !all_in {
        Exit::Mismatch
    } else {
        status_exit(s.status)
    };
    Report::new(&body, human, exit)
}

pub fn run(config: &RunConfig) -> Result<Report> {
    match &config.command {
        Command::JdSeries {
            group,
            d,
            maxdeg,
            window,
        } => jd_series(group, *d, *maxdeg, window),
        Command::Catalan { n, maxdeg } => catalan(*n, *maxdeg),
        Command::Freeness { n, d, maxdeg } => freeness(*n, *d, *maxdeg),
        Command::GkmGraph {
            group,
            d,
            window,
            flag,
        } => gkm_graph(group, *d, window, *flag),
        Command::GkmVerify {
            group,
            d,
            class,
            tuple,
            window,
            flag,
        } => gkm_verify(
            group,
            *d,
            class.as_deref(),
            tuple.as_ref(),
            window.as_deref(),
            *flag,
        ),
        Command::Msv { curve } => msv(curve),
        Command::ConjectureCheck { n, d, order } => conjecture(*n, *d, *order),
        Command::CompareKnot { link } => compare_knot(link),
        Command::OrdinaryQuotient {
            group,
            d,
            ydeg,
            window,
        } => ordinary(group, *d, ydeg, window),
        Command::FlagRank1 { ydeg, window } => flag_rank1(ydeg, window),
    }
}

fn configure_threads() {
    if let Some(n) = std::env::var(THREADS_ENV)
        .ok()
        .and_then(|v| v.parse::<usize>().ok())
        .filter(|&n| n > 0)
    {
        // Fails only if a pool already exists, which is harmless.
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global();
    }
}

/// Parses `args`, runs, writes the report and returns the exit code.
pub fn main_with<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let config = match RunConfig::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                Exit::Usage as i32
            } else {
                Exit::Ok as i32
            };
        }
    };
    configure_threads();
    let outcome = run(&config).and_then(|rep| Ok((rep.render(config.format)?, rep.exit)));
    match outcome {
        Ok((text, exit)) => {
            let written = match &config.output {
                Some(path) => fs::write(path, &text),
                None => {
                    print!("{text}");
                    Ok(())
                }
            };
            if let Err(e) = written {
                eprintln!("error: {e}");
                return Exit::Usage as i32;
            }
            exit as i32
        }
        Err(e) => {
            eprintln!("error: {e}");
            Exit::Usage as i32
        }
    }
}
