//! Drives the command-line layer in-process and prints the JSON reports.

use clap::Parser;
use gkm_workbench::cli::{run, Format, RunConfig};

fn main() -> gkm_workbench::Result<()> {
    for args in [
        vec!["gkm-workbench", "catalan", "--n", "3"],
        vec!["gkm-workbench", "compare-knot", "--link", "T33"],
        vec![
            "gkm-workbench",
            "gkm-verify",
            "--group",
            "SL2",
            "--d",
            "2",
            "--class",
            "b0",
        ],
    ] {
        let cfg = RunConfig::parse_from(&args);
        let rep = run(&cfg)?;
        println!(
            "$ {} -> exit {}\n{}",
            args[1..].join(" "),
            rep.exit as i32,
            rep.render(Format::Json)?
        );
    }
    Ok(())
}
