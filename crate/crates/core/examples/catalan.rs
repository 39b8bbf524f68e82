//! Bigraded minimal generators of the alternant ideal: Catalan numbers.

use std::time::Instant;

use gkm_workbench::arrangement::catalan_quotient;

fn main() -> gkm_workbench::Result<()> {
    for n in 2..=4 {
        let start = Instant::now();
        let t = catalan_quotient(n, None)?;
        println!(
            "n={n}: total {} (symmetric {}, certified {}) in {:.2?}",
            t.total,
            t.is_symmetric(),
            t.certified,
            start.elapsed()
        );
        for ((a, b), v) in &t.table {
            println!("  ({a},{b}) -> {v}");
        }
    }
    Ok(())
}
