//! Hilbert series of points on the node, three lines and the tacnode from
//! the MSV formula, with the punctual series.

use gkm_workbench::curves::{msv_assemble, pinned_global, punctual_series, CurveSpec};

fn main() -> gkm_workbench::Result<()> {
    for (n, d) in [(2, 1), (3, 1), (2, 2)] {
        let spec = CurveSpec::known(n, d)?;
        let global = msv_assemble(&spec)?;
        let agrees = pinned_global(n, d)?.is_some_and(|p| p == global);
        println!(
            "x^{n} = y^{}: genus {}, closed form agrees: {agrees}",
            n as u32 * d,
            spec.genus(n)
        );
        println!("  global   {global}");
        println!("  punctual {}", punctual_series(&global, n as u32));
    }
    Ok(())
}
