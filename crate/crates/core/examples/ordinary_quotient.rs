//! Ordinary equivariant homology of the GL2 fiber as a quotient of
//! `ℚ[Λ] ⊗ ℚ[y]`, windowed.

use gkm_workbench::arrangement::{ordinary_homology_quotient_slice, WindowPolicy};
use gkm_workbench::exactalg::Window;
use gkm_workbench::rootdata::parse_group;

fn main() -> gkm_workbench::Result<()> {
    let rd = parse_group("GL2")?;
    for d in 1..=2 {
        for b in 0..=2 {
            let q = ordinary_homology_quotient_slice(
                &rd,
                d,
                &[b],
                &Window::cube(2, 0, 2),
                &WindowPolicy::default(),
            )?;
            println!(
                "d={d} y-degree {b}: {} = {} - {} ({:?})",
                q.quotient_dim,
                q.ambient_dim,
                q.submodule.rank(),
                q.submodule.status
            );
        }
    }
    let q = ordinary_homology_quotient_slice(
        &rd,
        1,
        &[0],
        &Window::cube(2, 0, 1),
        &WindowPolicy::default(),
    )?;
    println!("{}", serde_json::to_string_pretty(&q.to_json())?);
    Ok(())
}
