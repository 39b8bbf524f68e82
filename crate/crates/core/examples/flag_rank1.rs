//! Rank-one affine flags: the chain graph, the classes `a_0, b_k, b_k'`,
//! and their images in the module `{1 - s, 1 - x, y} · ℚ[Λ] ⊗ ℚ[y]`.

use gkm_workbench::arrangement::{flag_class_image, flag_rank1_module_slice, WindowPolicy};
use gkm_workbench::exactalg::Window;
use gkm_workbench::gkm::{build_flag_graph, flag_rank1_classes, verify_residue_conditions};

fn main() -> gkm_workbench::Result<()> {
    let graph = build_flag_graph(-3, 3)?;
    let module =
        flag_rank1_module_slice(&[0, 1], &Window::cube(1, -3, 3), &WindowPolicy::default())?;
    println!(
        "module slice: rank {} of {} ({:?})",
        module.rank(),
        module.slice.ambient_dim(),
        module.status
    );
    for k in -2..=2 {
        for (c, tuple) in flag_rank1_classes(k) {
            let pass = verify_residue_conditions(&tuple, &graph)?.pass;
            let img = flag_class_image(c)?;
            let inside = module.slice.contains_poly(&img)?;
            println!(
                "{c:?}: residues {}, image {} in module: {inside}",
                if pass { "PASS" } else { "FAIL" },
                img.render()
            );
        }
    }
    Ok(())
}
