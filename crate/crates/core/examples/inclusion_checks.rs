//! Weyl anti-invariants inside `J^(d)` and the product rule
//! `J^(d1) J^(d2) ⊆ J^(d1+d2)`.

use gkm_workbench::arrangement::{
    anti_invariant_inclusion_check, graded_product_check, ProductRange, WindowPolicy,
};
use gkm_workbench::exactalg::Window;
use gkm_workbench::rootdata::parse_group;

fn main() -> gkm_workbench::Result<()> {
    let policy = WindowPolicy::default();
    for g in ["A2", "B2", "GL2"] {
        let rd = parse_group(g)?;
        let r = anti_invariant_inclusion_check(
            &rd,
            1,
            &[0, 1, 2, 3],
            &Window::cube(rd.rank, -1, 1),
            &policy,
        )?;
        println!(
            "{g}: {} alternants checked, pass {} ({:?})",
            r.checked, r.pass, r.status
        );
    }
    let gl3 = parse_group("GL3")?;
    let r = graded_product_check(
        &gl3,
        1,
        1,
        &ProductRange::Polynomial { max_total: 4 },
        &policy,
    )?;
    println!(
        "GL3 J·J ⊆ J^(2) through degree 4: {} ({} products)",
        r.pass, r.checked
    );
    let sl2 = parse_group("SL2")?;
    let r = graded_product_check(
        &sl2,
        1,
        1,
        &ProductRange::Windowed {
            max_y: 2,
            window: Window::cube(1, -1, 1),
        },
        &policy,
    )?;
    println!("SL2 windowed products: {} ({:?})", r.pass, r.status);
    Ok(())
}
