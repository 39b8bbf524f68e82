//! The SL2 GKM graph for `d = 2`, the classes `b_k`, their residue
//! certificates and their images at `t = 0`.

use gkm_workbench::exactalg::scalar;
use gkm_workbench::exactalg::Window;
use gkm_workbench::gkm::{
    build_gkm_graph, residue_antisymmetry_check, sl2_classes, specialize_t0,
    verify_residue_conditions, FixedPoint, RationalForm,
};
use gkm_workbench::rootdata::parse_group;

fn main() -> gkm_workbench::Result<()> {
    let rd = parse_group("SL2")?;
    let d = 2;
    let graph = build_gkm_graph(&rd, d, &Window::cube(1, -4, 4))?;
    println!(
        "{} vertices, {} edges",
        graph.vertices.len(),
        graph.edges.len()
    );

    for k in -2..=2 {
        let b = sl2_classes(d, k);
        let report = verify_residue_conditions(&b, &graph)?;
        println!(
            "b_{k}: {} -> {}",
            if report.pass { "PASS" } else { "FAIL" },
            specialize_t0(&b)?.render()
        );
    }
    println!(
        "antisymmetry (d=2,k=0,j=0,j'=2): {}",
        residue_antisymmetry_check(2, 0, 0, 2)?
    );

    // Flipping one sign breaks the residue cancellation.
    let mut bad = sl2_classes(1, 0);
    let p = FixedPoint::lattice(&[1]);
    let f = bad.entries[&p].clone();
    bad.entries
        .insert(p, RationalForm::new(f.num.scale(&scalar::int(-1)), f.den));
    let r = verify_residue_conditions(&bad, &build_gkm_graph(&rd, 1, &Window::cube(1, -2, 2))?)?;
    println!("sign-flipped b_0: {:?}", r.certificate);
    Ok(())
}
