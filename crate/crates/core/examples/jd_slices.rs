//! Slices of `J^(d)` for GL3 against the independent vanishing-order oracle
//! and the alternant ideal `I^d`.

use gkm_workbench::arrangement::{
    alternant_slice, jd_slice, oracle_slice_dim, SliceDomain, WindowPolicy,
};
use gkm_workbench::exactalg::{Bidegree, Ring, Window};
use gkm_workbench::rootdata::parse_group;

fn main() -> gkm_workbench::Result<()> {
    let rd = parse_group("GL3")?;
    let ring = Ring::polynomial_xy(3, false);
    for d in 1..=2 {
        for (a, b) in [(3, 0), (2, 1), (1, 2), (3, 1), (4, 2)] {
            let dom = SliceDomain::polynomial(&ring, Bidegree::algebraic(a, b))?;
            let j = jd_slice(&rd, d, &dom, &WindowPolicy::default())?;
            let alt = alternant_slice(3, d, Bidegree::algebraic(a, b))?;
            println!(
                "d={d} ({a},{b}): J {} oracle {} I^d {}",
                j.rank(),
                oracle_slice_dim(3, d, a as u32, b as u32),
                alt.rank()
            );
        }
    }

    // Laurent case: SL2 over a window, with the margin history.
    let sl2 = parse_group("SL2")?;
    let lring = sl2.laurent_ring();
    let dom = SliceDomain::windowed(&lring, &[1], &Window::cube(1, -2, 2));
    let s = jd_slice(&sl2, 1, &dom, &WindowPolicy::default())?;
    println!(
        "SL2 y-degree 1 over [-2,2]: rank {} ({:?} at margin {}, history {:?})",
        s.rank(),
        s.status,
        s.margin,
        s.history
    );
    Ok(())
}
