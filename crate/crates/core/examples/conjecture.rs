//! The conjectural quotient module against MSV, and the subspace family
//! `U_1, U_2, U_3` for three lines.

use gkm_workbench::curves::quotient::coefficients;
use gkm_workbench::curves::{conjecture_vs_msv, grdim_subspace_family, ClosedForms};
use gkm_workbench::exactalg::scalar;

fn main() -> gkm_workbench::Result<()> {
    for (n, d) in [(2, 1), (3, 1), (2, 2)] {
        let r = conjecture_vs_msv(n, d, 6)?;
        println!("n={n} d={d}: {} over {} degrees", r.status, r.compared);
    }

    let fam = grdim_subspace_family(4)?;
    let forms = ClosedForms::new()?;
    let want = coefficients(&forms.u12_cap_u3, 4)?;
    for ((p, h), dims) in &fam.slices {
        let c = want
            .get(&(*p, *h))
            .cloned()
            .unwrap_or_else(|| scalar::int(0));
        println!(
            "(p={p}, h={h}): U1 {} U1∩U2 {} (U1+U2)∩U3 {} [closed form {c}] sum {}",
            dims.u[0], dims.u1_cap_u2, dims.u12_cap_u3, dims.total
        );
    }
    println!("gr dim V = {}", forms.quotient()?);
    Ok(())
}
