//! `y_1, .., y_n` as a regular sequence on `J^(d)`, and a module where it fails.

use gkm_workbench::arrangement::freeness::Quotient;
use gkm_workbench::arrangement::{freeness_check, freeness_check_module};
use gkm_workbench::exactalg::{MultiPoly, Ring};

fn main() -> gkm_workbench::Result<()> {
    for (n, d) in [(2, 1), (2, 2), (3, 1)] {
        let r = freeness_check(n, d, Some(6))?;
        println!("n={n} d={d}: {}", if r.pass { "free" } else { "not free" });
    }
    let ring = Ring::polynomial_xy(2, false);
    let q = Quotient::new(&ring, vec![MultiPoly::named(&ring, "y1")]);
    println!("ℚ[x,y]/(y1): {:?}", freeness_check_module(&q, 4)?.failure);
    Ok(())
}
