//! Punctual series of three lines and the tacnode against torus-link
//! homology, including a perturbed reference that must fail.

use gkm_workbench::curves::knots::{knot_ring, reference};
use gkm_workbench::curves::{knot_compare, knot_compare_with, Link};
use gkm_workbench::exactalg::{MultiPoly, RationalSeries};

fn main() -> gkm_workbench::Result<()> {
    for link in [Link::T33, Link::T24] {
        let r = knot_compare(link)?;
        println!("{link}: {} normalization {:?}", r.status, r.normalization);
        if let Some(t) = r.text_factor_equal {
            println!("  with the (1 - L^2)^r factor instead: equal = {t}");
        }
    }
    let ring = knot_ring();
    let q = RationalSeries::from_poly(MultiPoly::named(&ring, "Q"));
    let perturbed = &reference(Link::T24)? + &q;
    println!(
        "perturbed T24: {}",
        knot_compare_with(Link::T24, &perturbed)?.status
    );
    Ok(())
}
