//! Rational functions in normal form, truncated expansion, and a slice
//! computation in `ℚ[x1, x2, y1, y2]`.

use gkm_workbench::exactalg::{
    Bidegree, GradedSlice, MonomialBasis, MultiPoly, RationalSeries, Ring,
};

fn main() -> gkm_workbench::Result<()> {
    let ring = Ring::formal(&["q", "t"], &[]);
    let q = MultiPoly::named(&ring, "q");
    let one = MultiPoly::one(&ring);

    // (1 - q^2)/(1 - q)^2 reduces to (1 + q)/(1 - q).
    let s = RationalSeries::new(&one - &q.pow(2), (&one - &q).pow(2))?;
    println!("normal form: {s}");
    println!("through q^5: {}", s.expand(&[(0, 5)])?);

    let xy = Ring::polynomial_xy(2, false);
    let basis = MonomialBasis::slice(&xy, &Bidegree::algebraic(1, 1), None)?;
    let v = |n: &str| MultiPoly::named(&xy, n);
    let diag = &(&v("x1") - &v("x2")) * &(&v("y1") + &v("y2"));
    let span = GradedSlice::span_polys(&basis, [&diag])?;
    println!(
        "slice (1,1) has dimension {}; one relation leaves {}",
        basis.len(),
        span.codim()
    );
    Ok(())
}
