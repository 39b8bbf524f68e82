//! Root data, Weyl group orders and the Vandermonde element.

use gkm_workbench::rootdata::{parse_group, vandermonde};

fn main() -> gkm_workbench::Result<()> {
    for name in ["GL3", "SL2", "A2", "B2", "G2", "A1xA1"] {
        let rd = parse_group(name)?;
        println!(
            "{rd}: |W| = {}, Coxeter number {}",
            rd.weyl_group().len(),
            rd.coxeter_number
        );
        for (i, r) in rd.roots.iter().enumerate() {
            println!("  root {i}: y-form {:?}, coroot {:?}", r.root, r.coroot);
        }
    }
    let gl2 = parse_group("GL2")?;
    let ring = gl2.laurent_ring();
    println!("Δ for GL2: {}", vandermonde(&gl2, 1, &ring).render());
    Ok(())
}
