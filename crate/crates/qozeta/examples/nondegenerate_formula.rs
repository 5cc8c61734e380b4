//! The non-degenerate formula over the dual fan of a Newton polyhedron,
//! checked against the recursion, and a five-variable example.
//!
//! ```bash
//! cargo run -p qozeta --example nondegenerate_formula
//! ```

use qozeta::cones::build_general_fan;
use qozeta::mpoly::{parse, FormExponents, QOPair};
use qozeta::zeta::{ztop_nondeg, ztop_qo, NondegOptions};

fn main() -> qozeta::Result<()> {
    // Two independent computations of the same function.
    let h = parse("z^2-x1^3*x2^3", &["x1", "x2", "z"])?;
    let p = QOPair::from_poly(&h, FormExponents::ones(2))?;
    let a = ztop_qo(&p, 64)?;
    let b = ztop_nondeg(&h, &[1, 1], &NondegOptions::default())?;
    println!("z^2-x1^3*x2^3: recursion {a}, fan formula {b}, equal: {}", a == b);

    // Facets of dimension ≥ 2 cannot be certified exactly, so the caller vouches for them.
    let vars = ["x1", "x2", "x3", "x4", "x5"];
    let h = parse("x1^3+x2^3+x3^3+x4^3+x5^6", &vars)?;
    let opts = NondegOptions { assume_nondegenerate: true, ..Default::default() };
    println!("x1^3+x2^3+x3^3+x4^3+x5^6: Z_top = {}", ztop_nondeg(&h, &[1, 1, 1, 1], &opts)?);
    let fan = build_general_fan(&h, &[1, 1, 1, 1], 5)?;
    for (i, face) in fan.faces.iter().enumerate().filter(|(_, f)| f.dim == 4) {
        println!("  facet rays {:?}, S-term {}", face.rays, fan.s(i)?);
    }
    Ok(())
}
