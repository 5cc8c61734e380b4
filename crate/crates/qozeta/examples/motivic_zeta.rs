//! Motivic zeta functions and their Euler-characteristic specialization.
//!
//! ```bash
//! cargo run -p qozeta --example motivic_zeta
//! ```

use qozeta::mpoly::{parse, FormExponents, QOPair};
use qozeta::zeta::{chi_specialize, zmot_curve, zmot_nondeg_qo, ztop_qo};

fn main() -> qozeta::Result<()> {
    for text in ["z^2-x^3", "(z^2-x^3)^2+x^7"] {
        let p = QOPair::from_poly(&parse(text, &["x", "z"])?, FormExponents::ones(1))?;
        let z = zmot_curve(&p, 64)?;
        println!("{text}\n  Z_DL = {z}\n  chi   = {}\n  Z_top = {}", chi_specialize(&z)?, ztop_qo(&p, 64)?);
    }
    // Quasi-ordinary inputs with squarefree face polynomials use the non-degenerate formula.
    let p = QOPair::from_poly(&parse("z^2-x1^3*x2^3", &["x1", "x2", "z"])?, FormExponents::ones(2))?;
    let z = zmot_nondeg_qo(&p, 64)?;
    println!("z^2-x1^3*x2^3\n  Z_DL = {z}\n  chi   = {}", chi_specialize(&z)?);
    Ok(())
}
