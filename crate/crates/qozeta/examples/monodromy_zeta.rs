//! Monodromy zeta functions of curves and surfaces, and the Milnor number read off
//! the characteristic polynomial `(1−t)/ζ(t)`.
//!
//! ```bash
//! cargo run -p qozeta --example monodromy_zeta
//! ```

use qozeta::monodromy::{zeta_monodromy_qo, CycloProduct};
use qozeta::mpoly::{parse, FormExponents, QOPair};

fn main() -> qozeta::Result<()> {
    for text in ["x^2+z^3", "x^3+z^4", "(z^2-x^3)^2+x^7"] {
        let p = QOPair::from_poly(&parse(text, &["x", "z"])?, FormExponents::ones(1))?;
        let zeta = zeta_monodromy_qo(&p, 64)?;
        let delta = CycloProduct::factor(1).mul(&zeta.inverse());
        let mu = delta.expand().map(|c| c.len() - 1);
        println!("{text}: zeta = {zeta}, (1-t)/zeta = {delta}, mu = {mu:?}");
    }
    let p = QOPair::from_poly(&parse("z^3+x1*x2", &["x1", "x2", "z"])?, FormExponents::ones(2))?;
    println!("z^3+x1*x2: zeta = {}", zeta_monodromy_qo(&p, 64)?);
    Ok(())
}
