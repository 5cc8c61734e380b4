//! Checks every strong candidate pole against the eigenvalues of the monodromy.
//!
//! ```bash
//! cargo run -p qozeta --example conjecture_check
//! ```

use qozeta::monodromy::check_conjecture;
use qozeta::mpoly::{parse, FormExponents, QOPair};

fn main() -> qozeta::Result<()> {
    let inputs: &[(&str, &[&str])] =
        &[("(z^2-x^3)^2+x^7", &["x", "z"]), ("x^2*(z^2-x^3)", &["x", "z"]), ("z^2-x1^2*x2^5", &["x1", "x2", "z"])];
    for (text, vars) in inputs {
        let p = QOPair::from_poly(&parse(text, vars)?, FormExponents::ones(vars.len() - 1))?;
        println!("== {text}");
        for v in check_conjecture(&p, 64)? {
            println!("  ({},{})  {}  {}", v.n, v.nu, v.status, v.witness);
        }
    }
    Ok(())
}
