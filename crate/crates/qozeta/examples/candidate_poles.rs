//! Candidate and strong candidate poles, with the place each pair came from.
//!
//! ```bash
//! cargo run -p qozeta --example candidate_poles
//! ```

use qozeta::mpoly::{parse, FormExponents, QOPair};
use qozeta::zeta::{candidate_poles, strong_candidate_poles, ztop_qo};

fn main() -> qozeta::Result<()> {
    let inputs: &[(&str, &[&str])] = &[("z^2-x1^2*x2", &["x1", "x2", "z"]), ("(z^2-x^3)^2+x^11*y", &["x", "y", "z"])];
    for (text, vars) in inputs {
        let p = QOPair::from_poly(&parse(text, vars)?, FormExponents::ones(vars.len() - 1))?;
        println!("== {text}");
        print!("CP\n{}", candidate_poles(&p, 64)?);
        print!("SCP\n{}", strong_candidate_poles(&p, 64)?);
        println!("Z_top = {}", ztop_qo(&p, 64)?);
    }
    Ok(())
}
