//! Local topological zeta functions by the Newton-map recursion.
//!
//! ```bash
//! cargo run -p qozeta --example topological_zeta
//! ```

use qozeta::mpoly::{parse, FormExponents, QOPair};
use qozeta::zeta::{ztop_qo, DEFAULT_MAX_SHIFTS};

fn main() -> qozeta::Result<()> {
    let inputs: &[(&str, &[&str])] = &[
        ("z^2-x^3", &["x", "z"]),
        ("(z^2-x^3)^2+x^7", &["x", "z"]),
        ("(z^2-x^5)*(z-x^2)*(z^3-x^2)", &["x", "z"]),
        ("z^3+x1*x2", &["x1", "x2", "z"]),
        ("(z^2-x^3)^2+x^11*y", &["x", "y", "z"]),
    ];
    for (text, vars) in inputs {
        let h = parse(text, vars)?;
        let p = QOPair::from_poly(&h, FormExponents::ones(vars.len() - 1))?;
        let z = ztop_qo(&p, DEFAULT_MAX_SHIFTS)?;
        println!("{text}");
        println!("  Z_top = {z}");
        for (n, nu, order) in z.poles() {
            let s0 = if n == 1 { format!("-{nu}") } else { format!("-{nu}/{n}") };
            println!("  pole s = {s0} of order {order}");
        }
    }
    Ok(())
}
