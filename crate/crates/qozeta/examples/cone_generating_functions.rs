//! Fundamental sets, multiplicities and generating functions of simplicial cones.
//!
//! ```bash
//! cargo run -p qozeta --example cone_generating_functions
//! ```

use qozeta::cones::{fundamental_set, genfun, j_simplicial, MonomialMap};
use qozeta::zeta::{chi_specialize, MotivicExpr};

fn main() -> qozeta::Result<()> {
    let gens = vec![vec![2, 3], vec![1, 1]];
    let cone = fundamental_set(&gens)?;
    println!("generators {:?}: |G| = {}, G = {:?}", gens, cone.multiplicity, cone.fundamental_set);
    // a lattice point k contributes L^{-(k1+k2)} T^{3k1+2k2}
    let map = MonomialMap { sigma: vec![1, 1], point: vec![3, 2] };
    let s = genfun(&cone, &map)?;
    println!("S = {s}");
    for (t, coeff) in s.t_expansion(8) {
        println!("  T^{t}: {coeff:?}");
    }
    let j = j_simplicial(&gens, &map)?;
    println!("J = {j}; chi((L-1)^2 S) = {}", chi_specialize(&s.mul(&MotivicExpr::l_minus_one().pow(2)))?);
    Ok(())
}
