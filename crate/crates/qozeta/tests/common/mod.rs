//! Shared input corpus for the integration tests.

#![allow(dead_code)]

use qozeta::mpoly::{parse, FormExponents, QOPair};

/// Curves `h(x, z)`, including depth-2 inputs and pairs with a monomial factor.
pub const CURVES: &[&str] = &[
    "z^2-x^3",
    "z^3-x^4",
    "z^2-x^5",
    "z^3-x^5",
    "z^3-x^7",
    "z^4-x^6",
    "z^2-x^2",
    "z*(z^2-x^3)",
    "x^2*(z^2-x^3)",
    "x^3*z",
    "(z^2-x^5)*(z-x^2)*(z^3-x^2)",
    "(z^2-x^3)^2+x^7",
    "(z^2-x^3)^2-4*x^5*z-x^7",
    "(z^3-x^2)^2+x^5",
];

/// Quasi-ordinary inputs with two or more `x`-variables: `(polynomial, variables)`.
pub const SURFACES: &[(&str, &str)] = &[
    ("z^2-x1^2*x2^5", "x1,x2,z"),
    ("z^3+x1*x2", "x1,x2,z"),
    ("z^2+x1*x2", "x1,x2,z"),
    ("z^2-x1^2*x2", "x1,x2,z"),
    ("z^2-x1*x2", "x1,x2,z"),
    ("z^3+x1*x2*x3", "x1,x2,x3,z"),
    ("(z^2-x1^2*x2)*(z^2-4*x1^2*x2)", "x1,x2,z"),
    ("(z^2-x1^3*x2)^2+x1^7*x2^2", "x1,x2,z"),
    ("(z^2-x1*x2)^2+x1^3*x2^3", "x1,x2,z"),
    ("(z^2-x1^3*x2)*(z^2-x1^5*x2^3)", "x1,x2,z"),
    ("(z-x1*x2)*(z^3-x1^4*x2^3)", "x1,x2,z"),
    ("(z^2-x1^2*x2*x3)*(z^2-x1^4*x2^3*x3)", "x1,x2,x3,z"),
    ("(z^2-x^3)^2+x^11*y", "x,y,z"),
    ("((z^2-x^3*y)^2+x^7*y^2)*((z^2-x^3*y*u)^2+x^7*y^2*u^3)", "x,y,u,z"),
];

/// Parses `text` in `vars` (last is `z`) with all form exponents 1.
pub fn pair(text: &str, vars: &str) -> QOPair {
    let vars: Vec<&str> = vars.split(',').collect();
    let h = parse(text, &vars).unwrap_or_else(|e| panic!("{text}: {e}"));
    QOPair::from_poly(&h, FormExponents::ones(vars.len() - 1)).unwrap_or_else(|e| panic!("{text}: {e}"))
}

/// Every corpus entry as `(text, pair)`.
pub fn all_pairs() -> Vec<(String, QOPair)> {
    let mut out: Vec<(String, QOPair)> = CURVES.iter().map(|t| (t.to_string(), pair(t, "x,z"))).collect();
    out.extend(SURFACES.iter().map(|(t, v)| (t.to_string(), pair(t, v))));
    out
}
