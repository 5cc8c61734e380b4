//! Exact singularity invariants of quasi-ordinary polynomials.
//!
//! The crate computes, in exact rational and algebraic-number arithmetic,
//! the local topological zeta function, the local motivic zeta function (for
//! curves and for non-degenerate inputs), candidate and strong candidate
//! poles, and the monodromy zeta function of a quasi-ordinary polynomial
//! `h(x1, …, xd, z)`, following the Newton-map recursion rather than an
//! embedded resolution. It also reports, pole by pole, whether the monodromy
//! conjecture is witnessed.
//!
//! Modules, bottom-up:
//! - [`exactalg`]: rationals, number-field towers, factorization;
//! - [`mpoly`]: multivariate polynomials, discriminants, good coordinates, Newton maps;
//! - [`cones`]: Newton polyhedra, dual cones, fundamental sets, generating functions;
//! - [`zeta`]: topological and motivic zeta functions, specialization, pole sets;
//! - [`monodromy`]: monodromy zeta functions and conjecture verdicts;
//! - [`cli`]: job specification, reports, JSON and the command-line driver.

pub mod cli;
pub mod cones;
pub mod error;
pub mod exactalg;
pub mod monodromy;
pub mod mpoly;
pub mod zeta;

pub use error::{Error, Result};
