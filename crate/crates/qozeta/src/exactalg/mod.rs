//! Exact arithmetic: rationals, univariate polynomials over number-field
//! towers, squarefree decomposition, factorization and root adjunction.
//!
//! ```
//! use qozeta::exactalg::{adjoin_root, factor_irreducible, FieldTower, UniPoly};
//! let q = FieldTower::rationals();
//! // adjoin i with i^2 = -1, then t^2 + 1 splits
//! let (qi, i) = adjoin_root(&q, &UniPoly::from_ints(&q, &[1, 0, 1])).unwrap();
//! let f = factor_irreducible(&UniPoly::from_ints(&qi, &[1, 0, 1])).unwrap();
//! assert_eq!(f.factors.len(), 2);
//! assert!(i.mul(&i).add(&qozeta::exactalg::AlgNum::one(&qi)).is_zero());
//! ```

mod factor_q;
pub mod qpoly;
pub mod rat;
mod tower;
mod unipoly;

pub use factor_q::factor_squarefree_q;
pub use rat::{rat, rat_from_str, rat_to_string, rint, Rat};
pub use tower::{AlgNum, FieldTower};
pub use unipoly::{
    adjoin_root, adjoin_root_named, factor_irreducible, fmt_rat_poly, squarefree_decomposition, Factorization,
    UniPoly,
};
