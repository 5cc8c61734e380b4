//! Error type shared by every module of the crate.

use thiserror::Error;

/// Every failure the library can report.
///
/// Variants carry enough context (the offending sub-expression or face) to be
/// shown verbatim to a user of the command-line front end.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed or out-of-contract input (zero polynomial, bad form exponents, ...).
    #[error("invalid input: {0}")]
    InvalidInput(String),
    /// Polynomial text could not be parsed.
    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    /// An identifier that is not in the declared variable list.
    #[error("unknown variable `{name}` at byte {pos}")]
    UnknownVariable { name: String, pos: usize },
    /// `^` followed by a negative integer.
    #[error("negative exponent at byte {pos}")]
    NegativeExponent { pos: usize },
    /// The z-discriminant vanishes identically.
    #[error("polynomial is not squarefree in z (zero discriminant)")]
    NotSquarefree,
    /// The z-discriminant is not a monomial times a unit.
    #[error("polynomial is not quasi-ordinary in z: {0}")]
    NotQuasiOrdinaryInZ(String),
    /// Coordinate normalization did not terminate within the shift budget.
    #[error("good-coordinate normalization exceeded {max_shifts} shifts (offending face: {face}); the root is an infinite power series")]
    NonTerminatingNormalization { max_shifts: usize, face: String },
    /// The compact faces do not form a monotone path.
    #[error("compact faces of the Newton polyhedron are not a monotone path: {0}")]
    NotMonotonePath(String),
    /// A Newton map was requested with an element that is not an n1-th root of a face root.
    #[error("invalid root for Newton map: {0}")]
    InvalidRoot(String),
    /// Linearly dependent or non-integral cone generators.
    #[error("invalid cone: {0}")]
    InvalidCone(String),
    /// The general-fan engine refuses to work in too many dimensions.
    #[error("dimension guard exceeded: {dim} variables > max {max}")]
    DimensionGuard { dim: usize, max: usize },
    /// The Newton polyhedron is degenerate where non-degeneracy is required.
    #[error("degenerate principal part: {0}")]
    Degenerate(String),
    /// Motivic zeta requested outside the supported class.
    #[error("motivic zeta unsupported for this input ({0}); use the topological computation instead")]
    UnsupportedDegenerateMotivic(String),
    /// Euler-characteristic specialization met a genuine pole in the expansion variable.
    #[error("specialization pole: {0}")]
    SpecializationPole(String),
    /// Monodromy zeta function not available for this input class.
    #[error("monodromy zeta function unsupported: {0}")]
    UnsupportedMonodromy(String),
    /// An internal consistency check failed (a bug, not a user error).
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl Error {
    /// True for errors caused by the user's input (exit code 1), false for internal failures (exit code 2).
    pub fn is_input_error(&self) -> bool {
        !matches!(self, Error::Internal(_) | Error::SpecializationPole(_))
    }
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
