//! Zeta-function algebra: rational functions of `s`, motivic expressions,
//! χ-specialization, and the topological and motivic recursions.

mod motivic;
mod motivic_qo;
mod poles;
mod ratfunc;
mod topological;
mod tree;

pub use motivic::{chi_specialize, LTPoly, MotivicExpr};
pub use motivic_qo::{zmot_base, zmot_curve, zmot_nondeg_qo};
pub use poles::{candidate_poles, strong_candidate_poles, PoleSet};
pub use ratfunc::RatFuncS;
pub use topological::{
    pullback_identity_terms, ztop_base, ztop_nondeg, ztop_nondeg_report, ztop_qo, NondegOptions, NondegResult,
    DEFAULT_MAX_DIM, DEFAULT_MAX_SHIFTS,
};
pub use tree::{newton_tree, Arrows, TreeBranch, TreeNode};
