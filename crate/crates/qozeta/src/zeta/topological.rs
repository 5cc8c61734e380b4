//! Topological zeta functions: the depth-0 closed form, the Newton-map
//! recursion for quasi-ordinary pairs, and the non-degenerate fan formula.

use super::RatFuncS;
use crate::cones::{build_general_fan, build_newton_path, j_edge, j_vertex};
use crate::error::{Error, Result};
use crate::mpoly::{branches, good_coordinates, MPoly, QOPair};

/// Default bound on coordinate shifts per normalization.
pub const DEFAULT_MAX_SHIFTS: usize = 64;

/// Default bound on the number of variables for the general fan.
pub const DEFAULT_MAX_DIM: usize = 5;

/// `Z_top` of a depth-0 pair `x^N·z^ε·unit`: `(1/(s+1))^ε · Π_{N_j>0} 1/(ν_j + N_j·s)`.
///
/// Errors with [`Error::InvalidInput`] if the pair is not a base pair.
pub fn ztop_base(p: &QOPair) -> Result<RatFuncS> {
    if !p.is_base() {
        return Err(Error::InvalidInput(format!("`{}` has Weierstrass degree {} > 1, not a base pair", p.full(), p.weierstrass_degree())));
    }
    let mut out = if p.epsilon() == 1 { RatFuncS::inv_linear(1, 1) } else { RatFuncS::one() };
    for (&n, &nu) in p.n.iter().zip(&p.nu.nu) {
        if n > 0 {
            out = out.mul(&RatFuncS::inv_linear(n as i64, nu as i64));
        }
    }
    Ok(out)
}

/// `Z_top` of a quasi-ordinary pair by the Newton-map recursion:
/// `Σ_τ J_τ − Σ_q v(q)·J_γq + Σ_q mult(Δγq)·Σ_j Z_top(pull-back_{q,j})`.
///
/// The pair is brought into good coordinates first. Each irreducible factor of an
/// edge's face polynomial is pulled back once and weighted by its number of roots.
///
/// ```
/// use qozeta::mpoly::{parse, FormExponents, QOPair};
/// use qozeta::zeta::ztop_qo;
/// let h = parse("z^2-x^3", &["x", "z"]).unwrap();
/// let p = QOPair::from_poly(&h, FormExponents::ones(1)).unwrap();
/// assert_eq!(ztop_qo(&p, 64).unwrap().to_string(), "(4*s+5)/((s+1)*(6*s+5))");
/// ```
pub fn ztop_qo(p: &QOPair, max_shifts: usize) -> Result<RatFuncS> {
    if p.is_base() {
        return ztop_base(p);
    }
    let (p, _) = good_coordinates(p, max_shifts)?;
    let path = build_newton_path(&p)?;
    let nu = &p.nu.nu;
    let mut out = RatFuncS::zero();
    for q in 0..=path.r() {
        out = out.add(&j_vertex(&path, q, nu, &p.n));
    }
    for e in &path.edges {
        out = out.sub(&j_edge(e, nu).scale_int(e.v as i64));
    }
    for b in branches(&p, max_shifts)? {
        let mult = path.edges[b.edge].mult();
        out = out.add(&ztop_qo(&b.pullback, max_shifts)?.scale_int(mult * b.count as i64));
    }
    Ok(out)
}

/// Per-edge identity of the non-degenerate case: for each branch `(edge, class)`
/// returns `(Z_top(pull-back), J_γ / ((s+1)·mult(Δγ)))`.
pub fn pullback_identity_terms(p: &QOPair, max_shifts: usize) -> Result<Vec<(RatFuncS, RatFuncS)>> {
    if p.is_base() {
        return Ok(vec![]);
    }
    let (p, _) = good_coordinates(p, max_shifts)?;
    let path = build_newton_path(&p)?;
    let mut out = vec![];
    for b in branches(&p, max_shifts)? {
        let e = &path.edges[b.edge];
        let lhs = ztop_qo(&b.pullback, max_shifts)?;
        let rhs = j_edge(e, &p.nu.nu).mul(&RatFuncS::inv_linear(1, 1)).scale(&crate::exactalg::rat(1, e.mult()));
        out.push((lhs, rhs));
    }
    Ok(out)
}

/// Options of the non-degenerate fan formula.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NondegOptions {
    /// Accept faces of dimension ≥ 2 whose non-degeneracy cannot be verified exactly.
    pub assume_nondegenerate: bool,
    /// Largest number of variables accepted.
    pub max_dim: usize,
}

impl Default for NondegOptions {
    fn default() -> Self {
        NondegOptions { assume_nondegenerate: false, max_dim: DEFAULT_MAX_DIM }
    }
}

/// Result of [`ztop_nondeg_report`]: the zeta function and advisory warnings.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NondegResult {
    /// `Z_top`.
    pub zeta: RatFuncS,
    /// Warnings from the sampled non-degeneracy check.
    pub warnings: Vec<String>,
}

/// `Z_top` of a polynomial with non-degenerate principal part:
/// `Σ_{dim τ = 0} J_τ + (s/(s+1))·Σ_{dim τ ≥ 1} (−1)^{dim τ}·(dim τ)!·V(τ)·J_τ`.
///
/// Compact edges are checked exactly (squarefree face polynomials); higher-dimensional
/// faces need `assume_nondegenerate` and are only sampled.
pub fn ztop_nondeg(h: &MPoly, nu: &[u32], opts: &NondegOptions) -> Result<RatFuncS> {
    Ok(ztop_nondeg_report(h, nu, opts)?.zeta)
}

/// [`ztop_nondeg`] together with the advisory warnings.
pub fn ztop_nondeg_report(h: &MPoly, nu: &[u32], opts: &NondegOptions) -> Result<NondegResult> {
    if let Some(j) = nu.iter().position(|&v| v == 0) {
        return Err(Error::InvalidInput(format!("form exponent nu_{} must be >= 1", j + 1)));
    }
    let fan = build_general_fan(h, nu, opts.max_dim)?;
    fan.check_edges_nondegenerate()?;
    if !opts.assume_nondegenerate {
        if let Some(f) = fan.faces.iter().find(|f| f.dim >= 2) {
            return Err(Error::Degenerate(format!(
                "non-degeneracy of the {}-dimensional face with vertices {:?} cannot be verified exactly; pass --assume-nondegenerate",
                f.dim, f.vertices
            )));
        }
    }
    let mut low = RatFuncS::zero();
    let mut high = RatFuncS::zero();
    for (i, f) in fan.faces.iter().enumerate() {
        let j = fan.j(i)?;
        if f.dim == 0 {
            low = low.add(&j);
        } else {
            let sign = if f.dim % 2 == 0 { 1 } else { -1 };
            high = high.add(&j.scale_int(sign * f.normalized_volume));
        }
    }
    let zeta = low.add(&RatFuncS::s().mul(&RatFuncS::inv_linear(1, 1)).mul(&high));
    Ok(NondegResult { zeta, warnings: fan.warnings.clone() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mpoly::{parse, FormExponents};

    fn pair(text: &str, vars: &[&str], nu: &[u32]) -> QOPair {
        QOPair::from_poly(&parse(text, vars).unwrap(), FormExponents::new(nu.to_vec()).unwrap()).unwrap()
    }

    #[test]
    fn base_cases() {
        assert_eq!(ztop_base(&pair("x^6*z", &["x", "z"], &[5])).unwrap().to_string(), "1/((s+1)*(6*s+5))");
        assert_eq!(ztop_base(&pair("z", &["x", "z"], &[1])).unwrap().to_string(), "1/(s+1)");
        assert_eq!(ztop_base(&pair("x^3", &["x", "z"], &[1])).unwrap().to_string(), "1/(3*s+1)");
    }

    #[test]
    fn cusp_both_paths() {
        let p = pair("z^2-x^3", &["x", "z"], &[1]);
        let a = ztop_qo(&p, 64).unwrap();
        let b = ztop_nondeg(&p.full(), &[1], &NondegOptions::default()).unwrap();
        assert_eq!(a.to_string(), "(4*s+5)/((s+1)*(6*s+5))");
        assert_eq!(a, b);
    }

    #[test]
    fn two_variable_agreement() {
        for text in ["z^2-x1^2*x2^5", "z^3+x1*x2", "z^2-x1^2*x2"] {
            let p = pair(text, &["x1", "x2", "z"], &[1, 1]);
            let b = ztop_nondeg(&p.full(), &[1, 1], &NondegOptions::default()).unwrap();
            assert_eq!(ztop_qo(&p, 64).unwrap(), b, "{text}");
        }
    }

    #[test]
    fn nash_and_special_faces() {
        let vars = ["x1", "x2", "x3", "x4", "x5"];
        let h = parse("x1^3+x2^3+x3^3+x4^3+x5^6", &vars).unwrap();
        let opts = NondegOptions { assume_nondegenerate: true, ..Default::default() };
        assert_eq!(ztop_nondeg(&h, &[1, 1, 1, 1], &opts).unwrap().to_string(), "1/(s+1)");
        assert!(matches!(ztop_nondeg(&h, &[1, 1, 1, 1], &NondegOptions::default()), Err(Error::Degenerate(_))));
        let p = pair("z^2-x1^2*x2", &["x1", "x2", "z"], &[1, 1]);
        assert!(!ztop_qo(&p, 64).unwrap().denominator().contains_key(&(2, 3)));
        let p = pair("z^2-x1*x2", &["x1", "x2", "z"], &[1, 1]);
        assert!(ztop_qo(&p, 64).unwrap().denominator().contains_key(&(2, 3)));
    }

    #[test]
    fn depth_two_curve() {
        let p = pair("(z^2-x^3)^2+x^7", &["x", "z"], &[1]);
        let z = ztop_qo(&p, 64).unwrap();
        println!("{z}");
        assert!(z.eval(&crate::exactalg::rint(0)) == Some(crate::exactalg::rint(1)));
    }
}
