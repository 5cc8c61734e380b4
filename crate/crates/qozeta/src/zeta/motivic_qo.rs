//! Motivic zeta functions of quasi-ordinary pairs: the depth-0 closed form,
//! the curve-type recursion `Z_DL = Z^A + Σ Z_DL(pull-back)`, and the
//! non-degenerate formula `Σ_τ L_τ·S_τ` along the Newton path.

use super::MotivicExpr;
use crate::cones::{build_newton_path, s_edge, s_vertex, NewtonPath};
use crate::error::{Error, Result};
use crate::mpoly::{branches, good_coordinates, QOPair};

/// `L^{−n}(L−1)^n`, the measure factor of a torus orbit of arcs (`n` variables).
fn torus_factor(n: usize) -> MotivicExpr {
    MotivicExpr::monomial(1, -(n as i64), 0).mul(&MotivicExpr::l_minus_one().pow(n as u32))
}

/// `y/(1−y)` for `y = L^{−a}T^b`.
fn tail(a: i64, b: i64) -> MotivicExpr {
    MotivicExpr::monomial(1, -a, b).mul(&MotivicExpr::geometric(a, b))
}

/// `Z_DL` of a depth-0 pair `x^N·z^ε·unit`:
/// `L^{−n}(L−1)^n · Π_j y_j/(1−y_j)` with `y_j = L^{−ν_j}T^{N_j}` and `y_{d+1} = L^{−1}T^ε`.
///
/// ```
/// use qozeta::mpoly::{parse, FormExponents, QOPair};
/// use qozeta::zeta::{chi_specialize, zmot_base};
/// let h = parse("z", &["x", "z"]).unwrap();
/// let z = zmot_base(&QOPair::from_poly(&h, FormExponents::ones(1)).unwrap()).unwrap();
/// assert_eq!(chi_specialize(&z).unwrap().to_string(), "1/(s+1)");
/// ```
pub fn zmot_base(p: &QOPair) -> Result<MotivicExpr> {
    if !p.is_base() {
        return Err(Error::InvalidInput(format!("`{}` has Weierstrass degree {} > 1, not a base pair", p.full(), p.weierstrass_degree())));
    }
    let n = p.nx() + 1;
    let mut out = torus_factor(n);
    for (&nn, &nu) in p.n.iter().zip(&p.nu.nu) {
        out = out.mul(&tail(nu as i64, nn as i64));
    }
    Ok(out.mul(&tail(1, p.epsilon() as i64)).simplify())
}

fn normalized_path(p: &QOPair, max_shifts: usize) -> Result<(QOPair, NewtonPath)> {
    let (p, _) = good_coordinates(p, max_shifts)?;
    let path = build_newton_path(&p)?;
    Ok((p, path))
}

/// The part of `Z_DL` carried by arcs whose initial form does not vanish:
/// `L^{−n}(L−1)^n (Σ_τ S_τ + Σ_q (1 − v(q)/(L−1))·S_γq)`.
fn a_part(p: &QOPair, path: &NewtonPath) -> Result<MotivicExpr> {
    let n = p.nx() + 1;
    let nu = &p.nu.nu;
    let lm1 = MotivicExpr::l_minus_one();
    let scale = MotivicExpr::monomial(1, -(n as i64), 0);
    let mut out = MotivicExpr::zero();
    for q in 0..=path.r() {
        out = out.add(&lm1.pow(n as u32).mul(&s_vertex(path, q, nu)?));
    }
    for (q, e) in path.edges.iter().enumerate() {
        let w = lm1.pow(n as u32).sub(&lm1.pow(n as u32 - 1).scale_int(e.v as i64));
        out = out.add(&w.mul(&s_edge(path, q, nu)?));
    }
    Ok(scale.mul(&out))
}

/// `Z_DL` by the recursion `Z^A + Σ_q Σ_j Z_DL(pull-back_{q,j})`, valid when every edge
/// cone met during the Newton process has multiplicity 1 (always the case for curves).
///
/// Errors with [`Error::UnsupportedDegenerateMotivic`] when an edge cone has
/// multiplicity > 1; use the topological recursion for such inputs.
pub fn zmot_curve(p: &QOPair, max_shifts: usize) -> Result<MotivicExpr> {
    if p.is_base() {
        return zmot_base(p);
    }
    let (p, path) = normalized_path(p, max_shifts)?;
    if let Some(e) = path.edges.iter().find(|e| e.mult() != 1) {
        return Err(Error::UnsupportedDegenerateMotivic(format!(
            "edge from {:?} to {:?} has a dual cone of multiplicity {} (more than one essential variable); \
             the motivic recursion needs multiplicity 1 — compute the topological zeta function instead",
            e.lower,
            e.upper,
            e.mult()
        )));
    }
    let mut out = a_part(&p, &path)?;
    for b in branches(&p, max_shifts)? {
        out = out.add(&zmot_curve(&b.pullback, max_shifts)?.scale_int(b.count as i64));
    }
    Ok(out.simplify())
}

/// `Z_DL` of a quasi-ordinary pair whose edge face polynomials are squarefree:
/// `Σ_τ L^{−n}(L−1)^n S_τ + Σ_q [L^{−n}(L−1)^{n−1}(L−1−v(q)) + L^{−n}(L−1)·v(q)(L−1)^{n−1}·L^{−1}T/(1−L^{−1}T)]·S_γq`.
///
/// Errors with [`Error::Degenerate`] if some edge has a repeated face root.
pub fn zmot_nondeg_qo(p: &QOPair, max_shifts: usize) -> Result<MotivicExpr> {
    if p.is_base() {
        return zmot_base(p);
    }
    let (p, path) = normalized_path(p, max_shifts)?;
    if let Some(e) = path.edges.iter().find(|e| !e.is_squarefree()) {
        return Err(Error::Degenerate(format!(
            "edge from {:?} to {:?} has face polynomial {} with a repeated root",
            e.lower,
            e.upper,
            e.face_poly_w.display_var("w")
        )));
    }
    let n = p.nx() + 1;
    let lm1 = MotivicExpr::l_minus_one();
    let mut out = a_part(&p, &path)?;
    let smooth = tail(1, 1);
    for (q, e) in path.edges.iter().enumerate() {
        let class = lm1.pow(n as u32 - 1).scale_int(e.v as i64);
        let lb = MotivicExpr::monomial(1, -(n as i64), 0).mul(&lm1).mul(&class).mul(&smooth);
        out = out.add(&lb.mul(&s_edge(&path, q, &p.nu.nu)?));
    }
    Ok(out.simplify())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mpoly::{parse, FormExponents};
    use crate::zeta::{chi_specialize, ztop_qo};

    fn pair(text: &str, vars: &[&str], nu: &[u32]) -> QOPair {
        QOPair::from_poly(&parse(text, vars).unwrap(), FormExponents::new(nu.to_vec()).unwrap()).unwrap()
    }

    #[test]
    fn base_closed_form() {
        let p = pair("x^4*z", &["x", "z"], &[3]);
        let expected = MotivicExpr::monomial(1, -2 - 1 - 3, 1 + 4)
            .mul(&MotivicExpr::l_minus_one().pow(2))
            .mul(&MotivicExpr::geometric(1, 1))
            .mul(&MotivicExpr::geometric(3, 4));
        assert_eq!(zmot_base(&p).unwrap(), expected);
    }

    #[test]
    fn curves_specialize_to_ztop() {
        for text in ["z^2-x^3", "(z^2-x^3)^2+x^7", "(z^2-x^5)*(z-x^2)*(z^3-x^2)", "z^3-x^7", "x^2*(z^2-x^3)"] {
            let p = pair(text, &["x", "z"], &[1]);
            let z = zmot_curve(&p, 64).unwrap();
            assert_eq!(chi_specialize(&z).unwrap(), ztop_qo(&p, 64).unwrap(), "{text}");
        }
    }

    #[test]
    fn nondeg_matches_curve_recursion() {
        for text in ["z^2-x^3", "z^3-x^7", "(z^2-x^5)*(z-x^2)"] {
            let p = pair(text, &["x", "z"], &[1]);
            assert_eq!(zmot_nondeg_qo(&p, 64).unwrap(), zmot_curve(&p, 64).unwrap(), "{text}");
        }
        let p = pair("z^2-x1^3*x2^3", &["x1", "x2", "z"], &[1, 1]);
        let z = zmot_nondeg_qo(&p, 64).unwrap();
        assert!(z.denominator().contains_key(&(5, 6)));
        assert_eq!(chi_specialize(&z).unwrap(), ztop_qo(&p, 64).unwrap());
        assert!(matches!(zmot_nondeg_qo(&pair("(z^2-x^3)^2+x^7", &["x", "z"], &[1]), 64), Err(Error::Degenerate(_))));
    }
}
