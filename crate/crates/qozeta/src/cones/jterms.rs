//! The dual decomposition of a quasi-ordinary Newton path: edge cones, capped
//! cones, the vertex cones obtained from them by inclusion–exclusion, and the
//! closed-form J-terms of each piece.
//!
//! For the edge `γ_q` with generators `w^q_1..w^q_d` (in `ℤ^{d+1}`) the dual
//! cone is the open simplicial cone `Δγ_q = cone°(w^q)`; the capped cone is
//! `Δ^c_q = cone°(w^q, e_{d+1})`, with `Δ^c_{r+1}` the whole open orthant.
//! Then `Δτ_0 = Δ^c_1` and `Δτ_q = Δ^c_{q+1} ∖ (Δγ_q ⊔ Δ^c_q)`.

use super::path::{EdgeData, NewtonPath};
use super::simplicial::{fundamental_set, genfun, MonomialMap, SimplicialCone};
use crate::error::Result;
use crate::exactalg::rint;
use crate::zeta::{MotivicExpr, RatFuncS};

/// Weights `σ = (ν_1, …, ν_d, 1)` of the form `ω`.
pub fn sigma_weights(nu: &[u32]) -> Vec<i64> {
    nu.iter().map(|&v| v as i64).chain([1]).collect()
}

/// The edge cone `cone°(w_1, …, w_d)`.
pub fn edge_cone(e: &EdgeData) -> Result<SimplicialCone> {
    fundamental_set(&e.w)
}

/// The capped cone `cone°(w_1, …, w_d, e_{d+1})`.
pub fn capped_cone(e: &EdgeData) -> Result<SimplicialCone> {
    let mut gens = e.w.clone();
    let mut ez = vec![0; e.nx() + 1];
    ez[e.nx()] = 1;
    gens.push(ez);
    fundamental_set(&gens)
}

fn orthant(n: usize) -> Result<SimplicialCone> {
    let gens: Vec<Vec<i64>> = (0..n)
        .map(|i| {
            let mut v = vec![0; n];
            v[i] = 1;
            v
        })
        .collect();
    fundamental_set(&gens)
}

/// `T̃_l = M_l·s + (ν_l·n1 + b_l)` as `(N, ν)` pairs.
fn t_tilde(e: &EdgeData, nu: &[u32]) -> Vec<((i64, i64), u32)> {
    (0..e.nx()).map(|l| ((e.m[l], nu[l] as i64 * e.n1 + e.b[l]), 1)).collect()
}

/// `J_γ = n1^{d−1} / Π_l T̃_l`.
pub fn j_edge(e: &EdgeData, nu: &[u32]) -> RatFuncS {
    let d = e.nx() as u32;
    RatFuncS::from_parts(vec![rint(e.n1.pow(d - 1))], &t_tilde(e, nu))
}

/// `n1^d / Π_l T̃_l` — the J-term of the capped cone of an edge.
fn j_capped(e: &EdgeData, nu: &[u32]) -> RatFuncS {
    let d = e.nx() as u32;
    RatFuncS::from_parts(vec![rint(e.n1.pow(d))], &t_tilde(e, nu))
}

/// `J_τq` for vertex `q ∈ 0..=r` of a path with at least one edge.
///
/// `τ0`: `n1^d / ((1 + d_0 s)·ΠT̃^1)`; middle vertices:
/// `(1/(1 + d_q s))·(n1^d/ΠT̃^{q+1} − n1^d/ΠT̃^q)`; last vertex:
/// `(1/(1 + d_r s))·(1/Π(N_i s + ν_i) − n1^d/ΠT̃^r)`.
pub fn j_vertex(path: &NewtonPath, q: usize, nu: &[u32], n: &[u32]) -> RatFuncS {
    let r = path.r();
    assert!(r >= 1 && q <= r, "vertex index out of range or path without edges");
    let upper = if q < r {
        j_capped(&path.edges[q], nu)
    } else {
        let f: Vec<((i64, i64), u32)> = nu.iter().zip(n).map(|(&v, &nn)| ((nn as i64, v as i64), 1)).collect();
        RatFuncS::from_parts(vec![rint(1)], &f)
    };
    let lower = if q > 0 { j_capped(&path.edges[q - 1], nu) } else { RatFuncS::zero() };
    RatFuncS::inv_linear(path.height(q), 1).mul(&upper.sub(&lower))
}

/// `S_γq` for the edge with 0-based index `q` (joining vertices `q` and `q+1`).
pub fn s_edge(path: &NewtonPath, q: usize, nu: &[u32]) -> Result<MotivicExpr> {
    let e = &path.edges[q];
    genfun(&edge_cone(e)?, &MonomialMap { sigma: sigma_weights(nu), point: e.lower.clone() })
}

/// `S_τq` for vertex `q ∈ 0..=r`, via `Φ(Δ^c_{q+1}) − Φ(Δγ_q) − Φ(Δ^c_q)` evaluated at `τ_q`.
pub fn s_vertex(path: &NewtonPath, q: usize, nu: &[u32]) -> Result<MotivicExpr> {
    let r = path.r();
    let map = MonomialMap { sigma: sigma_weights(nu), point: path.vertices[q].clone() };
    let n = nu.len() + 1;
    let upper = if q < r { capped_cone(&path.edges[q])? } else { orthant(n)? };
    let mut out = genfun(&upper, &map)?;
    if q > 0 {
        let e = &path.edges[q - 1];
        out = out.sub(&genfun(&edge_cone(e)?, &map)?).sub(&genfun(&capped_cone(e)?, &map)?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cones::build_newton_path;
    use crate::mpoly::{parse, FormExponents, QOPair};

    fn path_of(text: &str, vars: &[&str]) -> (QOPair, NewtonPath) {
        let h = parse(text, vars).unwrap();
        let p = QOPair::from_poly(&h, FormExponents::ones(vars.len() - 1)).unwrap();
        let path = build_newton_path(&p).unwrap();
        (p, path)
    }

    #[test]
    fn cusp_terms() {
        let (p, path) = path_of("z^2-x^3", &["x", "z"]);
        assert_eq!(j_edge(&path.edges[0], &p.nu.nu).to_string(), "1/(6*s+5)");
        assert_eq!(j_vertex(&path, 0, &p.nu.nu, &p.n).to_string(), "2/(6*s+5)");
        assert_eq!(j_vertex(&path, 1, &p.nu.nu, &p.n).to_string(), "3/(6*s+5)");
        assert_eq!(s_edge(&path, 0, &p.nu.nu).unwrap().to_string(), "L^-5*T^6/(1-L^-5*T^6)");
    }

    #[test]
    fn two_variable_edges() {
        let (p, path) = path_of("z^3+x1*x2", &["x1", "x2", "z"]);
        assert_eq!(j_edge(&path.edges[0], &p.nu.nu).to_string(), "3/(3*s+4)^2");
        let (p, path) = path_of("z^2-x1^2*x2^5", &["x1", "x2", "z"]);
        assert_eq!(j_edge(&path.edges[0], &p.nu.nu), RatFuncS::from_parts(vec![rint(2)], &[((4, 4), 1), ((10, 7), 1)]));
    }

    #[test]
    fn vertex_terms_specialize_to_j() {
        use crate::zeta::chi_specialize;
        for (text, vars) in [("z^2-x^3", vec!["x", "z"]), ("(z^2-x^5)*(z-x^2)*(z^3-x^2)", vec!["x", "z"]), ("z^2-x1^2*x2^5", vec!["x1", "x2", "z"])] {
            let (p, path) = path_of(text, &vars);
            let n = vars.len() as u32;
            let lm1 = MotivicExpr::l_minus_one();
            for q in 0..=path.r() {
                let s = s_vertex(&path, q, &p.nu.nu).unwrap();
                assert_eq!(chi_specialize(&lm1.pow(n).mul(&s)).unwrap(), j_vertex(&path, q, &p.nu.nu, &p.n), "{text} vertex {q}");
            }
            for q in 0..path.r() {
                let s = s_edge(&path, q, &p.nu.nu).unwrap();
                assert_eq!(chi_specialize(&lm1.pow(n - 1).mul(&s)).unwrap(), j_edge(&path.edges[q], &p.nu.nu), "{text} edge {q}");
            }
        }
    }
}
