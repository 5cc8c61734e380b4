//! Resultants and discriminants with respect to `z`, and the quasi-ordinary test.

use super::{Exponent, MPoly};
use crate::error::{Error, Result};
use crate::exactalg::AlgNum;

/// Determinant of a square matrix of x-polynomials by fraction-free (Bareiss) elimination.
fn bareiss_det(mut m: Vec<Vec<MPoly>>, nx: usize, one: &MPoly) -> MPoly {
    let n = m.len();
    if n == 0 {
        return one.clone();
    }
    let mut sign_neg = false;
    let mut prev = one.clone();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(i, k);
                    sign_neg = !sign_neg;
                }
                None => return MPoly::zero(nx, one.tower()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = m[k][k].mul(&m[i][j]).sub(&m[i][k].mul(&m[k][j]));
                m[i][j] = num.div_exact(&prev).expect("Bareiss division is exact");
            }
            m[i][k] = MPoly::zero(nx, one.tower());
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if sign_neg {
        d.neg()
    } else {
        d
    }
}

/// Resultant of `f` and `g` with respect to `z` (Sylvester determinant), a polynomial in x.
///
/// Both polynomials must be nonzero; if one is constant in `z` the usual
/// convention `Res(f, c) = c^{deg f}` results from the empty/one-sided matrix.
pub fn resultant_z(f: &MPoly, g: &MPoly) -> Result<MPoly> {
    if f.is_zero() || g.is_zero() {
        return Err(Error::InvalidInput("resultant of the zero polynomial".into()));
    }
    let nx = f.nx();
    let fc = f.z_coeffs();
    let gc = g.z_coeffs();
    let n = fc.len() - 1;
    let m = gc.len() - 1;
    let size = n + m;
    let t = if f.tower().height() >= g.tower().height() { f.tower().clone() } else { g.tower().clone() };
    let one = MPoly::constant(nx, &AlgNum::one(&t));
    if size == 0 {
        return Ok(one);
    }
    let zero = MPoly::zero(nx, &t);
    let mut mat = vec![vec![zero.clone(); size]; size];
    // rows 0..m: shifts of f (highest coefficient first)
    for r in 0..m {
        for (k, c) in fc.iter().enumerate() {
            mat[r][r + (n - k)] = c.lift_to(&t);
        }
    }
    for r in 0..n {
        for (k, c) in gc.iter().enumerate() {
            mat[m + r][r + (m - k)] = c.lift_to(&t);
        }
    }
    Ok(bareiss_det(mat, nx, &one))
}

/// z-discriminant: `Res_z(f, ∂f/∂z) / lc_z(f)`.
///
/// Sign convention: the raw Sylvester resultant is used without the factor
/// `(-1)^{n(n-1)/2}`, so `discriminant_z(z^2 - x^3) = -4·x^3`.
pub fn discriminant_z(f: &MPoly) -> Result<MPoly> {
    match f.z_degree() {
        None | Some(0) => return Err(Error::InvalidInput(format!("discriminant needs z-degree >= 1, got `{f}`"))),
        _ => {}
    }
    let r = resultant_z(f, &f.deriv_z())?;
    let lc = f.z_coeffs().pop().expect("nonzero");
    r.div_exact(&lc).ok_or_else(|| Error::Internal("discriminant not divisible by the leading coefficient".into()))
}

/// Quasi-ordinary test: the z-discriminant has a unique componentwise-minimal
/// support point `α` (equivalently it is `x^α` times a unit).
///
/// Returns `(true, α)` or `(false, componentwise minimum of the support)`.
/// A polynomial of z-degree ≤ 1 is trivially quasi-ordinary with `α = 0`.
pub fn is_quasi_ordinary(f: &MPoly) -> Result<(bool, Vec<u32>)> {
    let nx = f.nx();
    if f.z_degree().unwrap_or(0) <= 1 {
        if f.is_zero() {
            return Err(Error::InvalidInput("zero polynomial".into()));
        }
        return Ok((true, vec![0; nx]));
    }
    let d = discriminant_z(f)?;
    if d.is_zero() {
        return Err(Error::NotSquarefree);
    }
    let supp: Vec<Exponent> = d.support();
    let minimum: Vec<u32> = d.min_x_exponents();
    let qo = supp.iter().any(|e| e[..nx] == minimum[..]);
    Ok((qo, minimum))
}
