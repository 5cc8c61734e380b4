//! Dense univariate polynomials over the rationals, stored low degree first.
//!
//! These free functions operate on `Vec<Rat>`; the zero polynomial is the
//! empty vector and every result is trimmed of leading zeros.

use super::rat::{rint, Rat};
use num_traits::{One, Zero};

/// Dense rational polynomial, index = degree.
pub type QPoly = Vec<Rat>;

/// Removes leading zero coefficients in place.
pub fn trim(p: &mut QPoly) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

/// Degree, `None` for the zero polynomial.
pub fn degree(p: &[Rat]) -> Option<usize> {
    if p.is_empty() {
        None
    } else {
        Some(p.len() - 1)
    }
}

/// Constant polynomial.
pub fn constant(c: Rat) -> QPoly {
    let mut v = vec![c];
    trim(&mut v);
    v
}

/// Sum.
pub fn add(a: &[Rat], b: &[Rat]) -> QPoly {
    let n = a.len().max(b.len());
    let mut r: QPoly = (0..n)
        .map(|i| {
            let x = a.get(i).cloned().unwrap_or_else(Rat::zero);
            let y = b.get(i).cloned().unwrap_or_else(Rat::zero);
            x + y
        })
        .collect();
    trim(&mut r);
    r
}

/// Difference.
pub fn sub(a: &[Rat], b: &[Rat]) -> QPoly {
    add(a, &neg(b))
}

/// Negation.
pub fn neg(a: &[Rat]) -> QPoly {
    a.iter().map(|c| -c).collect()
}

/// Product.
pub fn mul(a: &[Rat], b: &[Rat]) -> QPoly {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut r = vec![Rat::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            r[i + j] += x * y;
        }
    }
    trim(&mut r);
    r
}

/// Multiplication by a scalar.
pub fn scale(a: &[Rat], c: &Rat) -> QPoly {
    let mut r: QPoly = a.iter().map(|x| x * c).collect();
    trim(&mut r);
    r
}

/// Euclidean division; panics on a zero divisor.
pub fn divrem(a: &[Rat], b: &[Rat]) -> (QPoly, QPoly) {
    assert!(!b.is_empty(), "division by zero polynomial");
    let mut r: QPoly = a.to_vec();
    trim(&mut r);
    if r.len() < b.len() {
        return (vec![], r);
    }
    let db = b.len() - 1;
    let lc = b[db].clone();
    let mut q = vec![Rat::zero(); r.len() - db];
    while r.len() > db && !r.is_empty() {
        let k = r.len() - 1 - db;
        let c = &r[r.len() - 1] / &lc;
        for (i, bc) in b.iter().enumerate() {
            r[k + i] -= &c * bc;
        }
        q[k] = c;
        r.pop();
        trim(&mut r);
    }
    trim(&mut q);
    (q, r)
}

/// Monic gcd (zero if both inputs are zero).
pub fn gcd(a: &[Rat], b: &[Rat]) -> QPoly {
    let mut x: QPoly = a.to_vec();
    let mut y: QPoly = b.to_vec();
    trim(&mut x);
    trim(&mut y);
    while !y.is_empty() {
        let (_, r) = divrem(&x, &y);
        x = y;
        y = r;
    }
    monic(&x)
}

/// Divides by the leading coefficient.
pub fn monic(a: &[Rat]) -> QPoly {
    match a.last() {
        None => vec![],
        Some(lc) => {
            let inv = lc.recip();
            scale(a, &inv)
        }
    }
}

/// Formal derivative.
pub fn deriv(a: &[Rat]) -> QPoly {
    let mut r: QPoly = a.iter().enumerate().skip(1).map(|(i, c)| c * rint(i as i64)).collect();
    trim(&mut r);
    r
}

/// Horner evaluation.
pub fn eval(a: &[Rat], x: &Rat) -> Rat {
    a.iter().rev().fold(Rat::zero(), |acc, c| acc * x + c)
}

/// `a^e`.
pub fn pow(a: &[Rat], e: usize) -> QPoly {
    let mut r = vec![Rat::one()];
    for _ in 0..e {
        r = mul(&r, a);
    }
    r
}

/// Monic linear polynomial `x - root`.
pub fn linear_root(root: &Rat) -> QPoly {
    vec![-root.clone(), Rat::one()]
}
