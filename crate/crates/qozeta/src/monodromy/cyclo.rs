//! Products `Π (1 − t^a)^{e_a}` with integer exponents.

use serde::{Serialize, Serializer};
use std::collections::BTreeMap;
use std::fmt;

/// `Π_a (1 − t^a)^{e_a}`, stored as the map `a ↦ e_a` without zero exponents.
///
/// ```
/// use qozeta::monodromy::CycloProduct;
/// let z = CycloProduct::from_pairs(&[(2, 1), (3, 1), (6, -1)]);
/// assert_eq!(z.to_string(), "(1-t^2)*(1-t^3)/(1-t^6)");
/// ```
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct CycloProduct {
    factors: BTreeMap<u64, i64>,
}

impl CycloProduct {
    /// The constant 1.
    pub fn one() -> Self {
        Self::default()
    }

    /// The single factor `1 − t^a`.
    ///
    /// Panics if `a = 0`.
    pub fn factor(a: u64) -> Self {
        Self::from_pairs(&[(a, 1)])
    }

    /// Builds `Π (1 − t^a)^e` from `(a, e)` pairs (repeats are summed).
    pub fn from_pairs(pairs: &[(u64, i64)]) -> Self {
        let mut out = Self::one();
        for &(a, e) in pairs {
            assert!(a > 0, "factor 1 - t^0 is zero");
            *out.factors.entry(a).or_insert(0) += e;
        }
        out.factors.retain(|_, e| *e != 0);
        out
    }

    /// `(a, e_a)` pairs in increasing `a`.
    pub fn pairs(&self) -> Vec<(u64, i64)> {
        self.factors.iter().map(|(&a, &e)| (a, e)).collect()
    }

    /// True for the empty product.
    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    /// Product.
    pub fn mul(&self, o: &CycloProduct) -> CycloProduct {
        let mut out = self.clone();
        for (&a, &e) in &o.factors {
            *out.factors.entry(a).or_insert(0) += e;
        }
        out.factors.retain(|_, e| *e != 0);
        out
    }

    /// Integer power (negative powers invert).
    pub fn pow(&self, k: i64) -> CycloProduct {
        let mut out = self.clone();
        for e in out.factors.values_mut() {
            *e *= k;
        }
        out.factors.retain(|_, e| *e != 0);
        out
    }

    /// Inverse.
    pub fn inverse(&self) -> CycloProduct {
        self.pow(-1)
    }

    /// Order of `exp(2πi·ν/N)` as a zero (positive) or pole (negative) of the product:
    /// `Σ {e_a : a·ν ≡ 0 mod N}`.
    pub fn order_at(&self, n: i64, nu: i64) -> i64 {
        assert!(n > 0, "N must be positive");
        self.factors.iter().filter(|(&a, _)| (a as i128 * nu as i128).rem_euclid(n as i128) == 0).map(|(_, &e)| e).sum()
    }

    /// Exponents of the cyclotomic polynomials: `Π (1 − t^a)^{e_a} = ± Π_k Φ_k^{f_k}`
    /// with `f_k = Σ_{k | a} e_a` (zero exponents omitted).
    pub fn cyclotomic_exponents(&self) -> BTreeMap<u64, i64> {
        let mut out: BTreeMap<u64, i64> = BTreeMap::new();
        for (&a, &e) in &self.factors {
            for k in (1..=a).filter(|k| a % k == 0) {
                *out.entry(k).or_insert(0) += e;
            }
        }
        out.retain(|_, f| *f != 0);
        out
    }

    /// True if the product is a polynomial in `t` (all cyclotomic exponents non-negative).
    pub fn is_polynomial(&self) -> bool {
        self.cyclotomic_exponents().values().all(|&f| f >= 0)
    }

    /// Expanded polynomial coefficients (lowest degree first), if the product is a polynomial.
    pub fn expand(&self) -> Option<Vec<i64>> {
        if !self.is_polynomial() {
            return None;
        }
        // divide the numerator by each denominator factor exactly
        let mut p = vec![1i64];
        for (&a, &e) in self.factors.iter().filter(|(_, e)| **e > 0) {
            for _ in 0..e {
                let mut q = vec![0i64; p.len() + a as usize];
                for (i, c) in p.iter().enumerate() {
                    q[i] += c;
                    q[i + a as usize] -= c;
                }
                p = q;
            }
        }
        for (&a, &e) in self.factors.iter().filter(|(_, e)| **e < 0) {
            for _ in 0..-e {
                // p / (1 − t^a): q_i = p_i + q_{i−a}
                let a = a as usize;
                let mut q = vec![0i64; p.len().saturating_sub(a)];
                for i in 0..q.len() {
                    q[i] = p[i] + if i >= a { q[i - a] } else { 0 };
                }
                p = q;
            }
        }
        while p.len() > 1 && *p.last().expect("nonempty") == 0 {
            p.pop();
        }
        Some(p)
    }

    /// LaTeX rendering (presentation only).
    pub fn to_latex(&self) -> String {
        let part = |sign: i64| -> Vec<String> {
            self.factors
                .iter()
                .filter(|(_, e)| e.signum() == sign)
                .map(|(&a, &e)| {
                    let base = if a == 1 { "(1-t)".to_string() } else { format!("(1-t^{{{a}}})") };
                    if e.abs() > 1 {
                        format!("{base}^{{{}}}", e.abs())
                    } else {
                        base
                    }
                })
                .collect()
        };
        let (num, den) = (part(1), part(-1));
        let num = if num.is_empty() { "1".to_string() } else { num.join("") };
        if den.is_empty() {
            num
        } else {
            format!("\\frac{{{num}}}{{{}}}", den.join(""))
        }
    }
}

impl fmt::Display for CycloProduct {
    /// Plain form such as `(1-t^2)*(1-t^3)/(1-t^6)`, `(1-t^3)` or `1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let part = |sign: i64| -> Vec<String> {
            self.factors
                .iter()
                .filter(|(_, e)| e.signum() == sign)
                .map(|(&a, &e)| {
                    let base = if a == 1 { "(1-t)".to_string() } else { format!("(1-t^{a})") };
                    if e.abs() > 1 {
                        format!("{base}^{}", e.abs())
                    } else {
                        base
                    }
                })
                .collect()
        };
        let (num, den) = (part(1), part(-1));
        let num = if num.is_empty() { "1".to_string() } else { num.join("*") };
        match den.len() {
            0 => write!(f, "{num}"),
            1 => write!(f, "{num}/{}", den[0]),
            _ => write!(f, "{num}/({})", den.join("*")),
        }
    }
}

impl Serialize for CycloProduct {
    /// Serialized as the list of `[a, e]` pairs.
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.pairs().serialize(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cusp_alexander() {
        let z = CycloProduct::from_pairs(&[(2, 1), (3, 1), (6, -1)]);
        assert_eq!(z.order_at(6, 5), -1);
        assert_eq!(z.order_at(1, 1), 1);
        let delta = CycloProduct::factor(1).mul(&z.inverse());
        assert_eq!(delta.cyclotomic_exponents(), BTreeMap::from([(6, 1)]));
        assert_eq!(delta.expand(), Some(vec![1, -1, 1]));
        assert_eq!(CycloProduct::factor(3).order_at(2, 1), 0);
        assert_eq!(CycloProduct::one().to_string(), "1");
        assert_eq!(CycloProduct::from_pairs(&[(1, 2), (4, -1), (5, -1)]).to_string(), "(1-t)^2/((1-t^4)*(1-t^5))");
    }
}
