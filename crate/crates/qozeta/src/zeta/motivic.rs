//! Elements of `ℤ[L, L⁻¹][T]` localized at factors `1 − L^{−a}T^b`, the ring
//! in which motivic zeta functions and their generating-function terms live,
//! and the Euler-characteristic specialization to topological zeta functions.

use super::RatFuncS;
use crate::error::{Error, Result};
use crate::exactalg::qpoly::{self, QPoly};
use crate::exactalg::{rint, Rat};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;

/// A Laurent polynomial in `L` and polynomial in `T`: `(L-exponent, T-exponent) ↦ coefficient`.
pub type LTPoly = BTreeMap<(i64, i64), BigInt>;

/// `numerator(L, T) / Π (1 − L^{−a}T^b)^mult`.
///
/// The representation is a single fraction and is not canonical; equality is
/// decided by bringing both sides to a common denominator and comparing the
/// numerators, so `PartialEq` is mathematical equality.
///
/// ```
/// use qozeta::zeta::{chi_specialize, MotivicExpr};
/// // (L − 1)/(1 − L⁻¹T) specializes to 1/(s+1)
/// let e = MotivicExpr::l_minus_one().mul(&MotivicExpr::geometric(1, 1));
/// assert_eq!(chi_specialize(&e).unwrap().to_string(), "1/(s+1)");
/// ```
#[derive(Clone, Debug)]
pub struct MotivicExpr {
    num: LTPoly,
    den: BTreeMap<(i64, i64), u32>,
}

fn add_term(p: &mut LTPoly, k: (i64, i64), c: BigInt) {
    if c.is_zero() {
        return;
    }
    let e = p.entry(k).or_insert_with(BigInt::zero);
    *e += c;
    if e.is_zero() {
        p.remove(&k);
    }
}

fn lt_mul(a: &LTPoly, b: &LTPoly) -> LTPoly {
    let mut r = LTPoly::new();
    for (&(la, ta), ca) in a {
        for (&(lb, tb), cb) in b {
            add_term(&mut r, (la + lb, ta + tb), ca * cb);
        }
    }
    r
}

/// `1 − L^{−a}T^b` as an [`LTPoly`].
fn factor_poly(a: i64, b: i64) -> LTPoly {
    let mut p = LTPoly::new();
    add_term(&mut p, (0, 0), BigInt::one());
    add_term(&mut p, (-a, b), -BigInt::one());
    p
}

/// Exact division of `p` by `1 − L^{−a}T^b`, `None` if it does not divide.
fn div_factor(p: &LTPoly, a: i64, b: i64) -> Option<LTPoly> {
    let mut r = p.clone();
    let mut q = LTPoly::new();
    // Work from the end that the factor's leading term `1` dominates: lowest T-degree
    // (when b > 0) or highest L-degree (when b = 0, where a > 0).
    let budget = 4 * (p.len() + 4) * (1 + p.keys().map(|k| k.0.unsigned_abs() as usize + k.1 as usize).max().unwrap_or(0));
    for _ in 0..budget {
        let lead = if b > 0 {
            r.iter().min_by_key(|(k, _)| (k.1, k.0)).map(|(k, c)| (*k, c.clone()))
        } else {
            r.iter().max_by_key(|(k, _)| (k.0, k.1)).map(|(k, c)| (*k, c.clone()))
        };
        let Some((k, c)) = lead else { return Some(q) };
        if b > 0 {
            let maxt = r.keys().map(|k| k.1).max().unwrap_or(0);
            if k.1 + b > maxt {
                return None;
            }
        } else {
            let minl = r.keys().filter(|kk| kk.1 == k.1).map(|kk| kk.0).min().unwrap_or(0);
            if k.0 - a < minl {
                return None;
            }
        }
        add_term(&mut q, k, c.clone());
        add_term(&mut r, k, -c.clone());
        add_term(&mut r, (k.0 - a, k.1 + b), c);
    }
    None
}

impl MotivicExpr {
    /// Zero.
    pub fn zero() -> Self {
        MotivicExpr { num: LTPoly::new(), den: BTreeMap::new() }
    }

    /// One.
    pub fn one() -> Self {
        Self::monomial(1, 0, 0)
    }

    /// `c·L^l·T^t`.
    pub fn monomial(c: i64, l: i64, t: i64) -> Self {
        assert!(t >= 0, "negative T-exponent");
        let mut num = LTPoly::new();
        add_term(&mut num, (l, t), BigInt::from(c));
        MotivicExpr { num, den: BTreeMap::new() }
    }

    /// `L − 1`.
    pub fn l_minus_one() -> Self {
        Self::monomial(1, 1, 0).sub(&Self::one())
    }

    /// `1 / (1 − L^{−a}T^b)`.
    ///
    /// Panics unless `a, b ≥ 0` and `(a, b) ≠ (0, 0)`.
    pub fn geometric(a: i64, b: i64) -> Self {
        assert!(a >= 0 && b >= 0 && (a, b) != (0, 0), "invalid denominator factor");
        let mut den = BTreeMap::new();
        den.insert((a, b), 1);
        MotivicExpr { num: Self::one().num, den }
    }

    /// Builds `num / Π factors`.
    pub fn from_parts(num: LTPoly, den: BTreeMap<(i64, i64), u32>) -> Self {
        let mut num = num;
        num.retain(|_, c| !c.is_zero());
        MotivicExpr { num, den }
    }

    /// The numerator.
    pub fn numerator(&self) -> &LTPoly {
        &self.num
    }

    /// Denominator factors `(a, b) ↦ multiplicity` for `(1 − L^{−a}T^b)`.
    pub fn denominator(&self) -> &BTreeMap<(i64, i64), u32> {
        &self.den
    }

    /// True iff the expression is zero.
    pub fn is_zero(&self) -> bool {
        self.num.is_empty()
    }

    /// Sum.
    pub fn add(&self, o: &MotivicExpr) -> MotivicExpr {
        let mut den = self.den.clone();
        for (k, &m) in &o.den {
            let e = den.entry(*k).or_insert(0);
            *e = (*e).max(m);
        }
        let lift = |f: &MotivicExpr| -> LTPoly {
            let mut p = f.num.clone();
            for (&(a, b), &m) in &den {
                let have = f.den.get(&(a, b)).copied().unwrap_or(0);
                for _ in have..m {
                    p = lt_mul(&p, &factor_poly(a, b));
                }
            }
            p
        };
        let mut num = lift(self);
        for (k, c) in lift(o) {
            add_term(&mut num, k, c);
        }
        if num.is_empty() {
            return MotivicExpr::zero();
        }
        MotivicExpr { num, den }
    }

    /// Negation.
    pub fn neg(&self) -> MotivicExpr {
        MotivicExpr { num: self.num.iter().map(|(k, c)| (*k, -c)).collect(), den: self.den.clone() }
    }

    /// Difference.
    pub fn sub(&self, o: &MotivicExpr) -> MotivicExpr {
        self.add(&o.neg())
    }

    /// Product.
    pub fn mul(&self, o: &MotivicExpr) -> MotivicExpr {
        let num = lt_mul(&self.num, &o.num);
        if num.is_empty() {
            return MotivicExpr::zero();
        }
        let mut den = self.den.clone();
        for (k, &m) in &o.den {
            *den.entry(*k).or_insert(0) += m;
        }
        MotivicExpr { num, den }
    }

    /// Multiplication by an integer.
    pub fn scale_int(&self, c: i64) -> MotivicExpr {
        self.mul(&Self::monomial(c, 0, 0))
    }

    /// `self^k`.
    pub fn pow(&self, k: u32) -> MotivicExpr {
        (0..k).fold(Self::one(), |acc, _| acc.mul(self))
    }

    /// Cancels every denominator factor that divides the numerator exactly.
    pub fn simplify(&self) -> MotivicExpr {
        let mut num = self.num.clone();
        let mut den = self.den.clone();
        let keys: Vec<(i64, i64)> = den.keys().copied().collect();
        for (a, b) in keys {
            while den[&(a, b)] > 0 {
                match div_factor(&num, a, b) {
                    Some(q) => {
                        num = q;
                        *den.get_mut(&(a, b)).expect("key") -= 1;
                    }
                    None => break,
                }
            }
        }
        den.retain(|_, m| *m > 0);
        MotivicExpr { num, den }
    }

    /// Power series expansion in `T` up to degree `deg`, as `T-exponent ↦ Laurent polynomial in L`
    /// (`L-exponent ↦ coefficient`).
    pub fn t_expansion(&self, deg: i64) -> BTreeMap<i64, BTreeMap<i64, BigInt>> {
        // 1/(1 − u) = Σ u^k; factors with b = 0 are not power series in T and are rejected
        let mut acc = self.num.clone();
        acc.retain(|k, _| k.1 <= deg);
        for (&(a, b), &m) in &self.den {
            assert!(b > 0, "t_expansion needs T-dependent denominator factors");
            for _ in 0..m {
                let mut geo = LTPoly::new();
                let mut k = 0;
                while k * b <= deg {
                    add_term(&mut geo, (-a * k, k * b), BigInt::one());
                    k += 1;
                }
                acc = lt_mul(&acc, &geo);
                acc.retain(|k, _| k.1 <= deg);
            }
        }
        let mut out: BTreeMap<i64, BTreeMap<i64, BigInt>> = BTreeMap::new();
        for ((l, t), c) in acc {
            out.entry(t).or_default().insert(l, c);
        }
        out
    }

    /// LaTeX rendering (presentation only).
    pub fn to_latex(&self) -> String {
        let s = self.simplify();
        let num = fmt_lt(&s.num, true);
        if s.den.is_empty() {
            return num;
        }
        let den: Vec<String> = s
            .den
            .iter()
            .map(|(&(a, b), &m)| {
                let f = format!("(1-{})", fmt_mono(-a, b, true));
                if m > 1 {
                    format!("{f}^{{{m}}}")
                } else {
                    f
                }
            })
            .collect();
        format!("\\frac{{{num}}}{{{}}}", den.join(""))
    }
}

impl PartialEq for MotivicExpr {
    fn eq(&self, o: &Self) -> bool {
        self.sub(o).is_zero()
    }
}

fn fmt_mono(l: i64, t: i64, latex: bool) -> String {
    let mut parts = vec![];
    if l != 0 {
        parts.push(match (l, latex) {
            (1, _) => "L".to_string(),
            (_, true) => format!("L^{{{l}}}"),
            _ => format!("L^{l}"),
        });
    }
    if t != 0 {
        parts.push(match (t, latex) {
            (1, _) => "T".to_string(),
            (_, true) => format!("T^{{{t}}}"),
            _ => format!("T^{t}"),
        });
    }
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join(if latex { "" } else { "*" })
    }
}

fn fmt_lt(p: &LTPoly, latex: bool) -> String {
    let mut keys: Vec<&(i64, i64)> = p.keys().collect();
    keys.sort_by(|x, y| x.1.cmp(&y.1).then(y.0.cmp(&x.0)));
    let mut out = String::new();
    for k in keys {
        let c = &p[k];
        let neg = c.is_negative();
        let a = c.abs();
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push(if neg { '-' } else { '+' });
        }
        let m = fmt_mono(k.0, k.1, latex);
        if m == "1" {
            out.push_str(&a.to_string());
        } else if a.is_one() {
            out.push_str(&m);
        } else {
            out.push_str(&format!("{a}{}{m}", if latex { "" } else { "*" }));
        }
    }
    if out.is_empty() {
        "0".into()
    } else {
        out
    }
}

impl fmt::Display for MotivicExpr {
    /// Plain form such as `L^-5*T^6/(1-L^-5*T^6)`, after cancelling exact factors.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = self.simplify();
        let num = fmt_lt(&s.num, false);
        if s.den.is_empty() {
            return write!(f, "{num}");
        }
        let num = if s.num.len() == 1 { num } else { format!("({num})") };
        let factors: Vec<String> = s
            .den
            .iter()
            .map(|(&(a, b), &m)| {
                let l = format!("(1-{})", fmt_mono(-a, b, false));
                if m > 1 {
                    format!("{l}^{m}")
                } else {
                    l
                }
            })
            .collect();
        if factors.len() == 1 {
            write!(f, "{num}/{}", factors[0])
        } else {
            write!(f, "{num}/({})", factors.join("*"))
        }
    }
}

/// Truncated power series in `ε` with coefficients in `ℚ[s]`.
type Series = Vec<QPoly>;

fn series_mul(a: &Series, b: &Series, order: usize) -> Series {
    let mut r: Series = vec![vec![]; order + 1];
    for (i, ai) in a.iter().enumerate() {
        if ai.is_empty() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            if i + j > order {
                break;
            }
            r[i + j] = qpoly::add(&r[i + j], &qpoly::mul(ai, bj));
        }
    }
    r
}

/// Inverse of a series with constant term 1.
fn series_inv(a: &Series, order: usize) -> Series {
    let mut r: Series = vec![vec![]; order + 1];
    r[0] = vec![Rat::one()];
    for k in 1..=order {
        let mut acc: QPoly = vec![];
        for j in 1..=k.min(a.len() - 1) {
            acc = qpoly::add(&acc, &qpoly::mul(&a[j], &r[k - j]));
        }
        r[k] = qpoly::neg(&acc);
    }
    r
}

/// `C(x, k)` for a polynomial `x` in `s`.
fn binom_poly(x: &QPoly, k: usize) -> QPoly {
    let mut acc: QPoly = vec![Rat::one()];
    for i in 0..k {
        let f = qpoly::sub(x, &[rint(i as i64)]);
        acc = qpoly::scale(&qpoly::mul(&acc, &f), &Rat::new(1.into(), (i as i64 + 1).into()));
    }
    acc
}

/// Euler-characteristic specialization: substitute `T = L^{−s}`, put `L = 1 + ε`,
/// expand in `ε`, check that no negative power of `ε` survives and return the
/// `ε⁰` coefficient as a rational function of `s`.
///
/// Each factor `1 − L^{−a}T^b` becomes `c·ε·q(ε)` with `c = a + b·s` and
/// `q(0) = 1`, so the result has denominator `Π c` exactly.
///
/// Errors with [`Error::SpecializationPole`] if a negative power of `ε` survives.
pub fn chi_specialize(e: &MotivicExpr) -> Result<RatFuncS> {
    if e.is_zero() {
        return Ok(RatFuncS::zero());
    }
    let order: usize = e.den.values().map(|&m| m as usize).sum();
    // numerator: Σ coef·(1+ε)^{l − t·s}
    let mut nser: Series = vec![vec![]; order + 1];
    for (&(l, t), c) in &e.num {
        let x: QPoly = {
            let mut v = vec![rint(l), rint(-t)];
            qpoly::trim(&mut v);
            v
        };
        let c = Rat::from_integer(c.clone());
        for (k, slot) in nser.iter_mut().enumerate() {
            *slot = qpoly::add(slot, &qpoly::scale(&binom_poly(&x, k), &c));
        }
    }
    let mut factors = vec![];
    let mut prod = nser;
    for (&(a, b), &m) in &e.den {
        // q_k = (−1)^k (c+1)…(c+k)/(k+1)!
        let c: QPoly = {
            let mut v = vec![rint(a), rint(b)];
            qpoly::trim(&mut v);
            v
        };
        let mut q: Series = vec![vec![]; order + 1];
        let mut acc: QPoly = vec![Rat::one()];
        for (k, slot) in q.iter_mut().enumerate() {
            if k > 0 {
                acc = qpoly::mul(&acc, &qpoly::add(&c, &[rint(k as i64)]));
                acc = qpoly::neg(&acc);
            }
            *slot = qpoly::scale(&acc, &Rat::new(1.into(), factorial(k + 1)));
        }
        let inv = series_inv(&q, order);
        for _ in 0..m {
            prod = series_mul(&prod, &inv, order);
            factors.push(((b, a), 1u32));
        }
    }
    for (k, coeff) in prod.iter().enumerate().take(order) {
        if !coeff.is_empty() {
            return Err(Error::SpecializationPole(format!(
                "coefficient of ε^{} is {}",
                k as i64 - order as i64,
                crate::exactalg::fmt_rat_poly(coeff, "s")
            )));
        }
    }
    Ok(RatFuncS::from_parts(prod[order].clone(), &factors))
}

fn factorial(k: usize) -> BigInt {
    (1..=k).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defining_rule() {
        // (L−1)(1 − L^{−ν}T^N)^{−1} ↦ 1/(N s + ν)
        let e = MotivicExpr::l_minus_one().mul(&MotivicExpr::geometric(5, 6));
        assert_eq!(chi_specialize(&e).unwrap(), RatFuncS::inv_linear(6, 5));
        // a polynomial in L specializes to its value at L = 1
        let p = MotivicExpr::monomial(3, 4, 2).add(&MotivicExpr::monomial(-1, -2, 0));
        assert_eq!(chi_specialize(&p).unwrap(), RatFuncS::constant(rint(2)));
        // one denominator factor with no (L−1) is a genuine pole in ε
        assert!(matches!(chi_specialize(&MotivicExpr::geometric(1, 1)), Err(Error::SpecializationPole(_))));
    }

    #[test]
    fn equality_and_simplify() {
        // L^{-5}T^6/(1−L^{-5}T^6) = 1/(1−L^{-5}T^6) − 1
        let a = MotivicExpr::monomial(1, -5, 6).mul(&MotivicExpr::geometric(5, 6));
        let b = MotivicExpr::geometric(5, 6).sub(&MotivicExpr::one());
        assert_eq!(a, b);
        assert_eq!(b.to_string(), "L^-5*T^6/(1-L^-5*T^6)");
        // (1 − L^{-1})/(1 − L^{-1}) = 1
        let c = MotivicExpr::one().sub(&MotivicExpr::monomial(1, -1, 0)).mul(&MotivicExpr::geometric(1, 0));
        assert_eq!(c.to_string(), "1");
    }

    #[test]
    fn t_expansion_counts() {
        let e = MotivicExpr::geometric(1, 1);
        let s = e.t_expansion(3);
        assert_eq!(s.len(), 4);
        assert_eq!(s[&2][&-2], BigInt::one());
    }
}
