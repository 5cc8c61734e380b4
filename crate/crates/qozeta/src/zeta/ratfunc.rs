//! Rational functions of `s` whose denominators are products of linear
//! factors `N·s + ν` — the shape of every topological zeta function and
//! every J-term.

use crate::exactalg::qpoly::{self, QPoly};
use crate::exactalg::{rat_to_string, rint, Rat};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;

/// `numerator(s) / Π (N·s + ν)^mult`, kept in canonical form.
///
/// Canonical form: every denominator key `(N, ν)` has `N ≥ 1` and
/// `gcd(N, ν) = 1` (constants are folded into the numerator), and no
/// denominator factor divides the numerator (cancellation is decided by an
/// exact root test at `s = −ν/N`). Two canonical values are equal iff their
/// fields are equal, so `PartialEq` is structural.
///
/// ```
/// use qozeta::zeta::RatFuncS;
/// let z = RatFuncS::inv_linear(6, 5).scale_int(2)
///     .add(&RatFuncS::inv_linear(6, 5).scale_int(3))
///     .sub(&RatFuncS::inv_linear(6, 5))
///     .add(&RatFuncS::inv_linear(1, 1).mul(&RatFuncS::inv_linear(6, 5)));
/// assert_eq!(z.to_string(), "(4*s+5)/((s+1)*(6*s+5))");
/// ```
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatFuncS {
    num: QPoly,
    den: BTreeMap<(i64, i64), u32>,
}

impl RatFuncS {
    /// The zero function.
    pub fn zero() -> Self {
        RatFuncS { num: vec![], den: BTreeMap::new() }
    }

    /// The constant 1.
    pub fn one() -> Self {
        Self::constant(Rat::one())
    }

    /// A rational constant.
    pub fn constant(c: Rat) -> Self {
        Self::from_poly(qpoly::constant(c))
    }

    /// A polynomial in `s`.
    pub fn from_poly(p: QPoly) -> Self {
        let mut num = p;
        qpoly::trim(&mut num);
        RatFuncS { num, den: BTreeMap::new() }
    }

    /// The variable `s`.
    pub fn s() -> Self {
        Self::from_poly(vec![Rat::zero(), Rat::one()])
    }

    /// `1 / (N·s + ν)`; with `N = 0` this is the constant `1/ν`.
    ///
    /// Panics if `N = ν = 0`.
    pub fn inv_linear(n: i64, nu: i64) -> Self {
        Self::from_parts(vec![Rat::one()], &[((n, nu), 1)])
    }

    /// Builds `num / Π (N·s+ν)^m` from arbitrary (possibly non-primitive or constant) factors
    /// and canonicalizes.
    ///
    /// Panics if a factor is identically zero.
    pub fn from_parts(num: QPoly, factors: &[((i64, i64), u32)]) -> Self {
        let mut num = num;
        qpoly::trim(&mut num);
        let mut den: BTreeMap<(i64, i64), u32> = BTreeMap::new();
        for &((n, nu), m) in factors {
            if m == 0 {
                continue;
            }
            assert!(n != 0 || nu != 0, "zero linear factor");
            if n == 0 {
                num = qpoly::scale(&num, &rint(nu).pow(-(m as i32)));
                continue;
            }
            let g = n.gcd(&nu);
            let (mut a, mut b) = (n / g, nu / g);
            let mut c = g;
            if a < 0 {
                a = -a;
                b = -b;
                c = -c;
            }
            num = qpoly::scale(&num, &rint(c).pow(-(m as i32)));
            *den.entry((a, b)).or_insert(0) += m;
        }
        let mut r = RatFuncS { num, den };
        r.canonicalize();
        r
    }

    fn canonicalize(&mut self) {
        if self.num.is_empty() {
            self.den.clear();
            return;
        }
        let keys: Vec<(i64, i64)> = self.den.keys().copied().collect();
        for (n, nu) in keys {
            let root = Rat::new((-nu).into(), n.into());
            let lin = vec![rint(nu), rint(n)];
            while self.den[&(n, nu)] > 0 && qpoly::eval(&self.num, &root).is_zero() {
                let (q, r) = qpoly::divrem(&self.num, &lin);
                debug_assert!(r.is_empty());
                self.num = q;
                *self.den.get_mut(&(n, nu)).expect("key") -= 1;
            }
        }
        self.den.retain(|_, m| *m > 0);
    }

    /// Numerator coefficients, lowest degree first.
    pub fn numerator(&self) -> &[Rat] {
        &self.num
    }

    /// Denominator factors `(N, ν) ↦ multiplicity` (primitive, `N ≥ 1`).
    pub fn denominator(&self) -> &BTreeMap<(i64, i64), u32> {
        &self.den
    }

    /// True for the zero function.
    pub fn is_zero(&self) -> bool {
        self.num.is_empty()
    }

    /// Poles `(N, ν, order)`: the point `s = −ν/N` with its order.
    pub fn poles(&self) -> Vec<(i64, i64, u32)> {
        self.den.iter().map(|(&(n, nu), &m)| (n, nu, m)).collect()
    }

    /// Sum.
    pub fn add(&self, o: &RatFuncS) -> RatFuncS {
        let mut den = self.den.clone();
        for (k, &m) in &o.den {
            let e = den.entry(*k).or_insert(0);
            *e = (*e).max(m);
        }
        let lift = |f: &RatFuncS| -> QPoly {
            let mut p = f.num.clone();
            for (&(n, nu), &m) in &den {
                let have = f.den.get(&(n, nu)).copied().unwrap_or(0);
                if m > have {
                    p = qpoly::mul(&p, &qpoly::pow(&[rint(nu), rint(n)], (m - have) as usize));
                }
            }
            p
        };
        let num = qpoly::add(&lift(self), &lift(o));
        let mut r = RatFuncS { num, den };
        r.canonicalize();
        r
    }

    /// Negation.
    pub fn neg(&self) -> RatFuncS {
        RatFuncS { num: qpoly::neg(&self.num), den: self.den.clone() }
    }

    /// Difference.
    pub fn sub(&self, o: &RatFuncS) -> RatFuncS {
        self.add(&o.neg())
    }

    /// Product.
    pub fn mul(&self, o: &RatFuncS) -> RatFuncS {
        let mut den = self.den.clone();
        for (k, &m) in &o.den {
            *den.entry(*k).or_insert(0) += m;
        }
        let mut r = RatFuncS { num: qpoly::mul(&self.num, &o.num), den };
        r.canonicalize();
        r
    }

    /// Multiplication by a rational constant.
    pub fn scale(&self, c: &Rat) -> RatFuncS {
        if c.is_zero() {
            return RatFuncS::zero();
        }
        RatFuncS { num: qpoly::scale(&self.num, c), den: self.den.clone() }
    }

    /// Multiplication by an integer.
    pub fn scale_int(&self, c: i64) -> RatFuncS {
        self.scale(&rint(c))
    }

    /// Value at a rational point, `None` at a pole.
    pub fn eval(&self, s: &Rat) -> Option<Rat> {
        let mut d = Rat::one();
        for (&(n, nu), &m) in &self.den {
            d *= (rint(n) * s + rint(nu)).pow(m as i32);
        }
        if d.is_zero() {
            None
        } else {
            Some(qpoly::eval(&self.num, s) / d)
        }
    }

    /// LaTeX rendering (presentation only).
    pub fn to_latex(&self) -> String {
        let num = fmt_poly_s(&self.num).replace('*', "");
        if self.den.is_empty() {
            return num;
        }
        let den: Vec<String> = self
            .den
            .iter()
            .map(|(&(n, nu), &m)| {
                let f = format!("({})", fmt_linear(n, nu).replace('*', ""));
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

/// `N*s+ν` with the usual sign and unit conventions.
fn fmt_linear(n: i64, nu: i64) -> String {
    let s = if n == 1 { "s".to_string() } else { format!("{n}*s") };
    match nu.signum() {
        0 => s,
        1 => format!("{s}+{nu}"),
        _ => format!("{s}{nu}"),
    }
}

/// A polynomial in `s`, highest degree first, e.g. `4*s+5`.
fn fmt_poly_s(p: &[Rat]) -> String {
    let mut out = String::new();
    for (i, c) in p.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let neg = c.is_negative();
        let a = c.abs();
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push(if neg { '-' } else { '+' });
        }
        let mon = match i {
            0 => String::new(),
            1 => "s".to_string(),
            _ => format!("s^{i}"),
        };
        if i == 0 {
            out.push_str(&rat_to_string(&a));
        } else if a.is_one() {
            out.push_str(&mon);
        } else {
            out.push_str(&format!("{}*{mon}", rat_to_string(&a)));
        }
    }
    if out.is_empty() {
        "0".into()
    } else {
        out
    }
}

impl fmt::Display for RatFuncS {
    /// Plain form such as `(4*s+5)/((s+1)*(6*s+5))` or `3/(3*s+4)^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let num = fmt_poly_s(&self.num);
        if self.den.is_empty() {
            return write!(f, "{num}");
        }
        let is_const = self.num.len() == 1;
        let num = if is_const { num } else { format!("({num})") };
        let factors: Vec<String> = self
            .den
            .iter()
            .map(|(&(n, nu), &m)| {
                let l = format!("({})", fmt_linear(n, nu));
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

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::rat;

    #[test]
    fn cusp_sum_and_display() {
        let j = RatFuncS::inv_linear(6, 5);
        let z = j.scale_int(2).add(&j.scale_int(3)).sub(&j).add(&RatFuncS::inv_linear(1, 1).mul(&j));
        assert_eq!(z.to_string(), "(4*s+5)/((s+1)*(6*s+5))");
        assert_eq!(z.poles(), vec![(1, 1, 1), (6, 5, 1)]);
        assert_eq!(z.eval(&rint(0)), Some(rint(1)));
    }

    #[test]
    fn normalization_and_cancellation() {
        // 3/((3s+3)(3s+4)) has the factor 3s+3 = 3(s+1)
        let a = RatFuncS::from_parts(vec![rint(3)], &[((3, 3), 1), ((3, 4), 1)]);
        assert_eq!(a.denominator().keys().copied().collect::<Vec<_>>(), vec![(1, 1), (3, 4)]);
        // (s+1)/(s+1) = 1
        let b = RatFuncS::from_parts(vec![rint(1), rint(1)], &[((1, 1), 1)]);
        assert_eq!(b, RatFuncS::one());
        // (1/(1+2s))·(1 − 2/(6s+5)) = 3/(6s+5)
        let c = RatFuncS::inv_linear(2, 1).mul(&RatFuncS::one().sub(&RatFuncS::inv_linear(6, 5).scale_int(2)));
        assert_eq!(c, RatFuncS::inv_linear(6, 5).scale_int(3));
        assert_eq!(RatFuncS::inv_linear(0, 4), RatFuncS::constant(rat(1, 4)));
        assert_eq!(RatFuncS::inv_linear(3, 4).mul(&RatFuncS::inv_linear(3, 4)).scale_int(3).to_string(), "3/(3*s+4)^2");
    }

    #[test]
    fn zero_behaviour() {
        let a = RatFuncS::inv_linear(6, 5);
        assert!(a.sub(&a).is_zero());
        assert_eq!(a.sub(&a), RatFuncS::zero());
        assert_eq!(RatFuncS::zero().to_string(), "0");
        assert_eq!(a.eval(&rat(-5, 6)), None);
    }
}
