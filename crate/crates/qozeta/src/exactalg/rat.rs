//! Arbitrary-precision rationals (backed by `num-rational`) and small helpers.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Exact rational number; always stored in lowest terms with a positive denominator.
pub type Rat = num_rational::BigRational;

/// Builds `n/d` from machine integers.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Builds the integer `n` as a rational.
pub fn rint(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// `"p"` for integers and `"p/q"` otherwise; never a decimal point.
pub fn rat_to_string(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses `"p"` or `"p/q"`.
pub fn rat_from_str(s: &str) -> Option<Rat> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                None
            } else {
                Some(Rat::new(n, d))
            }
        }
        None => Some(Rat::from_integer(s.parse().ok()?)),
    }
}

/// Least common multiple of the denominators of `rs` (1 for an empty slice).
pub fn denom_lcm<'a>(rs: impl IntoIterator<Item = &'a Rat>) -> BigInt {
    rs.into_iter().fold(BigInt::one(), |acc, r| acc.lcm(r.denom()))
}

/// Gcd of machine integers, `gcd(0,0)=0`, always nonnegative.
pub fn igcd(a: i64, b: i64) -> i64 {
    a.gcd(&b)
}

/// Absolute value of a big integer as `u64` when it fits.
pub fn big_abs_u64(b: &BigInt) -> Option<u64> {
    use num_traits::ToPrimitive;
    b.abs().to_u64()
}

/// Binomial coefficient `C(c, k)` for a rational `c` and machine `k`.
pub fn binom_rat(c: &Rat, k: usize) -> Rat {
    let mut acc = Rat::one();
    for i in 0..k {
        acc = acc * (c - rint(i as i64)) / rint(i as i64 + 1);
    }
    acc
}

/// Sign-preserving comparison helper: true when `r` is a nonnegative integer.
pub fn is_nonneg_integer(r: &Rat) -> bool {
    r.denom().is_one() && !r.numer().is_negative()
}
