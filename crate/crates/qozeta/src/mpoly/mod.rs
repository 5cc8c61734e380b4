//! Multivariate polynomials in `x1..xd, z` over a number-field tower:
//! parsing, z-discriminants, the quasi-ordinary test, good coordinates and
//! Newton-map substitution.
//!
//! ```
//! use qozeta::mpoly::{parse, discriminant_z, is_quasi_ordinary};
//! let f = parse("z^2 - x1^3", &["x1", "z"]).unwrap();
//! let (qo, alpha) = is_quasi_ordinary(&f).unwrap();
//! assert!(qo);
//! assert_eq!(alpha, vec![3]);
//! assert_eq!(discriminant_z(&f).unwrap().to_string(), "-4*x1^3");
//! ```

mod disc;
mod parse;
mod qo;

pub use disc::{discriminant_z, is_quasi_ordinary, resultant_z};
pub use parse::parse;
pub use qo::{
    branches, class_roots, depth, edges_squarefree, essential_variables, good_coordinates, newton_map_substitute,
    reduce_to_essential, restrict_pair, Branch, FormExponents, QOPair, Shift,
};

use crate::exactalg::{rat_to_string, AlgNum, FieldTower, Rat, UniPoly};
use num_traits::{One, Zero};
use std::collections::BTreeMap;
use std::fmt;

/// Exponent vector `(a1, …, ad, az)`; the last entry is the exponent of `z`.
pub type Exponent = Vec<u32>;

/// Sparse polynomial in `d` x-variables and `z` with coefficients in a [`FieldTower`].
///
/// Every stored coefficient is nonzero and lives in `self.tower()`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MPoly {
    nx: usize,
    tower: FieldTower,
    terms: BTreeMap<Exponent, AlgNum>,
}

impl MPoly {
    /// The zero polynomial in `nx` x-variables.
    pub fn zero(nx: usize, tower: &FieldTower) -> Self {
        MPoly { nx, tower: tower.clone(), terms: BTreeMap::new() }
    }

    /// A constant polynomial.
    pub fn constant(nx: usize, c: &AlgNum) -> Self {
        let mut p = Self::zero(nx, c.tower());
        p.add_term(vec![0; nx + 1], c.clone());
        p
    }

    /// The constant one over the rationals.
    pub fn one(nx: usize) -> Self {
        Self::constant(nx, &AlgNum::one(&FieldTower::rationals()))
    }

    /// A single term `c·x^e`.
    pub fn monomial(nx: usize, e: Exponent, c: &AlgNum) -> Self {
        assert_eq!(e.len(), nx + 1, "exponent length must be d+1");
        let mut p = Self::zero(nx, c.tower());
        p.add_term(e, c.clone());
        p
    }

    /// Variable number `i` (0-based among x-variables; `i == nx` is `z`) over the rationals.
    pub fn var(nx: usize, i: usize) -> Self {
        let mut e = vec![0; nx + 1];
        e[i] = 1;
        Self::monomial(nx, e, &AlgNum::one(&FieldTower::rationals()))
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs, summing repeats.
    pub fn from_terms(nx: usize, tower: &FieldTower, terms: impl IntoIterator<Item = (Exponent, AlgNum)>) -> Self {
        let mut p = Self::zero(nx, tower);
        for (e, c) in terms {
            assert_eq!(e.len(), nx + 1, "exponent length must be d+1");
            p.add_term(e, c);
        }
        p
    }

    /// Polynomial with integer coefficients over the rationals.
    pub fn from_int_terms(nx: usize, terms: &[(Vec<u32>, i64)]) -> Self {
        let q = FieldTower::rationals();
        Self::from_terms(nx, &q, terms.iter().map(|(e, c)| (e.clone(), AlgNum::from_rat(&q, Rat::from_integer((*c).into())))))
    }

    fn add_term(&mut self, e: Exponent, c: AlgNum) {
        if c.is_zero() {
            return;
        }
        let c = self.absorb(c);
        match self.terms.get_mut(&e) {
            Some(old) => {
                let s = old.add(&c);
                if s.is_zero() {
                    self.terms.remove(&e);
                } else {
                    *old = s;
                }
            }
            None => {
                self.terms.insert(e, c);
            }
        }
    }

    /// Brings a coefficient into a common tower with `self`, lifting `self` if needed.
    fn absorb(&mut self, c: AlgNum) -> AlgNum {
        if c.tower() == &self.tower {
            c
        } else if c.tower().height() <= self.tower.height() {
            c.lift_to(&self.tower)
        } else {
            let t = c.tower().clone();
            *self = self.lift_to(&t);
            c
        }
    }

    /// Number of x-variables `d`.
    pub fn nx(&self) -> usize {
        self.nx
    }

    /// Coefficient tower.
    pub fn tower(&self) -> &FieldTower {
        &self.tower
    }

    /// Iterator over `(exponent, coefficient)` in increasing lexicographic exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, &AlgNum)> {
        self.terms.iter()
    }

    /// Number of nonzero terms (see [`MPoly::is_zero`] for emptiness).
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    /// True for the zero polynomial.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient of the monomial with exponent `e` (zero if absent).
    pub fn coeff(&self, e: &[u32]) -> AlgNum {
        self.terms.get(e).cloned().unwrap_or_else(|| AlgNum::zero(&self.tower))
    }

    /// Support points as exponent vectors.
    pub fn support(&self) -> Vec<Exponent> {
        self.terms.keys().cloned().collect()
    }

    /// Re-expresses all coefficients in an extension tower.
    pub fn lift_to(&self, tower: &FieldTower) -> MPoly {
        if &self.tower == tower {
            return self.clone();
        }
        MPoly {
            nx: self.nx,
            tower: tower.clone(),
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c.lift_to(tower))).collect(),
        }
    }

    fn common_tower(&self, o: &MPoly) -> FieldTower {
        if self.tower.height() >= o.tower.height() {
            self.tower.clone()
        } else {
            o.tower.clone()
        }
    }

    /// Sum.
    pub fn add(&self, o: &MPoly) -> MPoly {
        assert_eq!(self.nx, o.nx, "variable count mismatch");
        let mut r = self.lift_to(&self.common_tower(o));
        for (e, c) in &o.terms {
            r.add_term(e.clone(), c.clone());
        }
        r
    }

    /// Negation.
    pub fn neg(&self) -> MPoly {
        MPoly { nx: self.nx, tower: self.tower.clone(), terms: self.terms.iter().map(|(e, c)| (e.clone(), c.neg())).collect() }
    }

    /// Difference.
    pub fn sub(&self, o: &MPoly) -> MPoly {
        self.add(&o.neg())
    }

    /// Product.
    pub fn mul(&self, o: &MPoly) -> MPoly {
        assert_eq!(self.nx, o.nx, "variable count mismatch");
        let t = self.common_tower(o);
        let mut r = MPoly::zero(self.nx, &t);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &o.terms {
                let e: Exponent = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                r.add_term(e, c1.mul(c2));
            }
        }
        r
    }

    /// Multiplication by a scalar.
    pub fn scale(&self, c: &AlgNum) -> MPoly {
        let mut r = MPoly::zero(self.nx, &self.tower);
        for (e, a) in &self.terms {
            r.add_term(e.clone(), a.mul(c));
        }
        r
    }

    /// Multiplication by a rational.
    pub fn scale_rat(&self, c: &Rat) -> MPoly {
        if c.is_zero() {
            return MPoly::zero(self.nx, &self.tower);
        }
        MPoly { nx: self.nx, tower: self.tower.clone(), terms: self.terms.iter().map(|(e, a)| (e.clone(), a.scale(c))).collect() }
    }

    /// Multiplication by the monomial `x^e` (no coefficient).
    pub fn shift_exponent(&self, e: &[u32]) -> MPoly {
        MPoly {
            nx: self.nx,
            tower: self.tower.clone(),
            terms: self.terms.iter().map(|(a, c)| (a.iter().zip(e).map(|(x, y)| x + y).collect(), c.clone())).collect(),
        }
    }

    /// Nonnegative integer power.
    pub fn pow(&self, mut k: u32) -> MPoly {
        let mut base = self.clone();
        let mut acc = MPoly::constant(self.nx, &AlgNum::one(&self.tower));
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Degree in `z` (`None` for zero).
    pub fn z_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e[self.nx]).max()
    }

    /// Total degree (`None` for zero).
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    /// Coefficients with respect to `z`: entry `k` is the coefficient of `z^k`
    /// (a polynomial in the x-variables, stored with zero z-exponent).
    pub fn z_coeffs(&self) -> Vec<MPoly> {
        let n = self.z_degree().map_or(0, |d| d as usize + 1);
        let mut out = vec![MPoly::zero(self.nx, &self.tower); n];
        for (e, c) in &self.terms {
            let k = e[self.nx] as usize;
            let mut e0 = e.clone();
            e0[self.nx] = 0;
            out[k].terms.insert(e0, c.clone());
        }
        out
    }

    /// Inverse of [`MPoly::z_coeffs`].
    pub fn from_z_coeffs(nx: usize, tower: &FieldTower, cs: &[MPoly]) -> MPoly {
        let mut r = MPoly::zero(nx, tower);
        for (k, c) in cs.iter().enumerate() {
            for (e, a) in &c.terms {
                let mut e2 = e.clone();
                e2[nx] += k as u32;
                r.add_term(e2, a.clone());
            }
        }
        r
    }

    /// Partial derivative with respect to `z`.
    pub fn deriv_z(&self) -> MPoly {
        let mut r = MPoly::zero(self.nx, &self.tower);
        for (e, c) in &self.terms {
            let k = e[self.nx];
            if k > 0 {
                let mut e2 = e.clone();
                e2[self.nx] -= 1;
                r.add_term(e2, c.scale(&Rat::from_integer(k.into())));
            }
        }
        r
    }

    /// `p(x, 0)`.
    pub fn at_z_zero(&self) -> MPoly {
        let nx = self.nx;
        MPoly {
            nx,
            tower: self.tower.clone(),
            terms: self.terms.iter().filter(|(e, _)| e[nx] == 0).map(|(e, c)| (e.clone(), c.clone())).collect(),
        }
    }

    /// `p(0, z)` as a univariate polynomial in `z`.
    pub fn at_x_zero(&self) -> UniPoly {
        let nx = self.nx;
        let n = self.z_degree().map_or(0, |d| d as usize + 1);
        let mut cs = vec![AlgNum::zero(&self.tower); n];
        for (e, c) in &self.terms {
            if e[..nx].iter().all(|&a| a == 0) {
                cs[e[nx] as usize] = c.clone();
            }
        }
        UniPoly::new(&self.tower, &cs)
    }

    /// Order of `p(0, z)` at `z = 0` (the Weierstrass degree); `None` if `p(0, z) ≡ 0`.
    pub fn z_order_at_origin(&self) -> Option<u32> {
        let nx = self.nx;
        self.terms.keys().filter(|e| e[..nx].iter().all(|&a| a == 0)).map(|e| e[nx]).min()
    }

    /// Componentwise minimum of the x-exponents over the support (the largest monomial `x^N` dividing `p`).
    pub fn min_x_exponents(&self) -> Vec<u32> {
        let mut m: Option<Vec<u32>> = None;
        for e in self.terms.keys() {
            m = Some(match m {
                None => e[..self.nx].to_vec(),
                Some(v) => v.iter().zip(e).map(|(a, b)| *a.min(b)).collect(),
            });
        }
        m.unwrap_or_else(|| vec![0; self.nx])
    }

    /// Divides by the monomial `x^e` (`e` has length `d+1`); panics if not divisible.
    pub fn div_monomial(&self, e: &[u32]) -> MPoly {
        MPoly {
            nx: self.nx,
            tower: self.tower.clone(),
            terms: self
                .terms
                .iter()
                .map(|(a, c)| {
                    let q: Exponent = a.iter().zip(e).map(|(x, y)| x.checked_sub(*y).expect("monomial does not divide")).collect();
                    (q, c.clone())
                })
                .collect(),
        }
    }

    fn leading(&self) -> Option<(&Exponent, &AlgNum)> {
        self.terms.iter().next_back()
    }

    /// Exact division: `Some(q)` with `self = q·o`, or `None` if `o` does not divide `self`.
    ///
    /// Uses repeated cancellation of lexicographically leading terms.
    pub fn div_exact(&self, o: &MPoly) -> Option<MPoly> {
        assert!(!o.is_zero(), "division by zero polynomial");
        let t = self.common_tower(o);
        let mut rem = self.lift_to(&t);
        let o = o.lift_to(&t);
        let mut q = MPoly::zero(self.nx, &t);
        let (le, lc) = o.leading().map(|(e, c)| (e.clone(), c.clone()))?;
        let lc_inv = lc.inv();
        while let Some((e, c)) = rem.leading().map(|(e, c)| (e.clone(), c.clone())) {
            let mut qe = Vec::with_capacity(e.len());
            for (a, b) in e.iter().zip(&le) {
                qe.push(a.checked_sub(*b)?);
            }
            let qc = c.mul(&lc_inv);
            for (oe, oc) in &o.terms {
                let ex: Exponent = oe.iter().zip(&qe).map(|(a, b)| a + b).collect();
                rem.add_term(ex, oc.mul(&qc).neg());
            }
            q.terms.insert(qe, qc);
        }
        Some(q)
    }

    /// Substitutes `z ↦ z + a(x)`.
    pub fn shift_z(&self, a: &MPoly) -> MPoly {
        let zpa = MPoly::var(self.nx, self.nx).add(a);
        let cs = self.z_coeffs();
        // Horner in z
        let mut r = MPoly::zero(self.nx, &self.common_tower(a));
        for c in cs.iter().rev() {
            r = r.mul(&zpa).add(c);
        }
        r
    }

    /// Sets the x-variables not in `keep` (0-based, increasing) to zero and drops them.
    pub fn restrict_to(&self, keep: &[usize]) -> MPoly {
        let nx = self.nx;
        let mut r = MPoly::zero(keep.len(), &self.tower);
        for (e, c) in &self.terms {
            if (0..nx).any(|i| !keep.contains(&i) && e[i] > 0) {
                continue;
            }
            let mut e2: Exponent = keep.iter().map(|&i| e[i]).collect();
            e2.push(e[nx]);
            r.add_term(e2, c.clone());
        }
        r
    }

    /// Inserts unused x-variables so that old variable `i` becomes `positions[i]` among `nx_new`.
    pub fn embed_vars(&self, nx_new: usize, positions: &[usize]) -> MPoly {
        let mut r = MPoly::zero(nx_new, &self.tower);
        for (e, c) in &self.terms {
            let mut e2 = vec![0; nx_new + 1];
            for (i, &p) in positions.iter().enumerate() {
                e2[p] = e[i];
            }
            e2[nx_new] = e[self.nx];
            r.add_term(e2, c.clone());
        }
        r
    }

    /// True if every coefficient is rational.
    pub fn is_rational(&self) -> bool {
        self.terms.values().all(|c| c.as_rat().is_some())
    }

    /// Default variable names `x1, …, xd, z`.
    pub fn default_var_names(nx: usize) -> Vec<String> {
        let mut v: Vec<String> = (1..=nx).map(|i| format!("x{i}")).collect();
        v.push("z".into());
        v
    }

    /// Canonical text with the given variable names: terms ordered by decreasing
    /// z-exponent, then decreasing x-exponents; rational coefficients as `p/q`,
    /// algebraic coefficients parenthesized in generator names.
    pub fn display_with<S: AsRef<str>>(&self, names: &[S]) -> String {
        assert_eq!(names.len(), self.nx + 1, "need one name per variable");
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut keys: Vec<&Exponent> = self.terms.keys().collect();
        let nx = self.nx;
        keys.sort_by(|a, b| b[nx].cmp(&a[nx]).then_with(|| b[..nx].cmp(&a[..nx])));
        let mut out = String::new();
        for (idx, e) in keys.into_iter().enumerate() {
            let c = &self.terms[e];
            let mono: Vec<String> = (0..=nx)
                .filter(|&i| e[i] > 0)
                .map(|i| if e[i] == 1 { names[i].as_ref().to_string() } else { format!("{}^{}", names[i].as_ref(), e[i]) })
                .collect();
            let (neg, cstr) = match c.as_rat() {
                Some(r) => {
                    let neg = r < Rat::zero();
                    let a = if neg { -r } else { r };
                    (neg, if a.is_one() && !mono.is_empty() { String::new() } else { rat_to_string(&a) })
                }
                None => (false, format!("({c})")),
            };
            if idx == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mut parts = vec![];
            if !cstr.is_empty() {
                parts.push(cstr);
            }
            parts.extend(mono);
            out.push_str(&parts.join("*"));
        }
        out
    }
}

impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_with(&Self::default_var_names(self.nx)))
    }
}
