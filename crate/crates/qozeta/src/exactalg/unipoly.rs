//! Univariate polynomials over a [`FieldTower`], squarefree decomposition,
//! complete factorization (modular over Q, Trager's norm method over
//! extensions) and root adjunction.

use super::factor_q::factor_squarefree_q;
use super::rat::{rat_to_string, Rat};
use super::tower::{AlgNum, Elem, FieldTower};
use crate::error::{Error, Result};
use num_traits::Zero;
use std::cmp::Ordering;
use std::fmt;

/// Dense univariate polynomial with coefficients in the top field of `tower`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniPoly {
    tower: FieldTower,
    coeffs: Vec<Elem>,
}

impl UniPoly {
    pub(crate) fn from_raw(tower: &FieldTower, coeffs: Vec<Elem>) -> Self {
        let coeffs = tower.poly_trim(coeffs);
        UniPoly { tower: tower.clone(), coeffs }
    }

    pub(crate) fn raw(&self) -> &[Elem] {
        &self.coeffs
    }

    /// Builds a polynomial from coefficients (index = degree); they are lifted into `tower`.
    pub fn new(tower: &FieldTower, coeffs: &[AlgNum]) -> Self {
        let raw = coeffs.iter().map(|c| c.lift_to(tower).elem().clone()).collect();
        Self::from_raw(tower, raw)
    }

    /// Polynomial with rational coefficients viewed over `tower`.
    pub fn from_rats(tower: &FieldTower, coeffs: &[Rat]) -> Self {
        let h = tower.height();
        Self::from_raw(tower, coeffs.iter().map(|c| FieldTower::from_rat(h, c.clone())).collect())
    }

    /// Polynomial with integer coefficients viewed over `tower`.
    pub fn from_ints(tower: &FieldTower, coeffs: &[i64]) -> Self {
        let rs: Vec<Rat> = coeffs.iter().map(|&c| Rat::from_integer(c.into())).collect();
        Self::from_rats(tower, &rs)
    }

    /// The zero polynomial.
    pub fn zero(tower: &FieldTower) -> Self {
        Self::from_raw(tower, vec![])
    }

    /// Constant polynomial.
    pub fn constant(c: &AlgNum) -> Self {
        Self::new(c.tower(), std::slice::from_ref(c))
    }

    /// `t - a`.
    pub fn linear(a: &AlgNum) -> Self {
        Self::new(a.tower(), &[a.neg(), AlgNum::one(a.tower())])
    }

    /// Tower of the coefficients.
    pub fn tower(&self) -> &FieldTower {
        &self.tower
    }

    /// Degree; `None` for zero.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// True for the zero polynomial.
    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Coefficient of `t^i`.
    pub fn coeff(&self, i: usize) -> AlgNum {
        match self.coeffs.get(i) {
            Some(e) => AlgNum::from_elem(&self.tower, e.clone()),
            None => AlgNum::zero(&self.tower),
        }
    }

    /// All coefficients, low degree first.
    pub fn coeffs(&self) -> Vec<AlgNum> {
        (0..self.coeffs.len()).map(|i| self.coeff(i)).collect()
    }

    /// Leading coefficient (zero for the zero polynomial).
    pub fn lc(&self) -> AlgNum {
        match self.coeffs.last() {
            Some(e) => AlgNum::from_elem(&self.tower, e.clone()),
            None => AlgNum::zero(&self.tower),
        }
    }

    /// Re-expresses the polynomial over an extension tower.
    pub fn lift_to(&self, tower: &FieldTower) -> UniPoly {
        if &self.tower == tower {
            return self.clone();
        }
        let (from, to) = (self.tower.height(), tower.height());
        assert!(self.tower.is_prefix_of(tower));
        UniPoly::from_raw(tower, self.coeffs.iter().map(|c| FieldTower::embed(c.clone(), from, to)).collect())
    }

    fn common(&self, o: &UniPoly) -> (FieldTower, UniPoly, UniPoly) {
        if self.tower == o.tower {
            (self.tower.clone(), self.clone(), o.clone())
        } else if self.tower.height() <= o.tower.height() {
            (o.tower.clone(), self.lift_to(&o.tower), o.clone())
        } else {
            (self.tower.clone(), self.clone(), o.lift_to(&self.tower))
        }
    }

    /// Sum.
    pub fn add(&self, o: &UniPoly) -> UniPoly {
        let (t, a, b) = self.common(o);
        let r = t.poly_add(t.height(), &a.coeffs, &b.coeffs);
        UniPoly::from_raw(&t, r)
    }

    /// Difference.
    pub fn sub(&self, o: &UniPoly) -> UniPoly {
        let (t, a, b) = self.common(o);
        let r = t.poly_sub(t.height(), &a.coeffs, &b.coeffs);
        UniPoly::from_raw(&t, r)
    }

    /// Product.
    pub fn mul(&self, o: &UniPoly) -> UniPoly {
        let (t, a, b) = self.common(o);
        let r = t.poly_mul(t.height(), &a.coeffs, &b.coeffs);
        UniPoly::from_raw(&t, r)
    }

    /// Multiplication by a scalar.
    pub fn scale(&self, c: &AlgNum) -> UniPoly {
        self.mul(&UniPoly::constant(c))
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn divrem(&self, o: &UniPoly) -> (UniPoly, UniPoly) {
        let (t, a, b) = self.common(o);
        let (q, r) = t.poly_divrem(t.height(), &a.coeffs, &b.coeffs);
        (UniPoly::from_raw(&t, q), UniPoly::from_raw(&t, r))
    }

    /// Monic gcd.
    pub fn gcd(&self, o: &UniPoly) -> UniPoly {
        let (t, a, b) = self.common(o);
        let g = t.poly_gcd(t.height(), &a.coeffs, &b.coeffs);
        UniPoly::from_raw(&t, g)
    }

    /// Formal derivative.
    pub fn deriv(&self) -> UniPoly {
        let d = self.tower.poly_deriv(self.tower.height(), &self.coeffs);
        UniPoly::from_raw(&self.tower, d)
    }

    /// Divides by the leading coefficient.
    pub fn monic(&self) -> UniPoly {
        let m = self.tower.poly_monic(self.tower.height(), &self.coeffs);
        UniPoly::from_raw(&self.tower, m)
    }

    /// Evaluation at an element (of this tower or an extension of it).
    pub fn eval(&self, x: &AlgNum) -> AlgNum {
        let (t, p) = if x.tower().height() >= self.tower.height() {
            (x.tower().clone(), self.lift_to(x.tower()))
        } else {
            (self.tower.clone(), self.clone())
        };
        let xe = x.lift_to(&t);
        AlgNum::from_elem(&t, t.poly_eval(t.height(), &p.coeffs, xe.elem()))
    }

    /// `p(t + c)`.
    pub fn shift(&self, c: &AlgNum) -> UniPoly {
        let t = if c.tower().height() > self.tower.height() { c.tower().clone() } else { self.tower.clone() };
        let p = self.lift_to(&t);
        let ce = c.lift_to(&t);
        UniPoly::from_raw(&t, t.poly_shift(t.height(), &p.coeffs, ce.elem()))
    }

    /// `p^e`.
    pub fn pow(&self, e: usize) -> UniPoly {
        let mut r = UniPoly::constant(&AlgNum::one(&self.tower));
        for _ in 0..e {
            r = r.mul(self);
        }
        r
    }

    /// Renders with the given variable name.
    pub fn display_var(&self, var: &str) -> String {
        if self.coeffs.is_empty() {
            return "0".into();
        }
        let mut parts: Vec<String> = vec![];
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let cs = AlgNum::from_elem(&self.tower, c.clone()).to_string();
            let cs = if cs.contains(' ') { format!("({cs})") } else { cs };
            let mono = match i {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{i}"),
            };
            parts.push(match (mono.is_empty(), cs.as_str()) {
                (true, _) => cs,
                (false, "1") => mono,
                (false, "-1") => format!("-{mono}"),
                _ => format!("{cs}*{mono}"),
            });
        }
        let mut s = String::new();
        for (k, p) in parts.iter().enumerate() {
            if k == 0 {
                s.push_str(p);
            } else if let Some(rest) = p.strip_prefix('-') {
                s.push_str(" - ");
                s.push_str(rest);
            } else {
                s.push_str(" + ");
                s.push_str(p);
            }
        }
        s
    }

    /// Deterministic order: degree first, then lexicographic on coefficient vectors (constant term first).
    pub fn lex_cmp(&self, o: &UniPoly) -> Ordering {
        self.coeffs.len().cmp(&o.coeffs.len()).then_with(|| {
            let (t, a, b) = self.common(o);
            let h = t.height();
            for (x, y) in a.coeffs.iter().zip(b.coeffs.iter()) {
                let c = t.cmp_elem(h, x, y);
                if c != Ordering::Equal {
                    return c;
                }
            }
            Ordering::Equal
        })
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_var("t"))
    }
}

/// `lc · Π f_i^{m_i}` with monic irreducible `f_i`.
#[derive(Clone, Debug)]
pub struct Factorization {
    /// Leading coefficient of the factored polynomial.
    pub unit: AlgNum,
    /// Monic irreducible factors with multiplicities, in deterministic order.
    pub factors: Vec<(UniPoly, usize)>,
}

impl Factorization {
    /// Re-expands the factorization.
    pub fn expand(&self) -> UniPoly {
        self.factors
            .iter()
            .fold(UniPoly::constant(&self.unit), |acc, (f, m)| acc.mul(&f.pow(*m)))
    }
}

/// Yun's squarefree decomposition at height `h`: monic, pairwise coprime parts with multiplicities.
pub(crate) fn yun_raw(t: &FieldTower, h: usize, p: &[Elem]) -> Vec<(Vec<Elem>, usize)> {
    let f = t.poly_monic(h, p);
    if f.len() <= 1 {
        return vec![];
    }
    let fd = t.poly_deriv(h, &f);
    let a0 = t.poly_gcd(h, &f, &fd);
    let mut b = t.poly_divrem(h, &f, &a0).0;
    let c = t.poly_divrem(h, &fd, &a0).0;
    let mut d = t.poly_sub(h, &c, &t.poly_deriv(h, &b));
    let mut out = vec![];
    let mut i = 1;
    while b.len() > 1 {
        let a = t.poly_gcd(h, &b, &d);
        let bn = t.poly_divrem(h, &b, &a).0;
        let cn = t.poly_divrem(h, &d, &a).0;
        d = t.poly_sub(h, &cn, &t.poly_deriv(h, &bn));
        if a.len() > 1 {
            out.push((a, i));
        }
        b = bn;
        i += 1;
    }
    out
}

/// Squarefree decomposition `p = lc · Π q_i^{m_i}`.
pub fn squarefree_decomposition(p: &UniPoly) -> Result<Vec<(UniPoly, usize)>> {
    if p.is_zero() {
        return Err(Error::InvalidInput("squarefree decomposition of the zero polynomial".into()));
    }
    let t = p.tower();
    Ok(yun_raw(t, t.height(), p.raw()).into_iter().map(|(q, m)| (UniPoly::from_raw(t, q), m)).collect())
}

/// Characteristic polynomial of a square matrix over height `h` (Hessenberg reduction).
fn charpoly(t: &FieldTower, h: usize, mut a: Vec<Vec<Elem>>) -> Vec<Elem> {
    let n = a.len();
    for m in 1..n.saturating_sub(1) {
        let Some(piv) = (m..n).find(|&i| !a[i][m - 1].is_zero()) else { continue };
        if piv != m {
            a.swap(piv, m);
            for row in a.iter_mut() {
                row.swap(piv, m);
            }
        }
        let pinv = t.inv(h, &a[m][m - 1]);
        for i in m + 1..n {
            if a[i][m - 1].is_zero() {
                continue;
            }
            let u = t.mul(h, &a[i][m - 1], &pinv);
            for j in 0..n {
                let tmp = t.mul(h, &u, &a[m][j]);
                a[i][j] = t.sub(h, &a[i][j], &tmp);
            }
            for row in a.iter_mut() {
                let tmp = t.mul(h, &u, &row[i]);
                row[m] = t.add(h, &row[m], &tmp);
            }
        }
    }
    // p_0 = 1, p_m = (x - h_mm) p_{m-1} - Σ_{i<m} h_{im} (Π_{j=i+1}^{m} h_{j,j-1}) p_{i-1}
    let mut ps: Vec<Vec<Elem>> = vec![vec![FieldTower::one(h)]];
    for m in 1..=n {
        let lin = t.poly_trim(vec![t.neg(h, &a[m - 1][m - 1]), FieldTower::one(h)]);
        let mut pm = t.poly_mul(h, &lin, &ps[m - 1]);
        let mut prod = FieldTower::one(h);
        for i in (1..m).rev() {
            prod = t.mul(h, &prod, &a[i][i - 1]);
            let coef = t.mul(h, &a[i - 1][m - 1], &prod);
            if coef.is_zero() {
                continue;
            }
            let term = t.poly_scale(h, &ps[i - 1], &coef);
            pm = t.poly_sub(h, &pm, &term);
        }
        ps.push(pm);
    }
    ps.pop().unwrap()
}

/// Norm of a monic `q` over height `h` down to height `h-1`.
fn norm_down(t: &FieldTower, h: usize, q: &[Elem]) -> Vec<Elem> {
    let n = q.len() - 1;
    let e = t.minpoly_raw(h).len() - 1;
    let dim = n * e;
    let zero = FieldTower::zero(h - 1);
    let mut mat = vec![vec![zero.clone(); dim]; dim];
    let theta = t.gen_elem(h);
    let mut theta_pow = FieldTower::one(h);
    for i in 0..e {
        for j in 0..n {
            let col = j * e + i;
            if j + 1 < n {
                mat[(j + 1) * e + i][col] = FieldTower::one(h - 1);
            } else {
                for (k, qk) in q.iter().take(n).enumerate() {
                    let c = t.neg(h, &t.mul(h, &theta_pow, qk));
                    if let Elem::E(coords) = c {
                        for (ii, v) in coords.into_iter().enumerate() {
                            mat[k * e + ii][col] = v;
                        }
                    }
                }
            }
        }
        theta_pow = t.mul(h, &theta_pow, &theta);
    }
    charpoly(t, h - 1, mat)
}

/// Monic irreducible factors of a monic squarefree polynomial at height `h`.
fn factor_squarefree_raw(t: &FieldTower, h: usize, p: &[Elem]) -> Vec<Vec<Elem>> {
    if p.len() <= 2 {
        return vec![t.poly_monic(h, p)];
    }
    if h == 0 {
        let q: Vec<Rat> = p.iter().map(|e| e.as_rat().unwrap()).collect();
        return factor_squarefree_q(&q).into_iter().map(|f| f.into_iter().map(Elem::Q).collect()).collect();
    }
    let theta = t.gen_elem(h);
    for k in 0..64i64 {
        let s = if k % 2 == 1 { (k + 1) / 2 } else { -(k / 2) };
        let st = t.scale_rat(h, &theta, &Rat::from_integer(s.into()));
        // p_s(x) = p(x - sθ)
        let ps = t.poly_shift(h, p, &t.neg(h, &st));
        let nrm = norm_down(t, h, &ps);
        let nd = t.poly_deriv(h - 1, &nrm);
        if t.poly_gcd(h - 1, &nrm, &nd).len() != 1 {
            continue;
        }
        let gs = factor_squarefree_raw(t, h - 1, &nrm);
        if gs.len() == 1 {
            return vec![p.to_vec()];
        }
        let mut out = vec![];
        for g in gs {
            let gl: Vec<Elem> = g.into_iter().map(|c| FieldTower::embed(c, h - 1, h)).collect();
            let c = t.poly_gcd(h, &ps, &gl);
            out.push(t.poly_monic(h, &t.poly_shift(h, &c, &st)));
        }
        return out;
    }
    panic!("no squarefree norm found within 64 shifts");
}

/// Complete factorization over the top field of `p.tower()`.
pub fn factor_irreducible(p: &UniPoly) -> Result<Factorization> {
    if p.is_zero() {
        return Err(Error::InvalidInput("factorization of the zero polynomial".into()));
    }
    let t = p.tower().clone();
    let h = t.height();
    let mut factors: Vec<(UniPoly, usize)> = vec![];
    for (q, m) in yun_raw(&t, h, p.raw()) {
        for f in factor_squarefree_raw(&t, h, &q) {
            factors.push((UniPoly::from_raw(&t, f), m));
        }
    }
    factors.sort_by(|a, b| a.0.lex_cmp(&b.0).then(a.1.cmp(&b.1)));
    Ok(Factorization { unit: p.lc(), factors })
}

/// Number of fresh generator names handed out so far is encoded in the tower height.
fn fresh_name(t: &FieldTower) -> String {
    format!("a{}", t.height() + 1)
}

/// Adjoins a root of `p` to `tower`.
///
/// If `p` has a linear factor over the tower, the tower is returned unchanged
/// together with that root; otherwise a new level is created whose minimal
/// polynomial is the first irreducible factor in the deterministic order.
pub fn adjoin_root(tower: &FieldTower, p: &UniPoly) -> Result<(FieldTower, AlgNum)> {
    adjoin_root_named(tower, p, None)
}

/// [`adjoin_root`] with an explicit generator name.
pub fn adjoin_root_named(tower: &FieldTower, p: &UniPoly, name: Option<&str>) -> Result<(FieldTower, AlgNum)> {
    let p = p.lift_to(tower);
    if p.degree().unwrap_or(0) == 0 {
        return Err(Error::InvalidInput("adjoin_root needs a nonconstant polynomial".into()));
    }
    let fac = factor_irreducible(&p)?;
    let first = &fac.factors[0].0;
    if first.degree() == Some(1) {
        let root = first.coeff(0).neg();
        return Ok((tower.clone(), root));
    }
    let nm = name.map(str::to_string).unwrap_or_else(|| fresh_name(tower));
    let nt = tower.extend_unchecked(&nm, first.raw().to_vec());
    let g = AlgNum::generator(&nt);
    Ok((nt, g))
}

/// Formats a polynomial over Q given as rationals (used in messages).
pub fn fmt_rat_poly(p: &[Rat], var: &str) -> String {
    let mut parts = vec![];
    for (i, c) in p.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        parts.push(match i {
            0 => rat_to_string(c),
            1 => format!("{}*{var}", rat_to_string(c)),
            _ => format!("{}*{var}^{i}", rat_to_string(c)),
        });
    }
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join(" + ")
    }
}
