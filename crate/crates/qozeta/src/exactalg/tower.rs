//! Algebraic number-field towers `Q ⊂ Q(θ1) ⊂ Q(θ1,θ2) ⊂ …` and their elements.
//!
//! An element at height `h` is a coordinate vector over the field of height
//! `h-1` (powers of the generator `θ_h`), reduced modulo the monic minimal
//! polynomial of `θ_h`. Height 0 is the rationals. Towers are never flattened
//! to a primitive element.

use super::rat::{rat_to_string, Rat};
use num_traits::{One, Zero};
use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

/// Raw tower element; the height is implied by the tower it is used with.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Elem {
    /// Height 0.
    Q(Rat),
    /// Height `h > 0`: coordinates over height `h-1`, trailing zeros trimmed.
    E(Vec<Elem>),
}

impl Elem {
    /// True for the zero element (either representation).
    pub fn is_zero(&self) -> bool {
        match self {
            Elem::Q(r) => r.is_zero(),
            Elem::E(v) => v.is_empty(),
        }
    }

    /// Rational value when the element lies in the ground field.
    pub fn as_rat(&self) -> Option<Rat> {
        match self {
            Elem::Q(r) => Some(r.clone()),
            Elem::E(v) => match v.len() {
                0 => Some(Rat::zero()),
                1 => v[0].as_rat(),
                _ => None,
            },
        }
    }

    /// Flattens into rational coordinates in a fixed-length layout (used for ordering).
    pub fn flatten(&self, degs: &[usize]) -> Vec<Rat> {
        match (self, degs.split_last()) {
            (Elem::Q(r), None) => vec![r.clone()],
            (Elem::E(v), Some((&d, lower))) => {
                let width: usize = lower.iter().product();
                let mut out = Vec::with_capacity(d * width);
                for i in 0..d {
                    match v.get(i) {
                        Some(c) => out.extend(c.flatten(lower)),
                        None => out.extend(std::iter::repeat_n(Rat::zero(), width)),
                    }
                }
                out
            }
            _ => panic!("element height does not match tower"),
        }
    }
}

#[derive(Debug)]
struct Level {
    name: String,
    /// Monic minimal polynomial over the previous height, low degree first.
    minpoly: Vec<Elem>,
}

/// A finite tower of simple algebraic extensions of Q.
///
/// Cheap to clone (reference counted) and immutable.
#[derive(Clone, Debug)]
pub struct FieldTower {
    levels: Arc<Vec<Level>>,
}

impl PartialEq for FieldTower {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.levels, &other.levels)
            || (self.levels.len() == other.levels.len()
                && self
                    .levels
                    .iter()
                    .zip(other.levels.iter())
                    .all(|(a, b)| a.name == b.name && a.minpoly == b.minpoly))
    }
}
impl Eq for FieldTower {}

impl Default for FieldTower {
    fn default() -> Self {
        Self::rationals()
    }
}

impl FieldTower {
    /// The tower consisting of Q only.
    pub fn rationals() -> Self {
        FieldTower { levels: Arc::new(Vec::new()) }
    }

    /// Number of extension levels.
    pub fn height(&self) -> usize {
        self.levels.len()
    }

    /// Degree of each level over the previous one.
    pub fn level_degrees(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.minpoly.len() - 1).collect()
    }

    /// Degree over Q (product of level degrees).
    pub fn degree(&self) -> usize {
        self.level_degrees().iter().product()
    }

    /// Generator names, bottom first.
    pub fn names(&self) -> Vec<String> {
        self.levels.iter().map(|l| l.name.clone()).collect()
    }

    /// Minimal polynomial of level `i` (1-based height) as raw coefficients over height `i-1`.
    pub(crate) fn minpoly_raw(&self, height: usize) -> &[Elem] {
        &self.levels[height - 1].minpoly
    }

    /// The sub-tower of the given height.
    pub fn prefix(&self, height: usize) -> FieldTower {
        if height == self.height() {
            return self.clone();
        }
        // Levels are immutable; rebuilding a prefix copies the (small) data.
        let levels = self.levels[..height]
            .iter()
            .map(|l| Level { name: l.name.clone(), minpoly: l.minpoly.clone() })
            .collect();
        FieldTower { levels: Arc::new(levels) }
    }

    /// True when `self` is an initial segment of `other`.
    pub fn is_prefix_of(&self, other: &FieldTower) -> bool {
        self.height() <= other.height()
            && self
                .levels
                .iter()
                .zip(other.levels.iter())
                .all(|(a, b)| a.name == b.name && a.minpoly == b.minpoly)
    }

    /// Extends the tower by a root of `minpoly` (coefficients over the current top).
    ///
    /// The caller guarantees irreducibility; the public constructor
    /// [`crate::exactalg::adjoin_root`] verifies it by factoring.
    pub(crate) fn extend_unchecked(&self, name: &str, minpoly: Vec<Elem>) -> FieldTower {
        let mut levels: Vec<Level> = self
            .levels
            .iter()
            .map(|l| Level { name: l.name.clone(), minpoly: l.minpoly.clone() })
            .collect();
        levels.push(Level { name: name.to_string(), minpoly });
        FieldTower { levels: Arc::new(levels) }
    }

    // ----- raw arithmetic at a given height -----

    pub(crate) fn zero(h: usize) -> Elem {
        if h == 0 {
            Elem::Q(Rat::zero())
        } else {
            Elem::E(vec![])
        }
    }

    pub(crate) fn from_rat(h: usize, r: Rat) -> Elem {
        if h == 0 {
            Elem::Q(r)
        } else if r.is_zero() {
            Elem::E(vec![])
        } else {
            Elem::E(vec![Self::from_rat(h - 1, r)])
        }
    }

    pub(crate) fn one(h: usize) -> Elem {
        Self::from_rat(h, Rat::one())
    }

    /// Embeds an element of height `from` into height `to >= from`.
    pub(crate) fn embed(e: Elem, from: usize, to: usize) -> Elem {
        let mut e = e;
        for _ in from..to {
            e = if e.is_zero() { Elem::E(vec![]) } else { Elem::E(vec![e]) };
        }
        e
    }

    /// Generator of height `h` (h ≥ 1).
    pub(crate) fn gen_elem(&self, h: usize) -> Elem {
        let deg = self.levels[h - 1].minpoly.len() - 1;
        if deg == 1 {
            // θ = -m0 for a linear minimal polynomial (not produced by adjoin_root, but harmless)
            let m0 = self.levels[h - 1].minpoly[0].clone();
            return Elem::E(trim_vec(vec![self.neg(h - 1, &m0)]));
        }
        Elem::E(vec![Self::zero(h - 1), Self::one(h - 1)])
    }

    pub(crate) fn add(&self, h: usize, a: &Elem, b: &Elem) -> Elem {
        match (a, b) {
            (Elem::Q(x), Elem::Q(y)) => Elem::Q(x + y),
            (Elem::E(x), Elem::E(y)) => {
                let n = x.len().max(y.len());
                let z = Self::zero(h - 1);
                let v = (0..n).map(|i| self.add(h - 1, x.get(i).unwrap_or(&z), y.get(i).unwrap_or(&z))).collect();
                Elem::E(trim_vec(v))
            }
            _ => panic!("height mismatch in add"),
        }
    }

    #[allow(clippy::only_used_in_recursion)]
    pub(crate) fn neg(&self, h: usize, a: &Elem) -> Elem {
        match a {
            Elem::Q(x) => Elem::Q(-x),
            Elem::E(x) => Elem::E(x.iter().map(|c| self.neg(h - 1, c)).collect()),
        }
    }

    pub(crate) fn sub(&self, h: usize, a: &Elem, b: &Elem) -> Elem {
        self.add(h, a, &self.neg(h, b))
    }

    pub(crate) fn scale_rat(&self, h: usize, a: &Elem, r: &Rat) -> Elem {
        if r.is_zero() {
            return Self::zero(h);
        }
        match a {
            Elem::Q(x) => Elem::Q(x * r),
            Elem::E(x) => Elem::E(x.iter().map(|c| self.scale_rat(h - 1, c, r)).collect()),
        }
    }

    pub(crate) fn mul(&self, h: usize, a: &Elem, b: &Elem) -> Elem {
        match (a, b) {
            (Elem::Q(x), Elem::Q(y)) => Elem::Q(x * y),
            (Elem::E(x), Elem::E(y)) => {
                if x.is_empty() || y.is_empty() {
                    return Elem::E(vec![]);
                }
                let prod = self.poly_mul(h - 1, x, y);
                let (_, r) = self.poly_divrem(h - 1, &prod, &self.levels[h - 1].minpoly);
                Elem::E(r)
            }
            _ => panic!("height mismatch in mul"),
        }
    }

    pub(crate) fn inv(&self, h: usize, a: &Elem) -> Elem {
        assert!(!a.is_zero(), "inverse of zero");
        match a {
            Elem::Q(x) => Elem::Q(x.recip()),
            Elem::E(x) => {
                let (g, s, _) = self.poly_xgcd(h - 1, x, &self.levels[h - 1].minpoly);
                assert_eq!(g.len(), 1, "minimal polynomial not irreducible");
                let ginv = self.inv(h - 1, &g[0]);
                let v = s.iter().map(|c| self.mul(h - 1, c, &ginv)).collect();
                Elem::E(trim_vec(v))
            }
        }
    }

    pub(crate) fn div(&self, h: usize, a: &Elem, b: &Elem) -> Elem {
        self.mul(h, a, &self.inv(h, b))
    }

    pub(crate) fn pow(&self, h: usize, a: &Elem, mut e: u64) -> Elem {
        let mut base = a.clone();
        let mut acc = Self::one(h);
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(h, &acc, &base);
            }
            base = self.mul(h, &base, &base);
            e >>= 1;
        }
        acc
    }

    /// Total order used for deterministic choices (lexicographic on flattened rationals).
    pub(crate) fn cmp_elem(&self, h: usize, a: &Elem, b: &Elem) -> Ordering {
        let degs = &self.level_degrees()[..h];
        a.flatten(degs).cmp(&b.flatten(degs))
    }

    // ----- dense polynomials with coefficients at a given height -----

    pub(crate) fn poly_trim(&self, mut p: Vec<Elem>) -> Vec<Elem> {
        while p.last().is_some_and(|c| c.is_zero()) {
            p.pop();
        }
        p
    }

    pub(crate) fn poly_add(&self, h: usize, a: &[Elem], b: &[Elem]) -> Vec<Elem> {
        let n = a.len().max(b.len());
        let z = Self::zero(h);
        let v = (0..n).map(|i| self.add(h, a.get(i).unwrap_or(&z), b.get(i).unwrap_or(&z))).collect();
        self.poly_trim(v)
    }

    pub(crate) fn poly_sub(&self, h: usize, a: &[Elem], b: &[Elem]) -> Vec<Elem> {
        let nb: Vec<Elem> = b.iter().map(|c| self.neg(h, c)).collect();
        self.poly_add(h, a, &nb)
    }

    pub(crate) fn poly_scale(&self, h: usize, a: &[Elem], c: &Elem) -> Vec<Elem> {
        let v = a.iter().map(|x| self.mul(h, x, c)).collect();
        self.poly_trim(v)
    }

    pub(crate) fn poly_mul(&self, h: usize, a: &[Elem], b: &[Elem]) -> Vec<Elem> {
        if a.is_empty() || b.is_empty() {
            return vec![];
        }
        let mut r = vec![Self::zero(h); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let t = self.mul(h, x, y);
                r[i + j] = self.add(h, &r[i + j], &t);
            }
        }
        self.poly_trim(r)
    }

    pub(crate) fn poly_divrem(&self, h: usize, a: &[Elem], b: &[Elem]) -> (Vec<Elem>, Vec<Elem>) {
        assert!(!b.is_empty(), "division by zero polynomial");
        let mut r = self.poly_trim(a.to_vec());
        if r.len() < b.len() {
            return (vec![], r);
        }
        let db = b.len() - 1;
        let lcinv = self.inv(h, &b[db]);
        let mut q = vec![Self::zero(h); r.len() - db];
        while r.len() > db && !r.is_empty() {
            let k = r.len() - 1 - db;
            let c = self.mul(h, &r[r.len() - 1], &lcinv);
            for (i, bc) in b.iter().enumerate() {
                let t = self.mul(h, &c, bc);
                r[k + i] = self.sub(h, &r[k + i], &t);
            }
            q[k] = c;
            r.pop();
            r = self.poly_trim(r);
        }
        (self.poly_trim(q), r)
    }

    pub(crate) fn poly_monic(&self, h: usize, a: &[Elem]) -> Vec<Elem> {
        match a.last() {
            None => vec![],
            Some(lc) => {
                let inv = self.inv(h, lc);
                self.poly_scale(h, a, &inv)
            }
        }
    }

    pub(crate) fn poly_gcd(&self, h: usize, a: &[Elem], b: &[Elem]) -> Vec<Elem> {
        let mut x = self.poly_trim(a.to_vec());
        let mut y = self.poly_trim(b.to_vec());
        while !y.is_empty() {
            let (_, r) = self.poly_divrem(h, &x, &y);
            x = y;
            y = r;
        }
        self.poly_monic(h, &x)
    }

    /// Extended Euclid: returns `(g, s, t)` with `s a + t b = g`, `g` not normalized.
    pub(crate) fn poly_xgcd(&self, h: usize, a: &[Elem], b: &[Elem]) -> (Vec<Elem>, Vec<Elem>, Vec<Elem>) {
        let (mut r0, mut r1) = (self.poly_trim(a.to_vec()), self.poly_trim(b.to_vec()));
        let (mut s0, mut s1) = (vec![Self::one(h)], vec![]);
        let (mut t0, mut t1) = (vec![], vec![Self::one(h)]);
        while !r1.is_empty() {
            let (q, r) = self.poly_divrem(h, &r0, &r1);
            let s2 = self.poly_sub(h, &s0, &self.poly_mul(h, &q, &s1));
            let t2 = self.poly_sub(h, &t0, &self.poly_mul(h, &q, &t1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s2);
            t0 = std::mem::replace(&mut t1, t2);
        }
        (r0, s0, t0)
    }

    pub(crate) fn poly_deriv(&self, h: usize, a: &[Elem]) -> Vec<Elem> {
        let v = a
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| self.scale_rat(h, c, &Rat::from_integer((i as i64).into())))
            .collect();
        self.poly_trim(v)
    }

    pub(crate) fn poly_eval(&self, h: usize, a: &[Elem], x: &Elem) -> Elem {
        a.iter().rev().fold(Self::zero(h), |acc, c| {
            let t = self.mul(h, &acc, x);
            self.add(h, &t, c)
        })
    }

    /// `a(x + c)`.
    pub(crate) fn poly_shift(&self, h: usize, a: &[Elem], c: &Elem) -> Vec<Elem> {
        let lin = self.poly_trim(vec![c.clone(), Self::one(h)]);
        let mut acc: Vec<Elem> = vec![];
        for coef in a.iter().rev() {
            acc = self.poly_mul(h, &acc, &lin);
            acc = self.poly_add(h, &acc, std::slice::from_ref(coef));
        }
        acc
    }

    /// Renders an element using generator names.
    pub(crate) fn fmt_elem(&self, h: usize, e: &Elem) -> String {
        match e {
            Elem::Q(r) => rat_to_string(r),
            Elem::E(v) => {
                if v.is_empty() {
                    return "0".into();
                }
                let name = &self.levels[h - 1].name;
                let mut parts = vec![];
                for (i, c) in v.iter().enumerate().rev() {
                    if c.is_zero() {
                        continue;
                    }
                    let cs = self.fmt_elem(h - 1, c);
                    let cs = if cs.contains(['+', ' ']) || (cs.starts_with('-') && cs[1..].contains('-')) {
                        format!("({cs})")
                    } else {
                        cs
                    };
                    let mono = match i {
                        0 => String::new(),
                        1 => name.clone(),
                        _ => format!("{name}^{i}"),
                    };
                    parts.push(if mono.is_empty() {
                        cs
                    } else if cs == "1" {
                        mono
                    } else if cs == "-1" {
                        format!("-{mono}")
                    } else {
                        format!("{cs}*{mono}")
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
        }
    }
}

fn trim_vec(mut v: Vec<Elem>) -> Vec<Elem> {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
    v
}

/// An element of a [`FieldTower`], stored at the tower's top height.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgNum {
    tower: FieldTower,
    elem: Elem,
}

impl AlgNum {
    /// Wraps a raw element that lives at the tower's top height.
    pub(crate) fn from_elem(tower: &FieldTower, elem: Elem) -> Self {
        AlgNum { tower: tower.clone(), elem }
    }

    /// The rational `r` viewed in `tower`.
    pub fn from_rat(tower: &FieldTower, r: Rat) -> Self {
        AlgNum { tower: tower.clone(), elem: FieldTower::from_rat(tower.height(), r) }
    }

    /// Zero of `tower`.
    pub fn zero(tower: &FieldTower) -> Self {
        Self::from_rat(tower, Rat::zero())
    }

    /// One of `tower`.
    pub fn one(tower: &FieldTower) -> Self {
        Self::from_rat(tower, Rat::one())
    }

    /// Generator of the top level (panics for the rationals).
    pub fn generator(tower: &FieldTower) -> Self {
        let h = tower.height();
        assert!(h > 0, "the rationals have no generator");
        AlgNum { tower: tower.clone(), elem: tower.gen_elem(h) }
    }

    /// The tower this element belongs to.
    pub fn tower(&self) -> &FieldTower {
        &self.tower
    }

    /// Raw representation.
    pub(crate) fn elem(&self) -> &Elem {
        &self.elem
    }

    /// True for zero.
    pub fn is_zero(&self) -> bool {
        self.elem.is_zero()
    }

    /// True for one.
    pub fn is_one(&self) -> bool {
        self.as_rat().is_some_and(|r| r.is_one())
    }

    /// Rational value if the element lies in Q.
    pub fn as_rat(&self) -> Option<Rat> {
        self.elem.as_rat()
    }

    /// Re-expresses the element in a larger tower that has `self.tower()` as a prefix.
    pub fn lift_to(&self, tower: &FieldTower) -> AlgNum {
        if &self.tower == tower {
            return self.clone();
        }
        assert!(self.tower.is_prefix_of(tower), "lift target is not an extension of the source tower");
        AlgNum {
            tower: tower.clone(),
            elem: FieldTower::embed(self.elem.clone(), self.tower.height(), tower.height()),
        }
    }

    fn common(&self, other: &AlgNum) -> (FieldTower, Elem, Elem) {
        if self.tower == other.tower {
            (self.tower.clone(), self.elem.clone(), other.elem.clone())
        } else if self.tower.height() <= other.tower.height() {
            let a = self.lift_to(&other.tower);
            (other.tower.clone(), a.elem, other.elem.clone())
        } else {
            let b = other.lift_to(&self.tower);
            (self.tower.clone(), self.elem.clone(), b.elem)
        }
    }

    /// Sum.
    pub fn add(&self, o: &AlgNum) -> AlgNum {
        let (t, a, b) = self.common(o);
        let e = t.add(t.height(), &a, &b);
        AlgNum { tower: t, elem: e }
    }

    /// Difference.
    pub fn sub(&self, o: &AlgNum) -> AlgNum {
        let (t, a, b) = self.common(o);
        let e = t.sub(t.height(), &a, &b);
        AlgNum { tower: t, elem: e }
    }

    /// Product.
    pub fn mul(&self, o: &AlgNum) -> AlgNum {
        let (t, a, b) = self.common(o);
        let e = t.mul(t.height(), &a, &b);
        AlgNum { tower: t, elem: e }
    }

    /// Quotient; panics on division by zero.
    pub fn div(&self, o: &AlgNum) -> AlgNum {
        let (t, a, b) = self.common(o);
        let e = t.div(t.height(), &a, &b);
        AlgNum { tower: t, elem: e }
    }

    /// Negation.
    pub fn neg(&self) -> AlgNum {
        AlgNum { tower: self.tower.clone(), elem: self.tower.neg(self.tower.height(), &self.elem) }
    }

    /// Multiplicative inverse; panics on zero.
    pub fn inv(&self) -> AlgNum {
        AlgNum { tower: self.tower.clone(), elem: self.tower.inv(self.tower.height(), &self.elem) }
    }

    /// Integer power.
    pub fn pow(&self, e: u64) -> AlgNum {
        AlgNum { tower: self.tower.clone(), elem: self.tower.pow(self.tower.height(), &self.elem, e) }
    }

    /// Multiplication by a rational.
    pub fn scale(&self, r: &Rat) -> AlgNum {
        AlgNum { tower: self.tower.clone(), elem: self.tower.scale_rat(self.tower.height(), &self.elem, r) }
    }

    /// Deterministic total order (lexicographic on flattened rational coordinates).
    pub fn lex_cmp(&self, o: &AlgNum) -> Ordering {
        let (t, a, b) = self.common(o);
        t.cmp_elem(t.height(), &a, &b)
    }
}

impl fmt::Display for AlgNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.tower.fmt_elem(self.tower.height(), &self.elem))
    }
}
