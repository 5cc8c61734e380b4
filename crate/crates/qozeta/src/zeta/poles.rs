//! Candidate poles (CP) and strong candidate poles (SCP) of a quasi-ordinary
//! pair, collected along the Newton process with their provenance.

use crate::cones::{build_newton_path, EdgeData};
use crate::error::Result;
use crate::mpoly::{branches, good_coordinates, QOPair};
use num_integer::Integer;
use std::collections::BTreeMap;
use std::fmt;

/// A set of pairs `(N, ν)` (candidate pole `s = −ν/N`) with provenance tags.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PoleSet {
    pairs: BTreeMap<(i64, i64), Vec<String>>,
}

impl PoleSet {
    /// The empty set.
    pub fn new() -> Self {
        Self::default()
    }

    /// Adds `(N, ν)` with a provenance tag (pairs with `N = 0` are ignored).
    pub fn insert(&mut self, n: i64, nu: i64, provenance: impl Into<String>) {
        if n > 0 {
            let tags = self.pairs.entry((n, nu)).or_default();
            let t = provenance.into();
            if !tags.contains(&t) {
                tags.push(t);
            }
        }
    }

    /// Union with another set.
    pub fn extend(&mut self, o: &PoleSet) {
        for (&(n, nu), tags) in &o.pairs {
            for t in tags {
                self.insert(n, nu, t.clone());
            }
        }
    }

    /// Pairs `(N, ν)` in increasing order.
    pub fn pairs(&self) -> Vec<(i64, i64)> {
        self.pairs.keys().copied().collect()
    }

    /// Pairs with their provenance tags.
    pub fn entries(&self) -> impl Iterator<Item = (&(i64, i64), &Vec<String>)> {
        self.pairs.iter()
    }

    /// True if the literal pair is present.
    pub fn contains_pair(&self, n: i64, nu: i64) -> bool {
        self.pairs.contains_key(&(n, nu))
    }

    /// True if some pair gives the candidate pole `s = −ν/N` (compared as a ratio).
    pub fn contains_pole(&self, n: i64, nu: i64) -> bool {
        self.pairs.keys().any(|&(a, b)| a * nu == b * n)
    }

    /// Distinct candidate poles as reduced pairs `(N, ν)` with `gcd = 1`.
    pub fn reduced_poles(&self) -> Vec<(i64, i64)> {
        let mut v: Vec<(i64, i64)> = self
            .pairs
            .keys()
            .map(|&(n, nu)| {
                let g = n.gcd(&nu);
                (n / g, nu / g)
            })
            .collect();
        v.sort();
        v.dedup();
        v
    }

    /// Number of pairs.
    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    /// True if empty.
    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }
}

impl fmt::Display for PoleSet {
    /// One `(N,ν)` pair per line, followed by its provenance.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for ((n, nu), tags) in &self.pairs {
            let s0 = crate::exactalg::rat_to_string(&-crate::exactalg::rat(*nu, *n));
            writeln!(f, "({n},{nu})  s = {s0}  [{}]", tags.join("; "))?;
        }
        Ok(())
    }
}

/// Coordinates in which the edge is special: `N_i = 0`, `ν_i = 1`, `b_i = 1`.
fn special_coordinates(p: &QOPair, e: &EdgeData) -> Vec<usize> {
    (0..p.nx()).filter(|&i| p.n[i] == 0 && p.nu.nu[i] == 1 && e.b[i] == 1).collect()
}

fn collect(p: &QOPair, max_shifts: usize, strong: bool, label: &str, out: &mut PoleSet) -> Result<()> {
    if p.epsilon() == 1 {
        out.insert(1, 1, format!("{label}: z divides the Weierstrass part"));
    }
    if p.is_base() {
        return Ok(());
    }
    let (p, _) = good_coordinates(p, max_shifts)?;
    let path = build_newton_path(&p)?;
    for (q, e) in path.edges.iter().enumerate() {
        let special = special_coordinates(&p, e);
        let drop = if strong && e.v == 1 && special.len() == 1 { Some(special[0]) } else { None };
        for l in 0..p.nx() {
            if Some(l) == drop {
                continue;
            }
            let (n, nu) = e.candidate_pair(l, &p.nu.nu);
            out.insert(n, nu, format!("{label}: edge {} coordinate {}", q + 1, l + 1));
        }
    }
    for b in branches(&p, max_shifts)? {
        let child = format!("{label}/e{}c{}", b.edge + 1, b.class + 1);
        collect(&b.pullback, max_shifts, strong, &child, out)?;
    }
    Ok(())
}

fn pole_set(p: &QOPair, max_shifts: usize, strong: bool) -> Result<PoleSet> {
    let mut out = PoleSet::new();
    for i in 0..p.nx() {
        out.insert(p.n[i] as i64, p.nu.nu[i] as i64, format!("divisor x{}", i + 1));
    }
    collect(p, max_shifts, strong, "root", &mut out)?;
    Ok(out)
}

/// Candidate poles: divisor pairs `(N_i, ν_i)`, `(1,1)` where `z` divides, and the
/// pairs `(M_l/c_l, ν_l·p_l + b̄_l)` of every edge along the Newton process (for `b_l = 0`
/// the pair is the divisor pair `(N_l, ν_l)` of that level).
pub fn candidate_poles(p: &QOPair, max_shifts: usize) -> Result<PoleSet> {
    pole_set(p, max_shifts, false)
}

/// Strong candidate poles: as [`candidate_poles`], except that when an edge has a single
/// face root (of any multiplicity) and is special (`N_i = 0`, `ν_i = 1`, `b_i = 1`) in exactly
/// one coordinate `i`, that coordinate's pair is dropped from the edge. Edges special in two
/// or more coordinates keep their pairs.
///
/// ```
/// use qozeta::mpoly::{parse, FormExponents, QOPair};
/// use qozeta::zeta::{candidate_poles, strong_candidate_poles};
/// let h = parse("z^2-x1^2*x2", &["x1", "x2", "z"]).unwrap();
/// let p = QOPair::from_poly(&h, FormExponents::ones(2)).unwrap();
/// assert!(candidate_poles(&p, 64).unwrap().contains_pole(2, 3));
/// assert!(!strong_candidate_poles(&p, 64).unwrap().contains_pole(2, 3));
/// ```
pub fn strong_candidate_poles(p: &QOPair, max_shifts: usize) -> Result<PoleSet> {
    pole_set(p, max_shifts, true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mpoly::{parse, FormExponents};

    fn pair(text: &str, vars: &[&str]) -> QOPair {
        QOPair::from_poly(&parse(text, vars).unwrap(), FormExponents::ones(vars.len() - 1)).unwrap()
    }

    #[test]
    fn cusp() {
        let p = pair("z^2-x^3", &["x", "z"]);
        assert_eq!(strong_candidate_poles(&p, 64).unwrap().pairs(), vec![(1, 1), (6, 5)]);
    }

    #[test]
    fn special_edges() {
        let p = pair("z^2-x1^2*x2", &["x1", "x2", "z"]);
        assert_eq!(candidate_poles(&p, 64).unwrap().reduced_poles(), vec![(1, 1), (2, 3)]);
        assert_eq!(strong_candidate_poles(&p, 64).unwrap().reduced_poles(), vec![(1, 1)]);
        let p = pair("z^2-x1*x2", &["x1", "x2", "z"]);
        assert_eq!(strong_candidate_poles(&p, 64).unwrap().reduced_poles(), vec![(1, 1), (2, 3)]);
    }
}
