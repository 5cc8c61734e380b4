//! Rational simplicial cones: fundamental sets, multiplicities, and the
//! generating functions `S_Δ` and their specializations `J_Δ`.

use super::polyhedron::det_i128;
use crate::error::{Error, Result};
use crate::zeta::{MotivicExpr, RatFuncS};
use num_integer::Integer;
use std::collections::{BTreeSet, VecDeque};

/// The strictly positive cone spanned by linearly independent integer vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialCone {
    /// Generators `a_1, …, a_r`.
    pub generators: Vec<Vec<i64>>,
    /// `G = ℤ^n ∩ {Σ μ_j a_j : 0 < μ_j ≤ 1}`, sorted.
    pub fundamental_set: Vec<Vec<i64>>,
    /// `|G|`.
    pub multiplicity: usize,
}

/// Weights turning a lattice point `k` into the monomial `L^{−σ(k)} T^{m(k)}`
/// with `σ(k) = sigma·k` and `m(k) = point·k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialMap {
    /// Weights `σ` (the form exponents `ν_1..ν_d, 1`).
    pub sigma: Vec<i64>,
    /// A point of the face, so that `m(k) = point·k` on its dual cone.
    pub point: Vec<i64>,
}

impl MonomialMap {
    /// `(σ(k), m(k))`.
    pub fn eval(&self, k: &[i64]) -> (i64, i64) {
        (dot(&self.sigma, k), dot(&self.point, k))
    }
}

fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// All `k`-subsets of `0..n` in lexicographic order.
pub(crate) fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = vec![];
    let mut cur = vec![];
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

fn minor(gens: &[Vec<i64>], cols: &[usize]) -> i128 {
    det_i128(gens.iter().map(|g| cols.iter().map(|&c| g[c] as i128).collect()).collect())
}

/// Lattice multiplicity of the parallelepiped spanned by `gens`: the gcd of the
/// maximal minors of the generator matrix (index of the spanned lattice in its saturation).
///
/// Errors with [`Error::InvalidCone`] for dependent generators.
pub fn lattice_multiplicity(gens: &[Vec<i64>]) -> Result<i64> {
    check_shape(gens)?;
    let n = gens[0].len();
    let g = subsets(n, gens.len()).iter().fold(0i128, |acc, cols| acc.gcd(&minor(gens, cols)));
    if g == 0 {
        return Err(Error::InvalidCone(format!("dependent generators {gens:?}")));
    }
    i64::try_from(g).map_err(|_| Error::InvalidCone("multiplicity overflow".into()))
}

fn check_shape(gens: &[Vec<i64>]) -> Result<()> {
    if gens.is_empty() {
        return Err(Error::InvalidCone("no generators".into()));
    }
    let n = gens[0].len();
    if gens.iter().any(|g| g.len() != n) || gens.len() > n {
        return Err(Error::InvalidCone(format!("generators {gens:?} do not fit in one lattice")));
    }
    Ok(())
}

/// Computes the fundamental set of the cone spanned by `gens`.
///
/// The coefficients `μ` of a lattice point are determined by its coordinates on
/// a set `I` of columns with nonzero minor `D`, and lie in `(1/D)ℤ`; the
/// candidates form the finite group generated by the images of the unit vectors
/// of `ℤ^I`, which is enumerated by closure and filtered for integrality.
///
/// ```
/// use qozeta::cones::fundamental_set;
/// let c = fundamental_set(&[vec![2, 3], vec![0, 1]]).unwrap();
/// assert_eq!(c.fundamental_set, vec![vec![1, 2], vec![2, 4]]);
/// ```
pub fn fundamental_set(gens: &[Vec<i64>]) -> Result<SimplicialCone> {
    check_shape(gens)?;
    let n = gens[0].len();
    let k = gens.len();
    // columns with the smallest nonzero |minor|
    let (cols, det) = subsets(n, k)
        .into_iter()
        .map(|c| {
            let d = minor(gens, &c);
            (c, d)
        })
        .filter(|(_, d)| *d != 0)
        .min_by_key(|(_, d)| d.abs())
        .ok_or_else(|| Error::InvalidCone(format!("dependent generators {gens:?}")))?;
    let dd = det.abs();
    let sign = det.signum();
    // B[l][j] = gens[l][cols[j]]; μ for x_I = e_j is row j of B^{-1} = adj(B)[j][·]/det
    let b: Vec<Vec<i128>> = gens.iter().map(|g| cols.iter().map(|&c| g[c] as i128).collect()).collect();
    let adj = adjugate(&b);
    let group_gens: Vec<Vec<i128>> = (0..k).map(|j| (0..k).map(|l| (sign * adj[j][l]).rem_euclid(dd)).collect()).collect();
    let mut seen: BTreeSet<Vec<i128>> = BTreeSet::new();
    let zero = vec![0i128; k];
    seen.insert(zero.clone());
    let mut queue = VecDeque::from([zero]);
    while let Some(u) = queue.pop_front() {
        for g in &group_gens {
            let v: Vec<i128> = u.iter().zip(g).map(|(a, b)| (a + b).rem_euclid(dd)).collect();
            if seen.insert(v.clone()) {
                queue.push_back(v);
            }
        }
    }
    let mut pts = vec![];
    for u in &seen {
        let mu: Vec<i128> = u.iter().map(|&x| if x == 0 { dd } else { x }).collect();
        let mut x = vec![0i128; n];
        for (l, g) in gens.iter().enumerate() {
            for c in 0..n {
                x[c] += mu[l] * g[c] as i128;
            }
        }
        if x.iter().all(|v| v % dd == 0) {
            pts.push(x.iter().map(|v| (v / dd) as i64).collect::<Vec<i64>>());
        }
    }
    pts.sort();
    let m = pts.len();
    Ok(SimplicialCone { generators: gens.to_vec(), fundamental_set: pts, multiplicity: m })
}

fn adjugate(b: &[Vec<i128>]) -> Vec<Vec<i128>> {
    let k = b.len();
    if k == 1 {
        return vec![vec![1]];
    }
    // adj[j][l] = (−1)^{j+l} · det(B without row l and column j)
    (0..k)
        .map(|j| {
            (0..k)
                .map(|l| {
                    let sub: Vec<Vec<i128>> = (0..k)
                        .filter(|&r| r != l)
                        .map(|r| (0..k).filter(|&c| c != j).map(|c| b[r][c]).collect())
                        .collect();
                    let d = det_i128(sub);
                    if (j + l) % 2 == 0 {
                        d
                    } else {
                        -d
                    }
                })
                .collect()
        })
        .collect()
}

/// Generating function of the lattice points of the open cone:
/// `(Σ_{g∈G} L^{−σ(g)}T^{m(g)}) / Π_j (1 − L^{−σ(a_j)}T^{m(a_j)})`.
///
/// Errors with [`Error::InvalidCone`] if a generator has negative weight or weight `(0, 0)`.
pub fn genfun(cone: &SimplicialCone, map: &MonomialMap) -> Result<MotivicExpr> {
    let mut num = MotivicExpr::zero();
    for g in &cone.fundamental_set {
        let (s, m) = map.eval(g);
        num = num.add(&MotivicExpr::monomial(1, -s, m));
    }
    let mut out = num;
    for a in &cone.generators {
        let (s, m) = map.eval(a);
        if s < 0 || m < 0 || (s, m) == (0, 0) {
            return Err(Error::InvalidCone(format!("generator {a:?} has weights (σ, m) = ({s}, {m})")));
        }
        out = out.mul(&MotivicExpr::geometric(s, m));
    }
    Ok(out)
}

/// `J_Δ = mult(Δ) / Π_j (σ(a_j) + m(a_j)·s)`, the specialization of `(L−1)^r S_Δ`.
pub fn j_simplicial(gens: &[Vec<i64>], map: &MonomialMap) -> Result<RatFuncS> {
    let mult = lattice_multiplicity(gens)?;
    let mut out = RatFuncS::constant(crate::exactalg::rint(mult));
    for a in gens {
        let (s, m) = map.eval(a);
        out = out.mul(&RatFuncS::inv_linear(m, s));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spec_examples() {
        let c = fundamental_set(&[vec![2, 3], vec![0, 1]]).unwrap();
        assert_eq!(c.fundamental_set, vec![vec![1, 2], vec![2, 4]]);
        assert_eq!(c.multiplicity, 2);
        let c = fundamental_set(&[vec![2, 3]]).unwrap();
        assert_eq!(c.fundamental_set, vec![vec![2, 3]]);
        let c = fundamental_set(&[vec![2, 0, 3], vec![0, 2, 3]]).unwrap();
        assert_eq!(c.fundamental_set, vec![vec![1, 1, 3], vec![2, 2, 6]]);
        assert_eq!(lattice_multiplicity(&[vec![2, 0, 3], vec![0, 2, 3]]).unwrap(), 2);
        assert!(matches!(fundamental_set(&[vec![1, 2], vec![2, 4]]), Err(Error::InvalidCone(_))));
    }

    #[test]
    fn cusp_edge_genfun() {
        let c = fundamental_set(&[vec![2, 3]]).unwrap();
        let e = genfun(&c, &MonomialMap { sigma: vec![1, 1], point: vec![3, 0] }).unwrap();
        assert_eq!(e.to_string(), "L^-5*T^6/(1-L^-5*T^6)");
    }

    #[test]
    fn orthant() {
        let c = fundamental_set(&[vec![1, 0], vec![0, 1]]).unwrap();
        assert_eq!(c.fundamental_set, vec![vec![1, 1]]);
        let e = genfun(&c, &MonomialMap { sigma: vec![1, 2], point: vec![1, 1] }).unwrap();
        let y1 = MotivicExpr::monomial(1, -1, 1);
        let y2 = MotivicExpr::monomial(1, -2, 1);
        assert_eq!(e, y1.mul(&y2).mul(&MotivicExpr::geometric(1, 1)).mul(&MotivicExpr::geometric(2, 1)));
    }
}
