//! The dual fan of an arbitrary Newton polyhedron: for each compact face `τ`
//! its dual cone `Δ_τ = {k > 0 : the minimum of k·x over Γ is attained exactly on τ}`,
//! a deterministic triangulation, the relative lattice volume `V(τ)`, and the
//! terms `J_Δτ` and `S_Δτ`.
//!
//! The closure of `Δ_τ` is spanned by the normals of the facets of `Γ`
//! containing `τ`, and its faces are the dual cones of the faces of `Γ`
//! containing `τ`; this face structure drives a pulling triangulation
//! (always cone over the facets missing the first ray, rays in facet order).

use super::polyhedron::{det_i128, Polyhedron};
use super::simplicial::{fundamental_set, genfun, j_simplicial, lattice_multiplicity, subsets, MonomialMap};
use crate::error::{Error, Result};
use crate::mpoly::MPoly;
use crate::zeta::{MotivicExpr, RatFuncS};
use num_integer::Integer;
use std::collections::{BTreeMap, BTreeSet};

/// One compact face of the Newton polyhedron with its dual-cone data.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FanFace {
    /// Vertices of `τ`.
    pub vertices: Vec<Vec<i64>>,
    /// Dimension of `τ`.
    pub dim: usize,
    /// `dim(τ)!·V(τ)`: the normalized volume of `τ` in its induced lattice.
    pub normalized_volume: i64,
    /// Extreme rays of `Δ_τ` (primitive normals of the facets of `Γ` through `τ`).
    pub rays: Vec<Vec<i64>>,
    /// Maximal simplices of the triangulation of `Δ_τ` (indices into `rays`).
    pub simplices: Vec<Vec<usize>>,
    /// All open cells of the triangulation lying in the relative interior of `Δ_τ`.
    pub cells: Vec<Vec<usize>>,
}

/// All compact faces of `Γ(h)` with dual cones, triangulations and volumes.
#[derive(Clone, Debug)]
pub struct GeneralFaceFan {
    /// Number of variables `n = d + 1`.
    pub n: usize,
    /// Form weights `(ν_1, …, ν_d, 1)`.
    pub sigma: Vec<i64>,
    /// Compact faces, ordered by dimension and then vertices.
    pub faces: Vec<FanFace>,
    /// Warnings from the advisory non-degeneracy sampling.
    pub warnings: Vec<String>,
    poly: Polyhedron,
    support: Vec<(Vec<i64>, crate::exactalg::AlgNum)>,
}

fn sum_rows(rows: &[&Vec<i64>], n: usize) -> Vec<i64> {
    let mut k = vec![0; n];
    for r in rows {
        for i in 0..n {
            k[i] += r[i];
        }
    }
    k
}

impl GeneralFaceFan {
    /// `J_Δτ = Σ_{maximal simplices} mult/Π(σ(a) + m(a)s)` for face `i`.
    pub fn j(&self, i: usize) -> Result<RatFuncS> {
        let f = &self.faces[i];
        let map = MonomialMap { sigma: self.sigma.clone(), point: f.vertices[0].clone() };
        let mut out = RatFuncS::zero();
        for s in &f.simplices {
            let gens: Vec<Vec<i64>> = s.iter().map(|&r| f.rays[r].clone()).collect();
            out = out.add(&j_simplicial(&gens, &map)?);
        }
        Ok(out)
    }

    /// `S_Δτ`: the sum of the generating functions of the open interior cells of face `i`.
    pub fn s(&self, i: usize) -> Result<MotivicExpr> {
        let f = &self.faces[i];
        let map = MonomialMap { sigma: self.sigma.clone(), point: f.vertices[0].clone() };
        let mut out = MotivicExpr::zero();
        for c in &f.cells {
            let gens: Vec<Vec<i64>> = c.iter().map(|&r| f.rays[r].clone()).collect();
            out = out.add(&genfun(&fundamental_set(&gens)?, &map)?);
        }
        Ok(out)
    }

    /// Index of the face whose open dual cone contains `k` (all entries positive).
    pub fn locate(&self, k: &[i64]) -> Option<usize> {
        let f = self.poly.first_meet(k)?;
        let all = self.poly.faces();
        let fi = all.iter().position(|g| std::ptr::eq(g, f))?;
        let verts: Vec<Vec<i64>> = vertices_of(fi, all).iter().map(|&p| self.poly.points()[p].clone()).collect();
        self.faces.iter().position(|g| g.vertices == verts)
    }

    /// Indices `(face, cell)` of the open cells containing `k` (a partition has exactly one).
    pub fn cells_containing(&self, k: &[i64]) -> Vec<(usize, usize)> {
        let mut out = vec![];
        for (i, f) in self.faces.iter().enumerate() {
            for (j, c) in f.cells.iter().enumerate() {
                let gens: Vec<Vec<i64>> = c.iter().map(|&r| f.rays[r].clone()).collect();
                if in_open_cone(&gens, k) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// Facet normals of the whole polyhedron (for denominator checks).
    pub fn facet_normals(&self) -> Vec<Vec<i64>> {
        self.poly.facets().iter().map(|f| f.normal.clone()).collect()
    }

    /// Support value `m_h(k)`.
    pub fn support_value(&self, k: &[i64]) -> i64 {
        self.poly.support_value(k)
    }

    /// Exact non-degeneracy of every compact edge: the face polynomial, written in one
    /// variable along the primitive edge direction, has no repeated root.
    ///
    /// Returns the first degenerate edge as an error.
    pub fn check_edges_nondegenerate(&self) -> Result<()> {
        use crate::exactalg::{squarefree_decomposition, UniPoly};
        let coeff: BTreeMap<&Vec<i64>, &crate::exactalg::AlgNum> = self.support.iter().map(|(e, c)| (e, c)).collect();
        for f in self.faces.iter().filter(|f| f.dim == 1) {
            let (u, v) = (&f.vertices[0], &f.vertices[1]);
            let g = u.iter().zip(v).fold(0i64, |acc, (a, b)| acc.gcd(&(b - a)));
            let w: Vec<i64> = u.iter().zip(v).map(|(a, b)| (b - a) / g).collect();
            let tower = self.support[0].1.tower().clone();
            let cs: Vec<crate::exactalg::AlgNum> = (0..=g)
                .map(|i| {
                    let p: Vec<i64> = u.iter().zip(&w).map(|(a, b)| a + i * b).collect();
                    coeff.get(&p).map(|c| (*c).clone()).unwrap_or_else(|| crate::exactalg::AlgNum::zero(&tower))
                })
                .collect();
            let poly = UniPoly::new(&tower, &cs);
            if squarefree_decomposition(&poly)?.iter().any(|(_, m)| *m > 1) {
                return Err(Error::Degenerate(format!("edge {u:?}–{v:?} has face polynomial {} with a repeated root", poly.display_var("w"))));
            }
        }
        Ok(())
    }
}

fn in_affine_hull(vs: &[Vec<i64>], p: &[i64]) -> bool {
    let base = &vs[0];
    let mut rows: Vec<Vec<i64>> = vs[1..].iter().map(|v| v.iter().zip(base).map(|(a, b)| a - b).collect()).collect();
    let r0 = super::polyhedron::rank(&rows);
    rows.push(p.iter().zip(base).map(|(a, b)| a - b).collect());
    super::polyhedron::rank(&rows) == r0
}

fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// True if `k` lies in the relative interior of the cone spanned by the independent `gens`.
pub(crate) fn in_open_cone(gens: &[Vec<i64>], k: &[i64]) -> bool {
    let n = k.len();
    let r = gens.len();
    let Some(cols) = subsets(n, r).into_iter().find(|c| minor(gens, c) != 0) else { return false };
    let d = minor(gens, &cols);
    // Cramer: μ_l = det(B with row l replaced by k_I) / det(B)
    let mut mu_num = vec![0i128; r];
    for l in 0..r {
        let m: Vec<Vec<i128>> = (0..r)
            .map(|row| cols.iter().map(|&c| if row == l { k[c] as i128 } else { gens[row][c] as i128 }).collect())
            .collect();
        mu_num[l] = det_i128(m);
    }
    // k must equal Σ μ_l g_l in every coordinate
    for c in 0..n {
        let s: i128 = (0..r).map(|l| mu_num[l] * gens[l][c] as i128).sum();
        if s != d * k[c] as i128 {
            return false;
        }
    }
    mu_num.iter().all(|&m| m != 0 && m.signum() == d.signum())
}

fn minor(gens: &[Vec<i64>], cols: &[usize]) -> i128 {
    det_i128(gens.iter().map(|g| cols.iter().map(|&c| g[c] as i128).collect()).collect())
}

/// Builds the fan of `Γ(h)` for a polynomial in `n = h.nx() + 1` variables with form
/// exponents `nu` (for the x-variables; the z-weight is 1).
///
/// Errors with [`Error::DimensionGuard`] when `n > max_dim`.
pub fn build_general_fan(h: &MPoly, nu: &[u32], max_dim: usize) -> Result<GeneralFaceFan> {
    let n = h.nx() + 1;
    if n > max_dim {
        return Err(Error::DimensionGuard { dim: n, max: max_dim });
    }
    if nu.len() != h.nx() {
        return Err(Error::InvalidInput(format!("{} form exponents for {} x-variables", nu.len(), h.nx())));
    }
    if h.is_zero() {
        return Err(Error::InvalidInput("zero polynomial".into()));
    }
    let support: Vec<(Vec<i64>, crate::exactalg::AlgNum)> =
        h.terms().map(|(e, c)| (e.iter().map(|&a| a as i64).collect(), c.clone())).collect();
    if support.iter().any(|(e, _)| e.iter().all(|&a| a == 0)) {
        return Err(Error::InvalidInput("h does not vanish at the origin".into()));
    }
    let pts: Vec<Vec<i64>> = support.iter().map(|(e, _)| e.clone()).collect();
    let poly = Polyhedron::new(&pts);
    let all = poly.faces();
    let facet_normals: Vec<Vec<i64>> = poly.facets().iter().map(|f| f.normal.clone()).collect();
    let mut cone_memo: BTreeMap<usize, Vec<Vec<usize>>> = BTreeMap::new();
    let mut poly_memo: BTreeMap<usize, Vec<Vec<usize>>> = BTreeMap::new();
    let mut faces = vec![];
    for (ti, tau) in all.iter().enumerate() {
        if !tau.is_compact() {
            continue;
        }
        // triangulation of the dual cone, in facet indices
        let simp_facets = triangulate_cone(ti, all, n, &mut cone_memo);
        let rays_idx: Vec<usize> = tau.facets.clone();
        let pos = |fi: usize| rays_idx.iter().position(|&x| x == fi).expect("ray of the cone");
        let simplices: Vec<Vec<usize>> = simp_facets.iter().map(|s| s.iter().map(|&fi| pos(fi)).collect()).collect();
        let rays: Vec<Vec<i64>> = rays_idx.iter().map(|&fi| facet_normals[fi].clone()).collect();
        // interior open cells
        let mut cells: BTreeSet<Vec<usize>> = BTreeSet::new();
        for s in &simplices {
            for k in 1..=s.len() {
                for sub in subsets(s.len(), k) {
                    let cell: Vec<usize> = sub.iter().map(|&i| s[i]).collect();
                    let kk = sum_rows(&cell.iter().map(|&r| &rays[r]).collect::<Vec<_>>(), n);
                    if kk.iter().all(|&x| x > 0) && first_meet_is(&poly, &kk, ti) {
                        cells.insert(cell);
                    }
                }
            }
        }
        // vertices and normalized volume
        let verts: Vec<usize> = vertices_of(ti, all);
        let vertices: Vec<Vec<i64>> = verts.iter().map(|&p| poly.points()[p].clone()).collect();
        let normalized_volume = if tau.dim == 0 {
            1
        } else {
            let tri = triangulate_polytope(ti, all, &mut poly_memo);
            let mut vol = 0i64;
            for s in tri {
                let base = &poly.points()[s[0]];
                let rows: Vec<Vec<i64>> = s[1..].iter().map(|&p| poly.points()[p].iter().zip(base).map(|(a, b)| a - b).collect()).collect();
                vol += lattice_multiplicity(&rows)?;
            }
            vol
        };
        faces.push(FanFace { vertices, dim: tau.dim, normalized_volume, rays, simplices, cells: cells.into_iter().collect() });
    }
    faces.sort_by(|a, b| a.dim.cmp(&b.dim).then_with(|| a.vertices.cmp(&b.vertices)));
    let sigma: Vec<i64> = nu.iter().map(|&v| v as i64).chain([1]).collect();
    let mut fan = GeneralFaceFan { n, sigma, faces, warnings: vec![], poly, support };
    fan.warnings = sample_singular_points(&fan);
    Ok(fan)
}

fn first_meet_is(poly: &Polyhedron, k: &[i64], face_idx: usize) -> bool {
    match poly.first_meet(k) {
        Some(f) => std::ptr::eq(f, &poly.faces()[face_idx]),
        None => false,
    }
}

/// Faces strictly containing face `i` with dimension one more.
fn cofacets(i: usize, all: &[super::polyhedron::Face]) -> Vec<usize> {
    let fi = &all[i];
    (0..all.len())
        .filter(|&j| all[j].dim == fi.dim + 1 && all[j].facets.iter().all(|f| fi.facets.contains(f)))
        .collect()
}

/// Pulling triangulation of the dual cone of face `i` (as sets of facet indices).
fn triangulate_cone(i: usize, all: &[super::polyhedron::Face], n: usize, memo: &mut BTreeMap<usize, Vec<Vec<usize>>>) -> Vec<Vec<usize>> {
    if let Some(t) = memo.get(&i) {
        return t.clone();
    }
    let rays = all[i].facets.clone();
    let k = n - all[i].dim;
    let out = if rays.len() == k {
        vec![rays.clone()]
    } else {
        let v = rays[0];
        let mut out = vec![];
        for j in cofacets(i, all) {
            if all[j].facets.contains(&v) {
                continue;
            }
            for s in triangulate_cone(j, all, n, memo) {
                let mut t = s.clone();
                t.push(v);
                t.sort();
                out.push(t);
            }
        }
        out
    };
    memo.insert(i, out.clone());
    out
}

/// Point indices of the vertices of face `i`.
fn vertices_of(i: usize, all: &[super::polyhedron::Face]) -> Vec<usize> {
    let fi = &all[i];
    let mut v: Vec<usize> = all
        .iter()
        .filter(|f| f.dim == 0 && fi.facets.iter().all(|x| f.facets.contains(x)))
        .map(|f| f.points[0])
        .collect();
    v.sort();
    v.dedup();
    v
}

/// Pulling triangulation of a compact face (as sets of point indices).
fn triangulate_polytope(i: usize, all: &[super::polyhedron::Face], memo: &mut BTreeMap<usize, Vec<Vec<usize>>>) -> Vec<Vec<usize>> {
    if let Some(t) = memo.get(&i) {
        return t.clone();
    }
    let verts = vertices_of(i, all);
    let dim = all[i].dim;
    let out = if verts.len() == dim + 1 {
        vec![verts.clone()]
    } else {
        let v = verts[0];
        let fi = &all[i];
        let mut out = vec![];
        for j in 0..all.len() {
            let fj = &all[j];
            if fj.dim + 1 != dim || !fj.is_compact() || !fi.facets.iter().all(|x| fj.facets.contains(x)) {
                continue;
            }
            if vertices_of(j, all).contains(&v) {
                continue;
            }
            for s in triangulate_polytope(j, all, memo) {
                let mut t = s.clone();
                t.push(v);
                t.sort();
                out.push(t);
            }
        }
        out
    };
    memo.insert(i, out.clone());
    out
}

/// Advisory check for faces of dimension ≥ 2: sample torus points over a prime field and
/// report any point where the face polynomial and all its partial derivatives vanish.
fn sample_singular_points(fan: &GeneralFaceFan) -> Vec<String> {
    use rand_chacha::rand_core::{RngCore, SeedableRng};
    const P: u64 = 2_147_483_647;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x51ee_d0a1);
    let mut warnings = vec![];
    let modp = |c: &crate::exactalg::AlgNum| -> Option<u64> {
        let r = c.as_rat()?;
        let num = (r.numer() % num_bigint::BigInt::from(P) + num_bigint::BigInt::from(P)) % num_bigint::BigInt::from(P);
        let den = (r.denom() % num_bigint::BigInt::from(P) + num_bigint::BigInt::from(P)) % num_bigint::BigInt::from(P);
        let num: u64 = num.try_into().ok()?;
        let den: u64 = den.try_into().ok()?;
        if den == 0 {
            return None;
        }
        Some(num * powmod(den, P - 2, P) % P)
    };
    for f in fan.faces.iter().filter(|f| f.dim >= 2) {
        let on: Vec<(&Vec<i64>, u64)> = fan
            .support
            .iter()
            .filter(|(e, _)| in_affine_hull(&f.vertices, e) && dot(&f.rays[0], e) == dot(&f.rays[0], &f.vertices[0]))
            .filter_map(|(e, c)| modp(c).map(|m| (e, m)))
            .collect();
        if on.is_empty() {
            continue;
        }
        for _ in 0..64 {
            let x: Vec<u64> = (0..fan.n).map(|_| 1 + rng.next_u64() % (P - 1)).collect();
            let mono = |e: &Vec<i64>| e.iter().zip(&x).fold(1u64, |acc, (&a, &xi)| acc * powmod(xi, a as u64, P) % P);
            let val = on.iter().fold(0u64, |acc, (e, c)| (acc + c * mono(e)) % P);
            // x_i ∂_i h_τ = Σ e_i c x^e
            let grads_zero = (0..fan.n).all(|i| on.iter().fold(0u64, |acc, (e, c)| (acc + c * (e[i] as u64 % P) % P * mono(e)) % P) == 0);
            if val == 0 && grads_zero {
                warnings.push(format!("face with vertices {:?} looks singular at a sampled torus point mod {P}", f.vertices));
                break;
            }
        }
    }
    warnings
}

fn powmod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}
