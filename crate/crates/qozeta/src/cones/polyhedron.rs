//! Newton polyhedra `Γ = conv(points) + ℝ≥0^n`: facets, the face lattice,
//! compactness and dimensions, by exact integer computation.
//!
//! Facets are found by brute force over `n`-subsets of the homogenized
//! generators `(p, 1)` (points) and `(e_i, 0)` (recession directions); a
//! subset spans a facet hyperplane when its signed maximal minors give a
//! normal on which every generator is nonnegative. Faces are the
//! intersections of facets that still contain a point.

use crate::exactalg::Rat;
use num_integer::Integer;
use num_traits::Zero;
use std::collections::BTreeSet;

/// A facet `{x ∈ Γ : a·x = rhs}` with primitive inner normal `a ≥ 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Facet {
    /// Primitive inner normal.
    pub normal: Vec<i64>,
    /// `min_{x ∈ Γ} a·x`.
    pub rhs: i64,
    /// Indices of generators on the facet (points `0..np`, then directions).
    pub gens: Vec<usize>,
}

/// A face of `Γ` that contains at least one point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Face {
    /// Indices into [`Polyhedron::points`] of the points on the face.
    pub points: Vec<usize>,
    /// Coordinate directions `i` (recession rays `e_i`) contained in the face.
    pub dirs: Vec<usize>,
    /// Dimension of the face.
    pub dim: usize,
    /// Indices of the facets containing the face.
    pub facets: Vec<usize>,
}

impl Face {
    /// True if the face is bounded.
    pub fn is_compact(&self) -> bool {
        self.dirs.is_empty()
    }
}

/// The polyhedron `conv(points) + ℝ≥0^n` with its facets and faces.
#[derive(Clone, Debug)]
pub struct Polyhedron {
    n: usize,
    points: Vec<Vec<i64>>,
    facets: Vec<Facet>,
    faces: Vec<Face>,
}

/// Rank of an integer matrix (rows) by exact rational elimination.
pub fn rank(rows: &[Vec<i64>]) -> usize {
    let mut m: Vec<Vec<Rat>> = rows.iter().map(|r| r.iter().map(|&a| Rat::from_integer(a.into())).collect()).collect();
    let ncols = m.first().map_or(0, |r| r.len());
    let mut rk = 0;
    for col in 0..ncols {
        let Some(piv) = (rk..m.len()).find(|&i| !m[i][col].is_zero()) else { continue };
        m.swap(rk, piv);
        for i in rk + 1..m.len() {
            if m[i][col].is_zero() {
                continue;
            }
            let f = &m[i][col] / &m[rk][col];
            for j in col..ncols {
                let t = &f * &m[rk][j];
                m[i][j] -= t;
            }
        }
        rk += 1;
    }
    rk
}

/// Determinant of a small square integer matrix (Bareiss, `i128`).
pub fn det_i128(mut m: Vec<Vec<i128>>) -> i128 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if m[k][k] == 0 {
            match (k + 1..n).find(|&i| m[i][k] != 0) {
                Some(i) => {
                    m.swap(i, k);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]) / prev;
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    sign * m[n - 1][n - 1]
}

/// Generalized cross product: the vector of signed maximal minors of `n` vectors in `ℤ^{n+1}`,
/// orthogonal to all of them (zero iff they are dependent).
pub fn normal_of(vs: &[Vec<i64>]) -> Vec<i64> {
    let dim = vs.len() + 1;
    (0..dim)
        .map(|j| {
            let sub: Vec<Vec<i128>> = vs.iter().map(|v| (0..dim).filter(|&c| c != j).map(|c| v[c] as i128).collect()).collect();
            let d = det_i128(sub);
            let d = if j % 2 == 0 { d } else { -d };
            i64::try_from(d).expect("minor overflow")
        })
        .collect()
}

fn primitive(v: &mut [i64]) {
    let g = v.iter().fold(0i64, |g, &a| g.gcd(&a));
    if g > 1 {
        v.iter_mut().for_each(|a| *a /= g);
    }
}

fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// All `k`-subsets of `0..n` in lexicographic order, passed to `f`.
fn for_each_subset(n: usize, k: usize, f: &mut impl FnMut(&[usize])) {
    if k > n {
        return;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        f(&idx);
        let mut i = k;
        while i > 0 && idx[i - 1] == n - k + i - 1 {
            i -= 1;
        }
        if i == 0 {
            return;
        }
        idx[i - 1] += 1;
        for j in i..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

impl Polyhedron {
    /// Builds `conv(points) + ℝ≥0^n`; dominated and repeated points are discarded.
    ///
    /// Panics if `points` is empty or the points have different lengths.
    pub fn new(points: &[Vec<i64>]) -> Self {
        assert!(!points.is_empty(), "Newton polyhedron of the zero polynomial");
        let n = points[0].len();
        let uniq: BTreeSet<Vec<i64>> = points.iter().cloned().collect();
        let pts: Vec<Vec<i64>> = uniq
            .iter()
            .filter(|p| !uniq.iter().any(|q| q != *p && q.iter().zip(p.iter()).all(|(a, b)| a <= b)))
            .cloned()
            .collect();
        let np = pts.len();
        let mut gens: Vec<Vec<i64>> = pts.iter().map(|p| p.iter().copied().chain([1]).collect()).collect();
        for i in 0..n {
            let mut e = vec![0; n + 1];
            e[i] = 1;
            gens.push(e);
        }
        let mut found: BTreeSet<Vec<i64>> = BTreeSet::new();
        let mut facets = vec![];
        for_each_subset(gens.len(), n, &mut |sub| {
            if !sub.iter().any(|&i| i < np) {
                return;
            }
            let vs: Vec<Vec<i64>> = sub.iter().map(|&i| gens[i].clone()).collect();
            let mut nv = normal_of(&vs);
            if nv.iter().all(|&a| a == 0) {
                return;
            }
            let vals: Vec<i64> = gens.iter().map(|g| dot(g, &nv)).collect();
            let pos = vals.iter().any(|&v| v > 0);
            let neg = vals.iter().any(|&v| v < 0);
            if pos && neg {
                return;
            }
            if neg {
                nv.iter_mut().for_each(|a| *a = -*a);
            }
            primitive(&mut nv);
            if found.insert(nv.clone()) {
                let on: Vec<usize> = (0..gens.len()).filter(|&i| dot(&gens[i], &nv) == 0).collect();
                // must be a genuine facet: the generators on it span a hyperplane
                let sub_rows: Vec<Vec<i64>> = on.iter().map(|&i| gens[i].clone()).collect();
                if rank(&sub_rows) == n {
                    facets.push(Facet { normal: nv[..n].to_vec(), rhs: -nv[n], gens: on });
                }
            }
        });
        facets.sort_by(|a, b| a.normal.cmp(&b.normal));
        // faces: closure of facet generator sets under intersection (keeping those with a point)
        let mut sets: BTreeSet<Vec<usize>> = BTreeSet::new();
        let mut frontier: Vec<Vec<usize>> = facets.iter().map(|f| f.gens.clone()).filter(|g| g.iter().any(|&i| i < np)).collect();
        while let Some(s) = frontier.pop() {
            if !sets.insert(s.clone()) {
                continue;
            }
            for f in &facets {
                let inter: Vec<usize> = s.iter().copied().filter(|i| f.gens.contains(i)).collect();
                if inter.iter().any(|&i| i < np) && !sets.contains(&inter) {
                    frontier.push(inter);
                }
            }
        }
        let faces = sets
            .into_iter()
            .map(|s| {
                let rows: Vec<Vec<i64>> = s.iter().map(|&i| gens[i].clone()).collect();
                let dim = rank(&rows) - 1;
                let facet_ids = (0..facets.len()).filter(|&k| s.iter().all(|i| facets[k].gens.contains(i))).collect();
                Face {
                    points: s.iter().copied().filter(|&i| i < np).collect(),
                    dirs: s.iter().copied().filter(|&i| i >= np).map(|i| i - np).collect(),
                    dim,
                    facets: facet_ids,
                }
            })
            .collect();
        Polyhedron { n, points: pts, facets, faces }
    }

    /// Ambient dimension.
    pub fn ambient_dim(&self) -> usize {
        self.n
    }

    /// The non-dominated input points (candidates for faces).
    pub fn points(&self) -> &[Vec<i64>] {
        &self.points
    }

    /// All facets, ordered by normal.
    pub fn facets(&self) -> &[Facet] {
        &self.facets
    }

    /// All faces that contain a point (compact and non-compact).
    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    /// Compact faces, ordered by dimension and then by point indices.
    pub fn compact_faces(&self) -> Vec<&Face> {
        let mut v: Vec<&Face> = self.faces.iter().filter(|f| f.is_compact()).collect();
        v.sort_by(|a, b| a.dim.cmp(&b.dim).then_with(|| a.points.cmp(&b.points)));
        v
    }

    /// Vertices (0-dimensional faces) as points.
    pub fn vertices(&self) -> Vec<Vec<i64>> {
        self.compact_faces().iter().filter(|f| f.dim == 0).map(|f| self.points[f.points[0]].clone()).collect()
    }

    /// `m(k) = min_{x ∈ Γ} k·x` for `k ≥ 0`.
    pub fn support_value(&self, k: &[i64]) -> i64 {
        self.points.iter().map(|p| dot(p, k)).min().expect("nonempty")
    }

    /// True if `x` (any lattice point) lies on the face: it satisfies every facet equation of the face
    /// and lies in `Γ`.
    pub fn contains_on_face(&self, face: &Face, x: &[i64]) -> bool {
        face.facets.iter().all(|&k| dot(&self.facets[k].normal, x) == self.facets[k].rhs)
            && self.facets.iter().all(|f| dot(&f.normal, x) >= f.rhs)
    }

    /// The face on which `k` (with all entries positive) attains its minimum: the set of
    /// points minimizing `k·x`, returned as the matching face.
    pub fn first_meet(&self, k: &[i64]) -> Option<&Face> {
        let m = self.support_value(k);
        let pts: Vec<usize> = (0..self.points.len()).filter(|&i| dot(&self.points[i], k) == m).collect();
        let dirs: Vec<usize> = (0..self.n).filter(|&i| k[i] == 0).collect();
        self.faces.iter().find(|f| f.points == pts && f.dirs == dirs)
    }
}
