//! The Newton polyhedron of a quasi-ordinary polynomial in good coordinates:
//! a monotone path of vertices `τ0, …, τr` (increasing z-height) joined by
//! edges `γ1, …, γr`, with all the integers attached to each edge.

use super::polyhedron::Polyhedron;
use crate::error::{Error, Result};
use crate::exactalg::{factor_irreducible, AlgNum, Rat, UniPoly};
use crate::mpoly::{MPoly, QOPair};
use num_integer::Integer;
use serde::Serialize;

/// One irreducible factor of an edge's face polynomial (in `w`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootClass {
    /// Monic irreducible factor `g(w)`; its roots are the face roots `β`.
    pub factor: UniPoly,
    /// Multiplicity of `g` in the face polynomial.
    pub multiplicity: usize,
    /// Number of distinct roots `β` carried by `g` (its degree).
    pub count: usize,
}

/// All integers attached to a compact edge `γ_q` joining `τ_{q-1}` (lower) and `τ_q` (upper).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeData {
    /// Lower vertex `τ_{q-1}` (full exponent vector, last entry the z-height).
    pub lower: Vec<i64>,
    /// Upper vertex `τ_q`.
    pub upper: Vec<i64>,
    /// Multi-slope `λ = (A − B)/(height difference)` for lower/upper x-parts `A`, `B`.
    pub lambda: Vec<Rat>,
    /// Smallest positive integer with `n1·λ` integral.
    pub n1: i64,
    /// `b = n1·λ`.
    pub b: Vec<i64>,
    /// `c_l = gcd(n1, b_l)`.
    pub c: Vec<i64>,
    /// `p_l = n1 / c_l`.
    pub p: Vec<i64>,
    /// `b̄_l = b_l / c_l`.
    pub bbar: Vec<i64>,
    /// `M_l` with `n1·x_l + b_l·z = M_l` on the edge.
    pub m: Vec<i64>,
    /// Primitive generators `w_l = (n1·e_l + b_l·e_{d+1}) / c_l` of the edge's dual cone.
    pub w: Vec<Vec<i64>>,
    /// Face polynomial in `w` (coefficient of `w^i` is the coefficient at height `lower + i·n1`).
    pub face_poly_w: UniPoly,
    /// Irreducible factors of the face polynomial.
    pub roots: Vec<RootClass>,
    /// Number of distinct face roots `v(q)`.
    pub v: usize,
}

impl EdgeData {
    /// Number of x-variables.
    pub fn nx(&self) -> usize {
        self.b.len()
    }

    /// z-height of the lower vertex.
    pub fn lower_height(&self) -> i64 {
        *self.lower.last().expect("nonempty")
    }

    /// z-height of the upper vertex.
    pub fn upper_height(&self) -> i64 {
        *self.upper.last().expect("nonempty")
    }

    /// `mult(Δ_γ) = n1^{d-1} / Π c_l`, the multiplicity of the edge cone.
    pub fn mult(&self) -> i64 {
        let d = self.nx() as u32;
        self.n1.pow(d - 1) / self.c.iter().product::<i64>()
    }

    /// `n1^d / Π c_l`, the multiplicity of the capped cone `w_1..w_d, e_{d+1}`.
    pub fn capped_mult(&self) -> i64 {
        let d = self.nx() as u32;
        self.n1.pow(d) / self.c.iter().product::<i64>()
    }

    /// Candidate pair `(M_l/c_l, ν_l·p_l + b̄_l)` for coordinate `l`.
    pub fn candidate_pair(&self, l: usize, nu: &[u32]) -> (i64, i64) {
        (self.m[l] / self.c[l], nu[l] as i64 * self.p[l] + self.bbar[l])
    }

    /// True if the face polynomial is squarefree (the edge is non-degenerate).
    pub fn is_squarefree(&self) -> bool {
        self.roots.iter().all(|r| r.multiplicity == 1)
    }
}

/// Plain serializable summary of an edge (exact integers and rationals as strings).
#[derive(Clone, Debug, Serialize)]
pub struct EdgeSummary {
    pub lambda: Vec<String>,
    pub n1: i64,
    pub b: Vec<i64>,
    pub c: Vec<i64>,
    pub p: Vec<i64>,
    pub bbar: Vec<i64>,
    #[serde(rename = "M")]
    pub m: Vec<i64>,
    pub w: Vec<Vec<i64>>,
    pub face_poly_w: String,
    pub root_classes: Vec<(String, usize, usize)>,
    pub v: usize,
}

impl From<&EdgeData> for EdgeSummary {
    fn from(e: &EdgeData) -> Self {
        EdgeSummary {
            lambda: e.lambda.iter().map(crate::exactalg::rat_to_string).collect(),
            n1: e.n1,
            b: e.b.clone(),
            c: e.c.clone(),
            p: e.p.clone(),
            bbar: e.bbar.clone(),
            m: e.m.clone(),
            w: e.w.clone(),
            face_poly_w: e.face_poly_w.display_var("w"),
            root_classes: e.roots.iter().map(|r| (r.factor.display_var("w"), r.multiplicity, r.count)).collect(),
            v: e.v,
        }
    }
}

/// Vertices and edges of a quasi-ordinary Newton polyhedron.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NewtonPath {
    /// Vertices `τ0..τr` (full exponent vectors), increasing in z-height.
    pub vertices: Vec<Vec<i64>>,
    /// Edges `γ1..γr`; edge `q-1` joins vertex `q-1` and vertex `q`.
    pub edges: Vec<EdgeData>,
}

impl NewtonPath {
    /// Number of edges `r`.
    pub fn r(&self) -> usize {
        self.edges.len()
    }

    /// z-height `d_q` of vertex `q`.
    pub fn height(&self, q: usize) -> i64 {
        *self.vertices[q].last().expect("nonempty")
    }
}

fn to_i64(e: &[u32]) -> Vec<i64> {
    e.iter().map(|&a| a as i64).collect()
}

/// Checks that the compact faces of `Γ(g)` form a monotone path and returns
/// its vertices in increasing height.
pub(crate) fn path_vertices(poly: &Polyhedron) -> Result<Vec<Vec<i64>>> {
    let compact = poly.compact_faces();
    if let Some(f) = compact.iter().find(|f| f.dim >= 2) {
        let pts: Vec<String> = f.points.iter().map(|&i| format!("{:?}", poly.points()[i])).collect();
        return Err(Error::NotMonotonePath(format!("compact face of dimension {} through {}", f.dim, pts.join(", "))));
    }
    let mut verts = poly.vertices();
    let n = poly.ambient_dim();
    verts.sort_by_key(|v| v[n - 1]);
    for w in verts.windows(2) {
        if w[0][n - 1] == w[1][n - 1] {
            return Err(Error::NotMonotonePath(format!("two vertices {:?} and {:?} at the same z-height", w[0], w[1])));
        }
        if (0..n - 1).any(|i| w[0][i] < w[1][i]) {
            return Err(Error::NotMonotonePath(format!("x-exponents increase from {:?} to {:?}", w[0], w[1])));
        }
    }
    let n_edges = compact.iter().filter(|f| f.dim == 1).count();
    if n_edges + 1 != verts.len() {
        return Err(Error::NotMonotonePath(format!("{} vertices but {} compact edges", verts.len(), n_edges)));
    }
    Ok(verts)
}

/// Edge data for the segment from `lower` to `upper` of the Newton polyhedron of
/// `full = x^N·g`, reading coefficients from `g` (support shifted by `shift = N`).
pub(crate) fn edge_data(g: &MPoly, shift: &[u32], lower: &[i64], upper: &[i64]) -> Result<EdgeData> {
    let nx = g.nx();
    let dh = upper[nx] - lower[nx];
    assert!(dh > 0, "edge must climb in z");
    let lambda: Vec<Rat> = (0..nx).map(|l| Rat::new((lower[l] - upper[l]).into(), dh.into())).collect();
    let n1 = lambda.iter().fold(1i64, |acc, r| {
        let den: i64 = r.denom().try_into().expect("small denominator");
        acc.lcm(&den)
    });
    let b: Vec<i64> = lambda.iter().map(|r| (r * Rat::from_integer(n1.into())).to_integer().try_into().expect("small")).collect();
    let c: Vec<i64> = b.iter().map(|&bl| n1.gcd(&bl)).collect();
    let p: Vec<i64> = c.iter().map(|&cl| n1 / cl).collect();
    let bbar: Vec<i64> = b.iter().zip(&c).map(|(bl, cl)| bl / cl).collect();
    let m: Vec<i64> = (0..nx).map(|l| n1 * lower[l] + b[l] * lower[nx]).collect();
    let w: Vec<Vec<i64>> = (0..nx)
        .map(|l| {
            let mut v = vec![0; nx + 1];
            v[l] = n1 / c[l];
            v[nx] = b[l] / c[l];
            v
        })
        .collect();
    let e = dh / n1;
    let mut coeffs: Vec<AlgNum> = vec![];
    for i in 0..=e {
        let pt: Vec<u32> = (0..=nx)
            .map(|k| {
                let full = if k < nx { lower[k] - i * b[k] } else { lower[k] + i * n1 };
                let sh = if k < nx { shift[k] as i64 } else { 0 };
                u32::try_from(full - sh).expect("edge point inside the support shift")
            })
            .collect();
        coeffs.push(g.coeff(&pt));
    }
    let face_poly_w = UniPoly::new(g.tower(), &coeffs);
    let fac = factor_irreducible(&face_poly_w)?;
    let roots: Vec<RootClass> = fac
        .factors
        .iter()
        .map(|(f, mlt)| RootClass { factor: f.clone(), multiplicity: *mlt, count: f.degree().unwrap_or(0) })
        .collect();
    let v = roots.iter().map(|r| r.count).sum();
    Ok(EdgeData { lower: lower.to_vec(), upper: upper.to_vec(), lambda, n1, b, c, p, bbar, m, w, face_poly_w, roots, v })
}

/// Builds the Newton path of the full polynomial `x^N·g` of a pair in good coordinates.
///
/// Errors with [`Error::NotMonotonePath`] if the compact faces are not a monotone path.
pub fn build_newton_path(p: &QOPair) -> Result<NewtonPath> {
    let g = &p.g;
    let nx = g.nx();
    let mut shift = p.n.clone();
    shift.push(0);
    let pts: Vec<Vec<i64>> = g.support().iter().map(|e| to_i64(&e.iter().zip(&shift).map(|(a, s)| a + s).collect::<Vec<_>>())).collect();
    let poly = Polyhedron::new(&pts);
    let verts = path_vertices(&poly)?;
    let mut edges = vec![];
    for w in verts.windows(2) {
        edges.push(edge_data(g, &shift[..nx], &w[0], &w[1])?);
    }
    Ok(NewtonPath { vertices: verts, edges })
}
