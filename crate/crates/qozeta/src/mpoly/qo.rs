//! Pairs `(h, ω)`, good coordinates, Newton maps, essential variables and depth.

use super::{is_quasi_ordinary, MPoly};
use crate::cones::polyhedron::Polyhedron;
use crate::cones::{build_newton_path, path_vertices, EdgeData};
use crate::error::{Error, Result};
use crate::exactalg::{adjoin_root, factor_irreducible, AlgNum, Rat, UniPoly};
use serde::Serialize;

/// Exponents `ν_1..ν_d ≥ 1` of the form `ω = Π x_j^{ν_j - 1} dx ∧ dz` (the z-exponent is 1).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct FormExponents {
    /// `ν_j`, all positive.
    pub nu: Vec<u32>,
}

impl FormExponents {
    /// Validates `ν_j ≥ 1`.
    pub fn new(nu: Vec<u32>) -> Result<Self> {
        if let Some(j) = nu.iter().position(|&v| v == 0) {
            return Err(Error::InvalidInput(format!("form exponent nu_{} must be >= 1", j + 1)));
        }
        Ok(FormExponents { nu })
    }

    /// The standard form `ν = (1, …, 1)`.
    pub fn ones(d: usize) -> Self {
        FormExponents { nu: vec![1; d] }
    }
}

/// One coordinate change `z ↦ z + a(x)` applied while normalizing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Shift {
    /// The polynomial `a(x)`.
    pub a: MPoly,
    /// The offending face polynomial that triggered the shift.
    pub face: String,
}

/// A polynomial `h = x^N·g` together with the form exponents `ν`.
///
/// Invariants: no `x_j` divides `g`; `g(0, z) ≢ 0`; `h(0, 0) = 0` for inputs;
/// and the support condition `N_j = 0 ⇒ ν_j = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QOPair {
    /// Residual `g = h / x^N` (it may be divisible by `z`).
    pub g: MPoly,
    /// Form exponents.
    pub nu: FormExponents,
    /// Monomial exponents `N`.
    pub n: Vec<u32>,
}

impl QOPair {
    /// Splits off the largest monomial and validates the pair (no quasi-ordinary test).
    pub fn new(h: &MPoly, nu: FormExponents) -> Result<Self> {
        let d = h.nx();
        if h.is_zero() {
            return Err(Error::InvalidInput("the zero polynomial".into()));
        }
        if nu.nu.len() != d {
            return Err(Error::InvalidInput(format!("{} form exponents given for {} x-variables", nu.nu.len(), d)));
        }
        let n = h.min_x_exponents();
        let mut shift = n.clone();
        shift.push(0);
        let g = h.div_monomial(&shift);
        if g.z_order_at_origin().is_none() {
            return Err(Error::InvalidInput(format!(
                "`{h}` is not z-regular: after removing the monomial factor, the residual vanishes on the z-axis"
            )));
        }
        if n.iter().all(|&a| a == 0) && g.z_order_at_origin() == Some(0) {
            return Err(Error::InvalidInput(format!("`{h}` does not vanish at the origin")));
        }
        let p = QOPair { g, nu, n };
        p.check_support_condition()?;
        Ok(p)
    }

    /// [`QOPair::new`] followed by the quasi-ordinary test on the residual.
    pub fn from_poly(h: &MPoly, nu: FormExponents) -> Result<Self> {
        let p = Self::new(h, nu)?;
        if p.weierstrass_degree() >= 2 {
            let (qo, alpha) = is_quasi_ordinary(&p.g)?;
            if !qo {
                return Err(Error::NotQuasiOrdinaryInZ(format!(
                    "the z-discriminant of `{}` has no unique minimal exponent (componentwise minimum {:?} is not in its support)",
                    p.g, alpha
                )));
            }
        }
        Ok(p)
    }

    /// Errors unless `N_j = 0 ⇒ ν_j = 1`.
    pub fn check_support_condition(&self) -> Result<()> {
        for j in 0..self.n.len() {
            if self.n[j] == 0 && self.nu.nu[j] != 1 {
                return Err(Error::InvalidInput(format!(
                    "support condition violated: N_{} = 0 but nu_{} = {} (must be 1)",
                    j + 1,
                    j + 1,
                    self.nu.nu[j]
                )));
            }
        }
        Ok(())
    }

    /// Number of x-variables.
    pub fn nx(&self) -> usize {
        self.g.nx()
    }

    /// The full polynomial `x^N·g`.
    pub fn full(&self) -> MPoly {
        let mut e = self.n.clone();
        e.push(0);
        self.g.shift_exponent(&e)
    }

    /// Order of `g(0, z)` at `z = 0`: the degree of the Weierstrass polynomial of `g`.
    pub fn weierstrass_degree(&self) -> u32 {
        self.g.z_order_at_origin().expect("z-regular residual")
    }

    /// True when the residual is a unit or smooth (Weierstrass degree ≤ 1): the recursion's base case.
    pub fn is_base(&self) -> bool {
        self.weierstrass_degree() <= 1
    }

    /// `ε ∈ {0, 1}`: whether `z` divides the Weierstrass part (after the coordinate change
    /// that straightens a smooth residual).
    pub fn epsilon(&self) -> u32 {
        let w = self.weierstrass_degree();
        if w <= 1 {
            w
        } else {
            u32::from(self.g.at_z_zero().is_zero())
        }
    }
}

fn face_text(g: &MPoly, pts: &[Vec<u32>]) -> String {
    let face = MPoly::from_terms(g.nx(), g.tower(), pts.iter().map(|e| (e.clone(), g.coeff(e))));
    face.to_string()
}

/// Shift making the sub-top coefficient of the face vanish: `a = −c_{top−1}(x) / (e·c_top·x^{a_top})`.
fn tschirnhausen(g: &MPoly, pts: &[Vec<u32>]) -> Result<MPoly> {
    let nx = g.nx();
    let top = pts.iter().map(|e| e[nx]).max().expect("nonempty face");
    let bot = pts.iter().map(|e| e[nx]).min().expect("nonempty face");
    let tops: Vec<&Vec<u32>> = pts.iter().filter(|e| e[nx] == top).collect();
    if tops.len() != 1 {
        return Err(Error::NotMonotonePath(format!("face `{}` has no unique top point", face_text(g, pts))));
    }
    let a_top = tops[0];
    let c_top = g.coeff(a_top);
    let e = top - bot;
    let mut a = MPoly::zero(nx, g.tower());
    for pt in pts.iter().filter(|p| p[nx] + 1 == top) {
        let mut q = vec![0u32; nx + 1];
        for i in 0..nx {
            q[i] = pt[i].checked_sub(a_top[i]).ok_or_else(|| {
                Error::NotMonotonePath(format!("face `{}`: Tschirnhausen shift is not polynomial", face_text(g, pts)))
            })?;
        }
        let coef = g.coeff(pt).div(&c_top).scale(&Rat::new((-1).into(), e.into()));
        a = a.add(&MPoly::monomial(nx, q, &coef));
    }
    if a.is_zero() {
        return Err(Error::NotMonotonePath(format!("face `{}` cannot be improved by a shift", face_text(g, pts))));
    }
    Ok(a)
}

/// The first face violating good coordinates, as its support points (or `None`).
fn offending_face(g: &MPoly) -> Result<Option<Vec<Vec<u32>>>> {
    let nx = g.nx();
    let pts: Vec<Vec<i64>> = g.support().iter().map(|e| e.iter().map(|&a| a as i64).collect()).collect();
    let poly = Polyhedron::new(&pts);
    let as_u32 = |i: &usize| -> Vec<u32> { poly.points()[*i].iter().map(|&a| a as u32).collect() };
    let mut high: Vec<Vec<Vec<u32>>> = poly
        .compact_faces()
        .iter()
        .filter(|f| f.dim >= 2)
        .map(|f| f.points.iter().map(as_u32).collect::<Vec<_>>())
        .collect();
    if !high.is_empty() {
        high.sort_by_key(|f| std::cmp::Reverse(f.iter().map(|e| e[nx]).max()));
        return Ok(high.into_iter().next());
    }
    let verts = path_vertices(&poly)?;
    if verts.len() >= 2 && !g.at_z_zero().is_zero() {
        let e = crate::cones::path::edge_data(g, &vec![0; nx], &verts[0], &verts[1])?;
        if e.n1 == 1 && e.v == 1 {
            let face = poly
                .compact_faces()
                .iter()
                .find(|f| f.dim == 1 && f.points.iter().any(|i| poly.points()[*i] == verts[0]))
                .map(|f| f.points.iter().map(as_u32).collect::<Vec<_>>())
                .expect("bottom edge exists");
            return Ok(Some(face));
        }
    }
    Ok(None)
}

/// Brings a pair into good coordinates by shifts `z ↦ z + a(x)`.
///
/// Offending faces are compact faces of dimension ≥ 2 and a bottom edge whose
/// face polynomial is a power of a single linear form `z − β·x^b` (`n1 = 1`,
/// one distinct root) when `z` does not divide `g`. Each is removed by the
/// Tschirnhausen shift of its face polynomial.
///
/// Errors with [`Error::NonTerminatingNormalization`] after `max_shifts` shifts.
pub fn good_coordinates(p: &QOPair, max_shifts: usize) -> Result<(QOPair, Vec<Shift>)> {
    let mut g = p.g.clone();
    let mut log = vec![];
    while let Some(face) = offending_face(&g)? {
        let text = face_text(&g, &face);
        if log.len() >= max_shifts {
            return Err(Error::NonTerminatingNormalization { max_shifts, face: text });
        }
        let a = tschirnhausen(&g, &face)?;
        g = g.shift_z(&a);
        log.push(Shift { a, face: text });
    }
    Ok((QOPair { g, nu: p.nu.clone(), n: p.n.clone() }, log))
}

/// Pull-back of a pair under the Newton map of an edge and a root `α` with `α^{n1} = β`:
/// `x_l = y_l^{p_l}`, `z = (z1 + α)·Π y_l^{b̄_l}`.
///
/// The monomial part is refactored (`N'_l = M_l/c_l` if `b_l > 0`, else `N_l`),
/// `ν'_l = p_l·ν_l + b̄_l`, and a non-base result is renormalized to good coordinates.
pub fn newton_map_substitute(p: &QOPair, edge: &EdgeData, alpha: &AlgNum, max_shifts: usize) -> Result<QOPair> {
    let nx = p.nx();
    let t = if alpha.tower().height() >= p.g.tower().height() { alpha.tower().clone() } else { p.g.tower().clone() };
    let alpha = alpha.lift_to(&t);
    let beta = alpha.pow(edge.n1 as u64);
    if !edge.face_poly_w.lift_to(&t).eval(&beta).is_zero() || alpha.is_zero() {
        return Err(Error::InvalidRoot(format!(
            "({alpha})^{} = {beta} is not a root of the face polynomial {}",
            edge.n1,
            edge.face_poly_w.display_var("w")
        )));
    }
    let g = p.g.lift_to(&t);
    let zmax = g.z_degree().unwrap_or(0) as usize;
    // powers of (z1 + α) as coefficient vectors
    let lin = UniPoly::new(&t, &[alpha.clone(), AlgNum::one(&t)]);
    let mut pows = vec![UniPoly::new(&t, &[AlgNum::one(&t)])];
    for k in 1..=zmax {
        pows.push(pows[k - 1].mul(&lin));
    }
    let mut terms = vec![];
    for (e, c) in g.terms() {
        let k = e[nx] as usize;
        let ybase: Vec<u32> =
            (0..nx).map(|l| (edge.p[l] * e[l] as i64 + k as i64 * edge.bbar[l]) as u32).collect();
        for (j, cj) in pows[k].coeffs().iter().enumerate() {
            if cj.is_zero() {
                continue;
            }
            let mut ex = ybase.clone();
            ex.push(j as u32);
            terms.push((ex, c.mul(cj)));
        }
    }
    let pulled = MPoly::from_terms(nx, &t, terms);
    let extra = pulled.min_x_exponents();
    let mut sh = extra.clone();
    sh.push(0);
    let g2 = pulled.div_monomial(&sh);
    let n2: Vec<u32> = (0..nx).map(|l| edge.p[l] as u32 * p.n[l] + extra[l]).collect();
    for l in 0..nx {
        if edge.b[l] > 0 && n2[l] as i64 != edge.m[l] / edge.c[l] {
            return Err(Error::Internal(format!(
                "pull-back monomial exponent N'_{} = {} differs from M/c = {}",
                l + 1,
                n2[l],
                edge.m[l] / edge.c[l]
            )));
        }
    }
    let nu2: Vec<u32> = (0..nx).map(|l| (edge.p[l] * p.nu.nu[l] as i64 + edge.bbar[l]) as u32).collect();
    let out = QOPair { g: g2, nu: FormExponents { nu: nu2 }, n: n2 };
    out.check_support_condition().map_err(|e| Error::Internal(format!("pull-back broke the support condition: {e}")))?;
    if out.g.z_order_at_origin().is_none() {
        return Err(Error::Internal("pull-back residual vanishes on the z-axis".into()));
    }
    if out.is_base() {
        return Ok(out);
    }
    Ok(good_coordinates(&out, max_shifts)?.0)
}

/// One branch of the Newton process: the pull-back along a root class of an edge.
#[derive(Clone, Debug)]
pub struct Branch {
    /// Edge index `q-1` (0-based).
    pub edge: usize,
    /// Index of the root class within the edge.
    pub class: usize,
    /// Number of conjugate roots the branch stands for.
    pub count: usize,
    /// The chosen face root `β`.
    pub beta: AlgNum,
    /// The chosen `α` with `α^{n1} = β`.
    pub alpha: AlgNum,
    /// The pulled-back pair in good coordinates.
    pub pullback: QOPair,
}

/// Adjoins a root `β` of a root class and an `n1`-th root `α` of `β`.
pub fn class_roots(p: &QOPair, edge: &EdgeData, class: usize) -> Result<(AlgNum, AlgNum)> {
    let t0 = p.g.tower();
    let factor = edge.roots[class].factor.lift_to(t0);
    let (t1, beta) = adjoin_root(t0, &factor)?;
    let one = AlgNum::one(&t1);
    let mut cs = vec![AlgNum::zero(&t1); edge.n1 as usize + 1];
    cs[0] = beta.neg();
    cs[edge.n1 as usize] = one;
    let (_, alpha) = adjoin_root(&t1, &UniPoly::new(&t1, &cs))?;
    Ok((beta, alpha))
}

/// All Newton-map pull-backs of a pair in good coordinates, one per root class of each edge.
pub fn branches(p: &QOPair, max_shifts: usize) -> Result<Vec<Branch>> {
    if p.is_base() {
        return Ok(vec![]);
    }
    let path = build_newton_path(p)?;
    let mut out = vec![];
    for (q, e) in path.edges.iter().enumerate() {
        for (k, rc) in e.roots.iter().enumerate() {
            let (beta, alpha) = class_roots(p, e, k)?;
            let pb = newton_map_substitute(p, e, &alpha, max_shifts)?;
            out.push(Branch { edge: q, class: k, count: rc.count, beta, alpha, pullback: pb });
        }
    }
    Ok(out)
}

/// Depth: 0 for a base pair, otherwise 1 + the maximal depth of its pull-backs.
pub fn depth(p: &QOPair, max_shifts: usize) -> Result<usize> {
    let mut best = 0;
    for b in branches(p, max_shifts)? {
        best = best.max(1 + depth(&b.pullback, max_shifts)?);
    }
    if !p.is_base() && best == 0 {
        return Err(Error::Internal("non-base pair without Newton branches".into()));
    }
    Ok(best)
}

/// Essential variables (0-based x-indices): those dividing the z-discriminant of
/// the residual, together with those carrying a monomial factor `N_i > 0`.
pub fn essential_variables(p: &QOPair) -> Result<Vec<usize>> {
    let alpha = if p.weierstrass_degree() >= 2 { is_quasi_ordinary(&p.g)?.1 } else { vec![0; p.nx()] };
    Ok((0..p.nx()).filter(|&i| alpha[i] > 0 || p.n[i] > 0).collect())
}

/// Restricts a pair to its essential variables (the others are set to zero and dropped).
///
/// Returns the reduced pair and the kept 0-based indices.
pub fn reduce_to_essential(p: &QOPair) -> Result<(QOPair, Vec<usize>)> {
    let keep = essential_variables(p)?;
    Ok((restrict_pair(p, &keep), keep))
}

/// Restricts a pair to the x-variables `keep` (others set to zero).
pub fn restrict_pair(p: &QOPair, keep: &[usize]) -> QOPair {
    QOPair {
        g: p.g.restrict_to(keep),
        nu: FormExponents { nu: keep.iter().map(|&i| p.nu.nu[i]).collect() },
        n: keep.iter().map(|&i| p.n[i]).collect(),
    }
}

/// Squarefree test of the face polynomial of every edge (exact non-degeneracy for path shapes).
pub fn edges_squarefree(p: &QOPair) -> Result<bool> {
    if p.is_base() {
        return Ok(true);
    }
    let path = build_newton_path(p)?;
    for e in &path.edges {
        let f = factor_irreducible(&e.face_poly_w)?;
        if f.factors.iter().any(|(_, m)| *m > 1) {
            return Ok(false);
        }
    }
    Ok(true)
}
