//! The decorated tree of the Newton process: one node per pair met during the
//! recursion, with its edges, root classes, and arrow decorations.

use crate::cones::{build_newton_path, EdgeSummary};
use crate::error::Result;
use crate::mpoly::{branches, good_coordinates, QOPair};
use serde::Serialize;
use std::fmt;

/// Decorations of the two arrows of a node: `ε` on the z-arrow and `N` on the x-arrow.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Arrows {
    /// 1 if `z` divides the Weierstrass part.
    pub epsilon: u32,
    /// Monomial exponents `N`.
    #[serde(rename = "N")]
    pub n: Vec<u32>,
}

/// One root class of an edge and the subtree of its pull-back.
#[derive(Clone, Debug, Serialize)]
pub struct TreeBranch {
    /// 1-based edge index.
    pub edge: usize,
    /// Irreducible factor of the face polynomial, in `w`.
    pub factor: String,
    /// Number of face roots carried by the factor.
    pub count: usize,
    /// Subtree of the pull-back.
    pub child: TreeNode,
}

/// A node of the Newton tree.
#[derive(Clone, Debug, Serialize)]
pub struct TreeNode {
    /// The polynomial `x^N·g` in good coordinates, with variables named `x1, …, xd, z`
    /// (pull-backs live in new coordinates, so user names are not reused).
    pub pair: String,
    /// Form exponents.
    pub nu: Vec<u32>,
    /// Arrow decorations.
    pub arrows: Arrows,
    /// Coordinate shifts applied to reach good coordinates.
    pub shifts: Vec<String>,
    /// Edge data of the Newton path (empty at depth 0).
    pub edges: Vec<EdgeSummary>,
    /// Root classes with their subtrees.
    pub branches: Vec<TreeBranch>,
}

impl TreeNode {
    /// Depth of the subtree (0 for a leaf).
    pub fn depth(&self) -> usize {
        self.branches.iter().map(|b| 1 + b.child.depth()).max().unwrap_or(0)
    }

    /// Number of nodes in the subtree.
    pub fn size(&self) -> usize {
        1 + self.branches.iter().map(|b| b.child.size()).sum::<usize>()
    }

    fn write_indented(&self, f: &mut fmt::Formatter<'_>, indent: usize) -> fmt::Result {
        let pad = "  ".repeat(indent);
        writeln!(f, "{pad}node {}  nu={:?}  N={:?}  eps={}", self.pair, self.nu, self.arrows.n, self.arrows.epsilon)?;
        for s in &self.shifts {
            writeln!(f, "{pad}  shift z -> z + ({s})")?;
        }
        for (q, e) in self.edges.iter().enumerate() {
            writeln!(
                f,
                "{pad}  edge {}: n1={} b={:?} M={:?} face={} v={}",
                q + 1,
                e.n1,
                e.b,
                e.m,
                e.face_poly_w,
                e.v
            )?;
        }
        for b in &self.branches {
            writeln!(f, "{pad}  edge {} root class {} ({} root{})", b.edge, b.factor, b.count, if b.count == 1 { "" } else { "s" })?;
            b.child.write_indented(f, indent + 2)?;
        }
        Ok(())
    }
}

impl fmt::Display for TreeNode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write_indented(f, 0)
    }
}

/// Builds the decorated Newton tree of a quasi-ordinary pair.
pub fn newton_tree(p: &QOPair, max_shifts: usize) -> Result<TreeNode> {
    let arrows = Arrows { epsilon: p.epsilon(), n: p.n.clone() };
    if p.is_base() {
        return Ok(TreeNode { pair: p.full().to_string(), nu: p.nu.nu.clone(), arrows, shifts: vec![], edges: vec![], branches: vec![] });
    }
    let (g, shifts) = good_coordinates(p, max_shifts)?;
    let path = build_newton_path(&g)?;
    let mut out = vec![];
    for b in branches(&g, max_shifts)? {
        let e = &path.edges[b.edge];
        out.push(TreeBranch {
            edge: b.edge + 1,
            factor: e.roots[b.class].factor.display_var("w"),
            count: b.count,
            child: newton_tree(&b.pullback, max_shifts)?,
        });
    }
    Ok(TreeNode {
        pair: g.full().to_string(),
        nu: g.nu.nu.clone(),
        arrows,
        shifts: shifts.iter().map(|s| s.a.to_string()).collect(),
        edges: path.edges.iter().map(EdgeSummary::from).collect(),
        branches: out,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mpoly::{parse, FormExponents};

    fn pair(text: &str) -> QOPair {
        QOPair::from_poly(&parse(text, &["x", "z"]).unwrap(), FormExponents::ones(1)).unwrap()
    }

    #[test]
    fn shapes() {
        let t = newton_tree(&pair("z^2-x^3"), 64).unwrap();
        assert_eq!(t.arrows, Arrows { epsilon: 0, n: vec![0] });
        assert_eq!((t.depth(), t.size(), t.edges.len()), (1, 2, 1));
        let t = newton_tree(&pair("(z^2-x^5)*(z-x^2)*(z^3-x^2)"), 64).unwrap();
        assert_eq!(t.edges.len(), 3);
        assert_eq!(t.depth(), 1);
        let t = newton_tree(&pair("(z^2-x^3)^2+x^7"), 64).unwrap();
        assert_eq!(t.depth(), 2);
        let t = newton_tree(&pair("x^3*z"), 64).unwrap();
        assert_eq!((t.size(), t.arrows.epsilon), (1, 1));
    }
}
