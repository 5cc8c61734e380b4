//! Newton polyhedra, dual cones, fundamental sets, generating functions and
//! the J-terms of the topological zeta function.

pub mod fan;
pub mod jterms;
pub mod path;
pub mod polyhedron;
pub mod simplicial;

pub use fan::{build_general_fan, FanFace, GeneralFaceFan};
pub use jterms::{capped_cone, edge_cone, j_edge, j_vertex, s_edge, s_vertex, sigma_weights};
pub use path::{build_newton_path, EdgeData, EdgeSummary, NewtonPath, RootClass};
pub(crate) use path::path_vertices;
pub use polyhedron::{Face, Facet, Polyhedron};
pub use simplicial::{fundamental_set, genfun, j_simplicial, lattice_multiplicity, MonomialMap, SimplicialCone};
