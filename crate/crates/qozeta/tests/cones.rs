//! Simplicial cones, generating functions, Newton paths and the general fan.

mod common;

use common::pair;
use proptest::prelude::*;
use qozeta::cones::{
    build_general_fan, build_newton_path, capped_cone, edge_cone, fundamental_set, genfun, j_simplicial, lattice_multiplicity,
    MonomialMap,
};
use qozeta::mpoly::{good_coordinates, parse};
use qozeta::zeta::{chi_specialize, MotivicExpr};
use qozeta::Error;

#[test]
fn fundamental_sets() {
    let c = fundamental_set(&[vec![1, 0], vec![0, 1]]).unwrap();
    assert_eq!(c.fundamental_set, vec![vec![1, 1]]);
    let c = fundamental_set(&[vec![2, 3], vec![0, 1]]).unwrap();
    assert_eq!((c.multiplicity, c.fundamental_set.clone()), (2, vec![vec![1, 2], vec![2, 4]]));
    // a ray of a lower-dimensional cone inside Z^3
    let c = fundamental_set(&[vec![2, 2, 4]]).unwrap();
    assert_eq!(c.fundamental_set, vec![vec![1, 1, 2], vec![2, 2, 4]]);
    assert!(matches!(fundamental_set(&[vec![1, 2], vec![2, 4]]), Err(Error::InvalidCone(_))));
}

#[test]
fn multiplicity_is_gcd_of_maximal_minors() {
    assert_eq!(lattice_multiplicity(&[vec![3, 0], vec![0, 2]]).unwrap(), 6);
    assert_eq!(lattice_multiplicity(&[vec![2, 4, 6]]).unwrap(), 2);
    assert_eq!(lattice_multiplicity(&[vec![1, 1, 0], vec![0, 1, 1]]).unwrap(), 1);
}

#[test]
fn j_term_is_the_specialization_of_the_s_term() {
    let gens = vec![vec![2, 3], vec![1, 1]];
    let map = MonomialMap { sigma: vec![1, 1], point: vec![3, 2] };
    let s = genfun(&fundamental_set(&gens).unwrap(), &map).unwrap();
    let lifted = s.mul(&MotivicExpr::l_minus_one().pow(2));
    assert_eq!(chi_specialize(&lifted).unwrap(), j_simplicial(&gens, &map).unwrap());
}

#[test]
fn cusp_path() {
    let p = pair("z^2-x^3", "x,z");
    let path = build_newton_path(&p).unwrap();
    assert_eq!(path.r(), 1);
    let e = &path.edges[0];
    assert_eq!((e.n1, e.b.clone(), e.m.clone(), e.v), (2, vec![3], vec![6], 1));
    assert_eq!(e.candidate_pair(0, &[1]), (6, 5));
    assert_eq!((edge_cone(e).unwrap().multiplicity, capped_cone(e).unwrap().multiplicity), (1, 2));
}

#[test]
fn surface_edge_multiplicities() {
    let (g, _) = good_coordinates(&pair("z^2-x1^3*x2^3", "x1,x2,z"), 64).unwrap();
    let e = &build_newton_path(&g).unwrap().edges[0];
    assert_eq!((e.mult(), e.capped_mult()), (2, 4));
    assert_eq!(edge_cone(e).unwrap().multiplicity as i64, e.mult());
    assert_eq!(capped_cone(e).unwrap().multiplicity as i64, e.capped_mult());
}

#[test]
fn general_fan_of_cusp() {
    let h = parse("z^2-x^3", &["x", "z"]).unwrap();
    let fan = build_general_fan(&h, &[1], 5).unwrap();
    let edge = fan.faces.iter().position(|f| f.dim == 1).unwrap();
    assert_eq!(fan.faces[edge].rays, vec![vec![2, 3]]);
    assert_eq!(fan.locate(&[2, 3]), Some(edge));
    assert_eq!(fan.support_value(&[2, 3]), 6);
    assert!(fan.check_edges_nondegenerate().is_ok());
}

proptest! {
    #[test]
    fn planar_multiplicity_is_determinant(a in 1i64..8, b in 0i64..8, c in 0i64..8, d in 1i64..8) {
        prop_assume!(a * d - b * c != 0);
        let gens = vec![vec![a, b], vec![c, d]];
        let cone = fundamental_set(&gens).unwrap();
        prop_assert_eq!(cone.multiplicity as i64, (a * d - b * c).abs());
        prop_assert_eq!(lattice_multiplicity(&gens).unwrap(), (a * d - b * c).abs());
        for g in &cone.fundamental_set {
            // every point of G lies in the half-open parallelogram
            let det = a * d - b * c;
            let mu1 = g[0] * d - g[1] * c;
            let mu2 = a * g[1] - b * g[0];
            prop_assert!(mu1 * det.signum() > 0 && mu1.abs() <= det.abs());
            prop_assert!(mu2 * det.signum() > 0 && mu2.abs() <= det.abs());
        }
    }
}
