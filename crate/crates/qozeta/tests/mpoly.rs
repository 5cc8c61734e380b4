//! Parsing, discriminants, the quasi-ordinary test, good coordinates and Newton maps.

use proptest::prelude::*;
use qozeta::cones::build_newton_path;
use qozeta::exactalg::{AlgNum, FieldTower, Rat};
use qozeta::mpoly::{
    branches, depth, discriminant_z, essential_variables, good_coordinates, is_quasi_ordinary, newton_map_substitute,
    parse, resultant_z, FormExponents, MPoly, QOPair,
};
use qozeta::Error;

fn supp(p: &MPoly) -> Vec<Vec<u32>> {
    p.support()
}

fn pair(text: &str, vars: &[&str]) -> QOPair {
    let h = parse(text, vars).unwrap();
    QOPair::from_poly(&h, FormExponents::ones(vars.len() - 1)).unwrap()
}

#[test]
fn parse_examples() {
    assert_eq!(supp(&parse("z^2 - x1^3", &["x1", "z"]).unwrap()), vec![vec![0, 2], vec![3, 0]]);
    let f = parse("(z^2-x1^3)^2+x1^7", &["x1", "z"]).unwrap();
    assert_eq!(supp(&f), vec![vec![0, 4], vec![3, 2], vec![6, 0], vec![7, 0]]);
    let g = parse("z^2 - x1^2*x2^5", &["x1", "x2", "z"]).unwrap();
    assert_eq!(supp(&g), vec![vec![0, 0, 2], vec![2, 5, 0]]);
}

#[test]
fn parse_errors_and_precedence() {
    let v = ["x", "z"];
    assert!(matches!(parse("z^2 - y", &v), Err(Error::UnknownVariable { pos: 6, .. })));
    assert!(matches!(parse("z^-2", &v), Err(Error::NegativeExponent { pos: 2 })));
    assert!(matches!(parse("2x", &v), Err(Error::Syntax { pos: 1, .. })));
    assert!(matches!(parse("(z+x", &v), Err(Error::Syntax { .. })));
    assert!(matches!(parse("z/x", &v), Err(Error::Syntax { .. })));
    assert_eq!(parse("-x^2", &v).unwrap(), parse("-(x^2)", &v).unwrap());
    assert_eq!(parse("2*x*z^2", &v).unwrap(), parse("2*(x*(z^2))", &v).unwrap());
    assert_eq!(parse("x/2 + x/2", &v).unwrap(), parse("x", &v).unwrap());
}

#[test]
fn display_round_trip() {
    let v = ["x1", "x2", "z"];
    for text in ["z^2 - x1^2*x2^5", "(z^2-x1^3)^2+x1^7*x2", "3/4*z - 2*x1 + 7", "-z^3 + x1*x2"] {
        let p = parse(text, &v).unwrap();
        let s = p.display_with(&v);
        assert_eq!(parse(&s, &v).unwrap(), p, "{s}");
        assert_eq!(parse(&s, &v).unwrap().display_with(&v), s);
    }
}

#[test]
fn discriminant_examples() {
    let v = ["x1", "z"];
    assert_eq!(discriminant_z(&parse("z^2-x1^3", &v).unwrap()).unwrap().to_string(), "-4*x1^3");
    // b^2 - 4ac = 4 + 4 x1, raw Sylvester sign gives -(4 + 4 x1)
    assert_eq!(discriminant_z(&parse("z^2+2*z-x1", &v).unwrap()).unwrap(), parse("-4-4*x1", &v).unwrap());
    assert_eq!(discriminant_z(&parse("z", &v).unwrap()).unwrap(), parse("1", &v).unwrap());
    assert!(matches!(discriminant_z(&parse("x1", &v).unwrap()), Err(Error::InvalidInput(_))));
}

#[test]
fn quasi_ordinary_examples() {
    let (qo, a) = is_quasi_ordinary(&parse("z^2-x1^3", &["x1", "z"]).unwrap()).unwrap();
    assert!(qo);
    assert_eq!(a, vec![3]);
    let v2 = ["x1", "x2", "z"];
    let (qo, _) = is_quasi_ordinary(&parse("z^2-x1^3*x2-x1^4", &v2).unwrap()).unwrap();
    assert!(!qo);
    let (qo, a) = is_quasi_ordinary(&parse("z^2-x1^2*x2^5", &v2).unwrap()).unwrap();
    assert!(qo);
    assert_eq!(a, vec![2, 5]);
    assert!(matches!(is_quasi_ordinary(&parse("(z^2-x1^3)^2", &["x1", "z"]).unwrap()), Err(Error::NotSquarefree)));
}

#[test]
fn good_coordinates_examples() {
    let v = ["x1", "z"];
    let p = pair("(z-x1^2)^2 - x1^5", &v);
    let (q, log) = good_coordinates(&p, 50).unwrap();
    assert_eq!(log.len(), 1);
    assert_eq!(q.g, parse("z^2 - x1^5", &v).unwrap());
    assert_eq!(log[0].a, parse("x1^2", &v).unwrap());

    let p = pair("(z^2-x1^5)*(z-x1^2)*(z^3-x1^2)", &v);
    let (q, log) = good_coordinates(&p, 50).unwrap();
    assert!(log.is_empty());
    assert_eq!(q, p);

    let p = QOPair::new(&parse("z^2+2*z-x1", &v).unwrap(), FormExponents::ones(1)).unwrap();
    assert!(matches!(good_coordinates(&p, 50), Err(Error::NonTerminatingNormalization { max_shifts: 50, .. })));
}

#[test]
fn good_coordinates_idempotent() {
    let v = ["x1", "x2", "z"];
    for text in ["(z-x1*x2)^2 - x1^3*x2^5", "(z-x1^2-x2)^3 - x1^7*x2^4", "z^2-x1^3"] {
        let p = pair(text, &v);
        let (q, _) = good_coordinates(&p, 50).unwrap();
        let (q2, log2) = good_coordinates(&q, 50).unwrap();
        assert!(log2.is_empty());
        assert_eq!(q, q2);
        build_newton_path(&q).unwrap();
    }
}

#[test]
fn newton_map_examples() {
    let v = ["x1", "z"];
    let q = FieldTower::rationals();
    let one = AlgNum::one(&q);
    let p = pair("z^2-x1^3", &v);
    let path = build_newton_path(&p).unwrap();
    let pb = newton_map_substitute(&p, &path.edges[0], &one, 50).unwrap();
    assert_eq!(pb.g, parse("z^2+2*z", &v).unwrap());
    assert_eq!(pb.n, vec![6]);
    assert_eq!(pb.nu.nu, vec![5]);
    assert_eq!(pb.epsilon(), 1);

    let p = pair("(z^2-x1^3)^2+x1^7", &v);
    let path = build_newton_path(&p).unwrap();
    let pb = newton_map_substitute(&p, &path.edges[0], &one, 50).unwrap();
    assert_eq!(pb.n, vec![12]);
    assert_eq!(pb.nu.nu, vec![5]);
    assert_eq!(pb.g, parse("(z^2+2*z)^2+x1^2", &v).unwrap());

    let two = AlgNum::from_rat(&q, Rat::from_integer(2.into()));
    let p = pair("z^2-x1^3", &v);
    assert!(matches!(newton_map_substitute(&p, &path.edges[0], &two, 50), Err(Error::InvalidRoot(_))));
}

#[test]
fn depth_examples() {
    let v = ["x1", "z"];
    assert_eq!(depth(&pair("x1^3*z", &v), 50).unwrap(), 0);
    assert_eq!(depth(&pair("z^2-x1^3", &v), 50).unwrap(), 1);
    assert_eq!(depth(&pair("(z^2-x1^3)^2+x1^7", &v), 50).unwrap(), 2);
}

#[test]
fn depth_decreases_along_recursion() {
    let corpus: &[(&str, &[&str])] = &[
        ("z^2-x1^3", &["x1", "z"]),
        ("(z^2-x1^3)^2+x1^7", &["x1", "z"]),
        ("(z^2-x1^3)^2+x1^11*x2", &["x1", "x2", "z"]),
        ("(z^2-x1^5)*(z-x1^2)*(z^3-x1^2)", &["x1", "z"]),
        ("z^3+x1*x2", &["x1", "x2", "z"]),
        ("z^2-x1^2*x2", &["x1", "x2", "z"]),
    ];
    fn walk(p: &QOPair) -> usize {
        let d = depth(p, 50).unwrap();
        for b in branches(p, 50).unwrap() {
            let dc = walk(&b.pullback);
            assert!(dc < d, "depth must decrease");
            b.pullback.check_support_condition().unwrap();
        }
        d
    }
    for (t, v) in corpus {
        let (p, _) = good_coordinates(&pair(t, v), 50).unwrap();
        walk(&p);
    }
}

#[test]
fn essential_variable_examples() {
    assert_eq!(essential_variables(&pair("z^2-x1^3", &["x1", "x2", "z"])).unwrap(), vec![0]);
    assert_eq!(essential_variables(&pair("z", &["x1", "z"])).unwrap(), Vec::<usize>::new());
    assert_eq!(essential_variables(&pair("x1^2*z^2-x1^5", &["x1", "z"])).unwrap(), vec![0]);
}

fn small_poly(coeffs: &[i64], nx: usize) -> MPoly {
    // coefficients of z^k x^a for a,k in small boxes
    let mut terms = vec![];
    let mut it = coeffs.iter();
    for k in 0..3u32 {
        for a in 0..3u32 {
            let c = *it.next().unwrap();
            let mut e = vec![0; nx + 1];
            e[0] = a;
            e[nx] = k;
            terms.push((e, c));
        }
    }
    MPoly::from_int_terms(nx, &terms)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]
    #[test]
    fn ring_axioms(a in prop::collection::vec(-3i64..4, 9), b in prop::collection::vec(-3i64..4, 9), c in prop::collection::vec(-3i64..4, 9)) {
        let (a, b, c) = (small_poly(&a, 1), small_poly(&b, 1), small_poly(&c, 1));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
    }

    #[test]
    fn discriminant_multiplicative(a in prop::collection::vec(-3i64..4, 9), b in prop::collection::vec(-3i64..4, 9)) {
        let mut f = small_poly(&a, 1);
        let mut g = small_poly(&b, 1);
        // z-degree exactly 2 (the leading coefficient may depend on x)
        f = f.add(&MPoly::from_int_terms(1, &[(vec![0, 2], 5)]));
        g = g.add(&MPoly::from_int_terms(1, &[(vec![0, 2], 7)]));
        prop_assume!(f.z_degree() == Some(2) && g.z_degree() == Some(2));
        let lhs = discriminant_z(&f.mul(&g)).unwrap();
        let r = resultant_z(&f, &g).unwrap();
        let rhs = discriminant_z(&f).unwrap().mul(&discriminant_z(&g).unwrap()).mul(&r).mul(&r);
        // raw Sylvester convention: D(fg) = -D(f) D(g) Res(f,g)^2 for deg f = deg g = 2 (sign (-1)^{deg f · deg g} · ...)
        prop_assert!(lhs == rhs || lhs == rhs.neg());
    }
}
