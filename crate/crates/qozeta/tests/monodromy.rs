//! Monodromy zeta functions and per-pole conjecture verdicts.

mod common;

use common::pair;
use qozeta::monodromy::{check_conjecture, eigenvalue_check, zeta_monodromy_curve, zeta_monodromy_qo, CycloProduct, VerdictStatus};
use qozeta::Error;

#[test]
fn cyclotomic_products() {
    let z = CycloProduct::from_pairs(&[(2, 1), (3, 1), (6, -1)]);
    assert_eq!(z.to_string(), "(1-t^2)*(1-t^3)/(1-t^6)");
    assert!(z.mul(&z.inverse()).is_one());
    let alexander = CycloProduct::factor(1).mul(&z.inverse());
    // t^2 − t + 1
    assert_eq!(alexander.expand(), Some(vec![1, -1, 1]));
    assert!(!z.is_polynomial());
    assert_eq!(CycloProduct::one().to_string(), "1");
}

#[test]
fn milnor_number_of_depth_two_curve() {
    let z = zeta_monodromy_curve(&pair("(z^2-x^3)^2+x^7", "x,z"), 64).unwrap();
    assert_eq!(z, CycloProduct::from_pairs(&[(4, 1), (6, 1), (12, -1), (14, -1)]));
    let alexander = CycloProduct::factor(1).mul(&z.inverse()).expand().unwrap();
    // two cusp branches z = x^{3/2} ± (i/2)x² + … meeting with multiplicity 7: μ = 2 + 2 + 2·7 − 1
    assert_eq!(alexander.len() - 1, 17);
}

#[test]
fn eigenvalues() {
    let z = CycloProduct::from_pairs(&[(2, 1), (3, 1), (6, -1)]);
    assert!(eigenvalue_check((6, 5), &z));
    assert!(eigenvalue_check((1, 1), &z));
    assert!(!eigenvalue_check((4, 1), &z));
}

#[test]
fn surfaces_with_monomial_factor_are_unsupported() {
    let p = pair("x1*(z^2-x1^3*x2)", "x1,x2,z");
    assert!(matches!(zeta_monodromy_qo(&p, 64), Err(Error::UnsupportedMonodromy(_))));
    // verdicts still come out, from strata other than the origin
    let v = check_conjecture(&p, 64).unwrap();
    assert!(v.iter().all(|v| v.status != VerdictStatus::Failed));
}

#[test]
fn curve_verdicts_are_never_deferred() {
    for text in common::CURVES {
        for v in check_conjecture(&pair(text, "x,z"), 64).unwrap() {
            assert!(
                matches!(v.status, VerdictStatus::VerifiedAtOrigin | VerdictStatus::VerifiedOnCoordinateStratum),
                "{text}: {v:?}"
            );
        }
    }
}
