//! Integration tests for exact arithmetic: factorization, towers, root adjunction.

use proptest::prelude::*;
use qozeta::exactalg::*;
use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn qi() -> (FieldTower, AlgNum) {
    let q = FieldTower::rationals();
    adjoin_root(&q, &UniPoly::from_ints(&q, &[1, 0, 1])).unwrap()
}

#[test]
fn squarefree_examples() {
    let q = FieldTower::rationals();
    // (w-1)^2 (w-2)
    let p = UniPoly::from_ints(&q, &[-1, 1]).pow(2).mul(&UniPoly::from_ints(&q, &[-2, 1]));
    let d = squarefree_decomposition(&p).unwrap();
    assert_eq!(d, vec![(UniPoly::from_ints(&q, &[-2, 1]), 1), (UniPoly::from_ints(&q, &[-1, 1]), 2)]);
    // w^4 - 2w^2 + 1 = (w^2-1)^2
    let d = squarefree_decomposition(&UniPoly::from_ints(&q, &[1, 0, -2, 0, 1])).unwrap();
    assert_eq!(d, vec![(UniPoly::from_ints(&q, &[-1, 0, 1]), 2)]);
    // w^3
    let d = squarefree_decomposition(&UniPoly::from_ints(&q, &[0, 0, 0, 1])).unwrap();
    assert_eq!(d, vec![(UniPoly::from_ints(&q, &[0, 1]), 3)]);
    assert!(squarefree_decomposition(&UniPoly::zero(&q)).is_err());
}

#[test]
fn factor_examples() {
    let q = FieldTower::rationals();
    let f = factor_irreducible(&UniPoly::from_ints(&q, &[1, 0, 1])).unwrap();
    assert_eq!(f.factors, vec![(UniPoly::from_ints(&q, &[1, 0, 1]), 1)]);
    let f = factor_irreducible(&UniPoly::from_ints(&q, &[-1, 0, 0, 0, 1])).unwrap();
    let degs: Vec<_> = f.factors.iter().map(|(p, m)| (p.degree().unwrap(), *m)).collect();
    assert_eq!(degs, vec![(1, 1), (1, 1), (2, 1)]);
    let (t, i) = qi();
    let f = factor_irreducible(&UniPoly::from_ints(&t, &[1, 0, 1])).unwrap();
    assert_eq!(f.factors.len(), 2);
    let roots: Vec<AlgNum> = f.factors.iter().map(|(p, _)| p.coeff(0).neg()).collect();
    assert!(roots.contains(&i) && roots.contains(&i.neg()));
    assert_eq!(f.expand(), UniPoly::from_ints(&t, &[1, 0, 1]));
}

#[test]
fn adjoin_examples() {
    let q = FieldTower::rationals();
    let (t2, s2) = adjoin_root(&q, &UniPoly::from_ints(&q, &[-2, 0, 1])).unwrap();
    assert_eq!(t2.height(), 1);
    assert_eq!(s2.mul(&s2), AlgNum::from_rat(&t2, rint(2)));
    let (t4, r) = adjoin_root(&q, &UniPoly::from_ints(&q, &[-4, 0, 1])).unwrap();
    assert_eq!(t4.height(), 0);
    assert_eq!(r.pow(2), AlgNum::from_rat(&q, rint(4)));
    // t^2 - i over Q(i) is irreducible: a new level is created
    let (t, i) = qi();
    let p = UniPoly::new(&t, &[i.neg(), AlgNum::zero(&t), AlgNum::one(&t)]);
    let (t3, a) = adjoin_root(&t, &p).unwrap();
    assert_eq!(t3.height(), 2);
    assert!(p.eval(&a).is_zero());
    assert_eq!(t3.degree(), 4);
}

#[test]
fn trager_over_two_level_tower() {
    // over Q(i)(a), a^2 = i: t^4 + 1 splits into linear factors (a is a primitive 8th root of unity)
    let (t, i) = qi();
    let p = UniPoly::new(&t, &[i.neg(), AlgNum::zero(&t), AlgNum::one(&t)]);
    let (t3, _) = adjoin_root(&t, &p).unwrap();
    let f = factor_irreducible(&UniPoly::from_ints(&t3, &[1, 0, 0, 0, 1])).unwrap();
    assert_eq!(f.factors.len(), 4);
    assert_eq!(f.expand(), UniPoly::from_ints(&t3, &[1, 0, 0, 0, 1]));
    // x^4 - 10x^2 + 1 over Q(sqrt2) splits into two quadratics
    let q = FieldTower::rationals();
    let (t2, _) = adjoin_root(&q, &UniPoly::from_ints(&q, &[-2, 0, 1])).unwrap();
    let f = factor_irreducible(&UniPoly::from_ints(&t2, &[1, 0, -10, 0, 1])).unwrap();
    assert_eq!(f.factors.len(), 2);
}

fn rand_elem(t: &FieldTower, rng: &mut ChaCha8Rng) -> AlgNum {
    // random combination of powers of the generators
    let mut acc = AlgNum::zero(t);
    let gens: Vec<AlgNum> = (1..=t.height()).map(|h| AlgNum::generator(&t.prefix(h)).lift_to(t)).collect();
    for _ in 0..3 {
        let mut term = AlgNum::from_rat(t, rat((rng.next_u64() % 11) as i64 - 5, 1 + (rng.next_u64() % 3) as i64));
        for g in &gens {
            term = term.mul(&g.pow(rng.next_u64() % 3));
        }
        acc = acc.add(&term);
    }
    acc
}

#[test]
fn field_axioms_on_random_triples() {
    let (t, i) = qi();
    let p = UniPoly::new(&t, &[i.neg(), AlgNum::zero(&t), AlgNum::one(&t)]);
    let (t3, _) = adjoin_root(&t, &p).unwrap();
    let q = FieldTower::rationals();
    let (t2, _) = adjoin_root(&q, &UniPoly::from_ints(&q, &[-2, 0, 0, 1])).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for tower in [t, t2, t3] {
        for _ in 0..1000 {
            let (a, b, c) = (rand_elem(&tower, &mut rng), rand_elem(&tower, &mut rng), rand_elem(&tower, &mut rng));
            assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
            assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
            if !a.is_zero() {
                assert!(a.mul(&a.inv()).is_one());
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]
    #[test]
    fn factorization_reexpands(coeffs in prop::collection::vec(-9i64..=9, 1..=9)) {
        let q = FieldTower::rationals();
        let p = UniPoly::from_ints(&q, &coeffs);
        prop_assume!(!p.is_zero());
        let f = factor_irreducible(&p).unwrap();
        prop_assert_eq!(f.expand(), p.clone());
        // squarefree decomposition degree bookkeeping
        let d = squarefree_decomposition(&p).unwrap();
        let total: usize = d.iter().map(|(q, m)| q.degree().unwrap() * m).sum();
        prop_assert_eq!(total, p.degree().unwrap());
        for (x, (a, _)) in d.iter().enumerate() {
            for (b, _) in d.iter().skip(x + 1) {
                prop_assert_eq!(a.gcd(b).degree(), Some(0));
            }
        }
        // every factor is irreducible: refactoring gives itself
        for (g, _) in &f.factors {
            let again = factor_irreducible(g).unwrap();
            prop_assert_eq!(again.factors.len(), 1);
        }
    }
}
