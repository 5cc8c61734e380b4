//! Acceptance suite: one line per criterion, `PASS` or `FAIL`, with its wall time.
//! Every criterion is an exact identity and must finish within five seconds.

mod common;

use common::{all_pairs, pair, CURVES, SURFACES};
use num_bigint::BigInt;
use qozeta::cones::{build_general_fan, build_newton_path, capped_cone, edge_cone, fundamental_set, genfun, MonomialMap};
use qozeta::exactalg::rat;
use qozeta::monodromy::{check_conjecture, zeta_monodromy_qo, CycloProduct, VerdictStatus};
use qozeta::mpoly::{branches, edges_squarefree, good_coordinates, parse, QOPair};
use qozeta::zeta::{
    candidate_poles, chi_specialize, pullback_identity_terms, strong_candidate_poles, zmot_curve, ztop_nondeg, ztop_qo,
    MotivicExpr, NondegOptions, RatFuncS,
};
use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeMap;
use std::time::{Duration, Instant};

const LIMIT: Duration = Duration::from_secs(5);
const SHIFTS: usize = 64;

type Outcome = Result<(), String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn nondeg_of(p: &QOPair, opts: &NondegOptions) -> Result<RatFuncS, String> {
    ztop_nondeg(&p.full(), &p.nu.nu, opts).map_err(err)
}

fn reduced_poles(z: &RatFuncS) -> Vec<(i64, i64)> {
    z.poles().iter().map(|&(n, nu, _)| (n, nu)).collect()
}

/// Nash's example: `Z_top = 1/(1+s)` and the S-term of the facet.
fn nash() -> Outcome {
    let vars = ["x1", "x2", "x3", "x4", "x5"];
    let h = parse("x1^3+x2^3+x3^3+x4^3+x5^6", &vars).map_err(err)?;
    let opts = NondegOptions { assume_nondegenerate: true, ..Default::default() };
    let z = ztop_nondeg(&h, &[1, 1, 1, 1], &opts).map_err(err)?;
    ensure(z.to_string() == "1/(s+1)", || format!("Z_top = {z}"))?;
    let fan = build_general_fan(&h, &[1, 1, 1, 1], 5).map_err(err)?;
    let i = fan.faces.iter().position(|f| f.dim == 4).ok_or("no facet")?;
    let s = fan.s(i).map_err(err)?;
    let expected = MotivicExpr::monomial(1, -9, 6).mul(&MotivicExpr::geometric(9, 6));
    ensure(s.simplify() == expected.simplify(), || format!("S-term {s}"))
}

/// `z^n + x1…xr`: poles exactly `{−1, −(n+1)/n}` and `ζ = 1 − t^n`.
fn quasi_homogeneous() -> Outcome {
    for (n, r) in [(2u32, 2usize), (3, 2), (3, 3)] {
        let xs: Vec<String> = (1..=r).map(|i| format!("x{i}")).collect();
        let text = format!("z^{n}+{}", xs.join("*"));
        let p = pair(&text, &format!("{},z", xs.join(",")));
        let z = ztop_qo(&p, SHIFTS).map_err(err)?;
        let expected = vec![(1, 1), (n as i64, n as i64 + 1)];
        ensure(reduced_poles(&z) == expected, || format!("{text}: poles of {z}"))?;
        let zeta = zeta_monodromy_qo(&p, SHIFTS).map_err(err)?;
        ensure(zeta == CycloProduct::factor(n as u64), || format!("{text}: zeta {zeta}"))?;
    }
    Ok(())
}

/// The cusp by both paths, its monodromy, and its verdicts.
fn cusp() -> Outcome {
    let p = pair("z^2-x^3", "x,z");
    let a = ztop_qo(&p, SHIFTS).map_err(err)?;
    let b = nondeg_of(&p, &NondegOptions::default())?;
    let expected = "(4*s+5)/((s+1)*(6*s+5))";
    ensure(a.to_string() == expected && b == a, || format!("recursion {a}, non-degenerate {b}"))?;
    let zeta = zeta_monodromy_qo(&p, SHIFTS).map_err(err)?;
    ensure(zeta == CycloProduct::from_pairs(&[(2, 1), (3, 1), (6, -1)]), || format!("zeta {zeta}"))?;
    let v = check_conjecture(&p, SHIFTS).map_err(err)?;
    ensure(!v.is_empty() && v.iter().all(|v| v.status == VerdictStatus::VerifiedAtOrigin), || format!("{v:?}"))
}

/// `x^p + z^q`: `(1−t)/ζ = (1−t)(1−t^{pq})/((1−t^p)(1−t^q))`.
fn classical_curves() -> Outcome {
    for (p, q) in [(2u64, 3u64), (3, 4), (2, 5)] {
        let text = format!("x^{p}+z^{q}");
        let zeta = zeta_monodromy_qo(&pair(&text, "x,z"), SHIFTS).map_err(err)?;
        let lhs = CycloProduct::factor(1).mul(&zeta.inverse());
        let rhs = CycloProduct::from_pairs(&[(1, 1), (p * q, 1), (p, -1), (q, -1)]);
        ensure(lhs == rhs, || format!("{text}: zeta {zeta}"))?;
    }
    Ok(())
}

fn solve_in_cone(gens: &[Vec<i64>], k: &[i64]) -> bool {
    // open cone membership: k = Σ μ_j a_j with every μ_j > 0, by exact elimination
    let n = k.len();
    let r = gens.len();
    let mut m: Vec<Vec<qozeta::exactalg::Rat>> =
        (0..n).map(|i| (0..r).map(|j| rat(gens[j][i], 1)).chain(std::iter::once(rat(k[i], 1))).collect()).collect();
    let mut row = 0;
    let mut pivots = vec![];
    for col in 0..r {
        let Some(pr) = (row..n).find(|&i| m[i][col] != rat(0, 1)) else { continue };
        m.swap(row, pr);
        let pv = m[row][col].clone();
        for c in 0..=r {
            m[row][c] = &m[row][c] / &pv;
        }
        for i in 0..n {
            if i != row && m[i][col] != rat(0, 1) {
                let f = m[i][col].clone();
                for c in 0..=r {
                    let d = &f * &m[row][c];
                    m[i][c] = &m[i][c] - &d;
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    if (row..n).any(|i| m[i][r] != rat(0, 1)) {
        return false;
    }
    pivots.len() == r && (0..r).all(|i| m[i][r] > rat(0, 1))
}

/// `genfun` against brute-force enumeration of the open cone's lattice points.
fn genfun_oracle() -> Outcome {
    const DEG: i64 = 20;
    let mut rng = ChaCha8Rng::seed_from_u64(0x6e6f_6e64);
    let mut tested = 0;
    while tested < 50 {
        let n = 1 + (rng.next_u32() % 3) as usize;
        let r = 1 + (rng.next_u32() as usize % n);
        let gens: Vec<Vec<i64>> = (0..r).map(|_| (0..n).map(|_| (rng.next_u32() % 4) as i64).collect()).collect();
        let Ok(cone) = fundamental_set(&gens) else { continue };
        if gens.iter().any(|g| g.iter().all(|&x| x == 0)) {
            continue;
        }
        let map = MonomialMap {
            sigma: (0..n).map(|_| 1 + (rng.next_u32() % 3) as i64).collect(),
            point: (0..n).map(|_| 1 + (rng.next_u32() % 2) as i64).collect(),
        };
        let series = genfun(&cone, &map).map_err(err)?.t_expansion(DEG);
        let mut brute: BTreeMap<i64, BTreeMap<i64, BigInt>> = BTreeMap::new();
        let bound = DEG as usize + 1;
        let mut k = vec![0i64; n];
        loop {
            let (s, m) = map.eval(&k);
            if m <= DEG && solve_in_cone(&gens, &k) {
                *brute.entry(m).or_default().entry(-s).or_default() += 1;
            }
            let mut i = 0;
            while i < n {
                k[i] += 1;
                if (k[i] as usize) < bound {
                    break;
                }
                k[i] = 0;
                i += 1;
            }
            if i == n {
                break;
            }
        }
        let mut series = series;
        series.retain(|_, v| {
            v.retain(|_, c| *c != BigInt::from(0));
            !v.is_empty()
        });
        ensure(series == brute, || format!("cone {gens:?} with {map:?}"))?;
        tested += 1;
    }
    Ok(())
}

fn visit_edges(p: &QOPair, f: &mut dyn FnMut(&qozeta::cones::EdgeData) -> Outcome) -> Outcome {
    if p.is_base() {
        return Ok(());
    }
    let (g, _) = good_coordinates(p, SHIFTS).map_err(err)?;
    let path = build_newton_path(&g).map_err(err)?;
    for e in &path.edges {
        f(e)?;
    }
    for b in branches(&g, SHIFTS).map_err(err)? {
        visit_edges(&b.pullback, f)?;
    }
    Ok(())
}

/// `|G|` of edge cones and capped cones against the closed forms.
fn multiplicities() -> Outcome {
    let mut count = 0;
    for (text, p) in all_pairs() {
        visit_edges(&p, &mut |e| {
            count += 1;
            let a = edge_cone(e).map_err(err)?.multiplicity as i64;
            let b = capped_cone(e).map_err(err)?.multiplicity as i64;
            ensure(a == e.mult() && b == e.capped_mult(), || format!("{text}: |G| = {a}, {b} vs {}, {}", e.mult(), e.capped_mult()))
        })?;
    }
    ensure(count > 0, || "no edges".into())
}

/// A random non-degenerate quasi-ordinary polynomial: a product of binomials
/// `z^a − c·x^b` with distinct slopes or distinct coefficients.
fn random_nondegenerate(rng: &mut ChaCha8Rng) -> (String, String) {
    let d = 1 + (rng.next_u32() % 2) as usize;
    let vars = if d == 1 { "x1,z".to_string() } else { "x1,x2,z".to_string() };
    let nfac = 1 + (rng.next_u32() % 3) as usize;
    let mut deg = 0;
    let mut factors = vec![];
    let mut step = vec![1i64; d];
    for _ in 0..nfac {
        let a = 1 + (rng.next_u32() % 3);
        if deg + a > 6 {
            break;
        }
        deg += a;
        for s in step.iter_mut() {
            *s += (rng.next_u32() % 3) as i64;
        }
        let mono: Vec<String> = step.iter().enumerate().map(|(i, &e)| format!("x{}^{}", i + 1, e * a as i64)).collect();
        let c = 1 + (rng.next_u32() % 5) as i64;
        factors.push(format!("(z^{a}-{c}*{})", mono.join("*")));
    }
    (factors.join("*"), vars)
}

/// Recursion against the non-degenerate formula, and the pull-back identity.
fn dual_path() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x7061_7468);
    let mut tested = 0;
    let mut attempts = 0;
    while tested < 20 {
        attempts += 1;
        ensure(attempts < 2000, || format!("only {tested} usable inputs"))?;
        let (text, vars) = random_nondegenerate(&mut rng);
        let v: Vec<&str> = vars.split(',').collect();
        let Ok(h) = parse(&text, &v) else { continue };
        let Ok(p) = QOPair::from_poly(&h, qozeta::mpoly::FormExponents::ones(v.len() - 1)) else { continue };
        if p.is_base() || !edges_squarefree(&p).map_err(err)? {
            continue;
        }
        let a = ztop_qo(&p, SHIFTS).map_err(err)?;
        let b = nondeg_of(&p, &NondegOptions::default()).map_err(|e| format!("{text}: {e}"))?;
        ensure(a == b, || format!("{text}: recursion {a}, non-degenerate {b}"))?;
        for (lhs, rhs) in pullback_identity_terms(&p, SHIFTS).map_err(err)? {
            ensure(lhs == rhs, || format!("{text}: pull-back {lhs} vs {rhs}"))?;
        }
        tested += 1;
    }
    Ok(())
}

/// `χ(Z_DL) = Z_top` on every curve.
fn chi_compatibility() -> Outcome {
    for text in CURVES {
        let p = pair(text, "x,z");
        let z = chi_specialize(&zmot_curve(&p, SHIFTS).map_err(err)?).map_err(err)?;
        let t = ztop_qo(&p, SHIFTS).map_err(err)?;
        ensure(z == t, || format!("{text}: chi {z} vs {t}"))?;
    }
    Ok(())
}

/// Every pole of `Z_top` is a strong candidate pole.
fn containment() -> Outcome {
    for (text, p) in all_pairs() {
        let z = ztop_qo(&p, SHIFTS).map_err(err)?;
        let scp = strong_candidate_poles(&p, SHIFTS).map_err(err)?;
        for (n, nu) in reduced_poles(&z) {
            ensure(scp.contains_pole(n, nu), || format!("{text}: pole -{nu}/{n} of {z} missing from SCP"))?;
        }
    }
    Ok(())
}

/// `z²−x1²x2` loses `−3/2` (confirmed by the non-degenerate formula); `z²−x1x2` keeps it.
fn special_pole() -> Outcome {
    let p = pair("z^2-x1^2*x2", "x1,x2,z");
    ensure(candidate_poles(&p, SHIFTS).map_err(err)?.contains_pole(2, 3), || "(2,3) not in CP".into())?;
    ensure(!strong_candidate_poles(&p, SHIFTS).map_err(err)?.contains_pole(2, 3), || "(2,3) in SCP".into())?;
    let z = ztop_qo(&p, SHIFTS).map_err(err)?;
    let oracle = nondeg_of(&p, &NondegOptions::default())?;
    ensure(z == oracle && z.eval(&rat(-3, 2)).is_some(), || format!("z^2-x1^2*x2: {z} / {oracle}"))?;
    let q = pair("z^2-x1*x2", "x1,x2,z");
    let z = ztop_qo(&q, SHIFTS).map_err(err)?;
    ensure(z.eval(&rat(-3, 2)).is_none(), || format!("z^2-x1*x2: {z}"))
}

/// No failed verdicts, and nothing deferred for curves.
fn conjecture_suite() -> Outcome {
    for (text, p) in all_pairs() {
        for v in check_conjecture(&p, SHIFTS).map_err(err)? {
            ensure(v.status != VerdictStatus::Failed, || format!("{text}: ({},{}) failed", v.n, v.nu))?;
            ensure(p.nx() >= 2 || v.status != VerdictStatus::DeferredToTransversalSection, || format!("{text}: deferred"))?;
        }
    }
    ensure(!SURFACES.is_empty(), || "empty corpus".into())
}

fn main() {
    let criteria: [Criterion; 11] = [
        ("nash example: 1/(1+s) and facet S-term", nash),
        ("z^n + x1..xr: two poles and zeta = 1-t^n", quasi_homogeneous),
        ("cusp: both paths, zeta, verdicts", cusp),
        ("x^p + z^q: classical monodromy", classical_curves),
        ("genfun vs lattice enumeration", genfun_oracle),
        ("edge and capped cone multiplicities", multiplicities),
        ("recursion == non-degenerate formula, pull-back identity", dual_path),
        ("chi(Z_DL) == Z_top on curves", chi_compatibility),
        ("poles of Z_top within SCP", containment),
        ("special pole elimination", special_pole),
        ("monodromy conjecture suite", conjecture_suite),
    ];
    let mut failures = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let out = std::panic::catch_unwind(f).unwrap_or_else(|_| Err("panicked".into()));
        let t = start.elapsed();
        let out = out.and_then(|_| ensure(t < LIMIT, || format!("took {:.2} s", t.as_secs_f64())));
        match out {
            Ok(()) => println!("PASS {:>2} {name} ({:.2} s)", i + 1, t.as_secs_f64()),
            Err(e) => {
                failures += 1;
                println!("FAIL {:>2} {name} ({:.2} s): {e}", i + 1, t.as_secs_f64());
            }
        }
    }
    println!("{} passed, {failures} failed", criteria.len() - failures);
    if failures > 0 {
        std::process::exit(1);
    }
}
