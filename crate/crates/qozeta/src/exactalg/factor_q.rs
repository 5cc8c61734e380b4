//! Factorization of squarefree rational polynomials by the modular method:
//! Cantor–Zassenhaus over a small prime, linear Hensel lifting, and
//! exhaustive recombination of lifted factors.

use super::qpoly::{self, QPoly};
use super::rat::{denom_lcm, Rat};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Zp = Vec<u64>; // polynomial over F_p, low degree first, trimmed

fn zp_trim(mut a: Zp) -> Zp {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn zp_sub(a: &[u64], b: &[u64], p: u64) -> Zp {
    let n = a.len().max(b.len());
    zp_trim((0..n).map(|i| (a.get(i).copied().unwrap_or(0) + p - b.get(i).copied().unwrap_or(0)) % p).collect())
}

fn zp_mul(a: &[u64], b: &[u64], p: u64) -> Zp {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut r = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            r[i + j] = (r[i + j] + x * y) % p;
        }
    }
    zp_trim(r)
}

fn zp_inv(a: u64, p: u64) -> u64 {
    zp_pow_scalar(a, p - 2, p)
}

fn zp_pow_scalar(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1u64;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * a % p;
        }
        a = a * a % p;
        e >>= 1;
    }
    r
}

fn zp_divrem(a: &[u64], b: &[u64], p: u64) -> (Zp, Zp) {
    let mut r = zp_trim(a.to_vec());
    if r.len() < b.len() {
        return (vec![], r);
    }
    let db = b.len() - 1;
    let inv = zp_inv(b[db], p);
    let mut q = vec![0u64; r.len() - db];
    while r.len() > db && !r.is_empty() {
        let k = r.len() - 1 - db;
        let c = r[r.len() - 1] * inv % p;
        for (i, &bc) in b.iter().enumerate() {
            r[k + i] = (r[k + i] + p - c * bc % p) % p;
        }
        q[k] = c;
        r.pop();
        r = zp_trim(r);
    }
    (zp_trim(q), r)
}

fn zp_monic(a: &[u64], p: u64) -> Zp {
    match a.last() {
        None => vec![],
        Some(&lc) => {
            let inv = zp_inv(lc, p);
            a.iter().map(|&c| c * inv % p).collect()
        }
    }
}

fn zp_gcd(a: &[u64], b: &[u64], p: u64) -> Zp {
    let mut x = zp_trim(a.to_vec());
    let mut y = zp_trim(b.to_vec());
    while !y.is_empty() {
        let (_, r) = zp_divrem(&x, &y, p);
        x = y;
        y = r;
    }
    zp_monic(&x, p)
}

fn zp_xgcd(a: &[u64], b: &[u64], p: u64) -> (Zp, Zp, Zp) {
    let (mut r0, mut r1) = (zp_trim(a.to_vec()), zp_trim(b.to_vec()));
    let (mut s0, mut s1): (Zp, Zp) = (vec![1], vec![]);
    let (mut t0, mut t1): (Zp, Zp) = (vec![], vec![1]);
    while !r1.is_empty() {
        let (q, r) = zp_divrem(&r0, &r1, p);
        let s2 = zp_sub(&s0, &zp_mul(&q, &s1, p), p);
        let t2 = zp_sub(&t0, &zp_mul(&q, &t1, p), p);
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s2);
        t0 = std::mem::replace(&mut t1, t2);
    }
    // normalize so that the gcd is monic
    let inv = zp_inv(*r0.last().expect("nonzero gcd"), p);
    let sc = |v: &Zp| zp_trim(v.iter().map(|&c| c * inv % p).collect());
    (sc(&r0), sc(&s0), sc(&t0))
}

fn zp_deriv(a: &[u64], p: u64) -> Zp {
    zp_trim(a.iter().enumerate().skip(1).map(|(i, &c)| (i as u64 % p) * c % p).collect())
}

fn zp_powmod(base: &[u64], mut e: u128, m: &[u64], p: u64) -> Zp {
    let mut r: Zp = vec![1];
    let mut b = zp_divrem(base, m, p).1;
    while e > 0 {
        if e & 1 == 1 {
            r = zp_divrem(&zp_mul(&r, &b, p), m, p).1;
        }
        b = zp_divrem(&zp_mul(&b, &b, p), m, p).1;
        e >>= 1;
    }
    r
}

/// Distinct-degree factorization of a monic squarefree polynomial: (product, degree) pairs.
fn zp_ddf(f: &[u64], p: u64) -> Vec<(Zp, usize)> {
    let mut out = vec![];
    let mut f = f.to_vec();
    let x: Zp = vec![0, 1];
    let mut h = x.clone();
    let mut d = 0;
    while f.len() > 2 * (d + 1) {
        d += 1;
        h = zp_powmod(&h, p as u128, &f, p);
        let g = zp_gcd(&zp_sub(&h, &x, p), &f, p);
        if g.len() > 1 {
            f = zp_divrem(&f, &g, p).0;
            h = zp_divrem(&h, &f, p).1;
            out.push((g, d));
        }
    }
    if f.len() > 1 {
        let deg = f.len() - 1;
        out.push((f, deg));
    }
    out
}

/// Equal-degree splitting (Cantor–Zassenhaus), `p` odd.
fn zp_edf(f: &[u64], d: usize, p: u64, rng: &mut ChaCha8Rng) -> Vec<Zp> {
    let n = f.len() - 1;
    if n == d {
        return vec![f.to_vec()];
    }
    let e: u128 = ((p as u128).pow(d as u32) - 1) / 2;
    loop {
        let a: Zp = zp_trim((0..n).map(|_| rng.next_u64() % p).collect());
        if a.len() < 2 {
            continue;
        }
        let b = zp_sub(&zp_powmod(&a, e, f, p), &[1], p);
        let g = zp_gcd(&b, f, p);
        if g.len() > 1 && g.len() < f.len() {
            let q = zp_monic(&zp_divrem(f, &g, p).0, p);
            let mut out = zp_edf(&g, d, p, rng);
            out.extend(zp_edf(&q, d, p, rng));
            return out;
        }
    }
}

fn zp_factor(f: &[u64], p: u64, rng: &mut ChaCha8Rng) -> Vec<Zp> {
    let mut out = vec![];
    for (g, d) in zp_ddf(f, p) {
        out.extend(zp_edf(&g, d, p, rng));
    }
    out
}

fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|k| k * k <= n).all(|k| !n.is_multiple_of(k))
}

// ----- integer polynomials -----

type ZPoly = Vec<BigInt>;

fn z_trim(mut a: ZPoly) -> ZPoly {
    while a.last().is_some_and(|c| c.is_zero()) {
        a.pop();
    }
    a
}

fn z_mul(a: &[BigInt], b: &[BigInt]) -> ZPoly {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut r = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            r[i + j] += x * y;
        }
    }
    z_trim(r)
}

fn z_mod(a: &[BigInt], m: &BigInt) -> ZPoly {
    z_trim(a.iter().map(|c| c.mod_floor(m)).collect())
}

fn z_symmetric(a: &[BigInt], m: &BigInt) -> ZPoly {
    let half = m / 2;
    z_trim(
        a.iter()
            .map(|c| {
                let r = c.mod_floor(m);
                if r > half {
                    r - m
                } else {
                    r
                }
            })
            .collect(),
    )
}

fn z_content(a: &[BigInt]) -> BigInt {
    a.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
}

fn z_primitive(a: &[BigInt]) -> ZPoly {
    let c = z_content(a);
    let sign = if a.last().is_some_and(|x| x.is_negative()) { -BigInt::one() } else { BigInt::one() };
    a.iter().map(|x| x / &c * &sign).collect()
}

fn to_zp(a: &[BigInt], p: u64) -> Zp {
    let pb = BigInt::from(p);
    zp_trim(a.iter().map(|c| c.mod_floor(&pb).to_u64().unwrap()).collect())
}

fn from_zp(a: &[u64]) -> ZPoly {
    a.iter().map(|&c| BigInt::from(c)).collect()
}

/// Exact division over Z; `None` when `b` does not divide `a`.
fn z_exact_div(a: &[BigInt], b: &[BigInt]) -> Option<ZPoly> {
    let mut r = z_trim(a.to_vec());
    if r.len() < b.len() {
        return if r.is_empty() { Some(vec![]) } else { None };
    }
    let db = b.len() - 1;
    let lc = &b[db];
    let mut q = vec![BigInt::zero(); r.len() - db];
    while r.len() > db && !r.is_empty() {
        let k = r.len() - 1 - db;
        let (c, rem) = r[r.len() - 1].div_rem(lc);
        if !rem.is_zero() {
            return None;
        }
        for (i, bc) in b.iter().enumerate() {
            r[k + i] -= &c * bc;
        }
        q[k] = c;
        r.pop();
        r = z_trim(r);
    }
    if r.is_empty() {
        Some(z_trim(q))
    } else {
        None
    }
}

/// Lifts `f ≡ g h (mod p)` (f monic modulo `p^k_target`, g, h monic) to modulus `p^k_target`.
fn hensel_pair(f: &[BigInt], g: &[u64], h: &[u64], p: u64, k_target: u32) -> (ZPoly, ZPoly) {
    let (_, s, t) = zp_xgcd(g, h, p);
    let pb = BigInt::from(p);
    let mut gl = from_zp(g);
    let mut hl = from_zp(h);
    let mut pk = pb.clone();
    for _ in 1..k_target {
        let pk1 = &pk * &pb;
        let prod = z_mul(&gl, &hl);
        let diff: ZPoly = (0..f.len().max(prod.len()))
            .map(|i| f.get(i).cloned().unwrap_or_default() - prod.get(i).cloned().unwrap_or_default())
            .collect();
        let diff = z_mod(&diff, &pk1);
        let e: ZPoly = diff.iter().map(|c| c / &pk).collect();
        let ep = to_zp(&e, p);
        let a = zp_divrem(&zp_mul(&s, &ep, p), h, p).1;
        let b = zp_divrem(&zp_mul(&t, &ep, p), g, p).1;
        let add_scaled = |base: &mut ZPoly, corr: &Zp| {
            if base.len() < corr.len() {
                base.resize(corr.len(), BigInt::zero());
            }
            for (i, &c) in corr.iter().enumerate() {
                base[i] += BigInt::from(c) * &pk;
            }
        };
        add_scaled(&mut gl, &b);
        add_scaled(&mut hl, &a);
        gl = z_mod(&gl, &pk1);
        hl = z_mod(&hl, &pk1);
        pk = pk1;
    }
    (gl, hl)
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = vec![];
    let mut cur = vec![];
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

/// Factors a nonzero squarefree rational polynomial into monic irreducibles over Q.
pub fn factor_squarefree_q(p: &[Rat]) -> Vec<QPoly> {
    let deg = p.len().saturating_sub(1);
    if deg <= 1 {
        return vec![qpoly::monic(p)];
    }
    // x divides p at most once
    if p[0].is_zero() {
        let rest: QPoly = p[1..].to_vec();
        let mut out = vec![vec![Rat::zero(), Rat::one()]];
        out.extend(factor_squarefree_q(&rest));
        return out;
    }
    let l = denom_lcm(p.iter());
    let zp: ZPoly = p.iter().map(|c| (c * Rat::from_integer(l.clone())).to_integer()).collect();
    let f = z_primitive(&zp);
    let factors = zassenhaus(&f);
    let mut out: Vec<QPoly> = factors
        .into_iter()
        .map(|g| qpoly::monic(&g.iter().map(|c| Rat::from_integer(c.clone())).collect::<Vec<_>>()))
        .collect();
    out.sort();
    out
}

fn zassenhaus(f: &[BigInt]) -> Vec<ZPoly> {
    let n = f.len() - 1;
    let lc = f[n].clone();
    // choose a prime: lc nonzero mod p and f squarefree mod p; keep the one with fewest factors
    let mut rng = ChaCha8Rng::seed_from_u64(0x5e_ed0f_fac7);
    let mut best: Option<(u64, Vec<Zp>)> = None;
    let mut tried = 0;
    let mut cand = 3u64;
    while tried < 4 {
        cand += 2;
        if !is_prime(cand) {
            continue;
        }
        let pc = cand;
        if (&lc % BigInt::from(pc)).is_zero() {
            continue;
        }
        let fp = zp_monic(&to_zp(f, pc), pc);
        if fp.len() != n + 1 {
            continue;
        }
        if zp_gcd(&fp, &zp_deriv(&fp, pc), pc).len() != 1 {
            continue;
        }
        tried += 1;
        let facs = zp_factor(&fp, pc, &mut rng);
        if best.as_ref().is_none_or(|(_, b)| facs.len() < b.len()) {
            best = Some((pc, facs));
        }
    }
    let (p, mut modfacs) = best.expect("a good prime always exists");
    if modfacs.len() == 1 {
        return vec![f.to_vec()];
    }
    modfacs.sort();
    // coefficient bound for factors of lc*f
    let norm1: BigInt = f.iter().map(|c| c.abs()).sum();
    let bound = lc.abs() * (BigInt::one() << n) * norm1 * 2;
    let pb = BigInt::from(p);
    let mut k = 1u32;
    let mut pk = pb.clone();
    while pk <= bound {
        pk *= &pb;
        k += 1;
    }
    // monic image of f modulo p^k
    let lcinv = lc.modinv(&pk).expect("lc invertible mod p^k");
    let fmonic = z_mod(&f.iter().map(|c| c * &lcinv).collect::<Vec<_>>(), &pk);
    // multifactor lifting by peeling off one factor at a time
    let mut lifted: Vec<ZPoly> = vec![];
    let mut rest_target = fmonic;
    for i in 0..modfacs.len() - 1 {
        let g = &modfacs[i];
        let mut h: Zp = vec![1];
        for m in &modfacs[i + 1..] {
            h = zp_mul(&h, m, p);
        }
        let (gl, hl) = hensel_pair(&rest_target, g, &h, p, k);
        lifted.push(gl);
        rest_target = hl;
    }
    lifted.push(rest_target);
    // recombination
    let mut f = f.to_vec();
    let mut result = vec![];
    let mut s = 1;
    while 2 * s <= lifted.len() {
        let mut found = false;
        for subset in combinations(lifted.len(), s) {
            let lcf = f.last().unwrap().clone();
            let mut g: ZPoly = vec![lcf];
            for &i in &subset {
                g = z_mod(&z_mul(&g, &lifted[i]), &pk);
            }
            let g = z_primitive(&z_symmetric(&g, &pk));
            if let Some(q) = z_exact_div(&f, &g) {
                result.push(g);
                f = q;
                let keep: Vec<ZPoly> =
                    lifted.iter().enumerate().filter(|(i, _)| !subset.contains(i)).map(|(_, v)| v.clone()).collect();
                lifted = keep;
                found = true;
                break;
            }
        }
        if !found {
            s += 1;
        }
    }
    if f.len() > 1 {
        result.push(z_primitive(&f));
    }
    result
}
