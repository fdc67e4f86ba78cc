//! Factorization of polynomials over ℚ into monic irreducibles.
//!
//! Square-free decomposition over ℚ, then for each square-free part a Zassenhaus
//! factorization: factor modulo a small prime (distinct-degree plus Cantor–Zassenhaus
//! splitting), Hensel-lift to beyond the Mignotte bound, and recombine lifted factors
//! by trial division over ℤ.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::poly::Poly;
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    /// Leading coefficient of the input.
    pub leading: Rational,
    /// Monic irreducible factors with multiplicities, sorted by degree then coefficients.
    pub factors: Vec<(Poly, usize)>,
}

impl Factorization {
    pub fn expand(&self) -> Poly {
        self.factors
            .iter()
            .fold(Poly::constant(self.leading.clone()), |acc, (f, m)| acc.mul(&f.pow(*m)))
    }

    /// Rational roots with multiplicity, ascending.
    pub fn rational_roots(&self) -> Vec<(Rational, usize)> {
        let mut roots: Vec<(Rational, usize)> = self
            .factors
            .iter()
            .filter(|(f, _)| f.degree() == Some(1))
            .map(|(f, m)| (-f.coeff(0), *m))
            .collect();
        roots.sort();
        roots
    }

    /// Irreducible factors of degree at least two.
    pub fn nonlinear(&self) -> Vec<(Poly, usize)> {
        self.factors.iter().filter(|(f, _)| f.degree().unwrap_or(0) >= 2).cloned().collect()
    }
}

fn sort_key(p: &Poly) -> (usize, Vec<Rational>) {
    (p.degree().unwrap_or(0), p.coeffs().to_vec())
}

/// Factors a nonzero polynomial. Panics on the zero polynomial.
pub fn factor(f: &Poly) -> Factorization {
    assert!(!f.is_zero(), "cannot factor the zero polynomial");
    let mut factors = Vec::new();
    for (part, mult) in f.squarefree_decomposition() {
        for irr in factor_squarefree(&part) {
            factors.push((irr, mult));
        }
    }
    factors.sort_by(|a, b| sort_key(&a.0).cmp(&sort_key(&b.0)));
    Factorization { leading: f.leading(), factors }
}

pub fn is_irreducible(f: &Poly) -> bool {
    let fz = factor(f);
    fz.factors.len() == 1 && fz.factors[0].1 == 1
}

/// Irreducible monic factors of a monic square-free polynomial.
fn factor_squarefree(a: &Poly) -> Vec<Poly> {
    let d = a.degree().unwrap_or(0);
    if d == 0 {
        return Vec::new();
    }
    if d == 1 {
        return vec![a.monic()];
    }
    // primitive integer polynomial with positive leading coefficient
    let lcm = a.coeffs().iter().fold(BigInt::one(), |l, c| l.lcm(c.denom()));
    let ints: Vec<BigInt> = a.coeffs().iter().map(|c| (c * Rational::from_integer(lcm.clone())).to_integer()).collect();
    let content = ints.iter().fold(BigInt::zero(), |g, c| g.gcd(c));
    let prim: Vec<BigInt> = ints.iter().map(|c| c / &content).collect();
    let lead = prim[d].clone();
    // G(y) = lead^(d-1) F(y/lead) is monic with integer coefficients
    let mut g = vec![BigInt::zero(); d + 1];
    let mut pw = BigInt::one();
    for i in (0..d).rev() {
        g[i] = &prim[i] * &pw;
        pw *= &lead;
    }
    g[d] = BigInt::one();
    let lead_q = Rational::from_integer(lead);
    factor_monic_integer(&g)
        .into_iter()
        .map(|h| {
            // h(lead·x), made monic
            let mut s = Rational::one();
            let coeffs: Vec<Rational> = h
                .iter()
                .map(|c| {
                    let v = Rational::from_integer(c.clone()) * &s;
                    s *= &lead_q;
                    v
                })
                .collect();
            Poly::new(coeffs).monic()
        })
        .collect()
}

// ---------------------------------------------------------------------------
// polynomials modulo a small prime, coefficients in [0, p)

type Fp = Vec<u64>;

fn fp_trim(mut a: Fp) -> Fp {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn fp_deg(a: &Fp) -> Option<usize> {
    a.len().checked_sub(1)
}

fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

fn fp_sub(a: &Fp, b: &Fp, p: u64) -> Fp {
    let n = a.len().max(b.len());
    fp_trim(
        (0..n)
            .map(|i| {
                let x = a.get(i).copied().unwrap_or(0);
                let y = b.get(i).copied().unwrap_or(0);
                (x + p - y) % p
            })
            .collect(),
    )
}

fn fp_mul(a: &Fp, b: &Fp, p: u64) -> Fp {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if *x == 0 {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    fp_trim(out)
}

fn fp_divrem(a: &Fp, b: &Fp, p: u64) -> (Fp, Fp) {
    let db = fp_deg(b).expect("division by zero polynomial mod p");
    let mut r = a.clone();
    let Some(da) = fp_deg(a) else {
        return (Vec::new(), Vec::new());
    };
    if da < db {
        return (Vec::new(), r);
    }
    let inv = inv_mod(b[db], p);
    let mut q = vec![0u64; da - db + 1];
    for k in (0..=da - db).rev() {
        let c = r[k + db] * inv % p;
        if c == 0 {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            r[k + j] = (r[k + j] + p - c * y % p) % p;
        }
        q[k] = c;
    }
    r.truncate(db);
    (fp_trim(q), fp_trim(r))
}

fn fp_monic(a: &Fp, p: u64) -> Fp {
    match a.last() {
        None => Vec::new(),
        Some(&l) => {
            let inv = inv_mod(l, p);
            a.iter().map(|c| c * inv % p).collect()
        }
    }
}

fn fp_gcd(a: &Fp, b: &Fp, p: u64) -> Fp {
    let (mut x, mut y) = (a.clone(), b.clone());
    while !y.is_empty() {
        let r = fp_divrem(&x, &y, p).1;
        x = y;
        y = r;
    }
    fp_monic(&x, p)
}

/// `(g, s, t)` with `s·a + t·b = g`, g monic.
fn fp_ext_gcd(a: &Fp, b: &Fp, p: u64) -> (Fp, Fp, Fp) {
    let (mut r0, mut r1) = (a.clone(), b.clone());
    let (mut s0, mut s1): (Fp, Fp) = (vec![1], Vec::new());
    let (mut t0, mut t1): (Fp, Fp) = (Vec::new(), vec![1]);
    while !r1.is_empty() {
        let (q, r) = fp_divrem(&r0, &r1, p);
        r0 = core::mem::replace(&mut r1, r);
        let s2 = fp_sub(&s0, &fp_mul(&q, &s1, p), p);
        s0 = core::mem::replace(&mut s1, s2);
        let t2 = fp_sub(&t0, &fp_mul(&q, &t1, p), p);
        t0 = core::mem::replace(&mut t1, t2);
    }
    let l = *r0.last().expect("gcd of two zero polynomials");
    let inv = inv_mod(l, p);
    let sc = |v: &Fp| fp_trim(v.iter().map(|c| c * inv % p).collect());
    (sc(&r0), sc(&s0), sc(&t0))
}

fn fp_powmod(base: &Fp, mut e: u128, m: &Fp, p: u64) -> Fp {
    let mut result: Fp = vec![1];
    let mut b = fp_divrem(base, m, p).1;
    while e > 0 {
        if e & 1 == 1 {
            result = fp_divrem(&fp_mul(&result, &b, p), m, p).1;
        }
        b = fp_divrem(&fp_mul(&b, &b, p), m, p).1;
        e >>= 1;
    }
    result
}

fn fp_derivative(a: &Fp, p: u64) -> Fp {
    fp_trim(a.iter().enumerate().skip(1).map(|(i, c)| (i as u64 % p) * c % p).collect())
}

/// Distinct-degree factorization of a monic square-free polynomial.
fn distinct_degree(f: &Fp, p: u64) -> Vec<(Fp, usize)> {
    let mut out = Vec::new();
    let mut rest = f.clone();
    let x: Fp = vec![0, 1];
    let mut h = x.clone();
    let mut d = 1;
    while fp_deg(&rest).unwrap_or(0) >= 2 * d {
        h = fp_powmod(&h, p as u128, &rest, p);
        let g = fp_gcd(&fp_sub(&h, &x, p), &rest, p);
        if fp_deg(&g).unwrap_or(0) > 0 {
            rest = fp_divrem(&rest, &g, p).0;
            h = fp_divrem(&h, &rest, p).1;
            out.push((g, d));
        }
        d += 1;
    }
    if fp_deg(&rest).unwrap_or(0) > 0 {
        let dr = fp_deg(&rest).unwrap();
        out.push((fp_monic(&rest, p), dr));
    }
    out
}

/// Splits a product of distinct irreducibles of common degree `d` (odd p).
fn equal_degree(g: &Fp, d: usize, p: u64, out: &mut Vec<Fp>) {
    let n = fp_deg(g).unwrap_or(0);
    if n == d {
        out.push(fp_monic(g, p));
        return;
    }
    let e = ((p as u128).pow(d as u32) - 1) / 2;
    for a in split_candidates(n, p) {
        let b = fp_powmod(&a, e, g, p);
        let u = fp_gcd(&fp_sub(&b, &vec![1], p), g, p);
        let du = fp_deg(&u).unwrap_or(0);
        if du > 0 && du < n {
            let v = fp_divrem(g, &u, p).0;
            equal_degree(&u, d, p, out);
            equal_degree(&v, d, p, out);
            return;
        }
    }
    unreachable!("equal-degree splitting exhausted its candidates");
}

/// Deterministic sequence of splitting polynomials `x^j + b·x + c`.
fn split_candidates(n: usize, p: u64) -> impl Iterator<Item = Fp> {
    (1..n.max(2)).flat_map(move |j| {
        (0..p).flat_map(move |b| {
            (0..p).map(move |c| {
                let mut a = vec![0u64; j + 1];
                a[j] = 1;
                a[0] = (a[0] + c) % p;
                if j > 1 {
                    a[1] = (a[1] + b) % p;
                } else if b > 0 {
                    return Vec::new();
                }
                fp_trim(a)
            })
        })
    })
    .filter(|a| !a.is_empty())
}

fn factor_mod_p(f: &Fp, p: u64) -> Vec<Fp> {
    let mut out = Vec::new();
    for (g, d) in distinct_degree(f, p) {
        equal_degree(&g, d, p, &mut out);
    }
    out
}

// ---------------------------------------------------------------------------
// integer polynomials

type Zx = Vec<BigInt>;

fn z_trim(mut a: Zx) -> Zx {
    while a.last().is_some_and(Zero::is_zero) {
        a.pop();
    }
    a
}

fn z_mul(a: &Zx, b: &Zx) -> Zx {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    z_trim(out)
}

fn z_mod(a: &Zx, m: &BigInt) -> Zx {
    z_trim(a.iter().map(|c| c.mod_floor(m)).collect())
}

fn z_symmetric(a: &Zx, m: &BigInt) -> Zx {
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

/// Exact division of `a` by a monic `b` over ℤ, if it divides.
fn z_div_exact(a: &Zx, b: &Zx) -> Option<Zx> {
    let db = b.len() - 1;
    debug_assert!(b[db].is_one());
    if a.len() < b.len() {
        return if a.is_empty() { Some(Vec::new()) } else { None };
    }
    let mut r = a.clone();
    let da = a.len() - 1;
    let mut q = vec![BigInt::zero(); da - db + 1];
    for k in (0..=da - db).rev() {
        let c = r[k + db].clone();
        if c.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            r[k + j] -= &c * y;
        }
        q[k] = c;
    }
    if r.iter().all(Zero::is_zero) {
        Some(z_trim(q))
    } else {
        None
    }
}

fn to_fp(a: &Zx, p: u64) -> Fp {
    let pb = BigInt::from(p);
    fp_trim(a.iter().map(|c| c.mod_floor(&pb).to_u64().unwrap()).collect())
}

fn from_fp(a: &Fp) -> Zx {
    a.iter().map(|&c| BigInt::from(c)).collect()
}

const PRIMES: [u64; 24] = [3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97];

fn factor_monic_integer(g: &Zx) -> Vec<Zx> {
    let d = g.len() - 1;
    if d <= 1 {
        return vec![g.clone()];
    }
    // pick, among the first few admissible primes, the one giving the fewest modular factors
    let mut best: Option<(u64, Vec<Fp>)> = None;
    let mut tried = 0;
    for &p in PRIMES.iter() {
        let gp = to_fp(g, p);
        if fp_deg(&gp) != Some(d) {
            continue;
        }
        let dg = fp_derivative(&gp, p);
        if dg.is_empty() || fp_deg(&fp_gcd(&gp, &dg, p)).unwrap_or(0) > 0 {
            continue;
        }
        let facs = factor_mod_p(&gp, p);
        if best.as_ref().is_none_or(|(_, b)| facs.len() < b.len()) {
            best = Some((p, facs));
        }
        tried += 1;
        if tried == 4 {
            break;
        }
    }
    let (p, modular) = best.expect("no admissible prime for a square-free polynomial");
    if modular.len() == 1 {
        return vec![g.clone()];
    }
    // Mignotte-style bound on factor coefficients: 2^d · ‖g‖₁
    let norm1: BigInt = g.iter().map(|c| c.abs()).sum();
    let bound = (BigInt::one() << d) * norm1 * 2u32;
    let pb = BigInt::from(p);
    let mut modulus = pb.clone();
    while modulus <= bound {
        modulus *= &pb;
    }
    let lifted = hensel_lift(g, &modular, p, &modulus);
    recombine(g, lifted, &modulus)
}

/// Lifts `g ≡ ∏ factors (mod p)` to a factorization modulo `modulus = p^k`.
fn hensel_lift(g: &Zx, factors: &[Fp], p: u64, modulus: &BigInt) -> Vec<Zx> {
    if factors.len() == 1 {
        return vec![z_mod(g, modulus)];
    }
    let first = &factors[0];
    let rest = factors[1..].iter().fold(vec![1u64], |acc, f| fp_mul(&acc, f, p));
    let (lg, lh) = lift_pair(g, first, &rest, p, modulus);
    let mut out = vec![lg];
    out.extend(hensel_lift(&lh, &factors[1..], p, modulus));
    out
}

fn lift_pair(target: &Zx, g0: &Fp, h0: &Fp, p: u64, modulus: &BigInt) -> (Zx, Zx) {
    let (one, _s, t) = fp_ext_gcd(g0, h0, p);
    debug_assert_eq!(one, vec![1]);
    let pb = BigInt::from(p);
    let target = z_mod(target, modulus);
    let mut g = from_fp(g0);
    let mut h = from_fp(h0);
    let mut m = pb.clone();
    while &m < modulus {
        let prod = z_mul(&g, &h);
        let n = target.len().max(prod.len());
        let err: Zx = (0..n)
            .map(|i| {
                let a = target.get(i).cloned().unwrap_or_default();
                let b = prod.get(i).cloned().unwrap_or_default();
                let diff = a - b;
                debug_assert!((&diff % &m).is_zero());
                diff / &m
            })
            .collect();
        let e = to_fp(&z_trim(err), p);
        let dg = fp_divrem(&fp_mul(&t, &e, p), g0, p).1;
        let (dh, rem) = fp_divrem(&fp_sub(&e, &fp_mul(h0, &dg, p), p), g0, p);
        debug_assert!(rem.is_empty());
        g = add_scaled(&g, &from_fp(&dg), &m);
        h = add_scaled(&h, &from_fp(&dh), &m);
        m *= &pb;
    }
    (z_mod(&g, modulus), z_mod(&h, modulus))
}

fn add_scaled(a: &Zx, b: &Zx, m: &BigInt) -> Zx {
    let n = a.len().max(b.len());
    z_trim(
        (0..n)
            .map(|i| a.get(i).cloned().unwrap_or_default() + b.get(i).cloned().unwrap_or_default() * m)
            .collect(),
    )
}

fn recombine(g: &Zx, mut lifted: Vec<Zx>, modulus: &BigInt) -> Vec<Zx> {
    let mut out = Vec::new();
    let mut rest = g.clone();
    let mut size = 1;
    'outer: while 2 * size <= lifted.len() {
        let mut combo: Vec<usize> = (0..size).collect();
        loop {
            let prod = combo.iter().fold(vec![BigInt::one()], |acc, &i| z_mod(&z_mul(&acc, &lifted[i]), modulus));
            let cand = z_symmetric(&prod, modulus);
            if let Some(q) = z_div_exact(&rest, &cand) {
                out.push(cand);
                rest = q;
                for &i in combo.iter().rev() {
                    lifted.remove(i);
                }
                continue 'outer;
            }
            if !next_combination(&mut combo, lifted.len()) {
                break;
            }
        }
        size += 1;
    }
    if rest.len() > 1 {
        out.push(rest);
    }
    out
}

fn next_combination(c: &mut [usize], n: usize) -> bool {
    let k = c.len();
    for i in (0..k).rev() {
        if c[i] < n - k + i {
            c[i] += 1;
            for j in i + 1..k {
                c[j] = c[j - 1] + 1;
            }
            return true;
        }
    }
    false
}
