//! Irreducible factorization of univariate polynomials over `ℚ`.
//!
//! Pipeline: square-free decomposition over `ℚ`, then for each square-free
//! part a Berlekamp–Zassenhaus style scheme: pick a small odd prime `p` that
//! keeps the part square-free, factor modulo `p` (distinct-degree then
//! Cantor–Zassenhaus equal-degree splitting), Hensel-lift the modular
//! factors to `p^k` past the Mignotte bound and recombine subsets by trial
//! division over `ℤ`.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{Polynomial, Rational};
use crate::error::{Error, Result};

/// `leading * Π factor^multiplicity`, with monic irreducible factors sorted
/// by degree and then by coefficients (constant term first).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub leading: Rational,
    pub factors: Vec<(Polynomial, usize)>,
}

impl Factorization {
    /// Multiplies the factorization back out.
    pub fn expand(&self) -> Polynomial {
        self.factors
            .iter()
            .fold(Polynomial::constant(self.leading.clone()), |acc, (f, k)| &acc * &f.pow(*k))
    }

    /// Rational roots with multiplicity, read off the linear factors.
    pub fn rational_roots(&self) -> Vec<(Rational, usize)> {
        self.factors
            .iter()
            .filter(|(f, _)| f.degree() == Some(1))
            .map(|(f, k)| (-f.coeff(0), *k))
            .collect()
    }

    /// Total multiplicity of rational roots.
    pub fn rational_root_count(&self) -> usize {
        self.rational_roots().iter().map(|(_, k)| k).sum()
    }
}

/// Factors a nonzero polynomial into monic irreducibles over `ℚ`.
pub fn factor_poly(p: &Polynomial) -> Result<Factorization> {
    let leading = p.leading().ok_or(Error::ZeroPolynomial)?.clone();
    let mut factors = Vec::new();
    for (part, k) in p.square_free_decomposition()? {
        for f in factor_square_free(&part) {
            factors.push((f, k));
        }
    }
    factors.sort();
    Ok(Factorization { leading, factors })
}

type IntPoly = Vec<BigInt>;
type ModPoly = Vec<u64>;

/// Monic irreducible factors of a monic square-free polynomial.
fn factor_square_free(g: &Polynomial) -> Vec<Polynomial> {
    if g.degree().unwrap_or(0) <= 1 {
        return vec![g.monic()];
    }
    let f = primitive_integer_poly(g);
    let lc = f.last().unwrap().clone();
    let p = choose_prime(&f);
    let modular = factor_mod_p(&reduce(&f, p), p);
    if modular.len() == 1 {
        return vec![g.monic()];
    }

    let bound = coefficient_bound(&f) * BigInt::from(2) * lc.abs();
    let pb = BigInt::from(p);
    let mut modulus = pb.clone();
    while modulus <= bound {
        modulus *= &pb;
    }
    let lifted = hensel_lift(&f, &modular, p, &modulus);
    recombine(f, lifted, &modulus)
        .into_iter()
        .map(|h| int_to_poly(&h).monic())
        .collect()
}

fn primitive_integer_poly(g: &Polynomial) -> IntPoly {
    let denom_lcm = g
        .coefficients()
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: IntPoly = g
        .coefficients()
        .iter()
        .map(|c| (c * Rational::from_integer(denom_lcm.clone())).to_integer())
        .collect();
    primitive_part(ints)
}

fn primitive_part(mut f: IntPoly) -> IntPoly {
    let content = f.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if !content.is_zero() {
        for c in &mut f {
            *c /= &content;
        }
    }
    if f.last().is_some_and(|c| c.is_negative()) {
        for c in &mut f {
            *c = -&*c;
        }
    }
    f
}

fn int_to_poly(f: &IntPoly) -> Polynomial {
    Polynomial::new(f.iter().map(|c| Rational::from_integer(c.clone())).collect())
}

/// Mignotte-style bound `2^n ⌈‖f‖₂⌉` on coefficients of any factor.
fn coefficient_bound(f: &IntPoly) -> BigInt {
    let norm_sq: BigInt = f.iter().map(|c| c * c).sum();
    let norm = norm_sq.sqrt() + BigInt::one();
    norm << (f.len() - 1)
}

fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

/// Smallest odd prime not dividing the leading coefficient that keeps `f`
/// square-free.
fn choose_prime(f: &IntPoly) -> u64 {
    let lc = f.last().unwrap();
    (3u64..)
        .step_by(2)
        .filter(|&p| is_prime(p))
        .find(|&p| {
            if (lc % BigInt::from(p)).is_zero() {
                return false;
            }
            let fp = reduce(f, p);
            let g = gcd_mod(&fp, &derivative_mod(&fp, p), p);
            g.len() == 1
        })
        .expect("a square-free polynomial stays square-free modulo all but finitely many primes")
}

// ---- arithmetic in F_p[t] ----

fn reduce(f: &IntPoly, p: u64) -> ModPoly {
    let pb = BigInt::from(p);
    let mut out: ModPoly = f
        .iter()
        .map(|c| c.mod_floor(&pb).to_u64().unwrap())
        .collect();
    trim(&mut out);
    out
}

fn trim(f: &mut ModPoly) {
    while f.last() == Some(&0) {
        f.pop();
    }
}

fn pow_mod_u64(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod_u64(a, p - 2, p)
}

fn add_mod(a: &ModPoly, b: &ModPoly, p: u64) -> ModPoly {
    let n = a.len().max(b.len());
    let mut out: ModPoly = (0..n)
        .map(|i| (a.get(i).copied().unwrap_or(0) + b.get(i).copied().unwrap_or(0)) % p)
        .collect();
    trim(&mut out);
    out
}

fn sub_mod(a: &ModPoly, b: &ModPoly, p: u64) -> ModPoly {
    let n = a.len().max(b.len());
    let mut out: ModPoly = (0..n)
        .map(|i| (a.get(i).copied().unwrap_or(0) + p - b.get(i).copied().unwrap_or(0)) % p)
        .collect();
    trim(&mut out);
    out
}

fn mul_mod(a: &ModPoly, b: &ModPoly, p: u64) -> ModPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    trim(&mut out);
    out
}

fn scale_mod(a: &ModPoly, c: u64, p: u64) -> ModPoly {
    let mut out: ModPoly = a.iter().map(|&x| x * c % p).collect();
    trim(&mut out);
    out
}

fn divrem_mod(a: &ModPoly, d: &ModPoly, p: u64) -> (ModPoly, ModPoly) {
    assert!(!d.is_empty(), "division by zero polynomial mod p");
    let dd = d.len() - 1;
    let inv = inv_mod(d[dd], p);
    let mut rem = a.clone();
    if rem.len() <= dd {
        return (Vec::new(), rem);
    }
    let mut quot = vec![0u64; rem.len() - dd];
    for k in (0..quot.len()).rev() {
        let c = rem[k + dd] * inv % p;
        if c == 0 {
            continue;
        }
        for (i, &dc) in d.iter().enumerate() {
            rem[k + i] = (rem[k + i] + p - c * dc % p) % p;
        }
        quot[k] = c;
    }
    rem.truncate(dd);
    trim(&mut rem);
    trim(&mut quot);
    (quot, rem)
}

fn monic_mod(a: &ModPoly, p: u64) -> ModPoly {
    match a.last() {
        None => Vec::new(),
        Some(&lc) => scale_mod(a, inv_mod(lc, p), p),
    }
}

fn gcd_mod(a: &ModPoly, b: &ModPoly, p: u64) -> ModPoly {
    let (mut a, mut b) = (a.clone(), b.clone());
    while !b.is_empty() {
        let r = divrem_mod(&a, &b, p).1;
        a = b;
        b = r;
    }
    monic_mod(&a, p)
}

/// `(s, t)` with `s*a + t*b = 1` for coprime `a`, `b`.
fn ext_gcd_mod(a: &ModPoly, b: &ModPoly, p: u64) -> (ModPoly, ModPoly) {
    let (mut r0, mut r1) = (a.clone(), b.clone());
    let (mut s0, mut s1): (ModPoly, ModPoly) = (vec![1], Vec::new());
    let (mut t0, mut t1): (ModPoly, ModPoly) = (Vec::new(), vec![1]);
    while !r1.is_empty() {
        let (q, r) = divrem_mod(&r0, &r1, p);
        let s2 = sub_mod(&s0, &mul_mod(&q, &s1, p), p);
        let t2 = sub_mod(&t0, &mul_mod(&q, &t1, p), p);
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s2);
        t0 = std::mem::replace(&mut t1, t2);
    }
    assert_eq!(r0.len(), 1, "Hensel lifting needs coprime factors");
    let inv = inv_mod(r0[0], p);
    (scale_mod(&s0, inv, p), scale_mod(&t0, inv, p))
}

fn derivative_mod(a: &ModPoly, p: u64) -> ModPoly {
    let mut out: ModPoly = a
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, &c)| (i as u64 % p) * c % p)
        .collect();
    trim(&mut out);
    out
}

fn powmod_poly(base: &ModPoly, exp: &BigUint, modulus: &ModPoly, p: u64) -> ModPoly {
    let mut acc: ModPoly = vec![1];
    let base = divrem_mod(base, modulus, p).1;
    for i in (0..exp.bits()).rev() {
        acc = divrem_mod(&mul_mod(&acc, &acc, p), modulus, p).1;
        if exp.bit(i) {
            acc = divrem_mod(&mul_mod(&acc, &base, p), modulus, p).1;
        }
    }
    acc
}

/// Monic irreducible factors of a square-free polynomial over `F_p`, `p` odd.
fn factor_mod_p(f: &ModPoly, p: u64) -> Vec<ModPoly> {
    let f = monic_mod(f, p);
    let mut out = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(p);
    for (part, d) in distinct_degree(&f, p) {
        equal_degree(&part, d, p, &mut rng, &mut out);
    }
    out
}

fn distinct_degree(f: &ModPoly, p: u64) -> Vec<(ModPoly, usize)> {
    let mut out = Vec::new();
    let mut rest = f.clone();
    let x: ModPoly = vec![0, 1];
    let mut h = x.clone();
    let mut d = 0;
    while rest.len() > 1 {
        d += 1;
        if 2 * d > rest.len() - 1 {
            out.push((rest.clone(), rest.len() - 1));
            break;
        }
        h = powmod_poly(&h, &BigUint::from(p), &rest, p);
        let g = gcd_mod(&sub_mod(&h, &x, p), &rest, p);
        if g.len() > 1 {
            rest = divrem_mod(&rest, &g, p).0;
            h = divrem_mod(&h, &rest, p).1;
            out.push((g, d));
        }
    }
    out
}

fn equal_degree(f: &ModPoly, d: usize, p: u64, rng: &mut ChaCha8Rng, out: &mut Vec<ModPoly>) {
    let n = f.len() - 1;
    if n == d {
        out.push(f.clone());
        return;
    }
    let exp = (BigUint::from(p).pow(d as u32) - BigUint::one()) >> 1;
    loop {
        let mut a: ModPoly = (0..n).map(|_| rng.gen_range(0..p)).collect();
        trim(&mut a);
        if a.len() < 2 {
            continue;
        }
        let g = gcd_mod(&a, f, p);
        let candidate = if g.len() > 1 && g.len() < f.len() {
            g
        } else {
            let b = powmod_poly(&a, &exp, f, p);
            gcd_mod(&sub_mod(&b, &vec![1], p), f, p)
        };
        if candidate.len() > 1 && candidate.len() < f.len() {
            let other = divrem_mod(f, &candidate, p).0;
            equal_degree(&candidate, d, p, rng, out);
            equal_degree(&monic_mod(&other, p), d, p, rng, out);
            return;
        }
    }
}

// ---- Hensel lifting over Z / p^k ----

fn lift_int(a: &ModPoly) -> IntPoly {
    a.iter().map(|&c| BigInt::from(c)).collect()
}

fn int_mul(a: &IntPoly, b: &IntPoly) -> IntPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn int_mod(a: &IntPoly, m: &BigInt) -> IntPoly {
    let mut out: IntPoly = a.iter().map(|c| c.mod_floor(m)).collect();
    while out.last().is_some_and(Zero::is_zero) {
        out.pop();
    }
    out
}

fn int_add_scaled(a: &IntPoly, m: &BigInt, b: &ModPoly) -> IntPoly {
    let n = a.len().max(b.len());
    (0..n)
        .map(|i| {
            let x = a.get(i).cloned().unwrap_or_else(BigInt::zero);
            x + m * BigInt::from(b.get(i).copied().unwrap_or(0))
        })
        .collect()
}

/// Lifts `f ≡ g0 * h0 (mod p)` with `g0` monic to `f ≡ g * h (mod modulus)`.
fn lift_pair(f: &IntPoly, g0: &ModPoly, h0: &ModPoly, p: u64, modulus: &BigInt) -> (IntPoly, IntPoly) {
    let (s, t) = ext_gcd_mod(g0, h0, p);
    let pb = BigInt::from(p);
    let mut g = lift_int(g0);
    let mut h = lift_int(h0);
    let mut m = pb.clone();
    while &m < modulus {
        let diff: IntPoly = {
            let gh = int_mul(&g, &h);
            let n = f.len().max(gh.len());
            (0..n)
                .map(|i| {
                    f.get(i).cloned().unwrap_or_else(BigInt::zero)
                        - gh.get(i).cloned().unwrap_or_else(BigInt::zero)
                })
                .collect()
        };
        let diff = int_mod(&diff, modulus);
        let e: IntPoly = diff
            .iter()
            .map(|c| {
                debug_assert!((c % &m).is_zero());
                c / &m
            })
            .collect();
        let e = reduce(&e, p);
        let (q, a) = divrem_mod(&mul_mod(&t, &e, p), g0, p);
        let b = add_mod(&mul_mod(&s, &e, p), &mul_mod(&q, h0, p), p);
        g = int_mod(&int_add_scaled(&g, &m, &a), modulus);
        h = int_mod(&int_add_scaled(&h, &m, &b), modulus);
        m *= &pb;
    }
    (g, h)
}

/// Lifts a full modular factorization of `f` to monic factors modulo `modulus`.
fn hensel_lift(f: &IntPoly, factors: &[ModPoly], p: u64, modulus: &BigInt) -> Vec<IntPoly> {
    if factors.len() == 1 {
        let inv = f
            .last()
            .unwrap()
            .modinv(modulus)
            .expect("leading coefficient is a unit modulo p^k");
        let monic: IntPoly = f.iter().map(|c| c * &inv).collect();
        return vec![int_mod(&monic, modulus)];
    }
    let (left, right) = factors.split_at(factors.len() / 2);
    let g0 = left.iter().fold(vec![1u64], |acc, x| mul_mod(&acc, x, p));
    let (h0, r) = divrem_mod(&reduce(f, p), &g0, p);
    debug_assert!(r.is_empty());
    let (g, h) = lift_pair(f, &g0, &h0, p, modulus);
    let mut out = hensel_lift(&g, left, p, modulus);
    out.extend(hensel_lift(&h, right, p, modulus));
    out
}

fn symmetric(a: &IntPoly, m: &BigInt) -> IntPoly {
    let half = m >> 1;
    a.iter()
        .map(|c| {
            let r = c.mod_floor(m);
            if r > half {
                r - m
            } else {
                r
            }
        })
        .collect()
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Zassenhaus subset recombination; returns primitive integer factors.
fn recombine(mut f: IntPoly, mut lifted: Vec<IntPoly>, modulus: &BigInt) -> Vec<IntPoly> {
    let mut found = Vec::new();
    let mut size = 1;
    while 2 * size <= lifted.len() {
        let mut hit = None;
        for subset in combinations(lifted.len(), size) {
            let lc = f.last().unwrap().clone();
            let prod = subset
                .iter()
                .fold(vec![lc], |acc, &i| int_mod(&int_mul(&acc, &lifted[i]), modulus));
            let candidate = primitive_part(symmetric(&prod, modulus));
            let (q, r) = int_to_poly(&f).div_rem(&int_to_poly(&candidate));
            if r.is_zero() && q.coefficients().iter().all(|c| c.is_integer()) {
                hit = Some((subset, candidate, q));
                break;
            }
        }
        match hit {
            Some((subset, candidate, q)) => {
                for &i in subset.iter().rev() {
                    lifted.remove(i);
                }
                f = q.coefficients().iter().map(|c| c.to_integer()).collect();
                found.push(candidate);
            }
            None => size += 1,
        }
    }
    if f.len() > 1 {
        found.push(primitive_part(f));
    }
    found
}
