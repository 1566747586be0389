//! Independent oracles and seeded generators shared by the integration tests.
#![allow(dead_code)]

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use wpsfol::foliation::validate_field;
use wpsfol::{Monomial, Polynomial, Rational, VectorField, Weights};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn w(v: &[u32]) -> Weights {
    Weights::new(v.to_vec()).unwrap()
}

pub fn p(text: &str, nvars: usize) -> Polynomial {
    wpsfol::poly::parse_polynomial(text, nvars).unwrap()
}

pub fn q(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub fn pairwise_coprime(v: &[u32]) -> bool {
    (0..v.len()).all(|i| (i + 1..v.len()).all(|j| gcd(v[i], v[j]) == 1))
}

/// Laplace expansion along the first row.
pub fn cofactor_determinant(m: &[Vec<Polynomial>]) -> Polynomial {
    let n = m.len();
    let nvars = m[0][0].nvars();
    if n == 1 {
        return m[0][0].clone();
    }
    let mut acc = Polynomial::zero(nvars);
    for c in 0..n {
        if m[0][c].is_zero() {
            continue;
        }
        let minor: Vec<Vec<Polynomial>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|&(j, _)| j != c)
                    .map(|(_, e)| e.clone())
                    .collect()
            })
            .collect();
        let term = &m[0][c] * &cofactor_determinant(&minor);
        acc = if c % 2 == 0 {
            &acc + &term
        } else {
            &acc - &term
        };
    }
    acc
}

/// Every exponent vector of weighted degree `k`, by nested enumeration.
pub fn enumerate_monomials(w: &[u32], k: u64) -> Vec<Vec<u32>> {
    fn go(w: &[u32], k: u64, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if w.is_empty() {
            if k == 0 {
                out.push(prefix.clone());
            }
            return;
        }
        for e in 0..=(k / w[0] as u64) {
            prefix.push(e as u32);
            go(&w[1..], k - e * w[0] as u64, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(w, k, &mut Vec::new(), &mut out);
    out
}

/// Brute-force count of exponent vectors in a box.
pub fn brute_h0(w: &[u32], k: i64) -> u64 {
    if k < 0 {
        return 0;
    }
    let k = k as u64;
    let bounds: Vec<u64> = w.iter().map(|&wi| k / wi as u64).collect();
    let mut count = 0;
    let mut e = vec![0u64; w.len()];
    loop {
        if e.iter().zip(w).map(|(a, &b)| a * b as u64).sum::<u64>() == k {
            count += 1;
        }
        let mut i = 0;
        loop {
            if i == e.len() {
                return count;
            }
            if e[i] < bounds[i] {
                e[i] += 1;
                break;
            }
            e[i] = 0;
            i += 1;
        }
    }
}

pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

pub fn small_rational<R: Rng>(rng: &mut R) -> Rational {
    let n: i64 = rng.gen_range(-9..=9);
    let d: i64 = rng.gen_range(1..=4);
    q(n, d)
}

pub fn nonzero_rational<R: Rng>(rng: &mut R) -> Rational {
    loop {
        let r = small_rational(rng);
        if !r.is_zero() {
            return r;
        }
    }
}

pub fn random_monomial<R: Rng>(rng: &mut R, nvars: usize, max_exp: u32) -> Monomial {
    Monomial::new((0..nvars).map(|_| rng.gen_range(0..=max_exp)).collect())
}

/// Sum of up to `terms` random terms; may be zero.
pub fn random_polynomial<R: Rng>(
    rng: &mut R,
    nvars: usize,
    max_exp: u32,
    terms: usize,
) -> Polynomial {
    let mut acc = Polynomial::zero(nvars);
    for _ in 0..rng.gen_range(0..=terms) {
        let t = Polynomial::term(random_monomial(rng, nvars, max_exp), small_rational(rng));
        acc = &acc + &t;
    }
    acc
}

pub fn random_nonzero_polynomial<R: Rng>(
    rng: &mut R,
    nvars: usize,
    max_exp: u32,
    terms: usize,
) -> Polynomial {
    loop {
        let f = random_polynomial(rng, nvars, max_exp, terms);
        if !f.is_zero() {
            return f;
        }
    }
}

/// Random combination of the monomials of weighted degree `k`; zero when
/// there are none.
pub fn random_quasi_homogeneous<R: Rng>(
    rng: &mut R,
    w: &[u32],
    k: u64,
    density: f64,
) -> Polynomial {
    let nvars = w.len();
    let mut acc = Polynomial::zero(nvars);
    for e in enumerate_monomials(w, k) {
        if rng.gen_bool(density) {
            acc = &acc + &Polynomial::term(Monomial::new(e), nonzero_rational(rng));
        }
    }
    acc
}

pub fn random_nonzero_quasi_homogeneous<R: Rng>(rng: &mut R, w: &[u32], k: u64) -> Polynomial {
    assert!(!enumerate_monomials(w, k).is_empty());
    loop {
        let f = random_quasi_homogeneous(rng, w, k, 0.6);
        if !f.is_zero() {
            return f;
        }
    }
}

/// Random valid field of degree `d`: component `i` has weighted degree
/// `d − 1 + w_i`.
pub fn random_field<R: Rng>(rng: &mut R, weights: &Weights, d: u64) -> VectorField {
    let ws = weights.as_slice();
    loop {
        let comps: Vec<Polynomial> = ws
            .iter()
            .map(|&wi| random_quasi_homogeneous(rng, ws, d - 1 + wi as u64, 0.7))
            .collect();
        if comps.iter().all(Polynomial::is_zero) {
            continue;
        }
        return validate_field(weights, comps).unwrap();
    }
}

/// `Σ w_i z_i ∂f/∂z_i` computed term by term: each monomial is scaled by its
/// weighted degree.
pub fn euler_operator(w: &[u32], f: &Polynomial) -> Polynomial {
    let mut acc = Polynomial::zero(f.nvars());
    for (m, c) in f.terms() {
        let deg: u64 = m
            .exponents()
            .iter()
            .zip(w)
            .map(|(&e, &wi)| e as u64 * wi as u64)
            .sum();
        acc = &acc + &Polynomial::term(m.clone(), c * Rational::from_integer(BigInt::from(deg)));
    }
    acc
}

/// `X(f)` with derivatives taken by hand from the exponent vectors.
pub fn derivation(components: &[Polynomial], f: &Polynomial) -> Polynomial {
    let nvars = f.nvars();
    let mut acc = Polynomial::zero(nvars);
    for (i, xi) in components.iter().enumerate() {
        let mut d = Polynomial::zero(nvars);
        for (m, c) in f.terms() {
            let e = m.exponent(i);
            if e == 0 {
                continue;
            }
            let mut ex = m.exponents().to_vec();
            ex[i] -= 1;
            d = &d
                + &Polynomial::term(
                    Monomial::new(ex),
                    c * Rational::from_integer(BigInt::from(e)),
                );
        }
        acc = &acc + &(xi * &d);
    }
    acc
}

pub fn rational_pow(c: &Rational, e: u64) -> Rational {
    (0..e).fold(Rational::one(), |acc, _| acc * c)
}
