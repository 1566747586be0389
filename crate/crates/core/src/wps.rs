//! Sections of `O(k)`, Chern classes and intersection numbers on a
//! weighted projective space.
//!
//! Cohomology is modelled by the truncated ring `Q[h]/(h^{n+1})` with
//! `h = c1(O(1))`, normalised by the orbifold integral
//! `∫ h^n = 1 / (w0 ⋯ wn)`.

use std::ops::Add;

use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::{Monomial, Polynomial, Rational};
use crate::weights::Weights;

/// Number of monomials of weighted degree `k` (zero for negative `k`).
pub fn h0(w: &Weights, k: i64) -> u64 {
    if k < 0 {
        return 0;
    }
    let k = k as usize;
    // Coin-counting table: ways[j] = solutions using the weights seen so far.
    let mut ways = vec![0u64; k + 1];
    ways[0] = 1;
    for &wi in w.as_slice() {
        let wi = wi as usize;
        for j in wi..=k {
            ways[j] += ways[j - wi];
        }
    }
    ways[k]
}

/// Monomial basis of `H^0(P(w), O(k))` in descending lex order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearSystem {
    weights: Weights,
    degree: u64,
    basis: Vec<Monomial>,
}

impl LinearSystem {
    /// A user-supplied system. Every element must be quasi-homogeneous of
    /// weighted degree `degree`; order is kept as given.
    pub fn from_basis(weights: Weights, degree: u64, basis: Vec<Monomial>) -> Result<Self> {
        for m in &basis {
            if m.nvars() != weights.len() {
                return Err(Error::VarCountMismatch {
                    left: weights.len(),
                    right: m.nvars(),
                });
            }
            if m.weighted_degree(&weights) != degree {
                return Err(Error::NotQuasiHomogeneous(format!(
                    "basis monomial {} has weighted degree {}, expected {degree}",
                    Polynomial::term(m.clone(), Rational::one()),
                    m.weighted_degree(&weights)
                )));
            }
        }
        Ok(LinearSystem {
            weights,
            degree,
            basis,
        })
    }

    pub fn weights(&self) -> &Weights {
        &self.weights
    }

    pub fn degree(&self) -> u64 {
        self.degree
    }

    pub fn basis(&self) -> &[Monomial] {
        &self.basis
    }

    /// Dimension of the system.
    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    pub fn basis_polynomials(&self) -> Vec<Polynomial> {
        self.basis
            .iter()
            .map(|m| Polynomial::term(m.clone(), Rational::one()))
            .collect()
    }

    /// True when every term of `f` is a basis monomial.
    pub fn contains(&self, f: &Polynomial) -> bool {
        f.terms().all(|(m, _)| self.basis.contains(m))
    }
}

pub fn monomial_basis(w: &Weights, k: u64) -> LinearSystem {
    fn rec(w: &[u32], rest: u64, prefix: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        let Some((&wi, tail)) = w.split_first() else {
            if rest == 0 {
                out.push(Monomial::new(prefix.clone()));
            }
            return;
        };
        let wi = wi as u64;
        for e in (0..=rest / wi).rev() {
            prefix.push(e as u32);
            rec(tail, rest - e * wi, prefix, out);
            prefix.pop();
        }
    }
    let mut basis = Vec::new();
    rec(
        w.as_slice(),
        k,
        &mut Vec::with_capacity(w.len()),
        &mut basis,
    );
    LinearSystem {
        weights: w.clone(),
        degree: k,
        basis,
    }
}

/// `σ_j(w0, ..., wn)`, with `σ_0 = 1`.
pub fn elementary_symmetric(w: &Weights, j: usize) -> Result<BigInt> {
    if j > w.len() {
        return Err(Error::Precondition(format!(
            "elementary symmetric index {j} exceeds {} weights",
            w.len()
        )));
    }
    Ok(elementary_symmetric_all(w).swap_remove(j))
}

fn elementary_symmetric_all(w: &Weights) -> Vec<BigInt> {
    let mut e = vec![BigInt::zero(); w.len() + 1];
    e[0] = BigInt::one();
    for (count, &wi) in w.as_slice().iter().enumerate() {
        for j in (1..=count + 1).rev() {
            let add = &e[j - 1] * BigInt::from(wi);
            e[j] += add;
        }
    }
    e
}

/// An element `Σ c_i h^i` of `Q[h]/(h^{dim+1})`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChernPolynomial {
    coeffs: Vec<Rational>,
}

impl ChernPolynomial {
    /// Truncates `coeffs` to degree `dim`.
    pub fn new(dim: usize, mut coeffs: Vec<Rational>) -> Self {
        coeffs.resize(dim + 1, Rational::zero());
        ChernPolynomial { coeffs }
    }

    pub fn one(dim: usize) -> Self {
        Self::new(dim, vec![Rational::one()])
    }

    pub fn dim(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, i: usize) -> &Rational {
        &self.coeffs[i]
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn top(&self) -> &Rational {
        &self.coeffs[self.dim()]
    }

    pub fn mul(&self, other: &ChernPolynomial) -> ChernPolynomial {
        let n = self.dim().min(other.dim());
        let mut out = vec![Rational::zero(); n + 1];
        for i in 0..=n {
            for j in 0..=(n - i) {
                out[i + j] += &self.coeffs[i] * &other.coeffs[j];
            }
        }
        ChernPolynomial { coeffs: out }
    }

    /// Total Chern class of `E ⊗ L` for `E` of the given rank with total
    /// class `self`, and `c1(L) = t·h`:
    /// `c_k(E⊗L) = Σ_j C(rank−j, k−j) c_j(E) t^{k−j}`.
    pub fn twist(&self, rank: usize, t: &Rational) -> ChernPolynomial {
        let n = self.dim();
        let mut out = vec![Rational::zero(); n + 1];
        for (k, slot) in out.iter_mut().enumerate() {
            for j in 0..=k.min(rank) {
                if k - j > rank - j {
                    continue;
                }
                let b = binomial(BigInt::from(rank - j), BigInt::from(k - j));
                let tp = num_traits::pow(t.clone(), k - j);
                *slot += &self.coeffs[j] * Rational::from_integer(b) * tp;
            }
        }
        ChernPolynomial { coeffs: out }
    }
}

/// `Π (1 + w_i h)` truncated at `h^n`.
pub fn chern_total_tangent(w: &Weights) -> ChernPolynomial {
    let e = elementary_symmetric_all(w);
    ChernPolynomial::new(
        w.dim(),
        e.into_iter()
            .take(w.len())
            .map(Rational::from_integer)
            .collect(),
    )
}

/// Twist of a rank-`dim` bundle by `O(t)`; see [`ChernPolynomial::twist`].
pub fn chern_twist(c: &ChernPolynomial, t: &Rational) -> ChernPolynomial {
    c.twist(c.dim(), t)
}

/// `∫ c = c_n / (w0 ⋯ wn)`.
pub fn orbifold_integral_top(w: &Weights, c: &ChernPolynomial) -> Result<Rational> {
    if c.dim() != w.dim() {
        return Err(Error::WrongDimension {
            expected: w.len(),
            got: c.dim() + 1,
        });
    }
    Ok(c.top() / Rational::from_integer(w.product()))
}

/// Orbifold Euler characteristic of a weighted projective plane:
/// `χ_top − Σ_{w_i > 1} (1 − 1/w_i)` with `χ_top = 3`.
pub fn orbifold_euler_characteristic(w: &Weights) -> Result<Rational> {
    w.require_len(3)?;
    let mut chi = Rational::from_integer((w.dim() + 1).into());
    for &wi in w.as_slice().iter().filter(|&&wi| wi > 1) {
        chi -= Rational::one() - Rational::new(1.into(), wi.into());
    }
    Ok(chi)
}

/// `O(d1) · O(d2) = d1 d2 / (w0 w1 w2)` on a weighted projective plane.
pub fn intersection_number(w: &Weights, d1: i64, d2: i64) -> Result<Rational> {
    w.require_len(3)?;
    Ok(Rational::new(
        BigInt::from(d1) * BigInt::from(d2),
        w.product(),
    ))
}

/// `tang(F, S) = K_F · S + S · S` for a curve `S` of degree `deg_s`.
pub fn tangency_number(w: &Weights, d: i64, deg_s: i64) -> Result<Rational> {
    Ok(intersection_number(w, d - 1, deg_s)? + intersection_number(w, deg_s, deg_s)?)
}

/// The class of `O(m)` on `P(w)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QLineClass {
    weights: Weights,
    degree: i64,
}

impl QLineClass {
    pub fn new(weights: Weights, degree: i64) -> Self {
        QLineClass { weights, degree }
    }

    pub fn degree(&self) -> i64 {
        self.degree
    }

    /// `K = O(−|w|)`.
    pub fn canonical(w: &Weights) -> Self {
        Self::new(w.clone(), -(w.sum() as i64))
    }

    /// `K_F = O(d − 1)`.
    pub fn foliation_canonical(w: &Weights, d: i64) -> Self {
        Self::new(w.clone(), d - 1)
    }

    /// `N_F = O(d + |w| − 1)`.
    pub fn foliation_normal(w: &Weights, d: i64) -> Self {
        Self::new(w.clone(), d + w.sum() as i64 - 1)
    }

    /// Intersection pairing on a weighted projective plane.
    pub fn dot(&self, other: &QLineClass) -> Result<Rational> {
        if self.weights != other.weights {
            return Err(Error::WeightsMismatch(format!(
                "{} vs {}",
                self.weights, other.weights
            )));
        }
        intersection_number(&self.weights, self.degree, other.degree)
    }

    pub fn dual(&self) -> Self {
        Self::new(self.weights.clone(), -self.degree)
    }
}

impl Add for &QLineClass {
    type Output = QLineClass;
    fn add(self, rhs: &QLineClass) -> QLineClass {
        assert_eq!(
            self.weights, rhs.weights,
            "line classes on different spaces"
        );
        QLineClass::new(self.weights.clone(), self.degree + rhs.degree)
    }
}
