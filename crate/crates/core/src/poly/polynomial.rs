use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::{Monomial, Rational};
use crate::error::{Error, Result};
use crate::weights::Weights;

/// Weighted degree of a nonzero polynomial.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum WeightedDegree {
    Value(u64),
    NotQuasiHomogeneous,
}

impl WeightedDegree {
    pub fn value(self) -> Option<u64> {
        match self {
            WeightedDegree::Value(v) => Some(v),
            WeightedDegree::NotQuasiHomogeneous => None,
        }
    }
}

/// Sparse polynomial in `nvars` variables `z0, ..., z{nvars-1}`.
///
/// No stored coefficient is ever zero, so structural equality is
/// mathematical equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    nvars: usize,
    terms: BTreeMap<Monomial, Rational>,
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        Polynomial {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Rational::one())
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        Self::term(Monomial::one(nvars), c)
    }

    /// The variable `z_i`.
    pub fn var(nvars: usize, i: usize) -> Self {
        assert!(
            i < nvars,
            "variable z{i} out of range for {nvars} variables"
        );
        Self::term(Monomial::var(nvars, i), Rational::one())
    }

    /// A single term `c * m`.
    pub fn term(m: Monomial, c: Rational) -> Self {
        let nvars = m.nvars();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Polynomial { nvars, terms }
    }

    /// Builds a polynomial from `(monomial, coefficient)` pairs, summing repeats.
    pub fn from_terms<I>(nvars: usize, iter: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Monomial, Rational)>,
    {
        let mut p = Polynomial::zero(nvars);
        for (m, c) in iter {
            if m.nvars() != nvars {
                return Err(Error::VarCountMismatch {
                    left: nvars,
                    right: m.nvars(),
                });
            }
            p.add_term(m, c);
        }
        Ok(p)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// True for the zero polynomial and for nonzero constants.
    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in descending lexicographic order of exponent vectors.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter().rev()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// Largest term in lex order.
    pub fn leading_term(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    /// The coefficient when the polynomial is constant.
    pub fn as_constant(&self) -> Option<Rational> {
        if self.is_zero() {
            Some(Rational::zero())
        } else if self.is_constant() {
            self.terms.values().next().cloned()
        } else {
            None
        }
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn check_nvars(&self, other: &Polynomial) -> Result<()> {
        if self.nvars != other.nvars {
            return Err(Error::VarCountMismatch {
                left: self.nvars,
                right: other.nvars,
            });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_nvars(other)?;
        let (mut acc, small) = if self.len() >= other.len() {
            (self.clone(), other)
        } else {
            (other.clone(), self)
        };
        for (m, c) in &small.terms {
            acc.add_term(m.clone(), c.clone());
        }
        Ok(acc)
    }

    pub fn try_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_nvars(other)?;
        let mut acc = self.clone();
        for (m, c) in &other.terms {
            acc.add_term(m.clone(), -c.clone());
        }
        Ok(acc)
    }

    pub fn try_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_nvars(other)?;
        let mut acc = Polynomial::zero(self.nvars);
        if self.is_zero() || other.is_zero() {
            return Ok(acc);
        }
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                acc.add_term(ma.mul(mb), ca * cb);
            }
        }
        Ok(acc)
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.nvars);
        }
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    /// Multiplies every term by the monomial `m`.
    pub fn mul_monomial(&self, m: &Monomial) -> Polynomial {
        Polynomial {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(k, v)| (k.mul(m), v.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut result = Polynomial::one(self.nvars);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    pub fn total_degree(&self) -> Option<u64> {
        self.terms.keys().map(Monomial::total_degree).max()
    }

    /// The common weighted degree of all terms, if there is one.
    pub fn weighted_degree(&self, w: &Weights) -> Result<WeightedDegree> {
        if w.len() != self.nvars {
            return Err(Error::VarCountMismatch {
                left: self.nvars,
                right: w.len(),
            });
        }
        let mut degrees = self.terms.keys().map(|m| m.weighted_degree(w));
        let first = degrees
            .next()
            .ok_or(Error::ZeroPolynomial("weighted degree"))?;
        if degrees.all(|d| d == first) {
            Ok(WeightedDegree::Value(first))
        } else {
            Ok(WeightedDegree::NotQuasiHomogeneous)
        }
    }

    /// Weighted degree of a nonzero quasi-homogeneous polynomial, `None` otherwise.
    pub fn quasi_degree(&self, w: &Weights) -> Option<u64> {
        self.weighted_degree(w).ok().and_then(WeightedDegree::value)
    }

    pub fn partial_derivative(&self, i: usize) -> Result<Polynomial> {
        if i >= self.nvars {
            return Err(Error::VariableOutOfRange {
                index: i,
                nvars: self.nvars,
            });
        }
        let mut out = Polynomial::zero(self.nvars);
        for (m, c) in &self.terms {
            let e = m.exponent(i);
            if e > 0 {
                out.terms.insert(
                    m.with_exponent(i, e - 1),
                    c * Rational::from_integer(e.into()),
                );
            }
        }
        Ok(out)
    }

    /// Quotient `q` with `self = q * divisor`, or `None` when the division is not exact.
    pub fn exact_divide(&self, divisor: &Polynomial) -> Result<Option<Polynomial>> {
        self.check_nvars(divisor)?;
        let (lead_m, lead_c) = divisor.leading_term().ok_or(Error::DivisionByZero)?;
        let mut rem = self.clone();
        let mut quot = Polynomial::zero(self.nvars);
        while let Some((rm, rc)) = rem.leading_term() {
            let Some(qm) = rm.div(lead_m) else {
                return Ok(None);
            };
            let qc = rc / lead_c;
            for (dm, dc) in &divisor.terms {
                rem.add_term(dm.mul(&qm), -(dc * &qc));
            }
            quot.terms.insert(qm, qc);
        }
        Ok(Some(quot))
    }

    pub fn degree_in(&self, i: usize) -> u32 {
        self.terms.keys().map(|m| m.exponent(i)).max().unwrap_or(0)
    }

    /// Coefficients `c_0, ..., c_deg` of `self` as a polynomial in `z_i`,
    /// each still in `nvars` variables but free of `z_i`.
    pub fn coefficients_in(&self, i: usize) -> Result<Vec<Polynomial>> {
        if i >= self.nvars {
            return Err(Error::VariableOutOfRange {
                index: i,
                nvars: self.nvars,
            });
        }
        let deg = self.degree_in(i) as usize;
        let mut out = vec![Polynomial::zero(self.nvars); deg + 1];
        for (m, c) in &self.terms {
            let e = m.exponent(i) as usize;
            out[e].terms.insert(m.with_exponent(i, 0), c.clone());
        }
        Ok(out)
    }

    /// Sets `z_i = 1` and removes that variable, renumbering the rest.
    pub fn dehomogenize(&self, i: usize) -> Result<Polynomial> {
        if i >= self.nvars {
            return Err(Error::VariableOutOfRange {
                index: i,
                nvars: self.nvars,
            });
        }
        let mut out = Polynomial::zero(self.nvars - 1);
        for (m, c) in &self.terms {
            out.add_term(m.without(i), c.clone());
        }
        Ok(out)
    }

    /// Evaluates at a point with rational coordinates.
    pub fn evaluate(&self, point: &[Rational]) -> Result<Rational> {
        if point.len() != self.nvars {
            return Err(Error::VarCountMismatch {
                left: self.nvars,
                right: point.len(),
            });
        }
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(m.exponents()) {
                if e > 0 {
                    t *= num_traits::pow(x.clone(), e as usize);
                }
            }
            acc += t;
        }
        Ok(acc)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&super::text::print_polynomial(self))
    }
}

// Operator forms panic on a variable-count mismatch; use the `try_*`
// methods where the inputs are not known to agree.
impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.try_add(rhs).expect("polynomial add")
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.try_sub(rhs).expect("polynomial sub")
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.try_mul(rhs).expect("polynomial mul")
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{parse_polynomial, rational};

    fn p3(s: &str) -> Polynomial {
        parse_polynomial(s, 3).unwrap()
    }

    #[test]
    fn add_examples() {
        assert_eq!(&p3("z0 + z1") + &p3("-z1"), p3("z0"));
        assert_eq!(&Polynomial::zero(3) + &p3("z0*z2"), p3("z0*z2"));
        assert_eq!(&p3("z0^2 + z1") + &p3("z0^2 - z1"), p3("2*z0^2"));
        assert!((&p3("z0") + &p3("-z0")).is_zero());
    }

    #[test]
    fn mul_examples() {
        assert_eq!(&p3("z0") * &p3("z1"), p3("z0*z1"));
        assert_eq!(&p3("z0 + z1") * &p3("z0 - z1"), p3("z0^2 - z1^2"));
        assert!((&p3("z0 + 3") * &Polynomial::zero(3)).is_zero());
    }

    #[test]
    fn mismatch_is_an_error() {
        let a = Polynomial::var(2, 0);
        let b = Polynomial::var(3, 0);
        assert!(matches!(
            a.try_add(&b),
            Err(Error::VarCountMismatch { left: 2, right: 3 })
        ));
        assert!(a.try_mul(&b).is_err());
        assert!(a.exact_divide(&b).is_err());
    }

    #[test]
    fn weighted_degree_examples() {
        let w = Weights::new(vec![1, 1, 2]).unwrap();
        assert_eq!(
            p3("z0*z1").weighted_degree(&w).unwrap(),
            WeightedDegree::Value(2)
        );
        assert_eq!(
            p3("z2").weighted_degree(&w).unwrap(),
            WeightedDegree::Value(2)
        );
        assert_eq!(
            p3("z0 + z2").weighted_degree(&w).unwrap(),
            WeightedDegree::NotQuasiHomogeneous
        );
        assert_eq!(
            Polynomial::zero(3).weighted_degree(&w),
            Err(Error::ZeroPolynomial("weighted degree"))
        );
    }

    #[test]
    fn exact_divide_examples() {
        assert_eq!(
            p3("z0^2 - z1^2").exact_divide(&p3("z0 + z1")).unwrap(),
            Some(p3("z0 - z1"))
        );
        assert_eq!(
            p3("z0^2 + z1^2 + z2^2")
                .exact_divide(&p3("z0 + z1 + z2"))
                .unwrap(),
            None
        );
        assert_eq!(
            Polynomial::zero(3).exact_divide(&p3("z0 + 1")).unwrap(),
            Some(Polynomial::zero(3))
        );
        assert_eq!(
            p3("z0").exact_divide(&Polynomial::zero(3)),
            Err(Error::DivisionByZero)
        );
        // Rational quotient.
        assert_eq!(
            p3("z0 + z1").exact_divide(&p3("2*z0 + 2*z1")).unwrap(),
            Some(Polynomial::constant(3, rational(1, 2)))
        );
    }

    #[test]
    fn partial_derivative_examples() {
        assert_eq!(p3("z0^2*z1").partial_derivative(0).unwrap(), p3("2*z0*z1"));
        assert!(p3("z1").partial_derivative(0).unwrap().is_zero());
        assert_eq!(
            p3("z0*z2^3").partial_derivative(2).unwrap(),
            p3("3*z0*z2^2")
        );
        assert_eq!(
            p3("z0").partial_derivative(3),
            Err(Error::VariableOutOfRange { index: 3, nvars: 3 })
        );
    }

    #[test]
    fn coefficients_and_dehomogenize() {
        let f = p3("z0^2*z1 - z1 + z2");
        let c = f.coefficients_in(0).unwrap();
        assert_eq!(c.len(), 3);
        assert_eq!(c[0], p3("z2 - z1"));
        assert!(c[1].is_zero());
        assert_eq!(c[2], p3("z1"));
        let g = f.dehomogenize(2).unwrap();
        assert_eq!(g, parse_polynomial("z0^2*z1 - z1 + 1", 2).unwrap());
    }

    #[test]
    fn pow_and_evaluate() {
        let f = p3("z0 + z1");
        assert_eq!(f.pow(2), p3("z0^2 + 2*z0*z1 + z1^2"));
        assert_eq!(f.pow(0), Polynomial::one(3));
        let v = f
            .pow(3)
            .evaluate(&[rational(1, 2), rational(1, 2), rational(7, 1)])
            .unwrap();
        assert_eq!(v, rational(1, 1));
    }
}
