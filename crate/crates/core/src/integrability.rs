//! Darboux integrability from invariant curves, and the degree thresholds
//! and bounds for invariant curves and separatrices.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::extactic::{certify_invariant, is_first_integral, InvariantCertificate};
use crate::foliation::VectorField;
use crate::linalg::nullspace;
use crate::poly::{Monomial, Polynomial, Rational};
use crate::weights::Weights;
use crate::wps::h0;

/// Products with total exponent above this are reported logarithmically
/// instead of being expanded.
pub const MAX_EXPANDED_EXPONENT: u64 = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum IntegralKind {
    /// `F/G = Π f_i^{λ_i}` expanded as two polynomials.
    Multiplicative,
    /// Only the multipliers are reported: `Σ λ_i log f_i` is constant on leaves.
    Logarithmic,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DarbouxCertificate {
    pub invariants: Vec<InvariantCertificate>,
    /// Primitive integer multipliers.
    pub multipliers: Vec<BigInt>,
    pub kernel_dimension: usize,
    pub kind: IntegralKind,
    /// `(F, G)` with `F/G` a first integral, for multiplicative certificates.
    pub first_integral: Option<(Polynomial, Polynomial)>,
}

impl DarbouxCertificate {
    pub fn degrees(&self) -> Vec<u64> {
        self.invariants.iter().map(|c| c.degree).collect()
    }
}

fn primitive_integer_vector(v: &[Rational]) -> Vec<BigInt> {
    let lcm = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = v
        .iter()
        .map(|x| (x * Rational::from_integer(lcm.clone())).to_integer())
        .collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    let mut out: Vec<BigInt> = ints.into_iter().map(|x| x / &g).collect();
    // Fix the sign so the first nonzero multiplier is positive.
    if out
        .iter()
        .find(|x| !x.is_zero())
        .is_some_and(|x| x.is_negative())
    {
        for x in out.iter_mut() {
            *x = -x.clone();
        }
    }
    out
}

/// Looks for rational `λ` with `Σ λ_i Λ_i = 0` and `Σ λ_i d_i = 0` over the
/// cofactors `Λ_i` of the given invariant polynomials.
pub fn darboux_search(x: &VectorField, fs: &[Polynomial]) -> Result<Option<DarbouxCertificate>> {
    if fs.is_empty() {
        return Err(Error::Precondition("no invariant polynomials given".into()));
    }
    let mut invariants = Vec::with_capacity(fs.len());
    for (i, f) in fs.iter().enumerate() {
        let cert = certify_invariant(x, f)?.ok_or_else(|| {
            Error::Precondition(format!("polynomial {} ({f}) is not invariant", i + 1))
        })?;
        invariants.push(cert);
    }

    let mut monomials: Vec<Monomial> = invariants
        .iter()
        .flat_map(|c| c.cofactor.terms().map(|(m, _)| m.clone()))
        .collect();
    monomials.sort();
    monomials.dedup();
    let cols = fs.len();
    let mut rows: Vec<Vec<Rational>> = monomials
        .iter()
        .map(|m| {
            invariants
                .iter()
                .map(|c| c.cofactor.coefficient(m))
                .collect()
        })
        .collect();
    rows.push(
        invariants
            .iter()
            .map(|c| Rational::from_integer(c.degree.into()))
            .collect(),
    );

    let kernel = nullspace(rows, cols);
    let Some(first) = kernel.first() else {
        return Ok(None);
    };
    let multipliers = primitive_integer_vector(first);
    let total: u64 = multipliers
        .iter()
        .map(|m| u64::try_from(m.abs()).unwrap_or(u64::MAX))
        .fold(0u64, |a, b| a.saturating_add(b));

    let (kind, first_integral) = if total <= MAX_EXPANDED_EXPONENT {
        let nvars = x.nvars();
        let mut num = Polynomial::one(nvars);
        let mut den = Polynomial::one(nvars);
        for (m, f) in multipliers.iter().zip(fs) {
            let e = u32::try_from(m.abs()).expect("bounded by MAX_EXPANDED_EXPONENT");
            if m.is_positive() {
                num = &num * &f.pow(e);
            } else if m.is_negative() {
                den = &den * &f.pow(e);
            }
        }
        if !is_first_integral(x, &num, &den)? {
            return Err(Error::Consistency(
                "reconstructed Darboux quotient is not a first integral".into(),
            ));
        }
        (IntegralKind::Multiplicative, Some((num, den)))
    } else {
        (IntegralKind::Logarithmic, None)
    };

    Ok(Some(DarbouxCertificate {
        invariants,
        multipliers,
        kernel_dimension: kernel.len(),
        kind,
        first_integral,
    }))
}

/// `h0(O(m)) + 2`: number of invariant curves that forces a rational first
/// integral, for an explicit section degree `m`.
pub fn jouanolou_threshold(w: &Weights, m: i64) -> Result<u64> {
    w.require_len(3)?;
    if m < 0 {
        return Err(Error::Precondition(format!("section degree {m} < 0")));
    }
    Ok(h0(w, m) + 2)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SeparatrixKind {
    NonDicritical,
    QuasiSmooth,
}

/// Upper bound on the degree of a separatrix of a degree-`d` foliation:
/// `d + |w| − 1` (non-dicritical) or `d + |w| − 2` (quasi-smooth).
pub fn poincare_bound(w: &Weights, d: u64, kind: SeparatrixKind) -> Result<i64> {
    w.require_len(3)?;
    if d < 1 {
        return Err(Error::Precondition(
            "foliation degree must be at least 1".into(),
        ));
    }
    let base = d as i64 + w.sum() as i64;
    Ok(match kind {
        SeparatrixKind::NonDicritical => base - 1,
        SeparatrixKind::QuasiSmooth => base - 2,
    })
}

/// `deg S · (d + |w| − deg S − 1) / (w0 w1 w2)`: the Milnor sum left on an
/// invariant quasi-smooth curve `S`.
pub fn separatrix_milnor_budget(w: &Weights, d: u64, deg_s: i64) -> Result<Rational> {
    w.require_len(3)?;
    if d < 1 || deg_s < 1 {
        return Err(Error::Precondition(
            "foliation and curve degrees must be at least 1".into(),
        ));
    }
    let num = BigInt::from(deg_s) * BigInt::from(d as i64 + w.sum() as i64 - deg_s - 1);
    Ok(Rational::new(num, w.product()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::foliation::{radial_field, validate_field};
    use crate::poly::{parse_polynomial, rational};

    fn w(v: &[u32]) -> Weights {
        Weights::new(v.to_vec()).unwrap()
    }

    fn p3(s: &str) -> Polynomial {
        parse_polynomial(s, 3).unwrap()
    }

    #[test]
    fn darboux_diagonal_field() {
        let x = validate_field(&w(&[1, 1, 1]), vec![p3("z0"), p3("-z1"), p3("0")]).unwrap();
        let cert = darboux_search(&x, &[p3("z0"), p3("z1"), p3("z2")])
            .unwrap()
            .unwrap();
        assert_eq!(cert.multipliers, [1, 1, -2].map(BigInt::from));
        assert_eq!(cert.kind, IntegralKind::Multiplicative);
        assert_eq!(cert.kernel_dimension, 1);
        let (f, g) = cert.first_integral.unwrap();
        assert_eq!((f, g), (p3("z0*z1"), p3("z2^2")));

        assert_eq!(darboux_search(&x, &[p3("z0")]).unwrap(), None);
        assert!(darboux_search(&x, &[p3("z0 + z2")]).is_err());
        assert!(darboux_search(&x, &[]).is_err());
    }

    #[test]
    fn darboux_radial() {
        let r = radial_field(&w(&[1, 1, 1]));
        let cert = darboux_search(&r, &[p3("z0"), p3("z1")]).unwrap().unwrap();
        assert_eq!(cert.multipliers, [1, -1].map(BigInt::from));

        let r = radial_field(&w(&[1, 2, 3]));
        let cert = darboux_search(&r, &[p3("z0"), p3("z1")]).unwrap().unwrap();
        assert_eq!(cert.multipliers, [2, -1].map(BigInt::from));
        assert_eq!(cert.first_integral.unwrap(), (p3("z0^2"), p3("z1")));
    }

    #[test]
    fn thresholds() {
        let p2 = w(&[1, 1, 1]);
        assert_eq!(jouanolou_threshold(&p2, 1).unwrap(), 5);
        assert_eq!(jouanolou_threshold(&p2, 2).unwrap(), 8);
        assert_eq!(jouanolou_threshold(&w(&[1, 1, 2]), 2).unwrap(), 6);
        assert!(jouanolou_threshold(&Weights::unweighted(3), 1).is_err());
    }

    #[test]
    fn poincare_values() {
        let ww = w(&[1, 1, 2]);
        assert_eq!(
            poincare_bound(&ww, 3, SeparatrixKind::NonDicritical).unwrap(),
            6
        );
        assert_eq!(
            poincare_bound(&ww, 3, SeparatrixKind::QuasiSmooth).unwrap(),
            5
        );
        assert_eq!(
            poincare_bound(&w(&[1, 1, 1]), 2, SeparatrixKind::NonDicritical).unwrap(),
            4
        );
    }

    #[test]
    fn budgets() {
        assert_eq!(
            separatrix_milnor_budget(&w(&[1, 1, 1]), 2, 1).unwrap(),
            rational(3, 1)
        );
        assert_eq!(
            separatrix_milnor_budget(&w(&[1, 1, 2]), 2, 2).unwrap(),
            rational(3, 1)
        );
        let ww = w(&[2, 3, 5]);
        let edge = 4 + ww.sum() as i64 - 1;
        assert!(separatrix_milnor_budget(&ww, 4, edge).unwrap().is_zero());
    }
}
