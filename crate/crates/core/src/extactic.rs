//! Extactic polynomials `det [X^j(v_r)]` over a linear system, and the
//! invariance and first-integral tests built on them.

use num_integer::binomial;

use crate::error::{Error, Result};
use crate::foliation::{apply_field, VectorField};
use crate::poly::{bareiss_determinant, Matrix, Polynomial};
use crate::weights::Weights;
use crate::wps::{h0, monomial_basis, LinearSystem};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtacticReport {
    pub system: LinearSystem,
    pub field_degree: u64,
    pub extactic: Polynomial,
    /// `C(η, 2)(d − 1) + η k`.
    pub predicted_degree: u64,
    pub is_zero: bool,
}

impl ExtacticReport {
    pub fn dimension(&self) -> usize {
        self.system.dimension()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvariantCertificate {
    pub f: Polynomial,
    /// `X(f) = cofactor · f`.
    pub cofactor: Polynomial,
    /// Weighted degree of `f`.
    pub degree: u64,
    /// Largest `m` with `f^m | E`, once measured against an extactic.
    pub multiplicity: Option<u32>,
}

/// Degree of a nonzero extactic of `η` sections of degree `k` for a field of degree `d`.
pub fn predicted_extactic_degree(eta: usize, d: u64, k: u64) -> u64 {
    let pairs = binomial(eta as u64, 2);
    pairs * (d - 1) + eta as u64 * k
}

fn check_weights(x: &VectorField, w: &Weights) -> Result<()> {
    if x.weights() != w {
        return Err(Error::WeightsMismatch(format!("{} vs {}", x.weights(), w)));
    }
    Ok(())
}

/// Matrix with entry `(j, r) = X^j(v_r)`.
pub fn extactic_matrix(x: &VectorField, v: &LinearSystem) -> Result<Matrix> {
    check_weights(x, v.weights())?;
    let eta = v.dimension();
    if eta == 0 {
        return Err(Error::DegenerateSystem("linear system is empty".into()));
    }
    let nvars = x.nvars();
    let mut rows: Matrix = vec![Vec::with_capacity(eta); eta];
    for base in v.basis_polynomials() {
        let mut cur = base;
        for (j, row) in rows.iter_mut().enumerate() {
            let next = if j + 1 < eta && !cur.is_zero() {
                apply_field(x, &cur)?
            } else {
                Polynomial::zero(nvars)
            };
            row.push(std::mem::replace(&mut cur, next));
        }
    }
    Ok(rows)
}

/// The extactic of `X` with respect to an arbitrary linear system.
pub fn extactic_for_system(x: &VectorField, v: LinearSystem) -> Result<ExtacticReport> {
    let m = extactic_matrix(x, &v)?;
    let extactic = bareiss_determinant(&m)?;
    let predicted_degree = predicted_extactic_degree(v.dimension(), x.degree(), v.degree());
    if !extactic.is_zero() {
        match extactic.quasi_degree(x.weights()) {
            Some(deg) if deg == predicted_degree => {}
            other => {
                return Err(Error::Consistency(format!(
                    "extactic has weighted degree {other:?}, expected {predicted_degree}"
                )))
            }
        }
    }
    Ok(ExtacticReport {
        system: v,
        field_degree: x.degree(),
        is_zero: extactic.is_zero(),
        extactic,
        predicted_degree,
    })
}

/// The extactic with respect to all sections of `O(k)`.
pub fn extactic_polynomial(x: &VectorField, k: u64) -> Result<ExtacticReport> {
    if k < 1 {
        return Err(Error::Precondition(
            "section degree must be at least 1".into(),
        ));
    }
    extactic_for_system(x, monomial_basis(x.weights(), k))
}

/// Whether the extactic of degree-`k` sections vanishes identically.
pub fn detect_first_integral(x: &VectorField, k: u64) -> Result<bool> {
    let eta = h0(x.weights(), k as i64);
    if eta < 2 {
        return Err(Error::DegenerateSystem(format!(
            "h0(O({k})) = {eta}; at least 2 sections are needed"
        )));
    }
    Ok(extactic_polynomial(x, k)?.is_zero)
}

/// `X(F)·G − F·X(G) = 0`.
pub fn is_first_integral(x: &VectorField, f: &Polynomial, g: &Polynomial) -> Result<bool> {
    if g.is_zero() {
        return Err(Error::ZeroPolynomial("first-integral denominator"));
    }
    let w = x.weights();
    let dg = g
        .quasi_degree(w)
        .ok_or_else(|| Error::NotQuasiHomogeneous("denominator".into()))?;
    if !f.is_zero() {
        let df = f
            .quasi_degree(w)
            .ok_or_else(|| Error::NotQuasiHomogeneous("numerator".into()))?;
        if df != dg {
            return Err(Error::Precondition(format!(
                "numerator has degree {df}, denominator {dg}"
            )));
        }
    }
    let num = &(&apply_field(x, f)? * g) - &(f * &apply_field(x, g)?);
    Ok(num.is_zero())
}

/// Certificate that `{f = 0}` is invariant: `X(f) = Λ f` with `wdeg Λ = d − 1`.
pub fn certify_invariant(x: &VectorField, f: &Polynomial) -> Result<Option<InvariantCertificate>> {
    if f.is_constant() {
        return Err(Error::Precondition(
            "invariant candidate must be nonconstant".into(),
        ));
    }
    let degree = f
        .quasi_degree(x.weights())
        .ok_or_else(|| Error::NotQuasiHomogeneous("invariant candidate".into()))?;
    let xf = apply_field(x, f)?;
    let Some(cofactor) = xf.exact_divide(f)? else {
        return Ok(None);
    };
    if !cofactor.is_zero() && cofactor.quasi_degree(x.weights()) != Some(x.degree() - 1) {
        return Err(Error::Consistency(format!(
            "cofactor {cofactor} is not of weighted degree {}",
            x.degree() - 1
        )));
    }
    Ok(Some(InvariantCertificate {
        f: f.clone(),
        cofactor,
        degree,
        multiplicity: None,
    }))
}

/// Largest `m` with `f^m` dividing a nonzero extactic.
pub fn extactic_multiplicity(report: &ExtacticReport, f: &Polynomial) -> Result<u32> {
    if report.is_zero {
        return Err(Error::Precondition(
            "multiplicity is undefined for a vanishing extactic".into(),
        ));
    }
    multiplicity_in(&report.extactic, f)
}

pub(crate) fn multiplicity_in(e: &Polynomial, f: &Polynomial) -> Result<u32> {
    if f.is_constant() {
        return Err(Error::Precondition("multiplicity of a constant".into()));
    }
    let mut m = 0;
    let mut cur = e.clone();
    while let Some(q) = cur.exact_divide(f)? {
        m += 1;
        cur = q;
    }
    Ok(m)
}

/// Certifies `f` and, when `f` lies in the report's system and the
/// extactic is nonzero, records its multiplicity there.
pub fn certify_with_extactic(
    x: &VectorField,
    f: &Polynomial,
    report: &ExtacticReport,
) -> Result<Option<InvariantCertificate>> {
    let Some(mut cert) = certify_invariant(x, f)? else {
        return Ok(None);
    };
    if !report.is_zero {
        cert.multiplicity = Some(extactic_multiplicity(report, f)?);
    }
    Ok(Some(cert))
}

/// `h0 + C(h0, 2)`: strict upper bound on the number of invariant
/// hypersurfaces of degree `k` when the foliation has no rational first
/// integral and `k > d − 1`.
pub fn theorem2_bound(w: &Weights, k: u64) -> u64 {
    let eta = h0(w, k as i64);
    eta + binomial(eta, 2)
}

pub fn theorem2_applicable(k: u64, d: u64) -> bool {
    k + 1 > d
}

/// Whether `count` distinct invariant hypersurfaces of degree `k` fit in a
/// nonzero extactic, i.e. `k · count ≤ deg E`.
pub fn invariant_count_consistent(w: &Weights, d: u64, k: u64, count: u64) -> bool {
    let eta = h0(w, k as i64) as usize;
    k * count <= predicted_extactic_degree(eta, d, k)
}
