//! Weighted Milnor-number sums of foliations: the closed Chern-class
//! formulas, the surface formula in terms of `K_F`, `K_X` and the orbifold
//! Euler characteristic, and a resultant-based brute-force oracle on the
//! projective plane.

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::foliation::{dehomogenize_chart, VectorField};
use crate::poly::{format_rational, sylvester_resultant, Polynomial, Rational};
use crate::weights::Weights;
use crate::wps::{
    chern_total_tangent, chern_twist, elementary_symmetric, orbifold_euler_characteristic,
    orbifold_integral_top, ChernPolynomial, QLineClass,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "SCREAMING_SNAKE_CASE")]
pub enum CountScope {
    Ambient,
    OnHypersurface { degree: i64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum CountMethod {
    Chern,
    Brunella,
    Oracle,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountReport {
    pub weights: Weights,
    pub degree: u64,
    pub scope: CountScope,
    /// `(w0 ⋯ wn) · Σ μ^orb`.
    pub total_weighted: BigInt,
    /// `Σ μ^orb`.
    pub total: Rational,
    pub method: CountMethod,
    pub notes: Vec<String>,
}

impl CountReport {
    fn new(
        weights: &Weights,
        degree: u64,
        scope: CountScope,
        total: Rational,
        method: CountMethod,
    ) -> Result<CountReport> {
        let weighted = &total * Rational::from_integer(weights.product());
        if !weighted.is_integer() {
            return Err(Error::Consistency(format!(
                "weighted count {} is not an integer",
                format_rational(&weighted)
            )));
        }
        let mut notes = Vec::new();
        if total.is_negative() {
            notes.push(
                "negative total: no quasi-smooth invariant hypersurface of this degree exists"
                    .to_string(),
            );
        }
        Ok(CountReport {
            weights: weights.clone(),
            degree,
            scope,
            total_weighted: weighted.to_integer(),
            total,
            method,
            notes,
        })
    }
}

fn check_degree(d: u64) -> Result<()> {
    if d < 1 {
        return Err(Error::Precondition(
            "foliation degree must be at least 1".into(),
        ));
    }
    Ok(())
}

fn d_minus_one(d: u64) -> Rational {
    Rational::from_integer(BigInt::from(d) - 1)
}

/// `Σ μ^orb = ∫ c_n(T P(w) ⊗ O(d − 1))`.
pub fn count_ambient(w: &Weights, d: u64) -> Result<CountReport> {
    check_degree(d)?;
    let c = chern_twist(&chern_total_tangent(w), &d_minus_one(d));
    let total = orbifold_integral_top(w, &c)?;
    CountReport::new(w, d, CountScope::Ambient, total, CountMethod::Chern)
}

fn sigma(w: &Weights, j: usize) -> BigInt {
    elementary_symmetric(w, j).expect("index within range")
}

/// Weighted count on `V` by the explicit double sum
/// `Σ_i [Σ_k (−1)^k σ_{i−k} deg(V)^{k+1}] (d − 1)^{n−1−i}`.
fn hypersurface_double_sum(w: &Weights, d: u64, deg_v: i64) -> BigInt {
    let n = w.dim();
    let dm1 = BigInt::from(d) - BigInt::from(1);
    let v = BigInt::from(deg_v);
    let mut total = BigInt::zero();
    for i in 0..n {
        let mut inner = BigInt::zero();
        for k in 0..=i {
            let term = sigma(w, i - k) * num_traits::pow(v.clone(), k + 1);
            if k % 2 == 0 {
                inner += term;
            } else {
                inner -= term;
            }
        }
        total += inner * num_traits::pow(dm1.clone(), n - 1 - i);
    }
    total
}

/// Total Chern class of `T V` for a quasi-smooth hypersurface of degree
/// `deg_v`, in `Q[h]/(h^n)` on `V`: `c_i = σ_i − deg_v · c_{i−1}`.
pub fn hypersurface_tangent_class(w: &Weights, deg_v: i64) -> ChernPolynomial {
    let n = w.dim();
    let v = Rational::from_integer(deg_v.into());
    let mut c: Vec<Rational> = Vec::with_capacity(n);
    for i in 0..n {
        let s = Rational::from_integer(sigma(w, i));
        let prev = if i == 0 {
            Rational::zero()
        } else {
            &c[i - 1] * &v
        };
        c.push(s - prev);
    }
    ChernPolynomial::new(n - 1, c)
}

/// `Σ_{p ∈ V} μ^orb` for an invariant quasi-smooth hypersurface `V`.
///
/// Computed twice, by the closed double sum and by twisting the tangent
/// class of `V` and integrating with `∫_V h^{n−1} = deg V / Π w`; the two
/// must agree.
pub fn count_on_hypersurface(w: &Weights, d: u64, deg_v: i64) -> Result<CountReport> {
    check_degree(d)?;
    if deg_v < 1 {
        return Err(Error::Precondition(
            "hypersurface degree must be at least 1".into(),
        ));
    }
    let direct = Rational::new(hypersurface_double_sum(w, d, deg_v), w.product());

    let tv = hypersurface_tangent_class(w, deg_v);
    let twisted = tv.twist(w.dim() - 1, &d_minus_one(d));
    let via_chern = twisted.top() * Rational::new(BigInt::from(deg_v), w.product());

    if direct != via_chern {
        return Err(Error::Consistency(format!(
            "hypersurface count: double sum {} vs Chern recursion {}",
            format_rational(&direct),
            format_rational(&via_chern)
        )));
    }
    CountReport::new(
        w,
        d,
        CountScope::OnHypersurface { degree: deg_v },
        direct,
        CountMethod::Chern,
    )
}

pub const BRUNELLA_SIGN_NOTE: &str = "uses K_F·K_F − K_F·K_X + χ_orb, the expansion of \
c2(TX ⊗ K_F); the variant with +K_F·K_X does not match the Chern count";

/// `K_F² − K_F·K_X + χ_orb(X)` on a weighted projective plane.
pub fn count_ambient_brunella(w: &Weights, d: u64) -> Result<CountReport> {
    w.require_len(3)?;
    check_degree(d)?;
    let kf = QLineClass::foliation_canonical(w, d as i64);
    let kx = QLineClass::canonical(w);
    let total = kf.dot(&kf)? - kf.dot(&kx)? + orbifold_euler_characteristic(w)?;
    let mut report = CountReport::new(w, d, CountScope::Ambient, total, CountMethod::Brunella)?;
    report.notes.push(BRUNELLA_SIGN_NOTE.to_string());
    Ok(report)
}

/// The literal expansion `Σ_i Σ_k (−1)^{i−k} σ_{n−i} d^k` (weighted), kept
/// only to report its disagreement with [`count_ambient`].
pub fn theorem1_literal_weighted(w: &Weights, d: u64) -> BigInt {
    let n = w.dim();
    let dd = BigInt::from(d);
    let mut total = BigInt::zero();
    for i in 0..=n {
        for k in 0..=i {
            let term = sigma(w, n - i) * num_traits::pow(dd.clone(), k);
            if (i - k) % 2 == 0 {
                total += term;
            } else {
                total -= term;
            }
        }
    }
    total
}

/// `K_F² + K_F·K_X + χ_orb`, the sign variant of [`count_ambient_brunella`].
pub fn brunella_literal(w: &Weights, d: u64) -> Result<Rational> {
    w.require_len(3)?;
    let kf = QLineClass::foliation_canonical(w, d as i64);
    let kx = QLineClass::canonical(w);
    Ok(kf.dot(&kf)? + kf.dot(&kx)? + orbifold_euler_characteristic(w)?)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Diagnostic {
    pub formula: &'static str,
    /// Value of the printed variant, as `Σ μ^orb`.
    pub literal: String,
    /// Value used by the library.
    pub corrected: String,
    pub diverges: bool,
    pub note: &'static str,
}

/// Compares the printed variants of the ambient formulas with the values
/// the library computes.
pub fn errata_diagnostics(w: &Weights, d: u64) -> Result<Vec<Diagnostic>> {
    let ambient = count_ambient(w, d)?;
    let lit = Rational::new(theorem1_literal_weighted(w, d), w.product());
    let mut out = vec![Diagnostic {
        formula: "ambient-expansion",
        literal: format_rational(&lit),
        corrected: format_rational(&ambient.total),
        diverges: lit != ambient.total,
        note: "the expansion without binomial coefficients differs from ∫ c_n(TP ⊗ O(d−1)) = \
               Σ σ_i (d−1)^{n−i} / Π w; e.g. (d+1)^2 instead of d^2+d+1 on P^2",
    }];
    if w.len() == 3 {
        let lit = brunella_literal(w, d)?;
        out.push(Diagnostic {
            formula: "surface-milnor-sum",
            literal: format_rational(&lit),
            corrected: format_rational(&ambient.total),
            diverges: lit != ambient.total,
            note: "the K_F·K_X term enters with a minus sign in c2(TX ⊗ K_F)",
        });
    }
    Ok(out)
}

/// Outcome of a brute-force count.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "SCREAMING_SNAKE_CASE")]
pub enum OracleOutcome {
    Count { value: u64 },
    Inconclusive { reason: String },
}

fn inconclusive<T: Into<String>>(reason: T) -> OracleOutcome {
    OracleOutcome::Inconclusive {
        reason: reason.into(),
    }
}

/// Dense univariate coefficients (lowest first) of a polynomial in one live variable.
fn univariate(p: &Polynomial, var: usize) -> Vec<Rational> {
    let deg = p.degree_in(var) as usize;
    let mut out = vec![Rational::zero(); deg + 1];
    for (m, c) in p.terms() {
        out[m.exponent(var) as usize] += c;
    }
    out
}

fn trim(mut v: Vec<Rational>) -> Vec<Rational> {
    while v.len() > 1 && v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
    v
}

fn univariate_rem(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut r = a.to_vec();
    let lb = b.last().expect("nonempty divisor");
    while r.len() >= b.len() && !(r.len() == 1 && r[0].is_zero()) {
        let shift = r.len() - b.len();
        let q = r.last().expect("nonempty") / lb;
        for (i, bi) in b.iter().enumerate() {
            r[shift + i] -= &q * bi;
        }
        r.pop();
        r = trim(r);
        if r.len() < b.len() {
            break;
        }
    }
    trim(r)
}

/// Degree of `gcd(a, b)` for univariate rational polynomials.
fn univariate_gcd_degree(a: Vec<Rational>, b: Vec<Rational>) -> usize {
    let is_zero = |v: &[Rational]| v.iter().all(Zero::is_zero);
    let (mut a, mut b) = (trim(a), trim(b));
    if is_zero(&a) {
        return b.len() - 1;
    }
    while !is_zero(&b) {
        let r = univariate_rem(&a, &b);
        a = b;
        b = r;
    }
    a.len() - 1
}

/// Total intersection multiplicity of `{P = Q = 0}` in the affine plane
/// (`x = z0`, `y = z1`), as the degree in `y` of `Res_x(P, Q)`.
///
/// Refuses when the resultant vanishes identically or when the leading
/// coefficients in `x` share a root, since the resultant degree then no
/// longer counts affine intersections.
pub fn oracle_affine_milnor_sum(p: &Polynomial, q: &Polynomial) -> Result<OracleOutcome> {
    if p.nvars() != 2 || q.nvars() != 2 {
        return Err(Error::WrongDimension {
            expected: 2,
            got: p.nvars().max(q.nvars()),
        });
    }
    if p.is_zero() || q.is_zero() {
        return Ok(inconclusive("a component is identically zero"));
    }
    let (m, n) = (p.degree_in(0), q.degree_in(0));
    let res = match (m, n) {
        (0, 0) => return Ok(inconclusive("both components are free of x")),
        // Res_x(P, Q) = Q^deg_x(P) when Q is free of x, and symmetrically.
        (_, 0) => q.pow(m),
        (0, _) => p.pow(n),
        _ => {
            let pc = p.coefficients_in(0)?;
            let qc = q.coefficients_in(0)?;
            let lp = univariate(pc.last().expect("degree > 0"), 1);
            let lq = univariate(qc.last().expect("degree > 0"), 1);
            if univariate_gcd_degree(lp, lq) > 0 {
                return Ok(inconclusive("leading coefficients in x have a common root"));
            }
            sylvester_resultant(p, q, 0)?
        }
    };
    if res.is_zero() {
        return Ok(inconclusive("resultant vanishes: common curve component"));
    }
    Ok(OracleOutcome::Count {
        value: res.degree_in(1) as u64,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "SCREAMING_SNAKE_CASE")]
pub enum TheoremCheck {
    /// `agrees` is false only if the chart count exceeds the prediction.
    Conclusive {
        agrees: bool,
        oracle: u64,
        predicted: u64,
    },
    Inconclusive {
        reason: String,
    },
}

/// Compares the Chern count on the projective plane with the resultant
/// count in the affine chart `z2 = 1`. A chart count below the prediction
/// means singularities may sit on the line at infinity, so the check is
/// inconclusive rather than false.
pub fn oracle_check_theorem1_p2(x: &VectorField) -> Result<TheoremCheck> {
    if !x.weights().is_unweighted() || x.weights().len() != 3 {
        return Err(Error::Precondition(
            "oracle check requires weights (1,1,1)".into(),
        ));
    }
    let predicted = count_ambient(x.weights(), x.degree())?
        .total
        .to_integer()
        .to_u64()
        .expect("small count");
    let (p, q) = dehomogenize_chart(x, 2)?;
    if p.is_zero() && q.is_zero() {
        return Ok(TheoremCheck::Inconclusive {
            reason: "chart field is identically zero".into(),
        });
    }
    match oracle_affine_milnor_sum(&p, &q)? {
        OracleOutcome::Inconclusive { reason } => Ok(TheoremCheck::Inconclusive { reason }),
        OracleOutcome::Count { value } if value < predicted => Ok(TheoremCheck::Inconclusive {
            reason: format!(
                "chart count {value} below prediction {predicted}: singularities at infinity"
            ),
        }),
        OracleOutcome::Count { value } => Ok(TheoremCheck::Conclusive {
            agrees: value == predicted,
            oracle: value,
            predicted,
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::foliation::{jouanolou_field, radial_field, validate_field};
    use crate::poly::{parse_polynomial, rational, rational_int};

    fn w(v: &[u32]) -> Weights {
        Weights::new(v.to_vec()).unwrap()
    }

    #[test]
    fn ambient_examples() {
        let r = count_ambient(&w(&[1, 1, 1]), 2).unwrap();
        assert_eq!(r.total, rational_int(7));
        assert_eq!(r.total_weighted, BigInt::from(7));
        let r = count_ambient(&w(&[1, 1, 2]), 2).unwrap();
        assert_eq!(
            (r.total.clone(), r.total_weighted.clone()),
            (rational_int(5), BigInt::from(10))
        );
        let r = count_ambient(&w(&[1, 2, 3]), 2).unwrap();
        assert_eq!(
            (r.total.clone(), r.total_weighted.clone()),
            (rational_int(3), BigInt::from(18))
        );
        assert!(count_ambient(&w(&[1, 1, 1]), 0).is_err());
    }

    #[test]
    fn hypersurface_examples() {
        let p3 = Weights::unweighted(3);
        for d in 1..6u64 {
            let r = count_on_hypersurface(&p3, d, 1).unwrap();
            assert_eq!(r.total, rational_int((d * d + d + 1) as i64));
            let r = count_on_hypersurface(&Weights::unweighted(2), d, 2).unwrap();
            assert_eq!(r.total, rational_int(2 * d as i64));
        }
        let r = count_on_hypersurface(&w(&[1, 1, 2]), 2, 2).unwrap();
        assert_eq!(r.total_weighted, BigInt::from(6));
        assert_eq!(r.total, rational_int(3));
        assert!(count_on_hypersurface(&p3, 1, 0).is_err());
    }

    #[test]
    fn brunella_examples() {
        assert_eq!(
            count_ambient_brunella(&w(&[1, 1, 2]), 2).unwrap().total,
            rational_int(5)
        );
        assert_eq!(
            count_ambient_brunella(&w(&[1, 2, 3]), 2).unwrap().total,
            rational_int(3)
        );
        assert_eq!(
            count_ambient_brunella(&w(&[1, 1, 1]), 1).unwrap().total,
            rational_int(3)
        );
        assert!(count_ambient_brunella(&Weights::unweighted(3), 2).is_err());
    }

    #[test]
    fn printed_variants_diverge() {
        let ww = w(&[1, 1, 2]);
        assert_eq!(brunella_literal(&ww, 2).unwrap(), rational_int(1));
        // (d+1)^2 on the unweighted plane
        for d in 1..5u64 {
            assert_eq!(
                theorem1_literal_weighted(&Weights::unweighted(2), d),
                BigInt::from((d + 1) * (d + 1))
            );
        }
        let diags = errata_diagnostics(&ww, 2).unwrap();
        assert_eq!(diags.len(), 2);
        assert!(diags.iter().all(|x| x.diverges));
        assert_eq!(diags[0].literal, "6");
        assert_eq!(diags[1].literal, "1");
        assert_eq!(diags[1].corrected, "5");
        // d = 1 on P^2: K_F = 0, so both variants coincide there.
        let d1 = errata_diagnostics(&Weights::unweighted(2), 1).unwrap();
        assert!(!d1[1].diverges);
        assert_eq!(
            brunella_literal(&w(&[1, 2, 3]), 1).unwrap(),
            count_ambient(&w(&[1, 2, 3]), 1).unwrap().total
        );
        assert_eq!(brunella_literal(&w(&[1, 2, 3]), 3).unwrap(), rational(1, 2));
    }

    #[test]
    fn oracle_examples() {
        let p2 = |s: &str| parse_polynomial(s, 2).unwrap();
        assert_eq!(
            oracle_affine_milnor_sum(&p2("z1^2 - z0^3"), &p2("z0^2*z1 - 1")).unwrap(),
            OracleOutcome::Count { value: 7 }
        );
        assert_eq!(
            oracle_affine_milnor_sum(&p2("z0^2 - z1"), &p2("z1^2 - z0")).unwrap(),
            OracleOutcome::Count { value: 4 }
        );
        assert_eq!(
            oracle_affine_milnor_sum(&p2("z0"), &p2("z1")).unwrap(),
            OracleOutcome::Count { value: 1 }
        );
        assert!(matches!(
            oracle_affine_milnor_sum(&p2("z0*z1 - 1"), &p2("z0*z1 + z1")).unwrap(),
            OracleOutcome::Inconclusive { .. }
        ));
        assert!(matches!(
            oracle_affine_milnor_sum(&p2("z0 - z1"), &p2("2*z0 - 2*z1")).unwrap(),
            OracleOutcome::Inconclusive { .. }
        ));
    }

    #[test]
    fn theorem_checks() {
        let check = oracle_check_theorem1_p2(&jouanolou_field(2)).unwrap();
        assert_eq!(
            check,
            TheoremCheck::Conclusive {
                agrees: true,
                oracle: 7,
                predicted: 7
            }
        );
        let x = validate_field(
            &Weights::unweighted(2),
            vec![
                parse_polynomial("z1", 3).unwrap(),
                parse_polynomial("z0", 3).unwrap(),
                Polynomial::zero(3),
            ],
        )
        .unwrap();
        assert!(matches!(
            oracle_check_theorem1_p2(&x).unwrap(),
            TheoremCheck::Inconclusive { .. }
        ));
        assert!(matches!(
            oracle_check_theorem1_p2(&radial_field(&Weights::unweighted(2))).unwrap(),
            TheoremCheck::Inconclusive { .. }
        ));
    }
}
