//! Quasi-homogeneous vector fields and 1-forms defining foliations.

use std::fmt;

use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::poly::{Polynomial, Rational};
use crate::weights::Weights;

/// Why a list of components is not a foliation of some degree `d`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum FieldIssue {
    WrongComponentCount {
        expected: usize,
        got: usize,
    },
    VarCount {
        component: usize,
        nvars: usize,
    },
    NotQuasiHomogeneous {
        component: usize,
    },
    NonPositiveDegree {
        component: usize,
        implied: i64,
    },
    InconsistentDegree {
        component: usize,
        implied: i64,
        expected: i64,
    },
    AllZero,
}

impl fmt::Display for FieldIssue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldIssue::WrongComponentCount { expected, got } => {
                write!(f, "expected {expected} components, got {got}")
            }
            FieldIssue::VarCount { component, nvars } => {
                write!(f, "component {component} has {nvars} variables")
            }
            FieldIssue::NotQuasiHomogeneous { component } => {
                write!(f, "component {component} is not quasi-homogeneous")
            }
            FieldIssue::NonPositiveDegree { component, implied } => {
                write!(f, "component {component} implies degree {implied} < 1")
            }
            FieldIssue::InconsistentDegree {
                component,
                implied,
                expected,
            } => write!(
                f,
                "component {component} implies degree {implied}, others imply {expected}"
            ),
            FieldIssue::AllZero => write!(f, "all components are zero"),
        }
    }
}

/// `X = Σ P_i ∂/∂z_i` with `wdeg(P_i) = d + w_i − 1` for every nonzero `P_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VectorField {
    weights: Weights,
    components: Vec<Polynomial>,
    degree: u64,
}

impl VectorField {
    pub fn weights(&self) -> &Weights {
        &self.weights
    }

    pub fn components(&self) -> &[Polynomial] {
        &self.components
    }

    pub fn degree(&self) -> u64 {
        self.degree
    }

    pub fn nvars(&self) -> usize {
        self.weights.len()
    }

    pub fn apply(&self, f: &Polynomial) -> Result<Polynomial> {
        apply_field(self, f)
    }

    pub fn scale(&self, c: &Rational) -> Result<VectorField> {
        if c.is_zero() {
            return Err(Error::Precondition("scaling a field by zero".into()));
        }
        Ok(VectorField {
            weights: self.weights.clone(),
            components: self.components.iter().map(|p| p.scale(c)).collect(),
            degree: self.degree,
        })
    }

    /// `X + g·R`, for `g` quasi-homogeneous of degree `d − 1` (or zero).
    pub fn add_radial_multiple(&self, g: &Polynomial) -> Result<VectorField> {
        if !g.is_zero() && g.quasi_degree(&self.weights) != Some(self.degree - 1) {
            return Err(Error::NotQuasiHomogeneous(format!(
                "radial multiplier must have weighted degree {}",
                self.degree - 1
            )));
        }
        let r = radial_field(&self.weights);
        let components = self
            .components
            .iter()
            .zip(&r.components)
            .map(|(p, ri)| p.try_add(&g.try_mul(ri)?))
            .collect::<Result<Vec<_>>>()?;
        validate_field(&self.weights, components)
    }
}

/// `R = Σ w_i z_i ∂/∂z_i`.
pub fn radial_field(w: &Weights) -> VectorField {
    let n = w.len();
    let components = (0..n)
        .map(|i| Polynomial::var(n, i).scale(&Rational::from_integer(w.get(i).into())))
        .collect();
    VectorField {
        weights: w.clone(),
        components,
        degree: 1,
    }
}

/// Jouanolou's field `(z1^d, z2^d, z0^d)` on the projective plane.
pub fn jouanolou_field(d: u32) -> VectorField {
    let w = Weights::unweighted(2);
    let z = |i: usize| Polynomial::var(3, i).pow(d);
    VectorField {
        weights: w,
        components: vec![z(1), z(2), z(0)],
        degree: d as u64,
    }
}

/// Checks the degree law and returns the field with its degree.
pub fn validate_field(w: &Weights, components: Vec<Polynomial>) -> Result<VectorField> {
    let n = w.len();
    if components.len() != n {
        return Err(Error::InvalidField(vec![FieldIssue::WrongComponentCount {
            expected: n,
            got: components.len(),
        }]));
    }
    let mut issues = Vec::new();
    let mut expected: Option<i64> = None;
    for (i, p) in components.iter().enumerate() {
        if p.nvars() != n {
            issues.push(FieldIssue::VarCount {
                component: i,
                nvars: p.nvars(),
            });
            continue;
        }
        if p.is_zero() {
            continue;
        }
        let Some(k) = p.quasi_degree(w) else {
            issues.push(FieldIssue::NotQuasiHomogeneous { component: i });
            continue;
        };
        let implied = k as i64 - w.get(i) as i64 + 1;
        if implied < 1 {
            issues.push(FieldIssue::NonPositiveDegree {
                component: i,
                implied,
            });
            continue;
        }
        match expected {
            None => expected = Some(implied),
            Some(e) if e != implied => issues.push(FieldIssue::InconsistentDegree {
                component: i,
                implied,
                expected: e,
            }),
            Some(_) => {}
        }
    }
    if issues.is_empty() && expected.is_none() {
        issues.push(FieldIssue::AllZero);
    }
    if !issues.is_empty() {
        return Err(Error::InvalidField(issues));
    }
    Ok(VectorField {
        weights: w.clone(),
        components,
        degree: expected.expect("a nonzero component") as u64,
    })
}

/// `X(f) = Σ P_i ∂f/∂z_i`.
pub fn apply_field(x: &VectorField, f: &Polynomial) -> Result<Polynomial> {
    if f.nvars() != x.nvars() {
        return Err(Error::VarCountMismatch {
            left: x.nvars(),
            right: f.nvars(),
        });
    }
    let mut acc = Polynomial::zero(f.nvars());
    for (i, p) in x.components.iter().enumerate() {
        if p.is_zero() {
            continue;
        }
        let df = f.partial_derivative(i)?;
        if !df.is_zero() {
            acc = &acc + &(p * &df);
        }
    }
    Ok(acc)
}

/// Whether `X − Y = g·R` for some quasi-homogeneous `g` of degree `d − 1`.
pub fn same_foliation(x: &VectorField, y: &VectorField) -> Result<bool> {
    if x.weights != y.weights {
        return Err(Error::WeightsMismatch(format!(
            "{} vs {}",
            x.weights, y.weights
        )));
    }
    if x.degree != y.degree {
        return Err(Error::Precondition(format!(
            "fields have degrees {} and {}",
            x.degree, y.degree
        )));
    }
    let n = x.nvars();
    let diffs: Vec<Polynomial> = x
        .components
        .iter()
        .zip(&y.components)
        .map(|(a, b)| a - b)
        .collect();
    if diffs.iter().all(Polynomial::is_zero) {
        return Ok(true);
    }
    let mut g: Option<Polynomial> = None;
    for (i, di) in diffs.iter().enumerate() {
        let r = Polynomial::var(n, i).scale(&Rational::from_integer(x.weights.get(i).into()));
        // A zero difference forces g = 0, which the nonzero ones contradict.
        let Some(q) = di.exact_divide(&r)? else {
            return Ok(false);
        };
        match &g {
            None => g = Some(q),
            Some(prev) if *prev != q => return Ok(false),
            Some(_) => {}
        }
    }
    Ok(true)
}

/// Necessary-condition check for `Sing(F) ∩ Sing(P(w)) = ∅`: lists the
/// coordinate points `e_i` with `w_i > 1` at which `X` is parallel to the
/// radial field, i.e. every `P_j` with `j ≠ i` vanishes at `e_i`.
pub fn singular_orbifold_points(x: &VectorField) -> Vec<usize> {
    let n = x.nvars();
    (0..n)
        .filter(|&i| x.weights.get(i) > 1)
        .filter(|&i| {
            x.components.iter().enumerate().all(|(j, p)| {
                j == i
                    || p.terms()
                        .all(|(m, _)| (0..n).any(|v| v != i && m.exponent(v) > 0))
            })
        })
        .collect()
}

/// `Ω = A0 dz0 + A1 dz1 + A2 dz2` on a weighted projective plane, with
/// `wdeg(A_i) = d + |w| − w_i − 1` and `Σ w_i z_i A_i = 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OneForm {
    weights: Weights,
    components: Vec<Polynomial>,
    degree: i64,
}

impl OneForm {
    /// Validates both invariants and reads the degree off the coefficients.
    pub fn new(weights: Weights, components: Vec<Polynomial>) -> Result<OneForm> {
        weights.require_len(3)?;
        if components.len() != 3 {
            return Err(Error::InvalidForm(format!(
                "expected 3 coefficients, got {}",
                components.len()
            )));
        }
        let total = weights.sum() as i64;
        let mut degree = None;
        for (i, a) in components.iter().enumerate() {
            if a.nvars() != 3 {
                return Err(Error::VarCountMismatch {
                    left: 3,
                    right: a.nvars(),
                });
            }
            if a.is_zero() {
                continue;
            }
            let k = a.quasi_degree(&weights).ok_or_else(|| {
                Error::InvalidForm(format!("coefficient A{i} is not quasi-homogeneous"))
            })? as i64;
            let d = k + weights.get(i) as i64 + 1 - total;
            match degree {
                None => degree = Some(d),
                Some(e) if e != d => {
                    return Err(Error::InvalidForm(format!(
                        "coefficient A{i} implies degree {d}, others imply {e}"
                    )))
                }
                Some(_) => {}
            }
        }
        let degree =
            degree.ok_or_else(|| Error::InvalidForm("all coefficients are zero".into()))?;
        let form = OneForm {
            weights,
            components,
            degree,
        };
        if !form.euler_contraction().is_zero() {
            return Err(Error::InvalidForm(
                "contraction with the radial field is nonzero".into(),
            ));
        }
        Ok(form)
    }

    pub fn weights(&self) -> &Weights {
        &self.weights
    }

    pub fn components(&self) -> &[Polynomial] {
        &self.components
    }

    pub fn degree(&self) -> i64 {
        self.degree
    }

    /// `Σ w_i z_i A_i`.
    pub fn euler_contraction(&self) -> Polynomial {
        let mut acc = Polynomial::zero(3);
        for (i, a) in self.components.iter().enumerate() {
            let r =
                Polynomial::var(3, i).scale(&Rational::from_integer(self.weights.get(i).into()));
            acc = &acc + &(a * &r);
        }
        acc
    }

    /// Contraction `Ω(X) = Σ A_i P_i`; zero when `X` is tangent to the form.
    pub fn contract(&self, x: &VectorField) -> Result<Polynomial> {
        if x.weights != self.weights {
            return Err(Error::WeightsMismatch(format!(
                "{} vs {}",
                x.weights, self.weights
            )));
        }
        let mut acc = Polynomial::zero(3);
        for (a, p) in self.components.iter().zip(x.components()) {
            acc = &acc + &(a * p);
        }
        Ok(acc)
    }
}

/// The 1-form `A_c = Σ ε_{abc} P_a w_b z_b`, i.e. the volume form
/// contracted with `X` and `R`.
pub fn form_from_field(x: &VectorField) -> Result<OneForm> {
    x.weights.require_len(3)?;
    let w = &x.weights;
    let rz = |b: usize| Polynomial::var(3, b).scale(&Rational::from_integer(w.get(b).into()));
    let p = &x.components;
    // (a, b) pairs with ε_{abc} = +1 for c = 0, 1, 2.
    let cyclic = [(1, 2), (2, 0), (0, 1)];
    let components: Vec<Polynomial> = cyclic
        .iter()
        .map(|&(a, b)| &(&p[a] * &rz(b)) - &(&p[b] * &rz(a)))
        .collect();
    if components.iter().all(Polynomial::is_zero) {
        return Err(Error::InvalidForm(
            "field is a multiple of the radial field and defines no 1-form".into(),
        ));
    }
    OneForm::new(w.clone(), components)
}

fn quasi_degree_of(f: &Polynomial, w: &Weights, name: &str) -> Result<u64> {
    if f.nvars() != w.len() {
        return Err(Error::VarCountMismatch {
            left: w.len(),
            right: f.nvars(),
        });
    }
    if f.is_zero() {
        return Err(Error::ZeroPolynomial("form input"));
    }
    f.quasi_degree(w)
        .ok_or_else(|| Error::NotQuasiHomogeneous(name.to_string()))
}

/// `Ω(f, g) = d1 f dg − d2 g df`, which has `f^{d2}/g^{d1}` as a first integral.
///
/// The degree is read off the coefficients: `d1 + d2 − |w| + 1`.
pub fn closed_rational_form(f: &Polynomial, g: &Polynomial, w: &Weights) -> Result<OneForm> {
    w.require_len(3)?;
    let d1 = quasi_degree_of(f, w, "f")?;
    let d2 = quasi_degree_of(g, w, "g")?;
    let degree = d1 as i64 + d2 as i64 - w.sum() as i64 + 1;
    if degree < 1 {
        return Err(Error::Precondition(format!(
            "resulting foliation degree {degree} < 1"
        )));
    }
    let c1 = Rational::from_integer(d1.into());
    let c2 = Rational::from_integer(d2.into());
    let components = (0..3)
        .map(|i| {
            let a = (f * &g.partial_derivative(i)?).scale(&c1);
            let b = (g * &f.partial_derivative(i)?).scale(&c2);
            Ok(&a - &b)
        })
        .collect::<Result<Vec<_>>>()?;
    if components.iter().all(Polynomial::is_zero) {
        return Err(Error::InvalidForm("f and g give the zero form".into()));
    }
    OneForm::new(w.clone(), components)
}

/// Logarithmic form `(f1⋯fk) Σ λ_i df_i / f_i`, with `Σ λ_i d_i = 0`.
///
/// Returns the form and any warnings (two factors are accepted but flagged).
pub fn logarithmic_form(
    fs: &[Polynomial],
    lambdas: &[Rational],
    w: &Weights,
) -> Result<(OneForm, Vec<String>)> {
    w.require_len(3)?;
    if fs.len() != lambdas.len() {
        return Err(Error::Precondition(format!(
            "{} polynomials but {} multipliers",
            fs.len(),
            lambdas.len()
        )));
    }
    let mut warnings = Vec::new();
    match fs.len() {
        0 | 1 => {
            return Err(Error::Precondition(
                "a logarithmic form needs at least two factors".into(),
            ))
        }
        2 => warnings.push("only two factors; this is a closed rational form up to scaling".into()),
        _ => {}
    }
    let degrees = fs
        .iter()
        .enumerate()
        .map(|(i, f)| quasi_degree_of(f, w, &format!("f{}", i + 1)))
        .collect::<Result<Vec<_>>>()?;
    let residue: Rational = lambdas
        .iter()
        .zip(&degrees)
        .map(|(l, &d)| l * Rational::from_integer(d.into()))
        .sum();
    if !residue.is_zero() {
        return Err(Error::Precondition(format!(
            "sum of multiplier times degree is {}, not 0",
            crate::poly::format_rational(&residue)
        )));
    }
    let degree = degrees.iter().sum::<u64>() as i64 - w.sum() as i64 + 1;
    if degree < 1 {
        return Err(Error::Precondition(format!(
            "resulting foliation degree {degree} < 1"
        )));
    }
    let cofactor_products: Vec<Polynomial> = (0..fs.len())
        .map(|i| {
            fs.iter()
                .enumerate()
                .filter(|&(m, _)| m != i)
                .fold(Polynomial::one(3), |acc, (_, f)| &acc * f)
        })
        .collect();
    let mut components = Vec::with_capacity(3);
    for j in 0..3 {
        let mut a = Polynomial::zero(3);
        for ((f, l), rest) in fs.iter().zip(lambdas).zip(&cofactor_products) {
            a = &a + &(rest * &f.partial_derivative(j)?).scale(l);
        }
        components.push(a);
    }
    if components.iter().all(Polynomial::is_zero) {
        return Err(Error::InvalidForm(
            "logarithmic data give the zero form".into(),
        ));
    }
    Ok((OneForm::new(w.clone(), components)?, warnings))
}

/// Affine chart `z_chart = 1` of a field on the projective plane:
/// `Q_i = P_i − x_i P_chart`, restricted and renumbered to two variables.
pub fn dehomogenize_chart(x: &VectorField, chart: usize) -> Result<(Polynomial, Polynomial)> {
    x.weights.require_len(3)?;
    if !x.weights.is_unweighted() {
        return Err(Error::Precondition(
            "chart restriction is only available for weights (1,1,1)".into(),
        ));
    }
    if chart > 2 {
        return Err(Error::VariableOutOfRange {
            index: chart,
            nvars: 3,
        });
    }
    let pc = &x.components[chart];
    let mut out = Vec::with_capacity(2);
    for i in (0..3).filter(|&i| i != chart) {
        let q = &x.components[i] - &(&Polynomial::var(3, i) * pc);
        out.push(q.dehomogenize(chart)?);
    }
    let q1 = out.pop().expect("two components");
    let q0 = out.pop().expect("two components");
    Ok((q0, q1))
}
