mod common;

use common::*;
use num_bigint::BigInt;
use num_traits::Zero;
use proptest::prelude::*;

use wpsfol::counts::{count_ambient, count_on_hypersurface};
use wpsfol::extactic::{certify_invariant, extactic_polynomial, is_first_integral};
use wpsfol::foliation::{
    apply_field, closed_rational_form, form_from_field, radial_field, same_foliation,
    validate_field,
};
use wpsfol::integrability::{poincare_bound, separatrix_milnor_budget, SeparatrixKind};
use wpsfol::poly::{bareiss_determinant, parse_polynomial};
use wpsfol::wps::{
    chern_total_tangent, chern_twist, elementary_symmetric, h0, intersection_number,
    monomial_basis, orbifold_euler_characteristic, orbifold_integral_top,
};
use wpsfol::{OneForm, Polynomial, Rational, WeightedDegree, Weights};

const TRIPLES: [[u32; 3]; 8] = [
    [1, 1, 1],
    [1, 1, 2],
    [1, 2, 3],
    [1, 2, 5],
    [2, 3, 5],
    [1, 3, 4],
    [3, 4, 5],
    [1, 1, 3],
];

fn triple() -> impl Strategy<Value = Weights> {
    (0..TRIPLES.len()).prop_map(|i| w(&TRIPLES[i]))
}

fn no_zero_coefficients(f: &Polynomial) -> bool {
    f.terms().all(|(_, c)| !c.is_zero())
}

fn check_form(form: &OneForm) {
    let ws = form.weights().as_slice();
    assert!(form.euler_contraction().is_zero());
    let expected = form.degree() + ws.iter().sum::<u32>() as i64 - 1;
    for (a, &wi) in form.components().iter().zip(ws) {
        if let Some(deg) = a.quasi_degree(form.weights()) {
            assert_eq!(deg as i64, expected - wi as i64);
        } else {
            assert!(a.is_zero());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn ring_laws(seed in any::<u64>()) {
        let mut r = rng(seed);
        let [a, b, c] = [0, 1, 2].map(|_| random_polynomial(&mut r, 3, 3, 5));
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        for f in [&a + &b, &a * &b, &a - &c] {
            prop_assert!(no_zero_coefficients(&f));
        }
    }

    #[test]
    fn leibniz(seed in any::<u64>(), i in 0usize..3) {
        let mut r = rng(seed);
        let f = random_polynomial(&mut r, 3, 3, 5);
        let g = random_polynomial(&mut r, 3, 3, 5);
        let lhs = (&f * &g).partial_derivative(i).unwrap();
        let rhs = &(&f.partial_derivative(i).unwrap() * &g) + &(&f * &g.partial_derivative(i).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn weighted_degree_is_additive(ws in triple(), k1 in 0u64..6, k2 in 0u64..6, seed in any::<u64>()) {
        let mut r = rng(seed);
        let s = ws.as_slice();
        prop_assume!(h0(&ws, k1 as i64) > 0 && h0(&ws, k2 as i64) > 0);
        let f = random_nonzero_quasi_homogeneous(&mut r, s, k1);
        let g = random_nonzero_quasi_homogeneous(&mut r, s, k2);
        prop_assert_eq!(f.weighted_degree(&ws).unwrap(), WeightedDegree::Value(k1));
        prop_assert_eq!((&f * &g).weighted_degree(&ws).unwrap(), WeightedDegree::Value(k1 + k2));
    }

    #[test]
    fn exact_division_inverts_multiplication(seed in any::<u64>()) {
        let mut r = rng(seed);
        let a = random_polynomial(&mut r, 3, 3, 4);
        let b = random_nonzero_polynomial(&mut r, 3, 3, 4);
        prop_assert_eq!((&a * &b).exact_divide(&b).unwrap(), Some(a));
    }

    #[test]
    fn bareiss_matches_cofactor(seed in any::<u64>(), n in 1usize..=4) {
        let mut r = rng(seed);
        let m: Vec<Vec<Polynomial>> = (0..n)
            .map(|_| (0..n).map(|_| random_polynomial(&mut r, 2, 2, 2)).collect())
            .collect();
        prop_assert_eq!(bareiss_determinant(&m).unwrap(), cofactor_determinant(&m));
    }

    #[test]
    fn euler_identity(ws in triple(), k in 0u64..8, seed in any::<u64>()) {
        prop_assume!(h0(&ws, k as i64) > 0);
        let mut r = rng(seed);
        let f = random_nonzero_quasi_homogeneous(&mut r, ws.as_slice(), k);
        let radial = radial_field(&ws);
        let lhs = apply_field(&radial, &f).unwrap();
        prop_assert_eq!(&lhs, &f.scale(&Rational::from_integer(BigInt::from(k))));
        prop_assert_eq!(lhs, euler_operator(ws.as_slice(), &f));
    }

    #[test]
    fn parse_print_round_trip(seed in any::<u64>()) {
        let mut r = rng(seed);
        let f = random_polynomial(&mut r, 4, 4, 6);
        let text = f.to_string();
        prop_assert_eq!(parse_polynomial(&text, 4).unwrap(), f);
    }

    #[test]
    fn apply_field_is_a_derivation(ws in triple(), d in 1u64..4, seed in any::<u64>()) {
        let mut r = rng(seed);
        let x = random_field(&mut r, &ws, d);
        let f = random_polynomial(&mut r, 3, 2, 4);
        let g = random_polynomial(&mut r, 3, 2, 4);
        let lhs = apply_field(&x, &(&f * &g)).unwrap();
        let rhs = &(&apply_field(&x, &f).unwrap() * &g) + &(&f * &apply_field(&x, &g).unwrap());
        prop_assert_eq!(&lhs, &rhs);
        prop_assert_eq!(apply_field(&x, &f).unwrap(), derivation(x.components(), &f));
    }

    #[test]
    fn field_degree_law(ws in triple(), d in 1u64..4, k in 1u64..5, seed in any::<u64>()) {
        prop_assume!(h0(&ws, k as i64) > 0);
        let mut r = rng(seed);
        let x = random_field(&mut r, &ws, d);
        let f = random_nonzero_quasi_homogeneous(&mut r, ws.as_slice(), k);
        let xf = apply_field(&x, &f).unwrap();
        if !xf.is_zero() {
            prop_assert_eq!(xf.weighted_degree(&ws).unwrap(), WeightedDegree::Value(k + d - 1));
        }
    }

    #[test]
    fn radial_shift_keeps_the_foliation(ws in triple(), d in 1u64..4, seed in any::<u64>()) {
        let mut r = rng(seed);
        let x = random_field(&mut r, &ws, d);
        let g = random_quasi_homogeneous(&mut r, ws.as_slice(), d - 1, 0.7);
        if let Ok(y) = x.add_radial_multiple(&g) {
            prop_assert!(same_foliation(&x, &y).unwrap());
            prop_assert!(same_foliation(&y, &x).unwrap());
        }
        prop_assert!(same_foliation(&x, &x).unwrap());
    }

    #[test]
    fn forms_satisfy_euler_and_degree_law(ws in triple(), d in 1u64..4, seed in any::<u64>()) {
        let mut r = rng(seed);
        let x = random_field(&mut r, &ws, d);
        let form = form_from_field(&x).unwrap();
        check_form(&form);
        prop_assert!(form.contract(&x).unwrap().is_zero());
    }

    #[test]
    fn closed_forms_are_valid(ws in triple(), d1 in 1u64..5, d2 in 1u64..5, seed in any::<u64>()) {
        prop_assume!(h0(&ws, d1 as i64) > 0 && h0(&ws, d2 as i64) > 0);
        let mut r = rng(seed);
        let f = random_nonzero_quasi_homogeneous(&mut r, ws.as_slice(), d1);
        let g = random_nonzero_quasi_homogeneous(&mut r, ws.as_slice(), d2);
        match closed_rational_form(&f, &g, &ws) {
            Ok(form) => check_form(&form),
            Err(e) => prop_assert!(matches!(e, wpsfol::Error::InvalidForm(_) | wpsfol::Error::DegenerateSystem(_) | wpsfol::Error::Precondition(_)), "{e}"),
        }
    }

    #[test]
    fn scaling_preserves_extactic_vanishing(ws in triple(), seed in any::<u64>()) {
        let mut r = rng(seed);
        let x = random_field(&mut r, &ws, 1);
        let k = (1..).find(|&k| h0(&ws, k) >= 2).unwrap() as u64;
        let c = nonzero_rational(&mut r);
        let e = extactic_polynomial(&x, k).unwrap();
        let ec = extactic_polynomial(&x.scale(&c).unwrap(), k).unwrap();
        let pairs = binomial(e.dimension() as u64, 2);
        prop_assert_eq!(e.is_zero, ec.is_zero);
        prop_assert_eq!(ec.extactic, e.extactic.scale(&rational_pow(&c, pairs)));
    }

    #[test]
    fn first_integral_implies_vanishing_extactic(i in 0usize..4, seed in any::<u64>()) {
        // ∇F × ∇G kills F and G; with 2k = |w| the field has degree 1.
        let (ws, k) = [(w(&[1, 1, 2]), 2), (w(&[1, 2, 3]), 3), (w(&[1, 2, 5]), 4), (w(&[1, 3, 4]), 4)][i].clone();
        let mut r = rng(seed);
        let f = random_nonzero_quasi_homogeneous(&mut r, ws.as_slice(), k);
        let g = random_nonzero_quasi_homogeneous(&mut r, ws.as_slice(), k);
        let df: Vec<_> = (0..3).map(|j| f.partial_derivative(j).unwrap()).collect();
        let dg: Vec<_> = (0..3).map(|j| g.partial_derivative(j).unwrap()).collect();
        let comps: Vec<Polynomial> = (0..3)
            .map(|j| {
                let (a, b) = ((j + 1) % 3, (j + 2) % 3);
                &(&df[a] * &dg[b]) - &(&df[b] * &dg[a])
            })
            .collect();
        prop_assume!(comps.iter().any(|c| !c.is_zero()));
        let x = validate_field(&ws, comps).unwrap();
        prop_assert_eq!(x.degree(), 1);
        prop_assert!(is_first_integral(&x, &f, &g).unwrap());
        prop_assert!(extactic_polynomial(&x, k).unwrap().is_zero);
    }

    #[test]
    fn invariant_soundness(ws in triple(), seed in any::<u64>()) {
        let mut r = rng(seed);
        let x = random_field(&mut r, &ws, 1);
        prop_assume!(h0(&ws, 1) >= 2);
        let e = extactic_polynomial(&x, 1).unwrap();
        for f in monomial_basis(&ws, 1).basis_polynomials() {
            if certify_invariant(&x, &f).unwrap().is_some() && !e.is_zero {
                prop_assert!(e.extactic.exact_divide(&f).unwrap().is_some());
            }
        }
    }

    #[test]
    fn intersection_is_symmetric_and_bilinear(ws in triple(), a in -5i64..6, b in -5i64..6, c in -5i64..6) {
        prop_assert_eq!(intersection_number(&ws, a, b).unwrap(), intersection_number(&ws, b, a).unwrap());
        prop_assert_eq!(
            intersection_number(&ws, a + c, b).unwrap(),
            intersection_number(&ws, a, b).unwrap() + intersection_number(&ws, c, b).unwrap()
        );
    }

    #[test]
    fn budget_biconditional(ws in triple(), d in 1u64..8, s in 1i64..20) {
        let budget = separatrix_milnor_budget(&ws, d, s).unwrap();
        let bound = d as i64 + ws.sum() as i64 - 1;
        prop_assert_eq!(budget > Rational::zero(), s < bound);
        prop_assert_eq!(budget, count_on_hypersurface(&ws, d, s).unwrap().total);
        prop_assert_eq!(
            poincare_bound(&ws, d, SeparatrixKind::QuasiSmooth).unwrap(),
            poincare_bound(&ws, d, SeparatrixKind::NonDicritical).unwrap() - 1
        );
    }
}

#[test]
fn radial_fields_validate_with_degree_one() {
    for ws in TRIPLES {
        let ws = w(&ws);
        let r = radial_field(&ws);
        let again = validate_field(&ws, r.components().to_vec()).unwrap();
        assert_eq!(again.degree(), 1);
    }
}

#[test]
fn monomial_basis_matches_enumeration() {
    for ws in TRIPLES {
        let ws = w(&ws);
        for k in 0..15u64 {
            let mut got: Vec<Vec<u32>> = monomial_basis(&ws, k)
                .basis()
                .iter()
                .map(|m| m.exponents().to_vec())
                .collect();
            let mut want = enumerate_monomials(ws.as_slice(), k);
            assert_eq!(got.len() as u64, h0(&ws, k as i64));
            got.sort();
            want.sort();
            assert_eq!(got, want);
        }
    }
}

#[test]
fn h0_unweighted_is_binomial() {
    for n in 1..=5usize {
        for k in 0..=30u64 {
            assert_eq!(
                h0(&Weights::unweighted(n), k as i64),
                binomial(n as u64 + k, n as u64)
            );
        }
    }
}

#[test]
fn chern_invariants() {
    for ws in TRIPLES
        .iter()
        .map(|t| t.to_vec())
        .chain([vec![1, 1, 1, 1], vec![1, 2, 3, 5]])
    {
        let ws = w(&ws);
        let c = chern_total_tangent(&ws);
        for i in 0..=ws.dim() {
            assert_eq!(
                c.coeff(i),
                &Rational::from_integer(elementary_symmetric(&ws, i).unwrap())
            );
        }
        assert_eq!(chern_twist(&c, &Rational::zero()), c);
        let t = q(3, 2);
        let twisted = chern_twist(&c, &t);
        assert_eq!(
            twisted.coeff(1),
            &(c.coeff(1) + &t * Rational::from_integer(BigInt::from(ws.dim())))
        );
        let top = orbifold_integral_top(&ws, &c).unwrap();
        assert_eq!(
            top,
            Rational::new(elementary_symmetric(&ws, ws.dim()).unwrap(), ws.product())
        );
        if ws.len() == 3 {
            let chi = ws
                .as_slice()
                .iter()
                .filter(|&&x| x > 1)
                .fold(q(3, 1), |acc, &x| acc - (q(1, 1) - q(1, x as i64)));
            assert_eq!(top, chi);
            assert_eq!(orbifold_euler_characteristic(&ws).unwrap(), chi);
        }
    }
}

#[test]
fn unweighted_counts_are_geometric_series() {
    for n in 1..=5usize {
        for d in 1..=6u64 {
            let want: u64 = (0..=n as u32).map(|j| d.pow(j)).sum();
            let got = count_ambient(&Weights::unweighted(n), d).unwrap().total;
            assert_eq!(got, q(want as i64, 1), "n={n} d={d}");
        }
    }
}
