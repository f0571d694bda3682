mod common;

use apolar_core::apolar::text::parse_poly_in;
use apolar_core::apolar::{count_of_degree, monomials_of_degree, monomials_up_to, Monomial};
use apolar_core::gradcheck::degree2_constraints;
use apolar_core::invsys::{
    apolar_ann_component, graded_hilbert_function, local_hilbert_function, socle_type, InverseSystem,
};
use apolar_core::oseq::{macaulay_growth, socle_bound};
use apolar_core::qdecomp::{mpow_contract_dim, q0_check, q_decomposition};
use apolar_core::scalar::int;
use apolar_core::Poly;
use proptest::prelude::*;

fn poly_from(nvars: usize, monos: &[Monomial], coeffs: &[i64]) -> Poly {
    Poly::from_terms(nvars, monos.iter().cloned().zip(coeffs.iter().map(|&c| int(c)))).unwrap()
}

/// Polynomials of degree exactly 4 in three variables, coefficients in
/// `-3..=3`.
fn quartic() -> impl Strategy<Value = Poly> {
    let monos = monomials_up_to(3, 4);
    let n = monos.len();
    prop::collection::vec(-3i64..=3, n)
        .prop_map(move |c| poly_from(3, &monos, &c))
        .prop_filter("degree 4", |p| p.degree() == Some(4))
}

fn form(nvars: usize, d: usize) -> impl Strategy<Value = Poly> {
    let monos = monomials_of_degree(nvars, d);
    let n = monos.len();
    prop::collection::vec(-3i64..=3, n)
        .prop_map(move |c| poly_from(nvars, &monos, &c))
        .prop_filter("nonzero", |p| !p.is_zero())
}

fn small_poly(nvars: usize, d: usize) -> impl Strategy<Value = Poly> {
    let monos = monomials_up_to(nvars, d);
    let n = monos.len();
    prop::collection::vec(-2i64..=2, n).prop_map(move |c| poly_from(nvars, &monos, &c))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn q_decomposition_invariants(f in quartic()) {
        let sys = InverseSystem::new(vec![f.clone()]).unwrap();
        let h = local_hilbert_function(&sys);
        let q = q_decomposition(&sys).unwrap();
        prop_assert_eq!(q.row_sums(), h.clone());
        prop_assert!(q.is_symmetric());
        prop_assert!(q0_check(&f).unwrap());
        let bound = socle_bound(h.embedding_dim(), &socle_type(&sys).unwrap());
        for i in 0..=4 {
            prop_assert!(h.get(i) <= bound.get(i));
        }
        for k in 0..=5 {
            prop_assert!(mpow_contract_dim(&sys, k).is_ok());
        }
    }

    #[test]
    fn contraction_is_a_module_action(a in small_poly(3, 2), b in small_poly(3, 2), g in small_poly(3, 5)) {
        let lhs = (&a * &b).contract(&g).unwrap();
        let rhs = a.contract(&b.contract(&g).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn display_parses_back(p in small_poly(4, 3)) {
        let text = p.to_string();
        prop_assert_eq!(parse_poly_in(&text, 4).unwrap(), p);
    }

    #[test]
    fn local_and_graded_agree_on_forms(f in form(3, 4)) {
        let sys = InverseSystem::new(vec![f.clone()]).unwrap();
        prop_assert_eq!(local_hilbert_function(&sys), graded_hilbert_function(&[f]).unwrap());
    }

    #[test]
    fn annihilator_dimension_complements_hilbert_function(f in form(3, 4)) {
        let h = graded_hilbert_function(&[f.clone()]).unwrap();
        for i in 0..=5 {
            let ann = apolar_ann_component(&f, i).unwrap();
            prop_assert_eq!(ann.dim(), count_of_degree(3, i) - h.get(i));
        }
    }

    #[test]
    fn quadratic_forms_evaluate_to_contraction(g in form(3, 4), u in prop::collection::vec(-4i64..=4, 3)) {
        let forms = degree2_constraints(&g).unwrap();
        let ell = poly_from(3, &monomials_of_degree(3, 1), &u);
        let direct = (&ell * &ell).contract(&g).unwrap();
        let uq: Vec<_> = u.iter().map(|&x| int(x)).collect();
        for (mu, f) in &forms {
            prop_assert_eq!(f.evaluate(&uq), direct.coeff(mu));
        }
    }
}

#[test]
fn macaulay_growth_matches_lex_segments() {
    for i in 1..=4 {
        for h in 0..=20 {
            assert_eq!(macaulay_growth(h, i).unwrap(), common::brute_force_growth(h, i), "h={h}, i={i}");
        }
    }
}
