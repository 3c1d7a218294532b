mod common;

use proptest::prelude::*;

use kvjet::appendix::{am_pi_series, gamma_vergne, r_series, universal_lhs, vergne_rhs};
use kvjet::free_lie::HallBasis;
use kvjet::kv::{
    beta_series, gamma_odd_series, gamma_series, kv_jet, kv_jet_with, pi_series, s_series,
    verify_eq1_jet, verify_symmetry_order1, PiConvention,
};
use kvjet::rational::{q, Rational};
use kvjet::series::{exp_series, Series1, Series2};
use kvjet::trace::{
    f_consistency_check, monomial_matrix_trace, quadratic_trace_check, trace_functional,
    verify_eq2_linearized,
};

fn rational() -> impl Strategy<Value = Rational> {
    (-12i64..=12, 1i64..=7).prop_map(|(n, d)| q(n, d))
}

fn nonzero_rational() -> impl Strategy<Value = Rational> {
    rational().prop_filter("nonzero", |r| !r.is_zero())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn gamma_odd_part_is_forced(alpha in rational()) {
        prop_assert_eq!(gamma_series(&alpha, 12).odd(), gamma_odd_series(&alpha, 12));
        prop_assert!(gamma_series(&alpha, 12).coeff(0).is_zero());
    }

    #[test]
    fn pi_reconstructs_skew_part(alpha in rational()) {
        let n = 7;
        let gamma = gamma_series(&alpha, n + 1);
        let pi = pi_series(&alpha, &gamma, n, PiConvention::Reflected).unwrap();
        prop_assert!(pi.is_skew());
        let sum = Series2::lift_sum(&(&Series1::one(n + 1) - &exp_series(&q(-1, 1), n + 1)), n + 1).unwrap();
        let (_, skew) = s_series(&alpha, &gamma, n + 1).unwrap().skew_split();
        prop_assert_eq!(&sum * &pi, skew.truncate(n));
    }

    #[test]
    fn eq1_holds_for_any_alpha(alpha in rational()) {
        let basis = HallBasis::new(6);
        let report = verify_eq1_jet(&basis, &kv_jet(&alpha, 6).unwrap()).unwrap();
        prop_assert!(report.pass, "{:?}", report.first_failure());
    }

    #[test]
    fn even_f_perturbations_are_inconsistent(eps in nonzero_rational(), k in 1usize..5) {
        let alpha = q(1, 4);
        let f = &kvjet::series::psi_series(10) + &Series1::monomial(2 * k, eps, 10);
        prop_assert!(!f_consistency_check(&f, &alpha).unwrap().consistent);
    }

    #[test]
    fn odd_f_perturbations_keep_consistency(eps in nonzero_rational(), k in 1usize..5) {
        let alpha = q(1, 4);
        let f = &kvjet::series::psi_series(10) + &Series1::monomial(2 * k + 1, eps, 10);
        let report = f_consistency_check(&f, &alpha).unwrap();
        prop_assert!(report.consistent);
        prop_assert_ne!(report.gamma_f, gamma_series(&alpha, 9));
    }
}

#[test]
fn jet_constants() {
    let jet = kv_jet(&q(1, 4), 6).unwrap();
    assert!(jet.rho.is_zero());
    assert_eq!(jet.beta.coeff(0), &q(-1, 4));
    assert_eq!(jet.gamma.coeff(1), &q(1, 24));
    for alpha in [q(0, 1), q(1, 3), q(-2, 1)] {
        assert_eq!(beta_series(&alpha, 0).coeff(0), &(&alpha - &q(1, 2)));
    }
}

#[test]
fn eq1_passes_at_every_order_up_to_ten() {
    let alpha = q(1, 4);
    for n in 1..=10 {
        let basis = HallBasis::new(n);
        let report = verify_eq1_jet(&basis, &kv_jet(&alpha, n).unwrap()).unwrap();
        assert!(report.pass, "order {n}: {:?}", report.first_failure());
        assert_eq!(report.convention.as_deref(), Some("phi1(-(t+u))"));
    }
}

#[test]
fn literal_prefactor_fails_first_equation() {
    let basis = HallBasis::new(6);
    let jet = kv_jet_with(&q(1, 4), 6, PiConvention::Literal).unwrap();
    let report = verify_eq1_jet(&basis, &jet).unwrap();
    let first = report.first_failure().expect("a failing coefficient");
    assert_eq!((first.degree, first.y_degree), (4, 2));
}

#[test]
fn even_gamma_perturbations_with_fixed_pi_fail() {
    let alpha = q(1, 4);
    // a t^k change in γ first shows at total degree k + 2
    let basis = HallBasis::new(8);
    let jet = kv_jet(&alpha, 8).unwrap();
    for k in [2, 4, 6] {
        for eps in [q(1, 1), q(-3, 5)] {
            let bumped = jet.with_gamma(&jet.gamma + &Series1::monomial(k, eps, 8));
            assert!(!verify_eq1_jet(&basis, &bumped).unwrap().pass, "t^{k}");
        }
    }
}

#[test]
fn even_gamma_perturbation_absorbed_by_pi_is_caught_by_traces() {
    let alpha = q(1, 4);
    let n = 7;
    let gamma = &gamma_series(&alpha, n + 1) + &Series1::monomial(2, q(1, 1), n + 1);
    let pi = pi_series(&alpha, &gamma, n, PiConvention::Reflected).unwrap();
    let jet = kvjet::kv::KvJet {
        gamma: gamma.truncate(n),
        pi,
        ..kv_jet(&alpha, n).unwrap()
    };
    assert!(verify_eq1_jet(&HallBasis::new(n), &jet).unwrap().pass);
    assert!(
        !verify_eq2_linearized(&alpha, &gamma, &q(0, 1), n)
            .unwrap()
            .pass
    );
}

#[test]
fn odd_gamma_perturbation_breaks_divisibility() {
    let alpha = q(1, 4);
    for k in [1, 3, 5] {
        let gamma = &gamma_series(&alpha, 8) + &Series1::monomial(k, q(1, 1), 8);
        assert!(
            pi_series(&alpha, &gamma, 7, PiConvention::Reflected).is_err(),
            "t^{k}"
        );
    }
}

#[test]
fn symmetry_rejects_other_alphas() {
    let r = verify_symmetry_order1(&q(0, 1), 4).unwrap();
    assert!(!r.pass);
    assert_eq!(r.beta0, q(-1, 2));
    assert_eq!(r.symmetric_alpha, q(1, 4));
    assert!(verify_symmetry_order1(&q(1, 4), 4).unwrap().pass);
}

#[test]
fn trace_rule_agrees_with_matrices() {
    let n = 8;
    for i in 0..=n {
        for j in 0..=n - i {
            if i + j == 0 {
                continue;
            }
            let mono = Series2::monomial(i, j, q(1, 1), n);
            assert_eq!(
                trace_functional(&mono),
                monomial_matrix_trace(i, j, n),
                "t^{i} u^{j}"
            );
        }
    }
}

#[test]
fn every_single_coefficient_perturbation_is_detected() {
    let alpha = q(1, 4);
    let n = 8;
    let gamma = gamma_series(&alpha, n);
    for k in 0..n {
        let bumped = &gamma + &Series1::monomial(k, q(1, 1), n);
        let r = verify_eq2_linearized(&alpha, &bumped, &q(0, 1), n).unwrap();
        assert!(!r.pass, "t^{k}");
        assert_eq!(r.eps1.len(), 1);
        assert_eq!((r.eps1[0].i, r.eps1[0].j), (k, 1));
    }
    for rho in [q(1, 1), q(-2, 3)] {
        let r = verify_eq2_linearized(&alpha, &gamma, &rho, n).unwrap();
        assert_eq!(r.eps0.len(), 1);
        assert_eq!(r.eps0[0].c, rho);
    }
}

#[test]
fn sl2_trace_identity() {
    assert!(quadratic_trace_check(0));
    assert!(quadratic_trace_check(6));
}

#[test]
fn gamma_matches_euler_solution_of_printed_expansion() {
    let printed = Series1::new(vec![q(0, 1), q(1, 8), q(1, 12), q(1, 72), q(-1, 480)]);
    let solved = Series1::solve_euler_ode(&printed, 2).unwrap();
    assert_eq!(solved, gamma_series(&q(1, 4), 4));
    assert_eq!(universal_lhs(4), printed);
}

#[test]
fn appendix_odes_resubstitute() {
    let n = 10;
    assert_eq!(gamma_vergne(n).euler_operator(2), vergne_rhs(n));
    let pi = am_pi_series(n);
    assert_eq!(pi.coeff(0), &q(1, 4));
    assert!(r_series(n).even().is_zero());
}

#[test]
fn appendix_even_parts_first_differ_at_four() {
    let n = 10;
    let u = gamma_series(&q(1, 4), n).even();
    let v = gamma_vergne(n).even();
    let am = kvjet::appendix::am_gamma_series(n).even();
    let first = |a: &Series1, b: &Series1| (0..=n).find(|&k| a.coeff(k) != b.coeff(k));
    assert_eq!(first(&u, &v), Some(4));
    assert_eq!(first(&u, &am), Some(4));
    assert_eq!(first(&v, &am), Some(4));
}
