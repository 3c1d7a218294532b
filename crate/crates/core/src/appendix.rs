//! Order-one jets of two known solutions in the quadratic case, compared
//! with the universal symmetric one at `α = 1/4`.
//!
//! Every series is compared through the combination `t y' + 2 y`, which is
//! what the defining differential equations produce.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::kv::{beta_series, gamma_series};
use crate::rational::Rational;
use crate::series::{exp_series, phi1_series, Series1, SeriesError};

const HEADROOM: usize = 3;

fn quarter() -> Rational {
    Rational::new(1, 4)
}

/// `R(t) = (e^t - e^{-t} - 2t) / t²`.
pub fn r_series(order: usize) -> Series1 {
    let n = order + 2;
    let num = &(&exp_series(&Rational::one(), n) - &exp_series(&Rational::from(-1), n))
        - &Series1::monomial(1, Rational::from(2), n);
    let t2 = Series1::monomial(2, Rational::one(), n);
    num.div(&t2)
        .expect("numerator vanishes to order 3")
        .truncate(order)
}

/// `g(t) = R(t) / 2`.
fn g_series(order: usize) -> Series1 {
    r_series(order).scale(&Rational::new(1, 2))
}

fn phi1_inverse(order: usize) -> Series1 {
    phi1_series(order).inverse().expect("φ₁(0) = 1")
}

fn phi1_prime(order: usize) -> Series1 {
    phi1_series(order + 1).derivative().expect("order >= 1")
}

/// `(1/8) t - (1/2) t φ₁(-t) R(t) φ₁'(t)`.
pub fn vergne_rhs(order: usize) -> Series1 {
    let t = Series1::t(order);
    let prod = &(&(&t * &phi1_series(order).reflect()) * &r_series(order)) * &phi1_prime(order);
    &t.scale(&Rational::new(1, 8)) - &prod.scale(&Rational::new(1, 2))
}

/// Solution of `t y' + 2 y = vergne_rhs`.
pub fn gamma_vergne(order: usize) -> Series1 {
    Series1::solve_euler_ode(&vergne_rhs(order), 2).expect("k = 2 > 0")
}

/// `t γ' + 2 γ` for the universal `γ_{1/4}`.
pub fn universal_lhs(order: usize) -> Series1 {
    gamma_series(&quarter(), order).euler_operator(2)
}

/// `g(t) φ₁(-t) (1 - φ₁(t))`.
fn am_shared_term(order: usize) -> Series1 {
    let phi = phi1_series(order);
    &(&g_series(order) * &phi.reflect()) * &(&Series1::one(order) - &phi)
}

/// Solution `Π` of `t Π' + 2 Π = ½ φ₁(t)^{-1} - g(t) φ₁(-t) (1 - φ₁(t))`.
pub fn am_pi_series(order: usize) -> Series1 {
    let rhs = &phi1_inverse(order).scale(&Rational::new(1, 2)) - &am_shared_term(order);
    Series1::solve_euler_ode(&rhs, 2).expect("k = 2 > 0")
}

/// `Π(t) - ¼ (g(t) φ₁(-t) - ½ φ₁(t)^{-1}) t - ½ φ₁(t)^{-1} + g(t) φ₁(-t) (1 - φ₁(t))`.
pub fn am_beta_series(order: usize) -> Series1 {
    let half = Rational::new(1, 2);
    let inv = phi1_inverse(order);
    let bracket = &(&g_series(order) * &phi1_series(order).reflect()) - &inv.scale(&half);
    let middle = (&bracket * &Series1::t(order)).scale(&quarter());
    let head = &am_pi_series(order) - &middle;
    &(&head - &inv.scale(&half)) + &am_shared_term(order)
}

/// `γ_AM` from
/// `γ_AM(-t) + γ_V(t) = φ₁(-t) g(t) t (β_AM(-t) - ¼ φ₁(t) - φ₁'(t))
///                      - ½ φ₁(t)^{-1} t β_AM(-t) - (1/8) t`.
pub fn am_gamma_series(order: usize) -> Series1 {
    let w = order + HEADROOM;
    let t = Series1::t(w);
    let phi = phi1_series(w);
    let beta_neg = am_beta_series(w).reflect();
    let inner = &(&beta_neg - &phi.scale(&quarter())) - &phi1_prime(w);
    let first = &(&(&phi.reflect() * &g_series(w)) * &t) * &inner;
    let second = (&(&phi1_inverse(w) * &t) * &beta_neg).scale(&Rational::new(1, 2));
    let rhs = &(&first - &second) - &t.scale(&Rational::new(1, 8));
    let gamma_neg = &rhs - &gamma_vergne(w);
    gamma_neg.reflect().truncate(order)
}

/// `t γ_AM' + 2 γ_AM`.
pub fn am_lhs(order: usize) -> Series1 {
    am_gamma_series(order).euler_operator(2)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComparisonReport {
    pub check: String,
    pub order: usize,
    pub universal: Series1,
    pub vergne: Series1,
    pub am: Series1,
    /// Smallest degree where any two of the three combinations differ.
    pub first_divergence_degree: Option<usize>,
    pub degree4: BTreeMap<String, Rational>,
    pub pairwise_distinct: bool,
    pub beta_am_matches_universal: bool,
    pub odd_parts_agree: bool,
    pub pass: bool,
}

/// Compare `t γ' + 2 γ` for the universal, Vergne and AM jets.
pub fn compare_solutions_report(order: usize) -> Result<ComparisonReport, SeriesError> {
    if order < 4 {
        return Err(SeriesError::InsufficientOrder {
            needed: 4,
            available: order,
        });
    }
    let universal = universal_lhs(order);
    let vergne = vergne_rhs(order + HEADROOM).truncate(order);
    let am = am_lhs(order);

    let first_divergence_degree = (0..=order).find(|&k| {
        let c = universal.coeff(k);
        c != vergne.coeff(k) || c != am.coeff(k)
    });
    let degree4: BTreeMap<String, Rational> = [
        ("universal", universal.coeff(4)),
        ("vergne", vergne.coeff(4)),
        ("am", am.coeff(4)),
    ]
    .into_iter()
    .map(|(k, v)| (k.to_string(), v.clone()))
    .collect();
    let pairwise_distinct = universal.coeff(4) != vergne.coeff(4)
        && vergne.coeff(4) != am.coeff(4)
        && universal.coeff(4) != am.coeff(4);

    let w = order + HEADROOM;
    let beta_am_matches_universal =
        am_beta_series(w).truncate(order) == beta_series(&quarter(), order);
    let gamma_u = gamma_series(&quarter(), order).odd();
    let odd_parts_agree =
        gamma_vergne(w).truncate(order).odd() == gamma_u && am_gamma_series(order).odd() == gamma_u;

    let pass = first_divergence_degree == Some(4)
        && pairwise_distinct
        && beta_am_matches_universal
        && odd_parts_agree;
    Ok(ComparisonReport {
        check: "compare_appendix".to_string(),
        order,
        universal,
        vergne,
        am,
        first_divergence_degree,
        degree4,
        pairwise_distinct,
        beta_am_matches_universal,
        odd_parts_agree,
        pass,
    })
}
