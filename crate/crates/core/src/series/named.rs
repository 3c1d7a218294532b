use std::sync::{Mutex, OnceLock};

use super::Series1;
use crate::rational::{binomial, factorial, Rational};

fn bernoulli_cache() -> &'static Mutex<Vec<Rational>> {
    static CACHE: OnceLock<Mutex<Vec<Rational>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(vec![Rational::one()]))
}

/// Bernoulli number `B_m` with the `t/(e^t - 1)` convention (`B_1 = -1/2`).
///
/// Uses `Σ_{j<=m} C(m+1, j) B_j = 0` and memoizes across calls.
pub fn bernoulli(m: usize) -> Rational {
    let mut cache = bernoulli_cache().lock().unwrap_or_else(|e| e.into_inner());
    while cache.len() <= m {
        let n = cache.len();
        let acc: Rational = cache
            .iter()
            .enumerate()
            .map(|(j, b)| binomial(n + 1, j) * b)
            .sum();
        cache.push(-acc / Rational::from((n + 1) as i64));
    }
    cache[m].clone()
}

/// `φ₁(t) = t/(e^t - 1) = Σ B_k t^k / k!`.
pub fn phi1_series(order: usize) -> Series1 {
    Series1::from_fn(order, |k| bernoulli(k) / factorial(k))
}

/// `ψ(t) = -(φ₁(t) - 1)/2`.
pub fn psi_series(order: usize) -> Series1 {
    let phi = phi1_series(order);
    (&phi - &Series1::one(order)).scale(&Rational::new(-1, 2))
}

/// `e^{c t}`.
pub fn exp_series(c: &Rational, order: usize) -> Series1 {
    Series1::from_fn(order, |k| c.pow(k as u32) / factorial(k))
}

/// `(e^t - 1)/t = Σ t^k/(k+1)!`, the inverse of `φ₁`.
pub fn expm1_over_t(order: usize) -> Series1 {
    Series1::from_fn(order, |k| factorial(k + 1).recip())
}
