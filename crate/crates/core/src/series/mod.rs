//! Truncated formal power series over the rationals, in one variable `t`
//! and in two variables `(t, u)`, plus the named generating series the rest
//! of the crate is built from.

mod bivariate;
mod named;
mod univariate;

use thiserror::Error;

pub use bivariate::{Series2, Term2};
pub use named::{bernoulli, exp_series, expm1_over_t, phi1_series, psi_series};
pub use univariate::Series1;

use crate::rational::Rational;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SeriesError {
    #[error("division by a non-unit series (offending coefficient at degree {degree})")]
    DivisionByNonUnit { degree: usize },
    #[error("operation needs a series of order at least 1")]
    EmptySeries,
    #[error("not divisible by (t+u): degree {degree} component leaves residue {residue}")]
    NotDivisible { degree: usize, residue: Rational },
    #[error("Euler operator is singular at degree {degree}")]
    ZeroDivisor { degree: usize },
    #[error("series known through order {available}, but order {needed} is required")]
    InsufficientOrder { needed: usize, available: usize },
}
