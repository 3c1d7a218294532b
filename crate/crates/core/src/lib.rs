//! Exact-arithmetic kernel for the order-two jet of universal symmetric
//! solutions of the Kashiwara–Vergne equations.
//!
//! Everything is computed over the rationals at a finite truncation order:
//! power series ([`series`]), the free Lie algebra on two generators
//! ([`free_lie`]), the jet itself and its free-Lie-algebra checks ([`kv`]),
//! the trace equation on a three-dimensional model algebra ([`trace`]), and
//! the comparison with known quadratic-case solutions ([`appendix`]).

pub mod appendix;
pub mod cli;
pub mod free_lie;
pub mod kv;
pub mod rational;
pub mod report;
pub mod series;
pub mod trace;

use thiserror::Error;

pub use rational::Rational;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error(transparent)]
    Series(#[from] series::SeriesError),
    #[error(transparent)]
    Lie(#[from] free_lie::LieError),
}
