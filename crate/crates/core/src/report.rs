//! Machine-readable verification reports.

use serde::Serialize;

use crate::free_lie::{HallBasis, LieElement, LieError};
use crate::rational::Rational;

/// One nonzero Hall coordinate of a difference that should vanish.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub degree: usize,
    pub y_degree: usize,
    pub hall_word: String,
    pub diff: Rational,
}

/// Outcome of a free-Lie-algebra identity check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub check: String,
    pub order: usize,
    pub pass: bool,
    pub failures: Vec<Failure>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub alpha: Option<Rational>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub convention: Option<String>,
}

impl VerifyReport {
    pub fn new(check: &str, order: usize) -> Self {
        VerifyReport {
            check: check.to_string(),
            order,
            pass: true,
            failures: Vec::new(),
            alpha: None,
            convention: None,
        }
    }

    /// Record every nonzero Hall coordinate of `diff`, split by degree and
    /// `y`-degree (up to `max_y_degree`).
    pub fn record_difference(
        &mut self,
        basis: &HallBasis,
        diff: &LieElement,
        max_y_degree: usize,
    ) -> Result<(), LieError> {
        for degree in 1..=basis.max_degree() {
            let component = diff.component(degree);
            if component.is_zero() {
                continue;
            }
            let positions = basis.indices_of_degree(degree);
            for y_degree in 0..=max_y_degree.min(degree) {
                let part = component.y_component(y_degree);
                if part.is_zero() {
                    continue;
                }
                let coords = basis.to_hall_coords(&part, degree)?;
                for (pos, c) in positions.iter().zip(coords) {
                    if !c.is_zero() {
                        self.failures.push(Failure {
                            degree,
                            y_degree,
                            hall_word: basis.words()[*pos].tree.to_string(),
                            diff: c,
                        });
                    }
                }
            }
        }
        self.pass = self.failures.is_empty();
        Ok(())
    }

    pub fn first_failure(&self) -> Option<&Failure> {
        self.failures.first()
    }
}
