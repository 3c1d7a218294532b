//! The free Lie algebra `L(x, y)` truncated by degree.
//!
//! Elements are kept in canonical form as their expansion in the free
//! associative algebra ([`NCPoly`]). Hall coordinates are computed from that
//! expansion by exact elimination when needed.

mod bch;
mod hall;
mod lie;
pub mod linalg;
mod ncpoly;

use thiserror::Error;

pub use bch::{bch, bch_of, bch_y_jet, exp_nc, log1p_nc};
pub use hall::{DegreeCoords, HallBasis, HallWord};
pub use lie::{apply_series, bracket_form, LieElement, LieTree};
pub use ncpoly::{Letter, NCPoly, Word, MAX_WORD_LEN};

use crate::series::Series2;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LieError {
    #[error("degree {degree} exceeds the truncation degree {max}")]
    DegreeOverflow { degree: usize, max: usize },
    #[error("degree {degree} component is not in the Lie subspace")]
    NotALieElement { degree: usize },
    #[error("series known through order {available}, but order {needed} is required")]
    InsufficientOrder { needed: usize, available: usize },
    #[error("element is not homogeneous of degree {degree}")]
    NotHomogeneous { degree: usize },
    #[error("cannot parse bracket expression {0:?}")]
    Parse(String),
}

/// Rank of homogeneous degree-`d` elements, and whether `target` lies in
/// their span when one is given.
pub fn rank_independence(
    elements: &[LieElement],
    d: usize,
    target: Option<&LieElement>,
) -> Result<(usize, Option<bool>), LieError> {
    let check = |e: &LieElement| -> Result<(), LieError> {
        if e.poly().terms().any(|(w, _)| w.len() != d) {
            return Err(LieError::NotHomogeneous { degree: d });
        }
        Ok(())
    };
    for e in elements {
        check(e)?;
    }
    let polys: Vec<&NCPoly> = elements.iter().map(LieElement::poly).collect();
    let rank = linalg::rank_fraction_free(&polys);
    let member = match target {
        None => None,
        Some(t) => {
            check(t)?;
            let mut with_target = polys.clone();
            with_target.push(t.poly());
            Some(linalg::rank_fraction_free(&with_target) == rank)
        }
    };
    Ok((rank, member))
}

/// `(t^i u^j : [y, y])_x = [(ad x)^i y, (ad x)^j y]` extended linearly.
pub fn yy_form(xi: &Series2, max_degree: usize) -> Result<LieElement, LieError> {
    let y = LieElement::y(max_degree);
    bracket_form(xi, &y, &y, &LieElement::x(max_degree))
}
