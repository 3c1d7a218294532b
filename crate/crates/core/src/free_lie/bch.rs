//! Campbell–Hausdorff series through truncated `exp` and `log` in the free
//! associative algebra.

use super::hall::HallBasis;
use super::lie::LieElement;
use super::ncpoly::NCPoly;
use super::LieError;
use crate::rational::{factorial, Rational};

/// `exp(p)` for `p` without constant term.
pub fn exp_nc(p: &NCPoly) -> NCPoly {
    let n = p.max_degree();
    let mut acc = NCPoly::one(n);
    let mut power = NCPoly::one(n);
    for k in 1..=n {
        power = &power * p;
        if power.is_zero() {
            break;
        }
        acc = &acc + &power.scale(&factorial(k).recip());
    }
    acc
}

/// `log(1 + z)` for `z` without constant term.
pub fn log1p_nc(z: &NCPoly) -> NCPoly {
    let n = z.max_degree();
    let mut acc = NCPoly::zero(n);
    let mut power = NCPoly::one(n);
    for k in 1..=n {
        power = &power * z;
        if power.is_zero() {
            break;
        }
        let sign = if k % 2 == 1 { 1 } else { -1 };
        acc = &acc + &power.scale(&Rational::new(sign, k as i64));
    }
    acc
}

/// `log(exp(a) exp(b))`, truncated at the smaller of the two degree bounds.
pub fn bch_of(a: &LieElement, b: &LieElement) -> LieElement {
    let prod = &exp_nc(a.poly()) * &exp_nc(b.poly());
    let z = &prod - &NCPoly::one(prod.max_degree());
    LieElement::from_poly_unchecked(log1p_nc(&z))
}

/// `z(x, y) = log(exp(x) exp(y))` through degree `basis.max_degree()`,
/// checked to be a Lie element in every degree.
pub fn bch(basis: &HallBasis) -> Result<LieElement, LieError> {
    let n = basis.max_degree();
    let z = bch_of(&LieElement::x(n), &LieElement::y(n));
    basis.expand_in_basis(&z)?;
    Ok(z)
}

/// Components of `log(exp(y) exp(x))` of `y`-degree `0..=k`.
///
/// The `y`-degree-`j` component is `1/j!` times the `j`-th derivative at
/// `s = 0` of `log(exp(s y) exp(x))`.
pub fn bch_y_jet(basis: &HallBasis, k: usize) -> Result<Vec<LieElement>, LieError> {
    let n = basis.max_degree();
    if k > n {
        return Err(LieError::DegreeOverflow { degree: k, max: n });
    }
    let z = bch_of(&LieElement::y(n), &LieElement::x(n));
    let parts: Vec<LieElement> = (0..=k).map(|j| z.y_component(j)).collect();
    for p in &parts {
        basis.expand_in_basis(p)?;
    }
    Ok(parts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    #[test]
    fn low_degree_terms() {
        let basis = HallBasis::new(3);
        let z = bch(&basis).unwrap();
        let x = LieElement::x(3);
        let y = LieElement::y(3);
        assert_eq!(z.component(1), &x + &y);
        assert_eq!(z.component(2), x.bracket(&y).scale(&q(1, 2)));
        let xxy = x.bracket(&x.bracket(&y));
        let yxy = y.bracket(&x.bracket(&y));
        assert_eq!(
            z.component(3),
            &xxy.scale(&q(1, 12)) - &yxy.scale(&q(1, 12))
        );
    }

    #[test]
    fn exp_log_roundtrip() {
        let x = LieElement::x(5);
        let y = LieElement::y(5);
        let p = (&x + &y.scale(&q(2, 3))).poly().clone();
        let back = log1p_nc(&(&exp_nc(&p) - &NCPoly::one(5)));
        assert_eq!(back, p);
    }
}
