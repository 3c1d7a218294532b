use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use super::SeriesError;
use crate::rational::Rational;

/// Truncated power series `c_0 + c_1 t + ... + c_N t^N + O(t^{N+1})`.
///
/// Coefficients past the order are unknown rather than zero, so every binary
/// operation keeps the smaller of the two orders.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Series1 {
    coeffs: Vec<Rational>,
}

impl Series1 {
    /// Panics if `coeffs` is empty: a series always knows at least `c_0`.
    pub fn new(coeffs: Vec<Rational>) -> Self {
        assert!(
            !coeffs.is_empty(),
            "a series needs at least one coefficient"
        );
        Series1 { coeffs }
    }

    pub fn from_fn(order: usize, f: impl FnMut(usize) -> Rational) -> Self {
        Series1::new((0..=order).map(f).collect())
    }

    pub fn zero(order: usize) -> Self {
        Series1::new(vec![Rational::zero(); order + 1])
    }

    pub fn constant(c: Rational, order: usize) -> Self {
        Series1::monomial(0, c, order)
    }

    pub fn one(order: usize) -> Self {
        Series1::constant(Rational::one(), order)
    }

    /// `c t^k` at the given order (the term is dropped if `k > order`).
    pub fn monomial(k: usize, c: Rational, order: usize) -> Self {
        let mut s = Series1::zero(order);
        if k <= order {
            s.coeffs[k] = c;
        }
        s
    }

    /// The series `t`.
    pub fn t(order: usize) -> Self {
        Series1::monomial(1, Rational::one(), order)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `t^k`; panics past the truncation order.
    pub fn coeff(&self, k: usize) -> &Rational {
        assert!(
            k <= self.order(),
            "coefficient {k} beyond order {}",
            self.order()
        );
        &self.coeffs[k]
    }

    pub fn get(&self, k: usize) -> Option<&Rational> {
        self.coeffs.get(k)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Rational::is_zero)
    }

    /// Lowest degree with a nonzero coefficient, if any is known.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn truncate(&self, order: usize) -> Self {
        assert!(
            order <= self.order(),
            "cannot raise order {} to {order}",
            self.order()
        );
        Series1::new(self.coeffs[..=order].to_vec())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Series1::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Multiplication by `t^k`; the order grows by `k`.
    pub fn shift_up(&self, k: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Series1::new(coeffs)
    }

    /// Exact division by `t^k`; the order drops by `k`.
    pub fn shift_down(&self, k: usize) -> Result<Self, SeriesError> {
        if k > self.order() {
            return Err(SeriesError::EmptySeries);
        }
        if let Some(bad) = self.coeffs[..k].iter().position(|c| !c.is_zero()) {
            return Err(SeriesError::DivisionByNonUnit { degree: bad });
        }
        Ok(Series1::new(self.coeffs[k..].to_vec()))
    }

    /// `a(c t)`: coefficient `k` is multiplied by `c^k`.
    pub fn scale_arg(&self, c: &Rational) -> Self {
        let mut pow = Rational::one();
        let coeffs = self
            .coeffs
            .iter()
            .map(|a| {
                let v = a * &pow;
                pow = &pow * c;
                v
            })
            .collect();
        Series1::new(coeffs)
    }

    /// `a(-t)`.
    pub fn reflect(&self) -> Self {
        self.scale_arg(&Rational::from(-1))
    }

    pub fn derivative(&self) -> Result<Self, SeriesError> {
        if self.order() == 0 {
            return Err(SeriesError::EmptySeries);
        }
        Ok(Series1::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * Rational::from(k as i64))
                .collect(),
        ))
    }

    /// Split into `(even, odd)` parts, both at the input's order.
    pub fn parity_split(&self) -> (Self, Self) {
        let pick = |parity: usize| {
            Series1::new(
                self.coeffs
                    .iter()
                    .enumerate()
                    .map(|(k, c)| {
                        if k % 2 == parity {
                            c.clone()
                        } else {
                            Rational::zero()
                        }
                    })
                    .collect(),
            )
        };
        (pick(0), pick(1))
    }

    pub fn even(&self) -> Self {
        self.parity_split().0
    }

    pub fn odd(&self) -> Self {
        self.parity_split().1
    }

    /// Quotient `self / divisor`.
    ///
    /// The divisor must be a unit, or both operands must share a factor
    /// `t^k` whose removal leaves a unit divisor. In the second case the
    /// result order drops by `k`.
    pub fn div(&self, divisor: &Series1) -> Result<Self, SeriesError> {
        let k = divisor
            .valuation()
            .ok_or(SeriesError::DivisionByNonUnit { degree: 0 })?;
        let (num, den) = if k == 0 {
            (self.clone(), divisor.clone())
        } else {
            (self.shift_down(k)?, divisor.shift_down(k)?)
        };
        let order = num.order().min(den.order());
        let inv_lead = den.coeffs[0].recip();
        let mut out: Vec<Rational> = Vec::with_capacity(order + 1);
        for n in 0..=order {
            let mut acc = num.coeffs[n].clone();
            for j in 1..=n {
                if !den.coeffs[j].is_zero() {
                    acc -= &(&den.coeffs[j] * &out[n - j]);
                }
            }
            out.push(acc * &inv_lead);
        }
        Ok(Series1::new(out))
    }

    pub fn inverse(&self) -> Result<Self, SeriesError> {
        Series1::one(self.order()).div(self)
    }

    /// Apply `t d/dt + k`.
    pub fn euler_operator(&self, k: i64) -> Self {
        Series1::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(n, c)| c * Rational::from(n as i64 + k))
                .collect(),
        )
    }

    /// Solve `t y' + k y = f` coefficientwise: `y_n = f_n / (n + k)`.
    pub fn solve_euler_ode(f: &Series1, k: i64) -> Result<Self, SeriesError> {
        let mut out = Vec::with_capacity(f.order() + 1);
        for (n, c) in f.coeffs.iter().enumerate() {
            let d = n as i64 + k;
            if d == 0 {
                if c.is_zero() {
                    // free constant; pick the zero solution
                    out.push(Rational::zero());
                    continue;
                }
                return Err(SeriesError::ZeroDivisor { degree: n });
            }
            out.push(c / Rational::from(d));
        }
        Ok(Series1::new(out))
    }

    /// Value of the polynomial part at `t = x`.
    pub fn eval_truncated(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    /// Human-readable form, e.g. `1 - 1/2 t + 1/12 t^2`.
    pub fn pretty(&self, var: &str) -> String {
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if out.is_empty() {
                if c.is_negative() {
                    out.push('-');
                }
            } else {
                out.push_str(if c.is_negative() { " - " } else { " + " });
            }
            let mono = match k {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{k}"),
            };
            if k == 0 {
                out.push_str(&mag.to_string());
            } else if mag.is_one() {
                out.push_str(&mono);
            } else {
                out.push_str(&format!("{mag} {mono}"));
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

impl fmt::Debug for Series1 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + O(t^{})", self.pretty("t"), self.order() + 1)
    }
}

fn zip_with(a: &Series1, b: &Series1, f: impl Fn(&Rational, &Rational) -> Rational) -> Series1 {
    let order = a.order().min(b.order());
    Series1::new((0..=order).map(|k| f(&a.coeffs[k], &b.coeffs[k])).collect())
}

impl Add for &Series1 {
    type Output = Series1;
    fn add(self, rhs: &Series1) -> Series1 {
        zip_with(self, rhs, |a, b| a + b)
    }
}

impl Sub for &Series1 {
    type Output = Series1;
    fn sub(self, rhs: &Series1) -> Series1 {
        zip_with(self, rhs, |a, b| a - b)
    }
}

impl Mul for &Series1 {
    type Output = Series1;
    fn mul(self, rhs: &Series1) -> Series1 {
        let order = self.order().min(rhs.order());
        let mut out = vec![Rational::zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(order + 1 - i) {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        Series1::new(out)
    }
}

impl Neg for &Series1 {
    type Output = Series1;
    fn neg(self) -> Series1 {
        Series1::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for Series1 {
            type Output = Series1;
            fn $method(self, rhs: Series1) -> Series1 {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&Series1> for Series1 {
            type Output = Series1;
            fn $method(self, rhs: &Series1) -> Series1 {
                (&self).$method(rhs)
            }
        }
    };
}

owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

impl Neg for Series1 {
    type Output = Series1;
    fn neg(self) -> Series1 {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    fn s(cs: &[(i64, i64)]) -> Series1 {
        Series1::new(cs.iter().map(|&(n, d)| q(n, d)).collect())
    }

    #[test]
    fn product_of_conjugates() {
        let a = s(&[(1, 1), (1, 1), (0, 1)]);
        let b = s(&[(1, 1), (-1, 1), (0, 1)]);
        assert_eq!(&a * &b, s(&[(1, 1), (0, 1), (-1, 1)]));
    }

    #[test]
    fn product_keeps_smaller_order() {
        let a = Series1::one(5);
        let b = Series1::one(2);
        assert_eq!((&a * &b).order(), 2);
        assert_eq!((&a + &b).order(), 2);
    }

    #[test]
    fn division_cancels_common_t_power() {
        let t = Series1::t(3);
        let one = t.div(&t).unwrap();
        assert_eq!(one, Series1::one(2));
    }

    #[test]
    fn division_by_non_unit_fails() {
        let a = Series1::one(3);
        let b = Series1::t(3);
        assert_eq!(a.div(&b), Err(SeriesError::DivisionByNonUnit { degree: 0 }));
        assert!(a.div(&Series1::zero(3)).is_err());
    }

    #[test]
    fn scale_arg_examples() {
        let t2 = Series1::monomial(2, q(1, 1), 3);
        assert_eq!(t2.scale_arg(&q(2, 1)), Series1::monomial(2, q(4, 1), 3));
        assert_eq!(t2.scale_arg(&q(1, 1)), t2);
    }

    #[test]
    fn derivative_examples() {
        let t3 = Series1::monomial(3, q(1, 1), 4);
        assert_eq!(t3.derivative().unwrap(), Series1::monomial(2, q(3, 1), 3));
        assert!(Series1::one(3).derivative().unwrap().is_zero());
        assert_eq!(Series1::one(0).derivative(), Err(SeriesError::EmptySeries));
    }

    #[test]
    fn parity_split_of_mixed() {
        let a = s(&[(0, 1), (1, 1), (1, 1)]);
        let (e, o) = a.parity_split();
        assert_eq!(e, Series1::monomial(2, q(1, 1), 2));
        assert_eq!(o, Series1::t(2));
    }

    #[test]
    fn euler_ode_examples() {
        let f = Series1::t(3);
        assert_eq!(
            Series1::solve_euler_ode(&f, 2).unwrap(),
            Series1::monomial(1, q(1, 3), 3)
        );
        assert!(Series1::solve_euler_ode(&Series1::zero(4), 2)
            .unwrap()
            .is_zero());
        assert_eq!(
            Series1::solve_euler_ode(&Series1::one(2), 0),
            Err(SeriesError::ZeroDivisor { degree: 0 })
        );
    }

    #[test]
    fn pretty_print() {
        let a = s(&[(1, 1), (-1, 2), (1, 12)]);
        assert_eq!(a.pretty("t"), "1 - 1/2 t + 1/12 t^2");
        assert_eq!(s(&[(0, 1), (-1, 1)]).pretty("t"), "-t");
        assert_eq!(Series1::zero(3).pretty("t"), "0");
    }
}
