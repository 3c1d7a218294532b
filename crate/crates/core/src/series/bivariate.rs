use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use super::{Series1, SeriesError};
use crate::rational::{binomial, Rational};

/// Truncated power series in `(t, u)`, bounded by total degree.
///
/// Only nonzero coefficients with `i + j <= order` are stored; the key
/// `(i, j)` stands for `t^i u^j`.
#[derive(Clone, PartialEq, Eq)]
pub struct Series2 {
    terms: BTreeMap<(usize, usize), Rational>,
    order: usize,
}

/// One serialized coefficient `{"i": .., "j": .., "c": "p/q"}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Term2 {
    pub i: usize,
    pub j: usize,
    pub c: Rational,
}

impl Series2 {
    pub fn zero(order: usize) -> Self {
        Series2 {
            terms: BTreeMap::new(),
            order,
        }
    }

    pub fn constant(c: Rational, order: usize) -> Self {
        Series2::monomial(0, 0, c, order)
    }

    pub fn one(order: usize) -> Self {
        Series2::constant(Rational::one(), order)
    }

    pub fn monomial(i: usize, j: usize, c: Rational, order: usize) -> Self {
        let mut s = Series2::zero(order);
        s.add_term(i, j, c);
        s
    }

    pub fn from_terms(
        order: usize,
        terms: impl IntoIterator<Item = ((usize, usize), Rational)>,
    ) -> Self {
        let mut s = Series2::zero(order);
        for ((i, j), c) in terms {
            s.add_term(i, j, c);
        }
        s
    }

    /// `a(t)` viewed as a series in `(t, u)`.
    pub fn from_t(a: &Series1) -> Self {
        Series2::from_terms(
            a.order(),
            a.coeffs()
                .iter()
                .cloned()
                .enumerate()
                .map(|(k, c)| ((k, 0), c)),
        )
    }

    /// `a(u)` viewed as a series in `(t, u)`.
    pub fn from_u(a: &Series1) -> Self {
        Series2::from_terms(
            a.order(),
            a.coeffs()
                .iter()
                .cloned()
                .enumerate()
                .map(|(k, c)| ((0, k), c)),
        )
    }

    /// `a(t + u)` through total degree `order`, by binomial expansion.
    pub fn lift_sum(a: &Series1, order: usize) -> Result<Self, SeriesError> {
        if a.order() < order {
            return Err(SeriesError::InsufficientOrder {
                needed: order,
                available: a.order(),
            });
        }
        let mut s = Series2::zero(order);
        for n in 0..=order {
            let c = a.coeff(n);
            if c.is_zero() {
                continue;
            }
            for i in 0..=n {
                s.add_term(i, n - i, c * binomial(n, i));
            }
        }
        Ok(s)
    }

    fn add_term(&mut self, i: usize, j: usize, c: Rational) {
        if i + j > self.order || c.is_zero() {
            return;
        }
        let entry = self.terms.entry((i, j)).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&(i, j));
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeff(&self, i: usize, j: usize) -> Rational {
        self.terms.get(&(i, j)).cloned().unwrap_or_default()
    }

    /// Nonzero terms in `(i, j)` order.
    pub fn terms(&self) -> impl Iterator<Item = (&(usize, usize), &Rational)> {
        self.terms.iter()
    }

    pub fn to_terms(&self) -> Vec<Term2> {
        self.terms
            .iter()
            .map(|(&(i, j), c)| Term2 { i, j, c: c.clone() })
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn truncate(&self, order: usize) -> Self {
        assert!(
            order <= self.order,
            "cannot raise order {} to {order}",
            self.order
        );
        Series2::from_terms(order, self.terms.iter().map(|(&k, c)| (k, c.clone())))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Series2::from_terms(self.order, self.terms.iter().map(|(&k, v)| (k, v * c)))
    }

    /// `ξ(u, t)`.
    pub fn swap(&self) -> Self {
        Series2::from_terms(
            self.order,
            self.terms.iter().map(|(&(i, j), c)| ((j, i), c.clone())),
        )
    }

    /// `(sym, skew)` with `sym = (ξ + ξ^swap)/2` and `skew = (ξ - ξ^swap)/2`.
    pub fn skew_split(&self) -> (Self, Self) {
        let half = Rational::new(1, 2);
        let swapped = self.swap();
        (
            (self + &swapped).scale(&half),
            (self - &swapped).scale(&half),
        )
    }

    pub fn is_symmetric(&self) -> bool {
        *self == self.swap()
    }

    pub fn is_skew(&self) -> bool {
        *self == -&self.swap()
    }

    /// The part of total degree exactly `d`.
    pub fn homogeneous(&self, d: usize) -> Self {
        Series2::from_terms(
            self.order,
            self.terms
                .iter()
                .filter(|(&(i, j), _)| i + j == d)
                .map(|(&k, c)| (k, c.clone())),
        )
    }

    /// The part of `u`-degree exactly `k`.
    pub fn u_degree_part(&self, k: usize) -> Self {
        Series2::from_terms(
            self.order,
            self.terms
                .iter()
                .filter(|(&(_, j), _)| j == k)
                .map(|(&key, c)| (key, c.clone())),
        )
    }

    /// Coefficients of `u^k` as a series in `t` through order `order - k`.
    pub fn u_coefficient(&self, k: usize) -> Series1 {
        assert!(k <= self.order);
        Series1::from_fn(self.order - k, |i| self.coeff(i, k))
    }

    /// Exact division by `t`; requires no pure-`u` terms.
    pub fn div_by_t(&self) -> Result<Self, SeriesError> {
        if self.order == 0 {
            return Err(SeriesError::EmptySeries);
        }
        if let Some((&(_, j), _)) = self.terms.iter().find(|(&(i, _), _)| i == 0) {
            return Err(SeriesError::DivisionByNonUnit { degree: j });
        }
        Ok(Series2::from_terms(
            self.order - 1,
            self.terms
                .iter()
                .map(|(&(i, j), c)| ((i - 1, j), c.clone())),
        ))
    }

    /// Exact division by `t + u`.
    ///
    /// Works one homogeneous degree at a time: with
    /// `ξ_d = Σ c_i t^i u^{d-i}` and quotient `Σ q_i t^i u^{d-1-i}` we get
    /// `q_i = c_i - q_{i-1}`. The remainder vanishes exactly when the
    /// coefficient of `t^d` in `ξ(t, -t)` does; that coefficient is what a
    /// failure reports.
    pub fn div_by_sum(&self) -> Result<Self, SeriesError> {
        if self.order == 0 {
            return Err(SeriesError::EmptySeries);
        }
        let mut out = Series2::zero(self.order - 1);
        for d in 0..=self.order {
            let c: Vec<Rational> = (0..=d).map(|i| self.coeff(i, d - i)).collect();
            if d == 0 {
                if !c[0].is_zero() {
                    return Err(SeriesError::NotDivisible {
                        degree: 0,
                        residue: c[0].clone(),
                    });
                }
                continue;
            }
            let mut prev = Rational::zero();
            for (i, ci) in c.iter().enumerate().take(d) {
                let qi = ci - &prev;
                out.add_term(i, d - 1 - i, qi.clone());
                prev = qi;
            }
            if c[d] != prev {
                let residue = c
                    .iter()
                    .enumerate()
                    .map(|(i, ci)| if (d - i) % 2 == 0 { ci.clone() } else { -ci })
                    .sum();
                return Err(SeriesError::NotDivisible { degree: d, residue });
            }
        }
        Ok(out)
    }

    /// `ξ(x, y)` for the polynomial part.
    pub fn eval_truncated(&self, x: &Rational, y: &Rational) -> Rational {
        self.terms
            .iter()
            .map(|(&(i, j), c)| c * x.pow(i as u32) * y.pow(j as u32))
            .sum()
    }

    /// Human-readable form using the given variable names.
    pub fn pretty(&self, tv: &str, uv: &str) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        let mut sorted: Vec<_> = self.terms.iter().collect();
        sorted.sort_by_key(|(&(i, j), _)| (i + j, std::cmp::Reverse(i)));
        for (&(i, j), c) in sorted {
            let mag = c.abs();
            if out.is_empty() {
                if c.is_negative() {
                    out.push('-');
                }
            } else {
                out.push_str(if c.is_negative() { " - " } else { " + " });
            }
            let mut mono = Vec::new();
            for (v, e) in [(tv, i), (uv, j)] {
                match e {
                    0 => {}
                    1 => mono.push(v.to_string()),
                    _ => mono.push(format!("{v}^{e}")),
                }
            }
            let mono = mono.join(" ");
            if mono.is_empty() {
                out.push_str(&mag.to_string());
            } else if mag.is_one() {
                out.push_str(&mono);
            } else {
                out.push_str(&format!("{mag} {mono}"));
            }
        }
        out
    }
}

impl fmt::Debug for Series2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + O(deg {})", self.pretty("t", "u"), self.order + 1)
    }
}

impl Add for &Series2 {
    type Output = Series2;
    fn add(self, rhs: &Series2) -> Series2 {
        let order = self.order.min(rhs.order);
        let mut out = Series2::zero(order);
        for (&(i, j), c) in self.terms.iter().chain(rhs.terms.iter()) {
            out.add_term(i, j, c.clone());
        }
        out
    }
}

impl Sub for &Series2 {
    type Output = Series2;
    fn sub(self, rhs: &Series2) -> Series2 {
        self + &(-rhs)
    }
}

impl Neg for &Series2 {
    type Output = Series2;
    fn neg(self) -> Series2 {
        Series2 {
            terms: self.terms.iter().map(|(&k, c)| (k, -c)).collect(),
            order: self.order,
        }
    }
}

impl Mul for &Series2 {
    type Output = Series2;
    fn mul(self, rhs: &Series2) -> Series2 {
        let order = self.order.min(rhs.order);
        let mut out = Series2::zero(order);
        for (&(i1, j1), a) in &self.terms {
            if i1 + j1 > order {
                continue;
            }
            for (&(i2, j2), b) in &rhs.terms {
                if i1 + j1 + i2 + j2 <= order {
                    out.add_term(i1 + i2, j1 + j2, a * b);
                }
            }
        }
        out
    }
}

macro_rules! owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for Series2 {
            type Output = Series2;
            fn $method(self, rhs: Series2) -> Series2 {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&Series2> for Series2 {
            type Output = Series2;
            fn $method(self, rhs: &Series2) -> Series2 {
                (&self).$method(rhs)
            }
        }
    };
}

owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

impl Neg for Series2 {
    type Output = Series2;
    fn neg(self) -> Series2 {
        -&self
    }
}

impl Serialize for Series2 {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.to_terms().serialize(serializer)
    }
}
