//! The order-two jet of a universal Kashiwara–Vergne solution and the
//! identities it has to satisfy in the free Lie algebra.
//!
//! With `X = x`, `Y = y` the jet reads
//!
//! ```text
//! A(x, y) = ρ x + β(ad x) y + ½ (π(t,u) : [y, y])_x + O(y³)
//! B(x, y) = α x + γ(ad x) y + O(y²)
//! ```
//!
//! The factor ½ comes from `π` describing the second derivative of `A` in
//! the `y` direction.

use std::fmt;

use serde::Serialize;

use crate::free_lie::{
    apply_series, bch_y_jet, bracket_form, rank_independence, yy_form, HallBasis, LieElement,
};
use crate::rational::Rational;
use crate::report::VerifyReport;
use crate::series::{exp_series, phi1_series, psi_series, Series1, Series2, SeriesError};
use crate::Error;

/// Which prefactor turns `s_skew / (t+u)` into `π`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum PiConvention {
    /// `π = φ₁(-(t+u)) · s_skew / (t+u)`, from inverting `1 - e^{-(t+u)}`.
    #[default]
    Reflected,
    /// `π = -φ₁(t+u) · s_skew / (t+u)`, from inverting `1 - e^{t+u}`.
    Literal,
}

impl PiConvention {
    pub const ALL: [PiConvention; 2] = [PiConvention::Reflected, PiConvention::Literal];

    pub fn name(self) -> &'static str {
        match self {
            PiConvention::Reflected => "phi1(-(t+u))",
            PiConvention::Literal => "-phi1(t+u)",
        }
    }

    fn prefactor(self, order: usize) -> Series2 {
        let phi = phi1_series(order);
        match self {
            PiConvention::Reflected => {
                Series2::lift_sum(&phi.reflect(), order).expect("same order")
            }
            PiConvention::Literal => -Series2::lift_sum(&phi, order).expect("same order"),
        }
    }
}

impl fmt::Display for PiConvention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// `(φ₁(t) - 1)/t`.
fn phi1_minus_one_over_t(order: usize) -> Series1 {
    let phi = phi1_series(order + 1);
    (&phi - &Series1::one(order + 1))
        .shift_down(1)
        .expect("φ₁(0) = 1")
}

/// `β_α(t) = φ₁(-t) ((φ₁(t) - 1)/t + α)`.
pub fn beta_series(alpha: &Rational, order: usize) -> Series1 {
    let inner = &phi1_minus_one_over_t(order) + &Series1::constant(alpha.clone(), order);
    &phi1_series(order).reflect() * &inner
}

/// `γ_α(t)_odd = (α/2) t + ½ ((φ₁(t) - 1)/t · φ₁(-t))_odd`.
pub fn gamma_odd_series(alpha: &Rational, order: usize) -> Series1 {
    let prod = &phi1_minus_one_over_t(order) * &phi1_series(order).reflect();
    let half = Rational::new(1, 2);
    &prod.odd().scale(&half) + &Series1::monomial(1, alpha * &half, order)
}

/// `γ_α(t) = β_α(t) - β_α(0) + ψ'(0) - ψ'(t)`.
pub fn gamma_series(alpha: &Rational, order: usize) -> Series1 {
    let beta = beta_series(alpha, order);
    let dpsi = psi_series(order + 1).derivative().expect("order >= 1");
    let constant = dpsi.coeff(0) - beta.coeff(0);
    &(&beta - &dpsi) + &Series1::constant(constant, order)
}

/// `s(t,u) = (φ₁(t+u) - φ₁(u))/t · φ₁(t) + α u - 2 γ(u)` through `order`.
pub fn s_series(alpha: &Rational, gamma: &Series1, order: usize) -> Result<Series2, Error> {
    if gamma.order() < order {
        return Err(SeriesError::InsufficientOrder {
            needed: order,
            available: gamma.order(),
        }
        .into());
    }
    let base = second_derivative_kernel(order)?;
    let linear = Series2::monomial(0, 1, alpha.clone(), order);
    let gamma_u = Series2::from_u(&gamma.truncate(order)).scale(&Rational::from(-2));
    Ok(&(&base + &linear) + &gamma_u)
}

/// `(φ₁(t+u) - φ₁(u))/t · φ₁(t)`, the bracket-form kernel of the second
/// `y`-derivative of `log(exp(s y) exp(x))`.
pub fn second_derivative_kernel(order: usize) -> Result<Series2, Error> {
    let phi = phi1_series(order + 1);
    let diff = &Series2::lift_sum(&phi, order + 1)? - &Series2::from_u(&phi);
    Ok(&diff.div_by_t()? * &Series2::from_t(&phi1_series(order)))
}

/// `π_γ(t,u)` through total degree `order`. Needs `γ` through `order + 1`.
///
/// Fails with [`SeriesError::NotDivisible`] when the odd part of `γ` is not
/// `γ_α,odd`, since only then is `s_skew` divisible by `t + u`.
pub fn pi_series(
    alpha: &Rational,
    gamma: &Series1,
    order: usize,
    convention: PiConvention,
) -> Result<Series2, Error> {
    let s = s_series(alpha, gamma, order + 1)?;
    let (_, skew) = s.skew_split();
    let quotient = skew.div_by_sum()?;
    Ok(&convention.prefactor(order) * &quotient)
}

/// The jet `(ρ, α, β, γ, π)` through order `order` in `t`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KvJet {
    pub alpha: Rational,
    pub rho: Rational,
    pub beta: Series1,
    pub gamma: Series1,
    pub pi: Series2,
    pub order: usize,
    #[serde(serialize_with = "ser_convention")]
    pub convention: PiConvention,
}

fn ser_convention<S: serde::Serializer>(c: &PiConvention, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(c.name())
}

impl KvJet {
    /// `ρ x + β(ad x) y + ½ (π : [y, y])_x` in `L(x, y)` through `max_degree`.
    pub fn a_jet(&self, max_degree: usize) -> Result<LieElement, Error> {
        let x = LieElement::x(max_degree);
        let y = LieElement::y(max_degree);
        let linear = &x.scale(&self.rho) + &apply_series(&self.beta, &x, &y)?;
        let quadratic = bracket_form(&self.pi, &y, &y, &x)?.scale(&Rational::new(1, 2));
        Ok(&linear + &quadratic)
    }

    /// `α x + γ(ad x) y` in `L(x, y)` through `max_degree`.
    pub fn b_jet(&self, max_degree: usize) -> Result<LieElement, Error> {
        let x = LieElement::x(max_degree);
        let y = LieElement::y(max_degree);
        Ok(&x.scale(&self.alpha) + &apply_series(&self.gamma, &x, &y)?)
    }

    /// Same jet with `γ` replaced and `π` left untouched.
    pub fn with_gamma(&self, gamma: Series1) -> Self {
        KvJet {
            gamma,
            ..self.clone()
        }
    }

    pub fn with_rho(&self, rho: Rational) -> Self {
        KvJet {
            rho,
            ..self.clone()
        }
    }
}

pub fn kv_jet(alpha: &Rational, order: usize) -> Result<KvJet, Error> {
    kv_jet_with(alpha, order, PiConvention::default())
}

pub fn kv_jet_with(
    alpha: &Rational,
    order: usize,
    convention: PiConvention,
) -> Result<KvJet, Error> {
    let gamma_ext = gamma_series(alpha, order + 1);
    let pi = pi_series(alpha, &gamma_ext, order, convention)?;
    Ok(KvJet {
        alpha: alpha.clone(),
        rho: Rational::zero(),
        beta: beta_series(alpha, order),
        gamma: gamma_ext.truncate(order),
        pi,
        order,
        convention,
    })
}

/// Check
/// `log(e^y e^x) - x - y = (1 - e^{-ad x}) A + (e^{ad y} - 1) B`
/// in `L(x, y)` through total degree `basis.max_degree()` and `y`-degree 2.
///
/// `y`-degree 3 and up is dropped on both sides: the unknown higher parts of
/// `A` and `B` only reach there.
pub fn verify_eq1_jet(basis: &HallBasis, jet: &KvJet) -> Result<VerifyReport, Error> {
    let n = basis.max_degree();
    let x = LieElement::x(n);
    let y = LieElement::y(n);
    let jet_parts = bch_y_jet(basis, 2.min(n))?;
    let bch = jet_parts
        .iter()
        .fold(LieElement::zero(n), |acc, p| &acc + p);
    let lhs = &(&bch - &x) - &y;

    let one_minus_exp_neg = &Series1::one(n) - &exp_series(&Rational::from(-1), n);
    let exp_minus_one = &exp_series(&Rational::one(), n) - &Series1::one(n);
    let a_term = apply_series(&one_minus_exp_neg, &x, &jet.a_jet(n)?)?;
    let b_term = apply_series(&exp_minus_one, &y, &jet.b_jet(n)?)?;
    let rhs = (&a_term + &b_term).y_at_most(2);

    let mut report = VerifyReport::new("eq1_jet", n);
    report.alpha = Some(jet.alpha.clone());
    report.convention = Some(jet.convention.name().to_string());
    report.record_difference(basis, &(&lhs - &rhs), 2)?;
    Ok(report)
}

/// Conventions for `π` under which the jet at `alpha` passes
/// [`verify_eq1_jet`].
pub fn passing_pi_conventions(
    basis: &HallBasis,
    alpha: &Rational,
) -> Result<Vec<PiConvention>, Error> {
    let mut out = Vec::new();
    for conv in PiConvention::ALL {
        let jet = kv_jet_with(alpha, basis.max_degree(), conv)?;
        if verify_eq1_jet(basis, &jet)?.pass {
            out.push(conv);
        }
    }
    Ok(out)
}

/// Twice the `y`-degree-2 part of `log(e^y e^x)` against
/// `((φ₁(t+u) - φ₁(u))/t · φ₁(t) : [y, y])_x`.
pub fn verify_lemma_d2(basis: &HallBasis) -> Result<VerifyReport, Error> {
    let n = basis.max_degree();
    let mut report = VerifyReport::new("lemma_d2", n);
    if n < 2 {
        return Ok(report);
    }
    let jet = bch_y_jet(basis, 2)?;
    let lhs = jet[2].scale(&Rational::from(2));
    let rhs = yy_form(&second_derivative_kernel(n - 2)?, n)?;
    report.record_difference(basis, &(&lhs - &rhs), 2)?;
    Ok(report)
}

/// Order-one consequences of `A(x, y) = B(-y, -x)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SymmetryReport {
    pub check: String,
    pub alpha: Rational,
    pub beta0: Rational,
    pub beta1: Rational,
    pub gamma1: Rational,
    /// The only `α` with `β_α(0) = -α`.
    pub symmetric_alpha: Rational,
    pub constant_term_ok: bool,
    pub bidegree_11_ok: bool,
    pub pass: bool,
}

/// Compare `A(x, y)` with `B(-y, -x)` on the bidegrees both jets determine:
/// `(1,0)`, `(0,1)` and `(1,1)` in `(x, y)`.
pub fn verify_symmetry_order1(alpha: &Rational, order: usize) -> Result<SymmetryReport, Error> {
    let order = order.max(2);
    let jet = kv_jet(alpha, order)?;
    let n = 2;
    let (x, y) = (LieElement::x(n), LieElement::y(n));
    let a = &x.scale(&jet.rho) + &apply_series(&jet.beta.truncate(1), &x, &y)?;
    let b_swapped = jet.b_jet(n)?.swap_negate();
    let agree =
        |i: usize, j: usize| a.bidegree_component(i, j) == b_swapped.bidegree_component(i, j);
    let constant_term_ok = agree(0, 1) && agree(1, 0);
    let bidegree_11_ok = agree(1, 1);

    // β_α(0) + α is affine in α; solve for its root.
    let offset = |a: &Rational| beta_series(a, 0).coeff(0) + a;
    let at0 = offset(&Rational::zero());
    let slope = offset(&Rational::one()) - &at0;
    let symmetric_alpha = -(at0 / slope);

    Ok(SymmetryReport {
        check: "symmetry_order1".to_string(),
        alpha: alpha.clone(),
        beta0: jet.beta.coeff(0).clone(),
        beta1: jet.beta.coeff(1).clone(),
        gamma1: jet.gamma.coeff(1).clone(),
        symmetric_alpha,
        constant_term_ok,
        bidegree_11_ok,
        pass: constant_term_ok && bidegree_11_ok,
    })
}

/// `[y, (ad x)^{2n+1} y]` lies outside the span of
/// `((t+u) t^l u^{2n-l} : [y, y])_x`, `0 <= l <= 2n`.
pub fn lemma_l14_check(n: usize) -> Result<bool, Error> {
    let degree = 2 * n + 3;
    let mono = |i: usize, j: usize| Series2::monomial(i, j, Rational::one(), degree);
    let target = yy_form(&mono(0, 2 * n + 1), degree)?;
    let sum = &mono(1, 0) + &mono(0, 1);
    let spanning = (0..=2 * n)
        .map(|l| yy_form(&(&sum * &mono(l, 2 * n - l)), degree))
        .collect::<Result<Vec<_>, _>>()?;
    let (_, member) = rank_independence(&spanning, degree, Some(&target))?;
    Ok(member == Some(false) && !target.is_zero())
}

/// Rank of the images of the skew monomials `t^j u^{n-j} - u^j t^{n-j}`,
/// `j < n - j`, under `(· : [y, y])_x`, and the number of monomials.
pub fn skew_images_rank(n: usize) -> Result<(usize, usize), Error> {
    let degree = n + 2;
    let images = (0..=n)
        .filter(|&j| j < n - j)
        .map(|j| {
            let xi = &Series2::monomial(j, n - j, Rational::one(), n)
                - &Series2::monomial(n - j, j, Rational::one(), n);
            yy_form(&xi, degree)
        })
        .collect::<Result<Vec<_>, _>>()?;
    let (rank, _) = rank_independence(&images, degree, None)?;
    Ok((rank, images.len()))
}

/// The skew monomials of degree `n` map injectively into `L(x, y)`.
pub fn skew_injectivity_check(n: usize) -> Result<bool, Error> {
    let (rank, count) = skew_images_rank(n)?;
    Ok(rank == count)
}
