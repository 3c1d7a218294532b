//! The trace equation on the three-dimensional algebra with basis `a, b, c`
//! and brackets `[a,b] = 0`, `[a,c] = λc`, `[b,c] = μc`.
//!
//! `λ` and `μ` stay formal: matrix entries are polynomials in `(λ, μ)`,
//! stored as [`Series2`] in `(t, u) = (λ, μ)` and truncated at a total degree.
//! The second equation is expanded to first order in `ε` with `X = a`,
//! `Y = εb`, using dual numbers over those matrices.

use std::array;
use std::ops::{Add, Mul, Sub};

use serde::Serialize;

use crate::kv::{beta_series, gamma_odd_series};
use crate::rational::{factorial, Rational};
use crate::series::{psi_series, Series1, Series2, SeriesError, Term2};

/// 3×3 matrix over truncated `ℚ[λ, μ]`, acting on `(a, b, c)` columns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyMat {
    entries: [[Series2; 3]; 3],
}

impl PolyMat {
    pub fn zero(order: usize) -> Self {
        PolyMat {
            entries: array::from_fn(|_| array::from_fn(|_| Series2::zero(order))),
        }
    }

    pub fn identity(order: usize) -> Self {
        let mut m = Self::zero(order);
        for i in 0..3 {
            m.entries[i][i] = Series2::one(order);
        }
        m
    }

    pub fn entry(&self, row: usize, col: usize) -> &Series2 {
        &self.entries[row][col]
    }

    pub fn order(&self) -> usize {
        self.entries[0][0].order()
    }

    pub fn trace(&self) -> Series2 {
        &(&self.entries[0][0] + &self.entries[1][1]) + &self.entries[2][2]
    }

    pub fn scale(&self, c: &Rational) -> Self {
        PolyMat {
            entries: array::from_fn(|i| array::from_fn(|j| self.entries[i][j].scale(c))),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().flatten().all(Series2::is_zero)
    }

    /// `ad v` for `v = v_a a + v_b b + v_c c`.
    pub fn ad(v: &[Series2; 3]) -> Self {
        let order = v[0].order();
        let lam = Series2::monomial(1, 0, Rational::one(), order);
        let mu = Series2::monomial(0, 1, Rational::one(), order);
        let mut m = Self::zero(order);
        m.entries[2][0] = -(&lam * &v[2]);
        m.entries[2][1] = -(&mu * &v[2]);
        m.entries[2][2] = &(&lam * &v[0]) + &(&mu * &v[1]);
        m
    }

    pub fn ad_a(order: usize) -> Self {
        Self::ad(&basis_vector(0, order))
    }

    pub fn ad_b(order: usize) -> Self {
        Self::ad(&basis_vector(1, order))
    }

    /// Matrix times column vector.
    pub fn apply(&self, v: &[Series2; 3]) -> [Series2; 3] {
        array::from_fn(|i| {
            (0..3).fold(Series2::zero(self.order()), |acc, k| {
                &acc + &(&self.entries[i][k] * &v[k])
            })
        })
    }

    pub fn pow(&self, k: usize) -> Self {
        (0..k).fold(Self::identity(self.order()), |acc, _| &acc * self)
    }

    /// `Σ f_k M^k` for `M` with entries vanishing at the origin.
    pub fn apply_series(&self, f: &Series1) -> Self {
        let order = self.order().min(f.order());
        let mut acc = Self::zero(order);
        let mut power = Self::identity(order);
        for k in 0..=order {
            acc = &acc + &power.scale(f.coeff(k));
            power = &power * self;
        }
        acc
    }
}

fn basis_vector(k: usize, order: usize) -> [Series2; 3] {
    array::from_fn(|i| {
        if i == k {
            Series2::one(order)
        } else {
            Series2::zero(order)
        }
    })
}

impl Add for &PolyMat {
    type Output = PolyMat;
    fn add(self, rhs: &PolyMat) -> PolyMat {
        PolyMat {
            entries: array::from_fn(|i| {
                array::from_fn(|j| &self.entries[i][j] + &rhs.entries[i][j])
            }),
        }
    }
}

impl Sub for &PolyMat {
    type Output = PolyMat;
    fn sub(self, rhs: &PolyMat) -> PolyMat {
        PolyMat {
            entries: array::from_fn(|i| {
                array::from_fn(|j| &self.entries[i][j] - &rhs.entries[i][j])
            }),
        }
    }
}

impl Mul for &PolyMat {
    type Output = PolyMat;
    fn mul(self, rhs: &PolyMat) -> PolyMat {
        let order = self.order().min(rhs.order());
        PolyMat {
            entries: array::from_fn(|i| {
                array::from_fn(|j| {
                    (0..3).fold(Series2::zero(order), |acc, k| {
                        &acc + &(&self.entries[i][k] * &rhs.entries[k][j])
                    })
                })
            }),
        }
    }
}

/// `re + ε·eps` with `ε² = 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualMat {
    pub re: PolyMat,
    pub eps: PolyMat,
}

impl DualMat {
    pub fn new(re: PolyMat, eps: PolyMat) -> Self {
        DualMat { re, eps }
    }

    fn identity(order: usize) -> Self {
        DualMat::new(PolyMat::identity(order), PolyMat::zero(order))
    }

    fn zero(order: usize) -> Self {
        DualMat::new(PolyMat::zero(order), PolyMat::zero(order))
    }

    fn order(&self) -> usize {
        self.re.order().min(self.eps.order())
    }

    fn scale(&self, c: &Rational) -> Self {
        DualMat::new(self.re.scale(c), self.eps.scale(c))
    }

    pub fn apply_series(&self, f: &Series1) -> Self {
        let order = self.order().min(f.order());
        let mut acc = Self::zero(order);
        let mut power = Self::identity(order);
        for k in 0..=order {
            acc = &acc + &power.scale(f.coeff(k));
            power = &power * self;
        }
        acc
    }

    pub fn exp(&self) -> Self {
        let order = self.order();
        let coeffs = (0..=order).map(|k| factorial(k).recip()).collect();
        self.apply_series(&Series1::new(coeffs))
    }

    /// `log(I + Z)` where `self = I + Z`.
    pub fn log(&self) -> Self {
        let order = self.order();
        let z = self - &Self::identity(order);
        let coeffs = (0..=order)
            .map(|k| match k {
                0 => Rational::zero(),
                k if k % 2 == 1 => Rational::new(1, k as i64),
                k => Rational::new(-1, k as i64),
            })
            .collect();
        z.apply_series(&Series1::new(coeffs))
    }
}

impl Add for &DualMat {
    type Output = DualMat;
    fn add(self, rhs: &DualMat) -> DualMat {
        DualMat::new(&self.re + &rhs.re, &self.eps + &rhs.eps)
    }
}

impl Sub for &DualMat {
    type Output = DualMat;
    fn sub(self, rhs: &DualMat) -> DualMat {
        DualMat::new(&self.re - &rhs.re, &self.eps - &rhs.eps)
    }
}

impl Mul for &DualMat {
    type Output = DualMat;
    fn mul(self, rhs: &DualMat) -> DualMat {
        DualMat::new(
            &self.re * &rhs.re,
            &(&self.re * &rhs.eps) + &(&self.eps * &rhs.re),
        )
    }
}

/// `tr ξ(ad a, ad b) = ξ(λ, μ) + 2 ξ(0, 0)`.
pub fn trace_functional(xi: &Series2) -> Series2 {
    let constant = xi.coeff(0, 0);
    xi + &Series2::constant(&constant * &Rational::from(2), xi.order())
}

/// Literal trace of `(ad a)^i (ad b)^j` in the matrix model.
pub fn monomial_matrix_trace(i: usize, j: usize, order: usize) -> Series2 {
    (&PolyMat::ad_a(order).pow(i) * &PolyMat::ad_b(order).pow(j)).trace()
}

/// `log(exp(ad a) exp(ε ad b))` in the matrix model.
pub fn model_bch(order: usize) -> DualMat {
    let a = DualMat::new(PolyMat::ad_a(order), PolyMat::zero(order));
    let b = DualMat::new(PolyMat::zero(order), PolyMat::ad_b(order));
    (&a.exp() * &b.exp()).log()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Eq2Report {
    pub check: String,
    pub order: usize,
    pub alpha: Rational,
    pub rho: Rational,
    pub pass: bool,
    /// `ε⁰` coefficient of left minus right side, in `(λ, μ)`.
    pub eps0: Vec<Term2>,
    /// `ε¹` coefficient of left minus right side, in `(λ, μ)`.
    pub eps1: Vec<Term2>,
}

/// Both sides of the trace equation at `X = a`, `Y = εb` through `ε¹` and
/// total degree `order` in `(λ, μ)`.
///
/// The left side uses `δ₁A(X, εY) = ρ id - Σ β_n Σ_j (ad X)^j ad((ad X)^{n-1-j} Y) ε`
/// with `β = β_α`, and `ad(εY) δ₂B = ε ad Y γ(ad X)`.
pub fn verify_eq2_linearized(
    alpha: &Rational,
    gamma: &Series1,
    rho: &Rational,
    order: usize,
) -> Result<Eq2Report, SeriesError> {
    if gamma.order() + 1 < order {
        return Err(SeriesError::InsufficientOrder {
            needed: order - 1,
            available: gamma.order(),
        });
    }
    let ad_a = PolyMat::ad_a(order);
    let ad_b = PolyMat::ad_b(order);
    let b_vec = basis_vector(1, order);

    let lhs0 = ad_a.scale(rho).trace();

    let beta = beta_series(alpha, order);
    let mut delta1 = PolyMat::zero(order);
    for n in 1..=order {
        let coeff = beta.coeff(n);
        if coeff.is_zero() {
            continue;
        }
        for j in 0..n {
            let inner = (0..n - 1 - j).fold(b_vec.clone(), |v, _| ad_a.apply(&v));
            let term = &ad_a.pow(j) * &PolyMat::ad(&inner);
            delta1 = &delta1 - &term.scale(coeff);
        }
    }
    let lhs1 = &(&ad_a * &delta1).trace() + &(&ad_b * &ad_a.apply_series(gamma)).trace();

    let psi = psi_series(order);
    let x = DualMat::new(ad_a.clone(), PolyMat::zero(order));
    let y = DualMat::new(PolyMat::zero(order), ad_b.clone());
    let z = model_bch(order);
    let rhs = &(&x.apply_series(&psi) + &y.apply_series(&psi)) - &z.apply_series(&psi);
    let rhs0 = rhs.re.trace();
    let rhs1 = rhs.eps.trace();

    let diff0 = (&lhs0 - &rhs0).truncate(order);
    let diff1 = (&lhs1 - &rhs1).truncate(order);
    Ok(Eq2Report {
        check: "eq2_linearized".to_string(),
        order,
        alpha: alpha.clone(),
        rho: rho.clone(),
        pass: diff0.is_zero() && diff1.is_zero(),
        eps0: diff0.to_terms(),
        eps1: diff1.to_terms(),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FCheckReport {
    pub check: String,
    pub alpha: Rational,
    pub gamma_f: Series1,
    pub constant_term_ok: bool,
    pub odd_part_ok: bool,
    pub consistent: bool,
}

/// `γ_f = β_α - β_α(0) + f'(0) - f'(t)` and whether a universal solution of
/// the equations with `ψ` replaced by `f` can exist: `f₀ = 0` and the odd part
/// of `γ_f` agrees with the one forced by the first equation.
pub fn f_consistency_check(f: &Series1, alpha: &Rational) -> Result<FCheckReport, SeriesError> {
    let df = f.derivative()?;
    let order = df.order();
    let beta = beta_series(alpha, order);
    let constant = df.coeff(0) - beta.coeff(0);
    let gamma_f = &(&beta - &df) + &Series1::constant(constant, order);
    let constant_term_ok = f.coeff(0).is_zero();
    let odd_part_ok = gamma_f.odd() == gamma_odd_series(alpha, order);
    Ok(FCheckReport {
        check: "f_consistency".to_string(),
        alpha: alpha.clone(),
        gamma_f,
        constant_term_ok,
        odd_part_ok,
        consistent: constant_term_ok && odd_part_ok,
    })
}

type RatMat = [[Rational; 3]; 3];

fn rat_mul(a: &RatMat, b: &RatMat) -> RatMat {
    array::from_fn(|i| array::from_fn(|j| (0..3).map(|k| &a[i][k] * &b[k][j]).sum()))
}

/// Adjoint matrix of `v = v_e e + v_f f + v_h h` in `sl₂`, with
/// `[h,e] = 2e`, `[h,f] = -2f`, `[e,f] = h`.
pub fn sl2_ad(v: &[Rational; 3]) -> RatMat {
    let [ve, vf, vh] = v;
    let two = Rational::from(2);
    let z = Rational::zero;
    [
        [&two * vh, z(), -(&two * ve)],
        [z(), -(&two * vh), &two * vf],
        [-vf.clone(), ve.clone(), z()],
    ]
}

fn sl2_panel() -> Vec<([Rational; 3], [Rational; 3])> {
    let r = Rational::new;
    let e = [r(1, 1), r(0, 1), r(0, 1)];
    let f = [r(0, 1), r(1, 1), r(0, 1)];
    let h = [r(0, 1), r(0, 1), r(1, 1)];
    vec![
        (e.clone(), f.clone()),
        (f.clone(), e.clone()),
        (h.clone(), e.clone()),
        (e.clone(), h.clone()),
        ([r(1, 1), r(1, 1), r(0, 1)], h),
        ([r(1, 2), r(-3, 1), r(2, 3)], [r(5, 1), r(1, 7), r(-1, 1)]),
        ([r(-7, 4), r(2, 5), r(3, 1)], [r(1, 9), r(-4, 3), r(6, 5)]),
    ]
}

/// `tr((ad X)^{2n} ad Y) = 0` in `sl₂` for every `n <= n_max` over a fixed
/// panel of pairs.
pub fn quadratic_trace_check(n_max: usize) -> bool {
    sl2_panel().iter().all(|(x, y)| {
        let ad_x = sl2_ad(x);
        let ad_y = sl2_ad(y);
        let sq = rat_mul(&ad_x, &ad_x);
        let mut power: RatMat =
            array::from_fn(|i| array::from_fn(|j| Rational::from((i == j) as i64)));
        (0..=n_max).all(|_| {
            let m = rat_mul(&power, &ad_y);
            let tr: Rational = (0..3).map(|i| m[i][i].clone()).sum();
            power = rat_mul(&power, &sq);
            tr.is_zero()
        })
    })
}
