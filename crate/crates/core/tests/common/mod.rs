//! Independent oracles shared by the integration and acceptance tests.

#![allow(dead_code)]

use kvjet::free_lie::{Letter, LieElement, LieTree, NCPoly, Word};
use kvjet::rational::{binomial, factorial, Rational};

/// `B_n = Σ_k 1/(k+1) Σ_j (-1)^j C(k,j) j^n`, with `0^0 = 1`.
pub fn bernoulli_oracle(n: usize) -> Rational {
    let mut total = Rational::zero();
    for k in 0..=n {
        let mut inner = Rational::zero();
        for j in 0..=k {
            let sign = if j % 2 == 0 { 1 } else { -1 };
            let power = Rational::from(j as i64).pow(n as u32);
            inner += &(&(&binomial(k, j) * &power) * &Rational::from(sign));
        }
        total += &(inner * Rational::new(1, k as i64 + 1));
    }
    total
}

fn mobius(mut n: usize) -> i64 {
    let mut result = 1;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return 0;
            }
            result = -result;
        }
        p += 1;
    }
    if n > 1 {
        result = -result;
    }
    result
}

/// Dimension of the degree-`d` part of the free Lie algebra on two letters.
pub fn witt_dimension(d: usize) -> usize {
    let total: i64 = (1..=d)
        .filter(|&e| d.is_multiple_of(e))
        .map(|e| mobius(e) * 2i64.pow((d / e) as u32))
        .sum();
    (total / d as i64) as usize
}

/// All words of length `n` over `{x, y}`.
pub fn words_of_length(n: usize) -> Vec<Vec<Letter>> {
    (0..1usize << n)
        .map(|bits| {
            (0..n)
                .map(|i| {
                    if bits >> (n - 1 - i) & 1 == 1 {
                        Letter::Y
                    } else {
                        Letter::X
                    }
                })
                .collect()
        })
        .collect()
}

/// Whether `block` has the shape `x^p y^q`; returns `1/(p! q!)`.
fn block_weight(block: &[Letter]) -> Option<Rational> {
    let p = block.iter().take_while(|&&l| l == Letter::X).count();
    if block[p..].contains(&Letter::X) {
        return None;
    }
    let q = block.len() - p;
    Some((&factorial(p) * &factorial(q)).recip())
}

/// Coefficient of `w` in `log(exp(x) exp(y))`, from
/// `Σ_k (-1)^{k-1}/k Σ_{p_i+q_i>0} x^{p_1} y^{q_1} ... / Π p_i! q_i!`.
fn log_exp_coefficient(w: &[Letter]) -> Rational {
    let n = w.len();
    // ways[pos][k] = weighted count of splits of w[..pos] into k blocks
    let mut ways = vec![vec![Rational::zero(); n + 1]; n + 1];
    ways[0][0] = Rational::one();
    for pos in 1..=n {
        for start in 0..pos {
            let Some(weight) = block_weight(&w[start..pos]) else {
                continue;
            };
            for k in 1..=pos {
                let prev = ways[start][k - 1].clone();
                if !prev.is_zero() {
                    ways[pos][k] += &(&prev * &weight);
                }
            }
        }
    }
    (1..=n)
        .map(|k| {
            let sign = if k % 2 == 1 { 1 } else { -1 };
            &ways[n][k] * &Rational::new(sign, k as i64)
        })
        .sum()
}

/// `[a_1, [a_2, ..., [a_{n-1}, a_n]]]`.
fn right_nested(w: &[Letter]) -> LieTree {
    let gen = |l: Letter| {
        if l == Letter::X {
            LieTree::x()
        } else {
            LieTree::y()
        }
    };
    let mut iter = w.iter().rev();
    let last = gen(*iter.next().expect("nonempty word"));
    iter.fold(last, |acc, &l| LieTree::bracket(gen(l), acc))
}

/// `log(exp(x) exp(y))` through `max_degree`, as `Σ_w c_w θ(w) / |w|` with
/// `θ` the right-nested bracketing.
pub fn dynkin_bch(max_degree: usize) -> LieElement {
    let mut acc = NCPoly::zero(max_degree);
    for n in 1..=max_degree {
        for w in words_of_length(n) {
            let c = log_exp_coefficient(&w);
            if c.is_zero() {
                continue;
            }
            let lie =
                LieElement::from_tree(&right_nested(&w), max_degree).expect("degree within bound");
            acc = &acc + &lie.poly().scale(&(&c * &Rational::new(1, n as i64)));
        }
    }
    LieElement::from_poly_unchecked(acc)
}

/// The associative word for `letters`.
pub fn word(letters: &[Letter]) -> Word {
    Word::from_letters(letters)
}
