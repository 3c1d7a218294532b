use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;
use std::sync::Arc;

use super::ncpoly::{Letter, NCPoly, Word};
use super::LieError;
use crate::rational::Rational;
use crate::series::{Series1, Series2};

/// A bracket expression over the generators `x` and `y`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum LieTree {
    Gen(Letter),
    Bracket(Arc<LieTree>, Arc<LieTree>),
}

impl LieTree {
    pub fn x() -> Self {
        LieTree::Gen(Letter::X)
    }

    pub fn y() -> Self {
        LieTree::Gen(Letter::Y)
    }

    pub fn bracket(left: LieTree, right: LieTree) -> Self {
        LieTree::Bracket(Arc::new(left), Arc::new(right))
    }

    /// `(ad x)^n (y)`.
    pub fn ad_x_pow_y(n: usize) -> Self {
        (0..n).fold(LieTree::y(), |acc, _| LieTree::bracket(LieTree::x(), acc))
    }

    pub fn degree(&self) -> usize {
        match self {
            LieTree::Gen(_) => 1,
            LieTree::Bracket(l, r) => l.degree() + r.degree(),
        }
    }

    /// Expansion `[a, b] -> ab - ba` into the free associative algebra.
    pub fn expand(&self, max_degree: usize) -> Result<NCPoly, LieError> {
        let degree = self.degree();
        if degree > max_degree {
            return Err(LieError::DegreeOverflow {
                degree,
                max: max_degree,
            });
        }
        Ok(self.expand_unchecked(max_degree))
    }

    fn expand_unchecked(&self, max_degree: usize) -> NCPoly {
        match self {
            LieTree::Gen(l) => NCPoly::monomial(Word::letter(*l), Rational::one(), max_degree),
            LieTree::Bracket(l, r) => l
                .expand_unchecked(max_degree)
                .commutator(&r.expand_unchecked(max_degree)),
        }
    }
}

impl fmt::Display for LieTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LieTree::Gen(l) => write!(f, "{}", l.as_char()),
            LieTree::Bracket(l, r) => write!(f, "[{l},{r}]"),
        }
    }
}

impl fmt::Debug for LieTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for LieTree {
    type Err = LieError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let chars: Vec<char> = s.chars().filter(|c| !c.is_whitespace()).collect();
        let mut pos = 0;
        let tree = parse_tree(&chars, &mut pos).ok_or_else(|| LieError::Parse(s.to_string()))?;
        if pos != chars.len() {
            return Err(LieError::Parse(s.to_string()));
        }
        Ok(tree)
    }
}

fn parse_tree(chars: &[char], pos: &mut usize) -> Option<LieTree> {
    let c = *chars.get(*pos)?;
    *pos += 1;
    match c {
        'x' => Some(LieTree::x()),
        'y' => Some(LieTree::y()),
        '[' => {
            let left = parse_tree(chars, pos)?;
            (chars.get(*pos) == Some(&',')).then_some(())?;
            *pos += 1;
            let right = parse_tree(chars, pos)?;
            (chars.get(*pos) == Some(&']')).then_some(())?;
            *pos += 1;
            Some(LieTree::bracket(left, right))
        }
        _ => None,
    }
}

/// An element of the free Lie algebra `L(x, y)` truncated above
/// `max_degree`, held as its expansion in the free associative algebra.
///
/// Every constructor here produces Lie elements; membership in the Lie
/// subspace is checked on demand through Hall coordinates.
#[derive(Clone, PartialEq, Eq)]
pub struct LieElement {
    poly: NCPoly,
}

impl LieElement {
    pub fn zero(max_degree: usize) -> Self {
        LieElement {
            poly: NCPoly::zero(max_degree),
        }
    }

    pub fn generator(l: Letter, max_degree: usize) -> Self {
        LieElement {
            poly: NCPoly::monomial(Word::letter(l), Rational::one(), max_degree),
        }
    }

    pub fn x(max_degree: usize) -> Self {
        LieElement::generator(Letter::X, max_degree)
    }

    pub fn y(max_degree: usize) -> Self {
        LieElement::generator(Letter::Y, max_degree)
    }

    pub fn from_tree(tree: &LieTree, max_degree: usize) -> Result<Self, LieError> {
        Ok(LieElement {
            poly: tree.expand(max_degree)?,
        })
    }

    /// Wrap an expansion without checking that it is a Lie element.
    pub fn from_poly_unchecked(poly: NCPoly) -> Self {
        LieElement { poly }
    }

    pub fn poly(&self) -> &NCPoly {
        &self.poly
    }

    pub fn max_degree(&self) -> usize {
        self.poly.max_degree()
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    pub fn min_degree(&self) -> Option<usize> {
        self.poly.min_degree()
    }

    pub fn bracket(&self, other: &LieElement) -> Self {
        LieElement {
            poly: self.poly.commutator(&other.poly),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        LieElement {
            poly: self.poly.scale(c),
        }
    }

    pub fn component(&self, d: usize) -> Self {
        LieElement {
            poly: self.poly.component(d),
        }
    }

    /// Part of `y`-degree exactly `k`.
    pub fn y_component(&self, k: usize) -> Self {
        LieElement {
            poly: self.poly.filter(|w| w.y_count() == k),
        }
    }

    /// Part with `y`-degree at most `k`.
    pub fn y_at_most(&self, k: usize) -> Self {
        LieElement {
            poly: self.poly.filter(|w| w.y_count() <= k),
        }
    }

    /// Part with the given number of `x` and `y` letters.
    pub fn bidegree_component(&self, x_deg: usize, y_deg: usize) -> Self {
        LieElement {
            poly: self
                .poly
                .filter(|w| w.x_count() == x_deg && w.y_count() == y_deg),
        }
    }

    /// Image under the automorphism `x -> -y`, `y -> -x`.
    pub fn swap_negate(&self) -> Self {
        let poly = NCPoly::from_terms(
            self.max_degree(),
            self.poly.terms().map(|(w, c)| {
                let swapped: Vec<Letter> = w
                    .letters()
                    .map(|l| if l == Letter::X { Letter::Y } else { Letter::X })
                    .collect();
                let sign = if w.len() % 2 == 0 { c.clone() } else { -c };
                (Word::from_letters(&swapped), sign)
            }),
        );
        LieElement { poly }
    }

    pub fn with_max_degree(&self, max_degree: usize) -> Self {
        LieElement {
            poly: self.poly.with_max_degree(max_degree),
        }
    }

    /// `(ad self)^k (z)`.
    pub fn ad_pow(&self, k: usize, z: &LieElement) -> Self {
        (0..k).fold(z.clone(), |acc, _| self.bracket(&acc))
    }
}

impl fmt::Debug for LieElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Lie({:?})", self.poly)
    }
}

impl Add for &LieElement {
    type Output = LieElement;
    fn add(self, rhs: &LieElement) -> LieElement {
        LieElement {
            poly: &self.poly + &rhs.poly,
        }
    }
}

impl Sub for &LieElement {
    type Output = LieElement;
    fn sub(self, rhs: &LieElement) -> LieElement {
        LieElement {
            poly: &self.poly - &rhs.poly,
        }
    }
}

impl Neg for &LieElement {
    type Output = LieElement;
    fn neg(self) -> LieElement {
        LieElement { poly: -&self.poly }
    }
}

impl Add for LieElement {
    type Output = LieElement;
    fn add(self, rhs: LieElement) -> LieElement {
        &self + &rhs
    }
}

impl Sub for LieElement {
    type Output = LieElement;
    fn sub(self, rhs: LieElement) -> LieElement {
        &self - &rhs
    }
}

/// The powers `(ad w)^k z`, `k = 0, 1, ...`, up to the first one that
/// vanishes in the truncation (excluded).
fn ad_orbit(w: &LieElement, z: &LieElement) -> Vec<LieElement> {
    let mut out = Vec::new();
    let mut cur = z.clone();
    while !cur.is_zero() {
        let next = w.bracket(&cur);
        out.push(cur);
        cur = next;
    }
    out
}

/// `ξ(ad w)(z) = Σ ξ_k (ad w)^k z`.
pub fn apply_series(xi: &Series1, w: &LieElement, z: &LieElement) -> Result<LieElement, LieError> {
    let max_degree = w.max_degree().min(z.max_degree());
    let (w, z) = (w.with_max_degree(max_degree), z.with_max_degree(max_degree));
    let mut acc = LieElement::zero(max_degree);
    for (k, term) in ad_orbit(&w, &z).into_iter().enumerate() {
        match xi.get(k) {
            Some(c) => acc = &acc + &term.scale(c),
            None => {
                return Err(LieError::InsufficientOrder {
                    needed: k,
                    available: xi.order(),
                })
            }
        }
    }
    Ok(acc)
}

/// The bracket form `(ξ(t,u) : [w, x])_y = Σ ξ_ij [(ad y)^i w, (ad y)^j x]`.
pub fn bracket_form(
    xi: &Series2,
    w: &LieElement,
    x: &LieElement,
    y: &LieElement,
) -> Result<LieElement, LieError> {
    let max_degree = w.max_degree().min(x.max_degree()).min(y.max_degree());
    let (w, x, y) = (
        w.with_max_degree(max_degree),
        x.with_max_degree(max_degree),
        y.with_max_degree(max_degree),
    );
    let left = ad_orbit(&y, &w);
    let right = ad_orbit(&y, &x);
    let mut acc = LieElement::zero(max_degree);
    for (i, a) in left.iter().enumerate() {
        let da = a.min_degree().unwrap_or(0);
        for (j, b) in right.iter().enumerate() {
            if da + b.min_degree().unwrap_or(0) > max_degree {
                continue;
            }
            let c = if i + j <= xi.order() {
                xi.coeff(i, j)
            } else {
                Rational::zero()
            };
            if i + j <= xi.order() && c.is_zero() {
                continue;
            }
            let br = a.bracket(b);
            if i + j > xi.order() {
                if !br.is_zero() {
                    return Err(LieError::InsufficientOrder {
                        needed: i + j,
                        available: xi.order(),
                    });
                }
                continue;
            }
            acc = &acc + &br.scale(&c);
        }
    }
    Ok(acc)
}
