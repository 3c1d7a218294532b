//! Words over `{x, y}` and truncated polynomials in the free associative
//! algebra. Lie elements are stored through this expansion.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::rational::Rational;

/// Longest word a [`Word`] can hold.
pub const MAX_WORD_LEN: usize = 30;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    X,
    Y,
}

impl Letter {
    pub fn as_char(self) -> char {
        match self {
            Letter::X => 'x',
            Letter::Y => 'y',
        }
    }
}

/// A word over `{x, y}`; bit `len-1-k` holds letter `k` (`1` = `y`).
///
/// Ordered by length, then lexicographically with `x < y`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    len: u8,
    bits: u32,
}

impl Word {
    pub const EMPTY: Word = Word { len: 0, bits: 0 };

    pub fn letter(l: Letter) -> Word {
        Word {
            len: 1,
            bits: (l == Letter::Y) as u32,
        }
    }

    pub fn from_letters(letters: &[Letter]) -> Word {
        assert!(letters.len() <= MAX_WORD_LEN);
        letters
            .iter()
            .fold(Word::EMPTY, |w, &l| w.concat(Word::letter(l)))
    }

    pub fn len(self) -> usize {
        self.len as usize
    }

    pub fn is_empty(self) -> bool {
        self.len == 0
    }

    pub fn y_count(self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn x_count(self) -> usize {
        self.len() - self.y_count()
    }

    pub fn concat(self, other: Word) -> Word {
        debug_assert!(self.len() + other.len() <= MAX_WORD_LEN);
        Word {
            len: self.len + other.len,
            bits: (self.bits << other.len) | other.bits,
        }
    }

    pub fn letters(self) -> impl Iterator<Item = Letter> {
        (0..self.len).rev().map(move |k| {
            if (self.bits >> k) & 1 == 1 {
                Letter::Y
            } else {
                Letter::X
            }
        })
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "1");
        }
        for l in self.letters() {
            write!(f, "{}", l.as_char())?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Polynomial in noncommuting `x, y`, truncated above `max_degree`.
#[derive(Clone, PartialEq, Eq)]
pub struct NCPoly {
    terms: BTreeMap<Word, Rational>,
    max_degree: usize,
}

impl NCPoly {
    pub fn zero(max_degree: usize) -> Self {
        assert!(max_degree <= MAX_WORD_LEN);
        NCPoly {
            terms: BTreeMap::new(),
            max_degree,
        }
    }

    pub fn one(max_degree: usize) -> Self {
        NCPoly::monomial(Word::EMPTY, Rational::one(), max_degree)
    }

    pub fn monomial(w: Word, c: Rational, max_degree: usize) -> Self {
        let mut p = NCPoly::zero(max_degree);
        p.add_term(w, c);
        p
    }

    pub fn from_terms(
        max_degree: usize,
        terms: impl IntoIterator<Item = (Word, Rational)>,
    ) -> Self {
        let mut p = NCPoly::zero(max_degree);
        for (w, c) in terms {
            p.add_term(w, c);
        }
        p
    }

    pub fn add_term(&mut self, w: Word, c: Rational) {
        if w.len() > self.max_degree || c.is_zero() {
            return;
        }
        let e = self.terms.entry(w).or_insert_with(Rational::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&w);
        }
    }

    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, w: Word) -> Rational {
        self.terms.get(&w).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Rational)> {
        self.terms.iter()
    }

    /// Smallest word length carrying a nonzero coefficient.
    pub fn min_degree(&self) -> Option<usize> {
        self.terms.keys().map(|w| w.len()).min()
    }

    pub fn filter(&self, mut keep: impl FnMut(Word) -> bool) -> Self {
        NCPoly {
            terms: self
                .terms
                .iter()
                .filter(|(w, _)| keep(**w))
                .map(|(w, c)| (*w, c.clone()))
                .collect(),
            max_degree: self.max_degree,
        }
    }

    /// Homogeneous component of degree `d`.
    pub fn component(&self, d: usize) -> Self {
        self.filter(|w| w.len() == d)
    }

    pub fn with_max_degree(&self, max_degree: usize) -> Self {
        NCPoly::from_terms(max_degree, self.terms.iter().map(|(w, c)| (*w, c.clone())))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return NCPoly::zero(self.max_degree);
        }
        NCPoly {
            terms: self.terms.iter().map(|(w, v)| (*w, v * c)).collect(),
            max_degree: self.max_degree,
        }
    }

    /// `ab - ba`.
    pub fn commutator(&self, other: &NCPoly) -> Self {
        &(self * other) - &(other * self)
    }
}

impl fmt::Debug for NCPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(w, c)| format!("{c}*{w}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl Add for &NCPoly {
    type Output = NCPoly;
    fn add(self, rhs: &NCPoly) -> NCPoly {
        let mut out = self.with_max_degree(self.max_degree.min(rhs.max_degree));
        for (w, c) in &rhs.terms {
            out.add_term(*w, c.clone());
        }
        out
    }
}

impl Sub for &NCPoly {
    type Output = NCPoly;
    fn sub(self, rhs: &NCPoly) -> NCPoly {
        let mut out = self.with_max_degree(self.max_degree.min(rhs.max_degree));
        for (w, c) in &rhs.terms {
            out.add_term(*w, -c);
        }
        out
    }
}

impl Neg for &NCPoly {
    type Output = NCPoly;
    fn neg(self) -> NCPoly {
        self.scale(&Rational::from(-1))
    }
}

impl Mul for &NCPoly {
    type Output = NCPoly;
    fn mul(self, rhs: &NCPoly) -> NCPoly {
        let max_degree = self.max_degree.min(rhs.max_degree);
        let mut out = NCPoly::zero(max_degree);
        for (a, ca) in &self.terms {
            if a.len() > max_degree {
                continue;
            }
            for (b, cb) in &rhs.terms {
                if a.len() + b.len() <= max_degree {
                    out.add_term(a.concat(*b), ca * cb);
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        let letters: Vec<Letter> = s
            .chars()
            .map(|c| if c == 'x' { Letter::X } else { Letter::Y })
            .collect();
        Word::from_letters(&letters)
    }

    #[test]
    fn word_roundtrip_and_order() {
        assert_eq!(w("xyyx").to_string(), "xyyx");
        assert_eq!(w("xy").concat(w("yx")), w("xyyx"));
        assert!(w("y") < w("xx"));
        assert!(w("xy") < w("yx"));
        assert_eq!(w("xyy").y_count(), 2);
    }

    #[test]
    fn product_truncates() {
        let x = NCPoly::monomial(w("x"), Rational::one(), 2);
        let xx = &x * &x;
        assert_eq!(xx.coeff(w("xx")), Rational::one());
        assert!((&xx * &x).is_zero());
    }

    #[test]
    fn commutator_of_letters() {
        let x = NCPoly::monomial(w("x"), Rational::one(), 3);
        let y = NCPoly::monomial(w("y"), Rational::one(), 3);
        let c = x.commutator(&y);
        assert_eq!(c.coeff(w("xy")), Rational::one());
        assert_eq!(c.coeff(w("yx")), Rational::from(-1));
        assert_eq!(c.len(), 2);
    }
}
