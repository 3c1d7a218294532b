//! Exact linear algebra over the rationals on sparse word-indexed vectors.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::ncpoly::{NCPoly, Word};
use crate::rational::Rational;

type SparseVec = BTreeMap<Word, Rational>;

fn to_sparse(p: &NCPoly) -> SparseVec {
    p.terms().map(|(w, c)| (*w, c.clone())).collect()
}

fn axpy(target: &mut SparseVec, c: &Rational, row: &SparseVec) {
    for (w, v) in row {
        let e = target.entry(*w).or_insert_with(Rational::zero);
        *e -= &(c * v);
        if e.is_zero() {
            target.remove(w);
        }
    }
}

#[derive(Debug, Clone)]
struct Row {
    pivot: Word,
    vec: SparseVec,
    /// The row as a combination of the inserted generators.
    combo: BTreeMap<usize, Rational>,
}

/// Incremental row-echelon form that remembers how every row was built,
/// so a vector in the span can be written in terms of the generators.
#[derive(Debug, Clone, Default)]
pub struct Echelon {
    rows: Vec<Row>,
    generators: usize,
}

impl Echelon {
    pub fn new() -> Self {
        Echelon::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduce `v` against the current rows; returns the residue and the
    /// combination of generators that was subtracted.
    fn reduce(&self, mut v: SparseVec) -> (SparseVec, BTreeMap<usize, Rational>) {
        let mut used: BTreeMap<usize, Rational> = BTreeMap::new();
        for row in &self.rows {
            let Some(c) = v.get(&row.pivot).cloned() else {
                continue;
            };
            axpy(&mut v, &c, &row.vec);
            for (g, k) in &row.combo {
                let e = used.entry(*g).or_insert_with(Rational::zero);
                *e += &(&c * k);
            }
        }
        used.retain(|_, c| !c.is_zero());
        (v, used)
    }

    /// Add the next generator; returns `false` if it was dependent.
    pub fn insert(&mut self, p: &NCPoly) -> bool {
        let index = self.generators;
        self.generators += 1;
        let (residue, used) = self.reduce(to_sparse(p));
        let Some((&pivot, lead)) = residue.iter().next() else {
            return false;
        };
        let inv = lead.recip();
        let vec: SparseVec = residue.iter().map(|(w, c)| (*w, c * &inv)).collect();
        let mut combo: BTreeMap<usize, Rational> =
            used.into_iter().map(|(g, c)| (g, -(c * &inv))).collect();
        combo.insert(index, inv);
        self.rows.push(Row { pivot, vec, combo });
        true
    }

    /// Coefficients `c` with `Σ c_g · generator_g = p`, or `None` when `p`
    /// is outside the span.
    pub fn solve(&self, p: &NCPoly) -> Option<Vec<Rational>> {
        let (residue, used) = self.reduce(to_sparse(p));
        if !residue.is_empty() {
            return None;
        }
        let mut out = vec![Rational::zero(); self.generators];
        for (g, c) in used {
            out[g] = c;
        }
        Some(out)
    }
}

/// Clear denominators of each vector and lay them out as integer rows over
/// the union of their supports.
fn integer_matrix(vectors: &[&NCPoly]) -> Vec<Vec<BigInt>> {
    let columns: BTreeSet<Word> = vectors
        .iter()
        .flat_map(|p| p.terms().map(|(w, _)| *w))
        .collect();
    let index: BTreeMap<Word, usize> = columns.iter().enumerate().map(|(i, w)| (*w, i)).collect();
    vectors
        .iter()
        .map(|p| {
            let lcm = p
                .terms()
                .fold(BigInt::one(), |acc, (_, c)| acc.lcm(c.denom()));
            let mut row = vec![BigInt::zero(); columns.len()];
            for (w, c) in p.terms() {
                row[index[w]] = c.numer() * (&lcm / c.denom());
            }
            row
        })
        .collect()
}

/// Rank of a set of expansions by fraction-free (Bareiss) elimination.
pub fn rank_fraction_free(vectors: &[&NCPoly]) -> usize {
    let mut m = integer_matrix(vectors);
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    let mut prev = BigInt::one();
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(p) = (rank..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        for r in rank + 1..rows {
            for c in col + 1..cols {
                let v = &m[rank][col] * &m[r][c] - &m[r][col] * &m[rank][c];
                m[r][c] = v / &prev;
            }
            m[r][col] = BigInt::zero();
        }
        prev = m[rank][col].clone();
        rank += 1;
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::free_lie::ncpoly::Letter;
    use crate::rational::q;

    fn w(s: &str) -> Word {
        Word::from_letters(
            &s.chars()
                .map(|c| if c == 'x' { Letter::X } else { Letter::Y })
                .collect::<Vec<_>>(),
        )
    }

    fn poly(terms: &[(&str, i64, i64)]) -> NCPoly {
        NCPoly::from_terms(4, terms.iter().map(|&(s, n, d)| (w(s), q(n, d))))
    }

    #[test]
    fn echelon_solves_in_span() {
        let a = poly(&[("xy", 1, 1), ("yx", -1, 1)]);
        let b = poly(&[("xy", 1, 1), ("xx", 1, 2)]);
        let mut e = Echelon::new();
        assert!(e.insert(&a));
        assert!(e.insert(&b));
        assert!(!e.insert(&a.scale(&q(3, 1))));
        let target = &a.scale(&q(2, 3)) - &b.scale(&q(5, 1));
        let coords = e.solve(&target).unwrap();
        assert_eq!(coords, vec![q(2, 3), q(-5, 1), q(0, 1)]);
        assert!(e.solve(&poly(&[("yy", 1, 1)])).is_none());
    }

    #[test]
    fn bareiss_rank() {
        let a = poly(&[("xy", 1, 2), ("yx", -1, 3)]);
        let b = a.scale(&q(7, 5));
        let c = poly(&[("xx", 1, 1), ("xy", 1, 1)]);
        assert_eq!(rank_fraction_free(&[&a, &b]), 1);
        assert_eq!(rank_fraction_free(&[&a, &b, &c]), 2);
        assert_eq!(rank_fraction_free(&[]), 0);
        let z = NCPoly::zero(4);
        assert_eq!(rank_fraction_free(&[&z]), 0);
    }
}
