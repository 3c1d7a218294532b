//! Hall basis of the free Lie algebra on `x < y`.
//!
//! A bracket `[a, d]` with `a, d` already in the set is admitted when
//! `a < d` and, if `d = [b, c]`, also `b <= a`. The total order puts lower
//! degree first; within a degree, words are compared by their left factor
//! and then by their right factor, each by position in the basis.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use super::lie::{LieElement, LieTree};
use super::linalg::Echelon;
use super::ncpoly::NCPoly;
use super::LieError;
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HallWord {
    pub tree: LieTree,
    pub degree: usize,
    /// Number of `y` letters.
    pub y_degree: usize,
    /// Basis positions of the two factors, `None` for a generator.
    pub factors: Option<(usize, usize)>,
}

/// A degree and the nonzero `(word index, coefficient)` pairs in it.
pub type DegreeCoords = (usize, Vec<(usize, Rational)>);

/// The Hall basis through degree `max_degree`, with the expansions and
/// per-bidegree solvers needed to compute coordinates.
#[derive(Debug)]
pub struct HallBasis {
    max_degree: usize,
    words: Vec<HallWord>,
    expansions: Vec<NCPoly>,
    /// Basis positions grouped by `(degree, y_degree)`.
    by_bidegree: BTreeMap<(usize, usize), Vec<usize>>,
    solvers: BTreeMap<(usize, usize), OnceLock<Echelon>>,
}

impl HallBasis {
    pub fn new(max_degree: usize) -> Self {
        assert!(max_degree >= 1, "the Hall basis needs degree at least 1");
        let mut words = vec![
            HallWord {
                tree: LieTree::x(),
                degree: 1,
                y_degree: 0,
                factors: None,
            },
            HallWord {
                tree: LieTree::y(),
                degree: 1,
                y_degree: 1,
                factors: None,
            },
        ];
        for degree in 2..=max_degree {
            let mut fresh = Vec::new();
            // Position order is the total order, so `a < d` is `ia < id`.
            for (ia, a) in words.iter().enumerate() {
                for (id, d) in words.iter().enumerate().skip(ia + 1) {
                    if a.degree + d.degree != degree {
                        continue;
                    }
                    let admissible = match d.factors {
                        None => true,
                        Some((ib, _)) => ib <= ia,
                    };
                    if admissible {
                        fresh.push(HallWord {
                            tree: LieTree::bracket(a.tree.clone(), d.tree.clone()),
                            degree,
                            y_degree: a.y_degree + d.y_degree,
                            factors: Some((ia, id)),
                        });
                    }
                }
            }
            words.extend(fresh);
        }

        let expansions: Vec<NCPoly> = words
            .iter()
            .map(|w| {
                w.tree
                    .expand(max_degree)
                    .expect("Hall words respect the degree bound")
            })
            .collect();
        let mut by_bidegree: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
        for (i, w) in words.iter().enumerate() {
            by_bidegree
                .entry((w.degree, w.y_degree))
                .or_default()
                .push(i);
        }
        let solvers = by_bidegree.keys().map(|&k| (k, OnceLock::new())).collect();
        HallBasis {
            max_degree,
            words,
            expansions,
            by_bidegree,
            solvers,
        }
    }

    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    pub fn words(&self) -> &[HallWord] {
        &self.words
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn expansion(&self, index: usize) -> &NCPoly {
        &self.expansions[index]
    }

    /// Basis positions of the words of degree `d`, in basis order.
    pub fn indices_of_degree(&self, d: usize) -> Vec<usize> {
        (0..self.words.len())
            .filter(|&i| self.words[i].degree == d)
            .collect()
    }

    pub fn words_of_degree(&self, d: usize) -> Vec<&HallWord> {
        self.words.iter().filter(|w| w.degree == d).collect()
    }

    /// Number of basis words per degree `1..=max_degree`.
    pub fn degree_counts(&self) -> Vec<usize> {
        (1..=self.max_degree)
            .map(|d| self.words_of_degree(d).len())
            .collect()
    }

    pub fn position(&self, tree: &LieTree) -> Option<usize> {
        self.words.iter().position(|w| &w.tree == tree)
    }

    pub fn contains(&self, tree: &LieTree) -> bool {
        self.position(tree).is_some()
    }

    fn solver(&self, key: (usize, usize)) -> Option<&Echelon> {
        let cell = self.solvers.get(&key)?;
        Some(cell.get_or_init(|| {
            let mut e = Echelon::new();
            for &i in &self.by_bidegree[&key] {
                let independent = e.insert(&self.expansions[i]);
                debug_assert!(independent, "Hall words must be linearly independent");
            }
            e
        }))
    }

    /// Coordinates of the degree-`d` component of `e` on the degree-`d`
    /// Hall words (in the order of [`HallBasis::words_of_degree`]).
    pub fn to_hall_coords(&self, e: &LieElement, d: usize) -> Result<Vec<Rational>, LieError> {
        if d == 0 || d > self.max_degree {
            return Err(LieError::DegreeOverflow {
                degree: d,
                max: self.max_degree,
            });
        }
        let component = e.poly().component(d).with_max_degree(self.max_degree);
        let positions = self.indices_of_degree(d);
        let mut coords = vec![Rational::zero(); positions.len()];
        for y_deg in 0..=d {
            let part = component.filter(|w| w.y_count() == y_deg);
            if part.is_zero() {
                continue;
            }
            let solver = self
                .solver((d, y_deg))
                .ok_or(LieError::NotALieElement { degree: d })?;
            let local = solver
                .solve(&part)
                .ok_or(LieError::NotALieElement { degree: d })?;
            for (k, c) in self.by_bidegree[&(d, y_deg)].iter().zip(local) {
                let slot = positions
                    .iter()
                    .position(|p| p == k)
                    .expect("index of degree d");
                coords[slot] = c;
            }
        }
        Ok(coords)
    }

    /// Nonzero Hall coordinates of every degree of `e`, keyed by degree.
    pub fn expand_in_basis(&self, e: &LieElement) -> Result<Vec<DegreeCoords>, LieError> {
        let top = e.max_degree().min(self.max_degree);
        let mut out = Vec::new();
        for d in 1..=top {
            if e.component(d).is_zero() {
                continue;
            }
            let positions = self.indices_of_degree(d);
            let coords = self.to_hall_coords(e, d)?;
            let nonzero: Vec<(usize, Rational)> = positions
                .into_iter()
                .zip(coords)
                .filter(|(_, c)| !c.is_zero())
                .collect();
            out.push((d, nonzero));
        }
        if e.poly().terms().any(|(w, _)| w.is_empty()) {
            return Err(LieError::NotALieElement { degree: 0 });
        }
        Ok(out)
    }

    /// Rebuild a Lie element from coordinates on all Hall words.
    pub fn from_coords(&self, coords: &[(usize, Rational)]) -> LieElement {
        let poly = coords
            .iter()
            .fold(NCPoly::zero(self.max_degree), |acc, (i, c)| {
                &acc + &self.expansions[*i].scale(c)
            });
        LieElement::from_poly_unchecked(poly)
    }
}
