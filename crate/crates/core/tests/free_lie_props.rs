mod common;

use std::sync::OnceLock;

use proptest::prelude::*;

use kvjet::free_lie::{
    apply_series, bch, bch_of, bch_y_jet, bracket_form, rank_independence, HallBasis, Letter,
    LieElement, LieError, LieTree, NCPoly,
};
use kvjet::rational::{q, Rational};
use kvjet::series::{phi1_series, Series1, Series2};

use common::{dynkin_bch, witt_dimension, word};

const N: usize = 5;

fn basis() -> &'static HallBasis {
    static BASIS: OnceLock<HallBasis> = OnceLock::new();
    BASIS.get_or_init(|| HallBasis::new(N))
}

fn rational() -> impl Strategy<Value = Rational> {
    (-9i64..=9, 1i64..=4).prop_map(|(n, d)| q(n, d))
}

fn lie_element() -> impl Strategy<Value = LieElement> {
    let len = basis().len();
    prop::collection::vec((0..len, rational()), 1..5)
        .prop_map(|coords| basis().from_coords(&coords))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn antisymmetry(a in lie_element(), b in lie_element()) {
        prop_assert!((&a.bracket(&b) + &b.bracket(&a)).is_zero());
    }

    #[test]
    fn jacobi(a in lie_element(), b in lie_element(), c in lie_element()) {
        let sum = &(&a.bracket(&b.bracket(&c)) + &b.bracket(&c.bracket(&a))) + &c.bracket(&a.bracket(&b));
        prop_assert!(sum.is_zero());
    }

    #[test]
    fn brackets_stay_in_the_lie_subspace(a in lie_element(), b in lie_element()) {
        prop_assert!(basis().expand_in_basis(&a.bracket(&b)).is_ok());
    }

    #[test]
    fn hall_coordinates_round_trip(a in lie_element()) {
        let coords: Vec<(usize, Rational)> =
            basis().expand_in_basis(&a).unwrap().into_iter().flat_map(|(_, c)| c).collect();
        prop_assert_eq!(basis().from_coords(&coords), a);
    }

    #[test]
    fn bch_reversal_symmetry(s in rational(), t in rational()) {
        let x = LieElement::x(N).scale(&s);
        let y = LieElement::y(N).scale(&t);
        let z = bch_of(&x, &y);
        let reversed = bch_of(&y.scale(&q(-1, 1)), &x.scale(&q(-1, 1)));
        prop_assert_eq!(z, reversed.scale(&q(-1, 1)));
    }
}

#[test]
fn expansion_examples() {
    let x = LieTree::x();
    let y = LieTree::y();
    let xxy = LieTree::bracket(x.clone(), LieTree::bracket(x.clone(), y.clone()))
        .expand(3)
        .unwrap();
    let (lx, ly) = (Letter::X, Letter::Y);
    let expected = NCPoly::from_terms(
        3,
        [
            (word(&[lx, lx, ly]), q(1, 1)),
            (word(&[lx, ly, lx]), q(-2, 1)),
            (word(&[ly, lx, lx]), q(1, 1)),
        ],
    );
    assert_eq!(xxy, expected);
    assert!(matches!(
        LieTree::bracket(x, y).expand(1),
        Err(LieError::DegreeOverflow { degree: 2, max: 1 })
    ));
}

#[test]
fn hall_coordinate_examples() {
    let b = HallBasis::new(3);
    let yx = LieElement::y(3).bracket(&LieElement::x(3));
    assert_eq!(b.to_hall_coords(&yx, 2).unwrap(), vec![q(-1, 1)]);
    let xxy = LieElement::from_tree(&LieTree::ad_x_pow_y(2), 3).unwrap();
    let coords = b.to_hall_coords(&xxy, 3).unwrap();
    let pos = b
        .indices_of_degree(3)
        .iter()
        .position(|&i| b.words()[i].tree == LieTree::ad_x_pow_y(2))
        .unwrap();
    for (k, c) in coords.iter().enumerate() {
        assert_eq!(*c, if k == pos { q(1, 1) } else { q(0, 1) });
    }
    let assoc = LieElement::from_poly_unchecked(NCPoly::monomial(
        word(&[Letter::X, Letter::Y]),
        q(1, 1),
        3,
    ));
    assert!(matches!(
        b.to_hall_coords(&assoc, 2),
        Err(LieError::NotALieElement { degree: 2 })
    ));
}

#[test]
fn hall_words_are_unit_vectors_and_counts_match_witt() {
    let b = HallBasis::new(7);
    let counts: Vec<usize> = (1..=7).map(witt_dimension).collect();
    assert_eq!(b.degree_counts(), counts);
    for (i, w) in b.words().iter().enumerate() {
        let e = LieElement::from_tree(&w.tree, 7).unwrap();
        let positions = b.indices_of_degree(w.degree);
        let coords = b.to_hall_coords(&e, w.degree).unwrap();
        for (p, c) in positions.iter().zip(coords) {
            assert_eq!(c, if *p == i { q(1, 1) } else { q(0, 1) });
        }
    }
}

#[test]
fn hall_basis_contains_the_stated_families() {
    let n = 9;
    let b = HallBasis::new(n);
    assert_eq!(
        b.words()
            .iter()
            .take(3)
            .map(|w| w.tree.to_string())
            .collect::<Vec<_>>(),
        vec!["x", "y", "[x,y]"]
    );
    for k in 0..n {
        assert!(b.contains(&LieTree::ad_x_pow_y(k)), "(ad x)^{k} y");
    }
    for m in 1..=n - 2 {
        for j in 0..=m {
            if j < m - j {
                let t = LieTree::bracket(LieTree::ad_x_pow_y(j), LieTree::ad_x_pow_y(m - j));
                assert!(b.contains(&t), "{t}");
            }
        }
    }
}

#[test]
fn apply_series_examples() {
    let (x, y) = (LieElement::x(4), LieElement::y(4));
    assert_eq!(apply_series(&Series1::one(4), &x, &y).unwrap(), y);
    assert_eq!(apply_series(&Series1::t(4), &x, &y).unwrap(), x.bracket(&y));
    let phi = apply_series(&phi1_series(4), &x, &y).unwrap();
    let xy = x.bracket(&y);
    let expected = &(&y - &xy.scale(&q(1, 2))) + &x.bracket(&xy).scale(&q(1, 12));
    assert_eq!(phi, expected);
    assert!(matches!(
        apply_series(&Series1::one(1), &x, &y),
        Err(LieError::InsufficientOrder { .. })
    ));
}

#[test]
fn bracket_form_examples() {
    let n = 6;
    let (x, y) = (LieElement::x(n), LieElement::y(n));
    let w = x.bracket(&y);
    let sum = &Series2::monomial(1, 0, q(1, 1), 3) + &Series2::monomial(0, 1, q(1, 1), 3);
    assert_eq!(
        bracket_form(&sum, &w, &y, &x).unwrap(),
        x.bracket(&w.bracket(&y))
    );
    assert_eq!(
        bracket_form(&Series2::one(5), &x, &y, &x).unwrap(),
        x.bracket(&y)
    );
    for (i, j) in [(0, 1), (1, 2), (2, 1), (0, 3)] {
        let m = Series2::monomial(i, j, q(1, 1), 4);
        let lhs = bracket_form(&m, &w, &y, &x).unwrap();
        let rhs = bracket_form(&m.swap(), &y, &w, &x).unwrap();
        assert_eq!(lhs, rhs.scale(&q(-1, 1)));
    }
    let symmetric = &Series2::monomial(1, 2, q(1, 1), 4) + &Series2::monomial(2, 1, q(1, 1), 4);
    assert!(bracket_form(&symmetric, &y, &y, &x).unwrap().is_zero());
}

#[test]
fn bch_matches_dynkin_oracle_through_degree_seven() {
    let b = HallBasis::new(7);
    let z = bch(&b).unwrap();
    assert_eq!(
        b.expand_in_basis(&z).unwrap(),
        b.expand_in_basis(&dynkin_bch(7)).unwrap()
    );
}

#[test]
fn bch_y_jet_low_components() {
    let n = 6;
    let b = HallBasis::new(n);
    let parts = bch_y_jet(&b, 2).unwrap();
    let (x, y) = (LieElement::x(n), LieElement::y(n));
    assert_eq!(parts[0], x);
    assert_eq!(parts[1], apply_series(&phi1_series(n), &x, &y).unwrap());
    assert!(matches!(
        bch_y_jet(&b, 7),
        Err(LieError::DegreeOverflow { .. })
    ));
}

#[test]
fn rank_examples() {
    let n = 2;
    let xy = LieElement::x(n).bracket(&LieElement::y(n));
    assert_eq!(
        rank_independence(std::slice::from_ref(&xy), 2, None).unwrap(),
        (1, None)
    );
    assert_eq!(
        rank_independence(&[xy.clone(), xy.scale(&q(2, 1))], 2, None).unwrap(),
        (1, None)
    );
    assert!(matches!(
        rank_independence(&[LieElement::x(n)], 2, None),
        Err(LieError::NotHomogeneous { degree: 2 })
    ));
}

#[test]
fn truncated_independence_properties() {
    let n = 9;
    let (x, y) = (LieElement::x(n), LieElement::y(n));
    // (ad x)^k y for k <= n-1 are nonzero and of distinct degrees.
    for k in 0..n {
        assert!(!x.ad_pow(k, &y).is_zero(), "(ad x)^{k} y");
    }
    // [y, (ad x)^{2i+1} y] is nonzero while 2i+2 <= n-1.
    for i in 0.. {
        if 2 * i + 2 > n - 1 {
            break;
        }
        assert!(!y.bracket(&x.ad_pow(2 * i + 1, &y)).is_zero());
    }
    for m in 0..=n - 2 {
        assert!(kvjet::kv::skew_injectivity_check(m).unwrap(), "n = {m}");
    }
}
