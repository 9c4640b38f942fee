// Monomials written out by hand, compared against the table machinery.

use catalan_core::moments::{
    evaluate_monomial, expand_moment, monomial_from_table, ModelData, Rational,
};
use catalan_core::CatalanTable;
use num_traits::One;

fn g(d: &ModelData, l: usize, m: usize) -> Rational {
    d.two_point(l, m).unwrap().clone()
}

fn over(d: &ModelData, a: usize, b: usize) -> Rational {
    Rational::one() / (d.eigenvalue(a).unwrap() - d.eigenvalue(b).unwrap())
}

#[test]
fn twelve_point_example() {
    let table = CatalanTable::from_entries(vec![
        vec![2, 0, 0],
        vec![1, 1, 0],
        vec![0],
        vec![0],
        vec![0],
        vec![1, 0],
        vec![0],
    ])
    .unwrap();
    let m = monomial_from_table(&table);
    for seed in 0..5 {
        let (d, _) = ModelData::random(12, 500 + seed);
        let by_hand = g(&d, 0, 5)
            * g(&d, 1, 2)
            * g(&d, 3, 4)
            * g(&d, 6, 7)
            * g(&d, 8, 11)
            * g(&d, 9, 10)
            * over(&d, 0, 6)
            * over(&d, 0, 8)
            * over(&d, 0, 4)
            * over(&d, 2, 4)
            * over(&d, 8, 10)
            * over(&d, 5, 7)
            * over(&d, 5, 11)
            * over(&d, 5, 1)
            * over(&d, 1, 3)
            * over(&d, 11, 9);
        assert_eq!(evaluate_monomial(&m, &d).unwrap(), by_hand);
    }
}

#[test]
fn four_point_function() {
    for seed in 0..5 {
        let (d, _) = ModelData::random(4, 40 + seed);
        let by_hand = (g(&d, 0, 1) * g(&d, 2, 3) - g(&d, 1, 2) * g(&d, 0, 3))
            * over(&d, 0, 2)
            * over(&d, 1, 3);
        assert_eq!(expand_moment(4, &d).unwrap().total, by_hand);
    }
}

#[test]
fn two_point_function_is_its_own_expansion() {
    let (d, _) = ModelData::random(2, 9);
    assert_eq!(expand_moment(2, &d).unwrap().total, g(&d, 0, 1));
}
