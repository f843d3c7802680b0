use proptest::prelude::*;

use gradtilt::matrix::Matrix;
use gradtilt::Field;

fn fields() -> impl Strategy<Value = Field> {
    prop_oneof![Just(Field::Rational), Just(Field::Prime { p: 2 }), Just(Field::Prime { p: 5 }), Just(Field::Prime { p: 101 })]
}

/// Small integer matrices, biased towards rank deficiency by a zero-heavy entry distribution.
fn matrix() -> impl Strategy<Value = Matrix> {
    (fields(), 1usize..6, 1usize..6).prop_flat_map(|(f, r, c)| {
        proptest::collection::vec(prop_oneof![3 => Just(0i64), 2 => -3i64..=3], r * c).prop_map(move |xs| {
            let data = xs.iter().map(|&x| f.from_i64(x)).collect();
            Matrix::new(f, r, c, data).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn rank_nullity(m in matrix()) {
        prop_assert_eq!(m.rank() + m.kernel_basis().len(), m.cols());
        for v in m.kernel_basis() {
            prop_assert!(m.apply(&v).iter().all(|x| x.is_zero()));
        }
    }

    #[test]
    fn solve_is_sound(m in matrix(), seed in proptest::collection::vec(-2i64..=2, 6)) {
        let f = m.field();
        let b: Vec<_> = (0..m.rows()).map(|i| f.from_i64(seed[i])).collect();
        match m.solve(&b).unwrap() {
            Some(x) => prop_assert_eq!(m.apply(&x), b),
            None => {
                let col = Matrix::new(f, m.rows(), 1, b).unwrap();
                prop_assert!(m.hstack(&col).rank() > m.rank());
            }
        }
    }

    #[test]
    fn rank_ignores_pivot_order(m in matrix(), rot in 0usize..6) {
        let rows: Vec<usize> = (0..m.rows()).map(|i| (i + rot) % m.rows()).rev().collect();
        let cols: Vec<usize> = (0..m.cols()).map(|j| (j + rot) % m.cols()).collect();
        let permuted = m.select_rows(&rows).select_cols(&cols);
        prop_assert_eq!(permuted.rank(), m.rank());
        prop_assert_eq!(m.transpose().rank(), m.rank());
    }

    #[test]
    fn inverse_is_two_sided(m in matrix()) {
        if let Some(inv) = m.inverse() {
            let id = Matrix::identity(m.field(), m.rows());
            prop_assert_eq!(m.mul(&inv), id.clone());
            prop_assert_eq!(inv.mul(&m), id);
        } else {
            prop_assert!(!m.is_invertible());
        }
    }
}
