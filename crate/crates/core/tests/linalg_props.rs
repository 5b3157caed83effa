use proptest::prelude::*;
use strathom::linalg::{Field, Matrix};

fn field() -> impl Strategy<Value = Field> {
    prop_oneof![
        Just(Field::Rationals),
        Just(Field::prime(2).unwrap()),
        Just(Field::prime(3).unwrap()),
        Just(Field::prime(7).unwrap()),
    ]
}

/// Small entries, many zeros, so that rank deficiency is common.
fn matrix() -> impl Strategy<Value = Matrix> {
    (field(), 0usize..7, 0usize..7).prop_flat_map(|(f, r, c)| {
        prop::collection::vec(prop_oneof![3 => Just(0i64), 2 => -3i64..=3], r * c).prop_map(move |xs| {
            let data = xs.into_iter().map(|x| f.from_i64(x)).collect();
            Matrix::from_vec(f, r, c, data).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn rank_nullity(m in matrix()) {
        let k = m.kernel_basis();
        prop_assert_eq!(m.rank() + k.cols(), m.cols());
        prop_assert!(m.mul(&k).is_zero());
        prop_assert_eq!(k.rank(), k.cols());
        prop_assert_eq!(m.transpose().rank(), m.rank());
    }

    #[test]
    fn rref_is_idempotent(m in matrix()) {
        let (r, pivots) = m.reduced();
        let (rr, pivots2) = r.reduced();
        prop_assert_eq!(&rr, &r);
        prop_assert_eq!(pivots, pivots2);
    }

    #[test]
    fn rref_transform_is_invertible(m in matrix()) {
        let rr = m.rref();
        prop_assert!(rr.transform.is_invertible());
        prop_assert_eq!(rr.transform.mul(&m), rr.reduced.clone());
        prop_assert_eq!(rr.rank(), m.rank());
        if m.rows() > 0 {
            let inv = rr.transform.inverse().unwrap();
            prop_assert_eq!(inv.mul(&rr.transform), Matrix::identity(m.field(), m.rows()));
        }
    }
}
