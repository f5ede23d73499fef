use proptest::prelude::*;
use qlattice::exactalg::{CombineMode, Matrix, Scalar, Subspace};

fn matrix_strategy(max_rows: usize, cols: usize) -> impl Strategy<Value = Matrix> {
    prop::collection::vec(prop::collection::vec(-2i64..3, cols), 0..=max_rows).prop_map(
        move |rows| {
            Matrix::from_rows(
                cols,
                rows.into_iter()
                    .map(|r| r.into_iter().map(Scalar::from_int).collect())
                    .collect(),
            )
        },
    )
}

proptest! {
    #[test]
    fn rref_is_idempotent(m in matrix_strategy(6, 5)) {
        let (r, p) = m.rref();
        prop_assert_eq!(r.rref(), (r.clone(), p));
    }

    #[test]
    fn rank_nullity(m in matrix_strategy(6, 5)) {
        prop_assert_eq!(m.rank() + m.kernel().dim(), m.cols());
        let k = m.kernel();
        for v in k.basis_vectors() {
            prop_assert!(m.mul_vec(v).iter().all(Scalar::is_zero));
        }
    }

    #[test]
    fn grassmann_identity(a in matrix_strategy(4, 6), b in matrix_strategy(4, 6)) {
        let (u, v) = (a.row_space(), b.row_space());
        let s = u.combine(&v, CombineMode::Sum).unwrap();
        let i = u.combine(&v, CombineMode::Intersect).unwrap();
        prop_assert_eq!(u.dim() + v.dim(), s.dim() + i.dim());
        prop_assert!(i.is_subspace_of(&u) && i.is_subspace_of(&v));
        prop_assert!(u.is_subspace_of(&s) && v.is_subspace_of(&s));
    }

    #[test]
    fn subspace_equality_is_span_equality(a in matrix_strategy(4, 5), scale in 1i64..4) {
        let u = a.row_space();
        let scaled = Subspace::from_vectors(5, a.row_vecs().into_iter().rev().map(|r| r.iter().map(|x| x * &Scalar::from_int(scale)).collect()));
        prop_assert_eq!(u, scaled);
    }
}
