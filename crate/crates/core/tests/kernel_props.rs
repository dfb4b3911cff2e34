mod common;

use common::{mindex, scalar, unimodular};
use proptest::prelude::*;
use witt_algebra::kernel::{int, solve_exact, IntMatrix, LinearSystem, RatMatrix, Scalar, Solution};

fn system() -> impl Strategy<Value = (Vec<Vec<Scalar>>, Vec<Scalar>)> {
    (1usize..=5, 1usize..=5).prop_flat_map(|(rows, cols)| {
        (
            prop::collection::vec(prop::collection::vec(scalar(), cols), rows),
            prop::collection::vec(scalar(), rows),
        )
    })
}

proptest! {
    #[test]
    fn solutions_satisfy_the_system((a, b) in system()) {
        let sys = LinearSystem::from_dense(&a, &b).unwrap();
        let cols = a[0].len();
        let m = RatMatrix::from_rows(a.clone()).unwrap();
        match solve_exact(&sys) {
            Solution::Inconsistent => {
                // rank of [A | b] exceeds rank of A
                let aug: Vec<Vec<Scalar>> = a.iter().zip(&b).map(|(r, x)| {
                    let mut r = r.clone();
                    r.push(x.clone());
                    r
                }).collect();
                prop_assert!(RatMatrix::from_rows(aug).unwrap().rank() > m.rank());
            }
            Solution::Consistent { particular, nullspace } => {
                prop_assert!(sys.is_satisfied_by(&particular));
                prop_assert_eq!(nullspace.len(), cols - m.rank());
                for v in &nullspace {
                    prop_assert!(m.mul_vec(v).unwrap().iter().all(|x| *x == int(0)));
                }
                let nm = RatMatrix::from_columns(cols, &nullspace);
                prop_assert_eq!(nm.rank(), nullspace.len());
            }
        }
    }

    #[test]
    fn unimodular_inverse(a in (1usize..=4).prop_flat_map(unimodular)) {
        prop_assert!(a.is_unimodular());
        let inv = a.unimodular_inverse().unwrap();
        prop_assert!(a.mul(&inv).unwrap().is_identity());
        prop_assert!(inv.mul(&a).unwrap().is_identity());
    }

    #[test]
    fn det_is_multiplicative(
        (a, b) in (1usize..=3).prop_flat_map(|n| {
            let m = prop::collection::vec(prop::collection::vec(-4i64..=4, n), n);
            (m.clone(), m)
        })
    ) {
        let a = IntMatrix::from_rows(a).unwrap();
        let b = IntMatrix::from_rows(b).unwrap();
        prop_assert_eq!(a.mul(&b).unwrap().det(), a.det() * b.det());
        prop_assert_eq!(Scalar::from_integer(a.det()), a.to_rational().det());
    }

    #[test]
    fn rational_inverse(rows in (1usize..=4).prop_flat_map(|n| prop::collection::vec(prop::collection::vec(scalar(), n), n))) {
        let m = RatMatrix::from_rows(rows).unwrap();
        match m.inverse() {
            None => prop_assert_eq!(m.det(), int(0)),
            Some(inv) => prop_assert!(m.mul(&inv).unwrap().is_identity()),
        }
    }

    #[test]
    fn mindex_group_laws(a in mindex(3, 5), b in mindex(3, 5)) {
        prop_assert_eq!(&(&a + &b) - &b, a.clone());
        prop_assert_eq!(&a + &(-&a), witt_algebra::kernel::MIndex::zeros(3));
    }

    #[test]
    fn matrix_acts_linearly(a in unimodular(3), x in mindex(3, 5), y in mindex(3, 5)) {
        prop_assert_eq!(a.apply(&(&x + &y)).unwrap(), &a.apply(&x).unwrap() + &a.apply(&y).unwrap());
    }
}
