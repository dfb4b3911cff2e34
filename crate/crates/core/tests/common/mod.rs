#![allow(dead_code)]

use proptest::prelude::*;
use witt_algebra::autgrp::Automorphism;
use witt_algebra::kernel::{frac, IntMatrix, MIndex, Scalar};
use witt_algebra::witt::WittElement;

pub fn scalar() -> impl Strategy<Value = Scalar> {
    (-6i64..=6, 1i64..=4).prop_map(|(p, q)| frac(p, q))
}

pub fn nonzero_scalar() -> impl Strategy<Value = Scalar> {
    (1i64..=6, 1i64..=4, any::<bool>()).prop_map(|(p, q, neg)| frac(if neg { -p } else { p }, q))
}

pub fn mindex(n: usize, r: i64) -> impl Strategy<Value = MIndex> {
    prop::collection::vec(-r..=r, n).prop_map(MIndex::new)
}

pub fn witt(n: usize, max_terms: usize, r: i64) -> impl Strategy<Value = WittElement> {
    prop::collection::vec((mindex(n, r), 0..n, scalar()), 0..=max_terms).prop_map(move |terms| {
        let mut w = WittElement::zero(n);
        for (a, j, c) in terms {
            w.add_term(a, j, &c);
        }
        w
    })
}

/// `x^α H'` with `α ≠ 0` and `H' ≠ 0`.
pub fn homogeneous(n: usize, r: i64) -> impl Strategy<Value = WittElement> {
    (
        mindex(n, r).prop_filter("nonzero weight", |a| !a.is_zero()),
        prop::collection::vec(scalar(), n).prop_filter("nonzero coefficients", |h| h.iter().any(|c| *c != frac(0, 1))),
    )
        .prop_map(|(a, h)| WittElement::homogeneous(a, h).unwrap())
}

#[derive(Clone, Debug)]
pub enum RowOp {
    Shear { i: usize, j: usize, k: i64 },
    Swap { i: usize, j: usize },
    Negate { i: usize },
}

fn row_op(n: usize) -> impl Strategy<Value = RowOp> {
    prop_oneof![
        (0..n, 0..n, prop_oneof![Just(-1i64), Just(1i64)]).prop_map(|(i, j, k)| RowOp::Shear { i, j, k }),
        (0..n, 0..n).prop_map(|(i, j)| RowOp::Swap { i, j }),
        (0..n).prop_map(|i| RowOp::Negate { i }),
    ]
}

pub fn apply_ops(n: usize, ops: &[RowOp]) -> IntMatrix {
    let mut rows: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect();
    for op in ops {
        match *op {
            RowOp::Shear { i, j, k } if i != j => {
                let src = rows[j].clone();
                for (a, b) in rows[i].iter_mut().zip(src) {
                    *a += k * b;
                }
            }
            RowOp::Shear { .. } => {}
            RowOp::Swap { i, j } => rows.swap(i, j),
            RowOp::Negate { i } => rows[i].iter_mut().for_each(|a| *a = -*a),
        }
    }
    IntMatrix::from_rows(rows).unwrap()
}

/// Products of at most eight elementary unimodular matrices.
pub fn unimodular(n: usize) -> impl Strategy<Value = IntMatrix> {
    prop::collection::vec(row_op(n), 0..=8).prop_map(move |ops| apply_ops(n, &ops))
}

pub fn automorphism(n: usize) -> impl Strategy<Value = Automorphism> {
    (unimodular(n), prop::collection::vec(nonzero_scalar(), n)).prop_map(|(a, l)| Automorphism::new(a, l).unwrap())
}
