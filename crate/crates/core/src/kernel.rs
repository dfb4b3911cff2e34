//! Exact scalars, multi-indices, integer and rational matrices, and exact
//! linear solving.
//!
//! The ground field is the rationals. Every value here is exact; there is no
//! tolerance anywhere in the crate.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Index, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{check_dim, Error, Result};

/// An exact rational number in lowest terms with positive denominator.
pub type Scalar = BigRational;

/// The scalar `v`.
pub fn int(v: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(v))
}

/// The scalar `p/q`. Panics when `q == 0`.
pub fn frac(p: i64, q: i64) -> Scalar {
    Scalar::new(BigInt::from(p), BigInt::from(q))
}

/// Parses `"p/q"` or `"p"`.
pub fn parse_scalar(text: &str) -> Result<Scalar> {
    let t = text.trim();
    let bad = || Error::parse(0, format!("invalid rational literal {t:?}"));
    let (num, den) = match t.split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (t, "1"),
    };
    let p: BigInt = num.parse().map_err(|_| bad())?;
    let q: BigInt = den.parse().map_err(|_| bad())?;
    if q.is_zero() {
        return Err(Error::parse(0, "zero denominator"));
    }
    Ok(Scalar::new(p, q))
}

/// `base^exp` for a possibly negative exponent. Panics on `0^negative`.
pub fn scalar_pow(base: &Scalar, exp: i64) -> Scalar {
    let e = i32::try_from(exp).expect("exponent out of range");
    base.pow(e)
}

/// `(h, α) = Σ h_i α_i`.
pub fn mindex_pairing(h: &[Scalar], alpha: &MIndex) -> Result<Scalar> {
    check_dim(alpha.dim(), h.len())?;
    Ok(pairing_unchecked(h, alpha))
}

pub(crate) fn pairing_unchecked(h: &[Scalar], alpha: &MIndex) -> Scalar {
    h.iter()
        .zip(alpha.0.iter())
        .filter(|(_, &a)| a != 0)
        .fold(Scalar::zero(), |acc, (c, &a)| acc + c * int(a))
}

/// A multi-index `α ∈ Z^n`: the exponent of a Laurent monomial, or a weight.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MIndex(Vec<i64>);

impl MIndex {
    pub fn new(entries: Vec<i64>) -> Self {
        MIndex(entries)
    }

    pub fn zeros(n: usize) -> Self {
        MIndex(vec![0; n])
    }

    /// The `i`-th standard basis vector (0-based).
    pub fn unit(n: usize, i: usize) -> Self {
        let mut v = vec![0; n];
        v[i] = 1;
        MIndex(v)
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn as_slice(&self) -> &[i64] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&a| a == 0)
    }

    pub fn scale(&self, k: i64) -> Self {
        MIndex(self.0.iter().map(|a| a * k).collect())
    }

    /// Integer dot product with a weight vector.
    pub fn dot(&self, weights: &[i64]) -> i64 {
        self.0.iter().zip(weights).map(|(a, w)| a * w).sum()
    }

    /// Maximum norm `max_i |α_i|`.
    pub fn norm_max(&self) -> i64 {
        self.0.iter().map(|a| a.abs()).max().unwrap_or(0)
    }
}

impl Index<usize> for MIndex {
    type Output = i64;
    fn index(&self, i: usize) -> &i64 {
        &self.0[i]
    }
}

impl Add for &MIndex {
    type Output = MIndex;
    fn add(self, rhs: &MIndex) -> MIndex {
        debug_assert_eq!(self.dim(), rhs.dim());
        MIndex(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &MIndex {
    type Output = MIndex;
    fn sub(self, rhs: &MIndex) -> MIndex {
        debug_assert_eq!(self.dim(), rhs.dim());
        MIndex(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &MIndex {
    type Output = MIndex;
    fn neg(self) -> MIndex {
        MIndex(self.0.iter().map(|a| -a).collect())
    }
}

impl fmt::Display for MIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, a) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, ")")
    }
}

/// A square integer matrix, row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    n: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn from_rows(rows: Vec<Vec<i64>>) -> Result<Self> {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * n);
        for row in rows {
            check_dim(n, row.len())?;
            data.extend(row);
        }
        Ok(IntMatrix { n, data })
    }

    pub fn identity(n: usize) -> Self {
        let mut data = vec![0; n * n];
        for i in 0..n {
            data[i * n + i] = 1;
        }
        IntMatrix { n, data }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.data[i * self.n + j]
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        self.data.chunks(self.n.max(1)).map(|r| r.to_vec()).collect()
    }

    pub fn column(&self, j: usize) -> MIndex {
        MIndex((0..self.n).map(|i| self.get(i, j)).collect())
    }

    pub fn is_identity(&self) -> bool {
        *self == IntMatrix::identity(self.n)
    }

    pub fn mul(&self, other: &IntMatrix) -> Result<IntMatrix> {
        check_dim(self.n, other.n)?;
        let n = self.n;
        let mut data = vec![0; n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..n {
                    data[i * n + j] += a * other.get(k, j);
                }
            }
        }
        Ok(IntMatrix { n, data })
    }

    /// `A α`.
    pub fn apply(&self, alpha: &MIndex) -> Result<MIndex> {
        check_dim(self.n, alpha.dim())?;
        Ok(MIndex(
            (0..self.n)
                .map(|i| (0..self.n).map(|j| self.get(i, j) * alpha[j]).sum())
                .collect(),
        ))
    }

    pub fn to_rational(&self) -> RatMatrix {
        RatMatrix::from_fn(self.n, self.n, |i, j| int(self.get(i, j)))
    }

    /// Exact determinant.
    pub fn det(&self) -> BigInt {
        self.to_rational().det().to_integer()
    }

    pub fn is_unimodular(&self) -> bool {
        self.det().abs().is_one()
    }

    /// The integer inverse of a unimodular matrix.
    pub fn unimodular_inverse(&self) -> Result<IntMatrix> {
        let det = self.det();
        if !det.abs().is_one() {
            return Err(Error::NotUnimodular { det: det.to_string() });
        }
        let inv = self
            .to_rational()
            .inverse()
            .expect("unimodular matrices are invertible");
        let mut data = Vec::with_capacity(self.n * self.n);
        for i in 0..self.n {
            for j in 0..self.n {
                let e = inv.get(i, j);
                debug_assert!(e.is_integer());
                data.push(e.to_integer().to_i64().expect("entry overflows i64"));
            }
        }
        Ok(IntMatrix { n: self.n, data })
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.n {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "[")?;
            for j in 0..self.n {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

/// A dense rational matrix, row-major. Matrices act on column vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl RatMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RatMatrix { rows, cols, data: vec![Scalar::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { Scalar::one() } else { Scalar::zero() })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        RatMatrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            check_dim(c, row.len())?;
            data.extend(row);
        }
        Ok(RatMatrix { rows: r, cols: c, data })
    }

    /// Builds a matrix whose `j`-th column is `columns[j]`.
    pub fn from_columns(nrows: usize, columns: &[Vec<Scalar>]) -> Self {
        Self::from_fn(nrows, columns.len(), |i, j| columns[j][i].clone())
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn rows_vec(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols && *self == RatMatrix::identity(self.rows)
    }

    pub fn mul(&self, other: &RatMatrix) -> Result<RatMatrix> {
        check_dim(self.cols, other.rows)?;
        let mut out = RatMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let idx = i * other.cols + j;
                        out.data[idx] = &out.data[idx] + a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Result<Vec<Scalar>> {
        check_dim(self.cols, v.len())?;
        Ok((0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(Scalar::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect())
    }

    pub fn add(&self, other: &RatMatrix) -> Result<RatMatrix> {
        check_dim(self.rows, other.rows)?;
        check_dim(self.cols, other.cols)?;
        Ok(RatMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn scale(&self, k: &Scalar) -> RatMatrix {
        RatMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a * k).collect(),
        }
    }

    pub fn transpose(&self) -> RatMatrix {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    /// Exact determinant by Gaussian elimination over Q.
    pub fn det(&self) -> Scalar {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        let mut m = self.rows_vec();
        let mut det = Scalar::one();
        for col in 0..n {
            let Some(p) = (col..n).find(|&r| !m[r][col].is_zero()) else {
                return Scalar::zero();
            };
            if p != col {
                m.swap(p, col);
                det = -det;
            }
            let pivot = m[col][col].clone();
            det *= &pivot;
            for r in col + 1..n {
                if m[r][col].is_zero() {
                    continue;
                }
                let f = &m[r][col] / &pivot;
                let (top, bottom) = m.split_at_mut(r);
                for (x, p) in bottom[0].iter_mut().zip(&top[col]).skip(col) {
                    *x -= p * &f;
                }
            }
        }
        det
    }

    pub fn rank(&self) -> usize {
        let mut rref = Rref::new(self.cols);
        for i in 0..self.rows {
            rref.insert(dense_to_sparse(self.row(i)), Scalar::zero());
        }
        rref.rank()
    }

    /// Exact inverse, `None` when singular or non-square.
    pub fn inverse(&self) -> Option<RatMatrix> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let mut m: Vec<Vec<Scalar>> = (0..n)
            .map(|i| {
                let mut row = self.row(i).to_vec();
                row.extend((0..n).map(|j| if i == j { Scalar::one() } else { Scalar::zero() }));
                row
            })
            .collect();
        for col in 0..n {
            let p = (col..n).find(|&r| !m[r][col].is_zero())?;
            m.swap(p, col);
            let inv = m[col][col].recip();
            for v in m[col].iter_mut() {
                *v *= &inv;
            }
            for r in 0..n {
                if r == col || m[r][col].is_zero() {
                    continue;
                }
                let f = m[r][col].clone();
                let pivot_row = m[col].clone();
                for (x, p) in m[r].iter_mut().zip(&pivot_row) {
                    *x -= p * &f;
                }
            }
        }
        Some(Self::from_fn(n, n, |i, j| m[i][n + j].clone()))
    }
}

impl fmt::Display for RatMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

/// Sparse vector keyed by coordinate; zero entries are never stored.
pub type SparseVec = BTreeMap<usize, Scalar>;

pub(crate) fn dense_to_sparse(v: &[Scalar]) -> SparseVec {
    v.iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| (i, c.clone()))
        .collect()
}

pub(crate) fn sparse_to_dense(v: &SparseVec, len: usize) -> Vec<Scalar> {
    let mut out = vec![Scalar::zero(); len];
    for (&i, c) in v {
        out[i] = c.clone();
    }
    out
}

/// `target += factor * source`, dropping cancelled entries.
pub(crate) fn axpy(target: &mut SparseVec, factor: &Scalar, source: &SparseVec) {
    for (&k, v) in source {
        let add = factor * v;
        if add.is_zero() {
            continue;
        }
        match target.get_mut(&k) {
            Some(t) => {
                *t += add;
                if t.is_zero() {
                    target.remove(&k);
                }
            }
            None => {
                target.insert(k, add);
            }
        }
    }
}

/// An exact linear system `M x = b` with sparse rows.
#[derive(Clone, Debug, Default)]
pub struct LinearSystem {
    unknowns: usize,
    equations: Vec<(SparseVec, Scalar)>,
}

impl LinearSystem {
    pub fn new(unknowns: usize) -> Self {
        LinearSystem { unknowns, equations: Vec::new() }
    }

    pub fn from_dense(matrix: &[Vec<Scalar>], rhs: &[Scalar]) -> Result<Self> {
        check_dim(matrix.len(), rhs.len())?;
        let unknowns = matrix.first().map_or(0, Vec::len);
        let mut sys = LinearSystem::new(unknowns);
        for (row, b) in matrix.iter().zip(rhs) {
            check_dim(unknowns, row.len())?;
            sys.equations.push((dense_to_sparse(row), b.clone()));
        }
        Ok(sys)
    }

    /// Adds `Σ coeff·x_index = rhs`. Repeated indices are summed.
    pub fn add_equation(&mut self, coeffs: impl IntoIterator<Item = (usize, Scalar)>, rhs: Scalar) {
        let mut row = SparseVec::new();
        for (i, c) in coeffs {
            assert!(i < self.unknowns, "unknown index {i} out of range");
            axpy(&mut row, &c, &SparseVec::from([(i, Scalar::one())]));
        }
        self.equations.push((row, rhs));
    }

    /// Appends the equations of `other`, which must have the same unknowns.
    pub fn append(&mut self, other: LinearSystem) {
        assert_eq!(self.unknowns, other.unknowns, "unknown count mismatch");
        self.equations.extend(other.equations);
    }

    pub fn unknowns(&self) -> usize {
        self.unknowns
    }

    pub fn num_equations(&self) -> usize {
        self.equations.len()
    }

    /// True when `x` satisfies every equation exactly.
    pub fn is_satisfied_by(&self, x: &[Scalar]) -> bool {
        x.len() == self.unknowns
            && self.equations.iter().all(|(row, b)| {
                row.iter().fold(Scalar::zero(), |acc, (&i, c)| acc + c * &x[i]) == *b
            })
    }
}

/// Solution set of a [`LinearSystem`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Solution {
    Inconsistent,
    /// Every solution is `particular + Σ t_k nullspace[k]`.
    Consistent { particular: Vec<Scalar>, nullspace: Vec<Vec<Scalar>> },
}

impl Solution {
    pub fn is_consistent(&self) -> bool {
        matches!(self, Solution::Consistent { .. })
    }
}

/// Sparse counterpart of [`Solution`], used by the window solvers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) enum SparseSolution {
    Inconsistent,
    Consistent { particular: SparseVec, nullspace: Vec<SparseVec> },
}

/// Gauss–Jordan elimination over Q. Free variables are set to zero in the
/// particular solution; the nullspace basis has one vector per free column.
pub fn solve_exact(system: &LinearSystem) -> Solution {
    match solve_sparse(system) {
        SparseSolution::Inconsistent => Solution::Inconsistent,
        SparseSolution::Consistent { particular, nullspace } => Solution::Consistent {
            particular: sparse_to_dense(&particular, system.unknowns),
            nullspace: nullspace
                .iter()
                .map(|v| sparse_to_dense(v, system.unknowns))
                .collect(),
        },
    }
}

pub(crate) fn solve_sparse(system: &LinearSystem) -> SparseSolution {
    let mut rref = Rref::new(system.unknowns);
    for (row, b) in &system.equations {
        rref.insert(row.clone(), b.clone());
    }
    rref.solution()
}

/// Incrementally maintained reduced row echelon form.
///
/// Invariant: every stored row has leading coefficient 1 at its pivot column
/// and zero entries at every other pivot column.
#[derive(Clone, Debug)]
pub(crate) struct Rref {
    cols: usize,
    rows: Vec<(SparseVec, Scalar)>,
    pivot_row: BTreeMap<usize, usize>,
    inconsistent: bool,
}

impl Rref {
    pub(crate) fn new(cols: usize) -> Self {
        Rref { cols, rows: Vec::new(), pivot_row: BTreeMap::new(), inconsistent: false }
    }

    pub(crate) fn insert(&mut self, mut row: SparseVec, mut rhs: Scalar) {
        let hits: Vec<(usize, Scalar)> = row
            .iter()
            .filter(|(c, _)| self.pivot_row.contains_key(c))
            .map(|(&c, v)| (c, v.clone()))
            .collect();
        for (col, coef) in hits {
            let (prow, prhs) = &self.rows[self.pivot_row[&col]];
            let f = -coef;
            axpy(&mut row, &f, prow);
            rhs += &f * prhs;
        }
        let Some((&pivot, lead)) = row.iter().next() else {
            if !rhs.is_zero() {
                self.inconsistent = true;
            }
            return;
        };
        let inv = lead.recip();
        for v in row.values_mut() {
            *v *= &inv;
        }
        rhs *= &inv;
        for (prow, prhs) in self.rows.iter_mut() {
            if let Some(c) = prow.get(&pivot).cloned() {
                let f = -c;
                axpy(prow, &f, &row);
                *prhs += &f * &rhs;
            }
        }
        self.pivot_row.insert(pivot, self.rows.len());
        self.rows.push((row, rhs));
    }

    pub(crate) fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Basis rows sorted by pivot column.
    pub(crate) fn basis(&self) -> Vec<SparseVec> {
        self.pivot_row.values().map(|&r| self.rows[r].0.clone()).collect()
    }

    pub(crate) fn pivots(&self) -> Vec<usize> {
        self.pivot_row.keys().copied().collect()
    }

    pub(crate) fn solution(&self) -> SparseSolution {
        if self.inconsistent {
            return SparseSolution::Inconsistent;
        }
        let mut particular = SparseVec::new();
        for (&pivot, &r) in &self.pivot_row {
            let b = &self.rows[r].1;
            if !b.is_zero() {
                particular.insert(pivot, b.clone());
            }
        }
        let mut nullspace: BTreeMap<usize, SparseVec> = (0..self.cols)
            .filter(|c| !self.pivot_row.contains_key(c))
            .map(|c| (c, SparseVec::from([(c, Scalar::one())])))
            .collect();
        for (&pivot, &r) in &self.pivot_row {
            for (col, v) in self.rows[r].0.iter().filter(|(&c, _)| c != pivot) {
                if let Some(vec) = nullspace.get_mut(col) {
                    vec.insert(pivot, -v.clone());
                }
            }
        }
        SparseSolution::Consistent { particular, nullspace: nullspace.into_values().collect() }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(p: i64) -> Scalar {
        int(p)
    }

    #[test]
    fn pairing_examples() {
        let a = MIndex::new(vec![2, 1]);
        assert_eq!(mindex_pairing(&[q(1), q(0)], &a).unwrap(), q(2));
        assert_eq!(mindex_pairing(&[q(0), q(0)], &a).unwrap(), q(0));
        let b = MIndex::new(vec![2, 3]);
        assert_eq!(mindex_pairing(&[frac(1, 2), frac(-1, 3)], &b).unwrap(), q(0));
        assert_eq!(
            mindex_pairing(&[q(1)], &a),
            Err(Error::DimensionError { expected: 2, found: 1 })
        );
    }

    #[test]
    fn pairing_matches_plain_dot_product() {
        let h = [frac(3, 7), frac(-5, 2), q(4)];
        let a = MIndex::new(vec![-3, 8, 1]);
        let mut naive = Scalar::zero();
        for i in 0..3 {
            naive += h[i].clone() * q(a[i]);
        }
        assert_eq!(mindex_pairing(&h, &a).unwrap(), naive);
    }

    #[test]
    fn unimodular_inverse_examples() {
        let id = IntMatrix::identity(3);
        assert_eq!(id.unimodular_inverse().unwrap(), id);
        let swap = IntMatrix::from_rows(vec![vec![0, 1], vec![1, 0]]).unwrap();
        assert_eq!(swap.unimodular_inverse().unwrap(), swap);
        let two = IntMatrix::from_rows(vec![vec![2, 0], vec![0, 1]]).unwrap();
        assert_eq!(two.det(), BigInt::from(2));
        assert_eq!(
            two.unimodular_inverse(),
            Err(Error::NotUnimodular { det: "2".into() })
        );
        let shear = IntMatrix::from_rows(vec![vec![1, 3], vec![0, -1]]).unwrap();
        let inv = shear.unimodular_inverse().unwrap();
        assert!(shear.mul(&inv).unwrap().is_identity());
    }

    #[test]
    fn non_square_matrix_is_rejected() {
        assert!(IntMatrix::from_rows(vec![vec![1, 0]]).is_err());
    }

    #[test]
    fn solve_examples() {
        let sys = LinearSystem::from_dense(&[vec![q(1)]], &[q(3)]).unwrap();
        assert_eq!(
            solve_exact(&sys),
            Solution::Consistent { particular: vec![q(3)], nullspace: vec![] }
        );

        let sys = LinearSystem::from_dense(&[vec![q(0)]], &[q(1)]).unwrap();
        assert_eq!(solve_exact(&sys), Solution::Inconsistent);

        let sys = LinearSystem::from_dense(&[vec![q(1), q(1)]], &[q(1)]).unwrap();
        let sol = solve_exact(&sys);
        assert_eq!(
            sol,
            Solution::Consistent { particular: vec![q(1), q(0)], nullspace: vec![vec![q(-1), q(1)]] }
        );
    }

    #[test]
    fn elimination_keeps_first_pivot_in_column_order() {
        // 0·x + 2y + 4z = 2 ; x + y = 1
        let sys = LinearSystem::from_dense(
            &[vec![q(0), q(2), q(4)], vec![q(1), q(1), q(0)]],
            &[q(2), q(1)],
        )
        .unwrap();
        let Solution::Consistent { particular, nullspace } = solve_exact(&sys) else {
            panic!("consistent system reported inconsistent");
        };
        assert_eq!(particular, vec![q(0), q(1), q(0)]);
        assert_eq!(nullspace, vec![vec![q(2), q(-2), q(1)]]);
        assert!(sys.is_satisfied_by(&particular));
    }

    #[test]
    fn determinant_and_inverse() {
        let m = RatMatrix::from_rows(vec![vec![q(2), q(1)], vec![q(7), q(4)]]).unwrap();
        assert_eq!(m.det(), q(1));
        let inv = m.inverse().unwrap();
        assert!(m.mul(&inv).unwrap().is_identity());
        let sing = RatMatrix::from_rows(vec![vec![q(1), q(2)], vec![q(2), q(4)]]).unwrap();
        assert_eq!(sing.det(), q(0));
        assert!(sing.inverse().is_none());
        assert_eq!(sing.rank(), 1);
    }

    #[test]
    fn scalar_literals() {
        assert_eq!(parse_scalar("-6/4").unwrap(), frac(-3, 2));
        assert_eq!(parse_scalar("5").unwrap(), q(5));
        assert!(parse_scalar("1/0").is_err());
        assert!(parse_scalar("a").is_err());
        assert_eq!(frac(6, -4).to_string(), "-3/2");
    }
}
