//! Elements of the Witt algebra `W_n = Der(K[x_1^±1, …, x_n^±1])`.
//!
//! The working basis is `x^α H_j` with `H_j = x_j ∂_j`, in which the bracket
//! takes the graded form
//!
//! ```text
//! [x^α H, x^β H'] = x^(α+β) ((H, β) H' − (H', α) H)
//! ```
//!
//! An element is stored as a sparse map from the weight `α` to the coefficient
//! vector of its `H`-component. [`DerElement`] holds the same algebra in the
//! `x^β ∂_i` basis and carries an independently coded bracket used as an
//! oracle in tests.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::{One, Zero};

use crate::error::{check_dim, Error, Result};
use crate::kernel::{int, pairing_unchecked, solve_sparse, LinearSystem, MIndex, Scalar, SparseSolution, SparseVec};

/// Sparse map `α ↦ (c_1, …, c_n)` in canonical form: no all-zero vectors.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
struct TermMap {
    n: usize,
    map: BTreeMap<MIndex, Vec<Scalar>>,
}

impl TermMap {
    fn zero(n: usize) -> Self {
        TermMap { n, map: BTreeMap::new() }
    }

    fn add_coeff(&mut self, alpha: MIndex, j: usize, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        let n = self.n;
        let entry = self
            .map
            .entry(alpha.clone())
            .or_insert_with(|| vec![Scalar::zero(); n]);
        entry[j] += c;
        if entry.iter().all(Zero::is_zero) {
            self.map.remove(&alpha);
        }
    }

    fn add_vec(&mut self, alpha: MIndex, v: &[Scalar]) {
        if v.iter().all(Zero::is_zero) {
            return;
        }
        match self.map.get_mut(&alpha) {
            Some(entry) => {
                for (e, c) in entry.iter_mut().zip(v) {
                    *e += c;
                }
                if entry.iter().all(Zero::is_zero) {
                    self.map.remove(&alpha);
                }
            }
            None => {
                self.map.insert(alpha, v.to_vec());
            }
        }
    }

    fn combine(&self, other: &TermMap, factor: &Scalar) -> TermMap {
        assert_eq!(self.n, other.n, "dimension mismatch");
        let mut out = self.clone();
        for (alpha, v) in &other.map {
            let scaled: Vec<Scalar> = v.iter().map(|c| c * factor).collect();
            out.add_vec(alpha.clone(), &scaled);
        }
        out
    }

    fn scale(&self, k: &Scalar) -> TermMap {
        if k.is_zero() {
            return TermMap::zero(self.n);
        }
        TermMap {
            n: self.n,
            map: self
                .map
                .iter()
                .map(|(a, v)| (a.clone(), v.iter().map(|c| c * k).collect()))
                .collect(),
        }
    }
}

/// An element `Σ c_{α,j} x^α H_j` of `W_n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WittElement(TermMap);

/// An element `Σ d_{β,i} x^β ∂_i` of `W_n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DerElement(TermMap);

macro_rules! sparse_element_impl {
    ($ty:ident) => {
        impl $ty {
            pub fn zero(n: usize) -> Self {
                $ty(TermMap::zero(n))
            }

            /// `coeff · x^α · gen_j` (0-based `j`).
            pub fn monomial(alpha: MIndex, j: usize, coeff: Scalar) -> Self {
                let n = alpha.dim();
                assert!(j < n, "generator index {j} out of range for n = {n}");
                let mut t = TermMap::zero(n);
                t.add_coeff(alpha, j, &coeff);
                $ty(t)
            }

            /// `x^α · Σ_j coeffs[j] gen_j`.
            pub fn homogeneous(alpha: MIndex, coeffs: Vec<Scalar>) -> Result<Self> {
                check_dim(alpha.dim(), coeffs.len())?;
                let mut t = TermMap::zero(alpha.dim());
                t.add_vec(alpha, &coeffs);
                Ok($ty(t))
            }

            pub fn dim(&self) -> usize {
                self.0.n
            }

            pub fn is_zero(&self) -> bool {
                self.0.map.is_empty()
            }

            /// Number of weights carrying a nonzero coefficient vector.
            pub fn num_weights(&self) -> usize {
                self.0.map.len()
            }

            /// Weight components in lexicographic order of the exponent.
            pub fn terms(&self) -> impl Iterator<Item = (&MIndex, &[Scalar])> {
                self.0.map.iter().map(|(a, v)| (a, v.as_slice()))
            }

            pub fn coeffs_at(&self, alpha: &MIndex) -> Option<&[Scalar]> {
                self.0.map.get(alpha).map(Vec::as_slice)
            }

            pub fn coeff(&self, alpha: &MIndex, j: usize) -> Scalar {
                self.0
                    .map
                    .get(alpha)
                    .map_or_else(Scalar::zero, |v| v[j].clone())
            }

            pub fn add_term(&mut self, alpha: MIndex, j: usize, coeff: &Scalar) {
                assert_eq!(alpha.dim(), self.0.n, "dimension mismatch");
                self.0.add_coeff(alpha, j, coeff);
            }

            pub fn try_add(&self, other: &$ty) -> Result<$ty> {
                check_dim(self.dim(), other.dim())?;
                Ok($ty(self.0.combine(&other.0, &Scalar::one())))
            }

            pub fn try_sub(&self, other: &$ty) -> Result<$ty> {
                check_dim(self.dim(), other.dim())?;
                Ok($ty(self.0.combine(&other.0, &-Scalar::one())))
            }

            pub fn scale(&self, k: &Scalar) -> $ty {
                $ty(self.0.scale(k))
            }
        }

        impl std::ops::Add for &$ty {
            type Output = $ty;
            /// Panics on dimension mismatch; see `try_add`.
            fn add(self, rhs: &$ty) -> $ty {
                $ty(self.0.combine(&rhs.0, &Scalar::one()))
            }
        }

        impl std::ops::Sub for &$ty {
            type Output = $ty;
            fn sub(self, rhs: &$ty) -> $ty {
                $ty(self.0.combine(&rhs.0, &-Scalar::one()))
            }
        }

        impl std::ops::Neg for &$ty {
            type Output = $ty;
            fn neg(self) -> $ty {
                self.scale(&-Scalar::one())
            }
        }
    };
}

sparse_element_impl!(WittElement);
sparse_element_impl!(DerElement);

impl WittElement {
    /// The Cartan generator `H_j` (0-based).
    pub fn h(n: usize, j: usize) -> Self {
        Self::monomial(MIndex::zeros(n), j, Scalar::one())
    }

    /// The partial derivation `∂_j = x^(−e_j) H_j` (0-based).
    pub fn partial(n: usize, j: usize) -> Self {
        Self::monomial(-&MIndex::unit(n, j), j, Scalar::one())
    }

    /// The single weight of a homogeneous nonzero element.
    pub fn homogeneous_weight(&self) -> Option<&MIndex> {
        match self.0.map.len() {
            1 => self.0.map.keys().next(),
            _ => None,
        }
    }
}

/// Lie bracket of `W_n` in the `H`-basis.
pub fn bracket(a: &WittElement, b: &WittElement) -> Result<WittElement> {
    check_dim(a.dim(), b.dim())?;
    let mut out = TermMap::zero(a.dim());
    for (alpha, h) in &a.0.map {
        for (beta, h2) in &b.0.map {
            let hb = pairing_unchecked(h, beta);
            let h2a = pairing_unchecked(h2, alpha);
            if hb.is_zero() && h2a.is_zero() {
                continue;
            }
            let v: Vec<Scalar> = h2
                .iter()
                .zip(h)
                .map(|(y, x)| &hb * y - &h2a * x)
                .collect();
            out.add_vec(alpha + beta, &v);
        }
    }
    Ok(WittElement(out))
}

/// `x^α H_j ↦ x^(α+e_j) ∂_j`.
pub fn to_der_basis(a: &WittElement) -> DerElement {
    let n = a.dim();
    let mut out = TermMap::zero(n);
    for (alpha, v) in &a.0.map {
        for (j, c) in v.iter().enumerate() {
            out.add_coeff(alpha + &MIndex::unit(n, j), j, c);
        }
    }
    DerElement(out)
}

/// `x^β ∂_i ↦ x^(β−e_i) H_i`.
pub fn from_der_basis(d: &DerElement) -> WittElement {
    let n = d.dim();
    let mut out = TermMap::zero(n);
    for (beta, v) in &d.0.map {
        for (i, c) in v.iter().enumerate() {
            out.add_coeff(beta - &MIndex::unit(n, i), i, c);
        }
    }
    WittElement(out)
}

/// Commutator of derivations via the Leibniz rule,
/// `[f ∂_i, g ∂_j] = f (∂_i g) ∂_j − g (∂_j f) ∂_i`.
///
/// Shares no code with [`bracket`]; it exists to cross-check it.
pub fn bracket_der_oracle(a: &DerElement, b: &DerElement) -> Result<DerElement> {
    check_dim(a.dim(), b.dim())?;
    let n = a.dim();
    let mut out = TermMap::zero(n);
    for (beta, u) in &a.0.map {
        for (gamma, v) in &b.0.map {
            for (i, f) in u.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                for (j, g) in v.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                    let fg = f * g;
                    let sum = beta + gamma;
                    // f ∂_i(g) ∂_j
                    if gamma[i] != 0 {
                        out.add_coeff(&sum - &MIndex::unit(n, i), j, &(&fg * int(gamma[i])));
                    }
                    // − g ∂_j(f) ∂_i
                    if beta[j] != 0 {
                        out.add_coeff(&sum - &MIndex::unit(n, j), i, &(-&fg * int(beta[j])));
                    }
                }
            }
        }
    }
    Ok(DerElement(out))
}

pub fn support(a: &WittElement) -> BTreeSet<MIndex> {
    a.0.map.keys().cloned().collect()
}

/// Vertices of the convex hull of the support (the Newton polygon).
/// Implemented exactly for `n ≤ 2`.
pub fn newton_polygon_vertices(a: &WittElement) -> Result<BTreeSet<MIndex>> {
    let pts: Vec<&MIndex> = a.0.map.keys().collect();
    match a.dim() {
        1 => Ok(pts
            .first()
            .into_iter()
            .chain(pts.last())
            .map(|p| (*p).clone())
            .collect()),
        2 => Ok(hull_2d(&pts)),
        n => Err(Error::UnsupportedDimension { n }),
    }
}

/// Andrew's monotone chain; collinear boundary points are dropped.
/// `pts` must be sorted lexicographically.
fn hull_2d(pts: &[&MIndex]) -> BTreeSet<MIndex> {
    if pts.len() <= 2 {
        return pts.iter().map(|p| (*p).clone()).collect();
    }
    let lower = half_hull(pts.iter().copied());
    let upper = half_hull(pts.iter().rev().copied());
    lower.into_iter().chain(upper).cloned().collect()
}

fn half_hull<'a>(pts: impl Iterator<Item = &'a MIndex>) -> Vec<&'a MIndex> {
    let cross = |o: &MIndex, a: &MIndex, b: &MIndex| -> i128 {
        (a[0] - o[0]) as i128 * (b[1] - o[1]) as i128 - (a[1] - o[1]) as i128 * (b[0] - o[0]) as i128
    };
    let mut h: Vec<&MIndex> = Vec::new();
    for p in pts {
        while h.len() >= 2 && cross(h[h.len() - 2], h[h.len() - 1], p) <= 0 {
            h.pop();
        }
        h.push(p);
    }
    h
}

/// An integer weight `λ ∈ Z^n` defining the grading `deg(x^α H) = (λ, α)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeightVector(Vec<i64>);

impl WeightVector {
    pub fn new(weights: Vec<i64>) -> Self {
        WeightVector(weights)
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self, alpha: &MIndex) -> i64 {
        alpha.dot(&self.0)
    }
}

/// Splits `a` into its `(Z, λ)`-homogeneous components, keyed by degree.
pub fn graded_components(a: &WittElement, lambda: &WeightVector) -> Result<BTreeMap<i64, WittElement>> {
    check_dim(a.dim(), lambda.dim())?;
    let mut out: BTreeMap<i64, WittElement> = BTreeMap::new();
    for (alpha, v) in &a.0.map {
        out.entry(lambda.degree(alpha))
            .or_insert_with(|| WittElement::zero(a.dim()))
            .0
            .add_vec(alpha.clone(), v);
    }
    Ok(out)
}

/// Which end of the `(Z, λ)`-grading to read.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    /// The leading term: component of maximal degree.
    Plus,
    /// The least term: component of minimal degree.
    Minus,
}

pub fn leading_term(a: &WittElement, lambda: &WeightVector, side: Side) -> Result<WittElement> {
    let mut comps = graded_components(a, lambda)?;
    let entry = match side {
        Side::Plus => comps.pop_last(),
        Side::Minus => comps.pop_first(),
    };
    entry.map(|(_, w)| w).ok_or(Error::ZeroElement)
}

/// Whether `ad(a)` is locally finite. In `W_n` this holds exactly on the
/// Cartan subalgebra: leading and least terms of a locally finite element
/// are locally finite and homogeneous, and a homogeneous element off weight
/// zero has iterates of unbounded weight.
pub fn is_locally_finite(a: &WittElement) -> bool {
    a.0.map.keys().all(MIndex::is_zero)
}

/// `[ad(a)(b), ad(a)²(b), …, ad(a)^m(b)]` for homogeneous `a`.
pub fn lf_iterates(a: &WittElement, b: &WittElement, m: usize) -> Result<Vec<WittElement>> {
    check_dim(a.dim(), b.dim())?;
    if a.homogeneous_weight().is_none() {
        return Err(Error::NotHomogeneous { support_len: a.num_weights() });
    }
    let mut out = Vec::with_capacity(m);
    let mut cur = b.clone();
    for _ in 0..m {
        cur = bracket(a, &cur)?;
        out.push(cur.clone());
    }
    Ok(out)
}

/// Probe vector whose `ad(a)`-orbit witnesses that a homogeneous
/// `a = x^α H'` with `α ≠ 0` is not locally finite.
///
/// If `(H', α) ≠ 0` the probe is `x^(2α) H'`; otherwise it is
/// `x^(e_k) H' / H'_k` for the first `k` with `H'_k ≠ 0`, so that the
/// iterates are `H'_k^(m−1) x^(e_k + mα) H'`.
pub fn lf_probe(a: &WittElement) -> Result<WittElement> {
    let alpha = a
        .homogeneous_weight()
        .ok_or(Error::NotHomogeneous { support_len: a.num_weights() })?;
    let h = a.coeffs_at(alpha).expect("weight present");
    let n = a.dim();
    if !pairing_unchecked(h, alpha).is_zero() {
        return WittElement::homogeneous(alpha.scale(2), h.to_vec());
    }
    let k = h.iter().position(|c| !c.is_zero()).expect("canonical form");
    let inv = h[k].recip();
    WittElement::homogeneous(MIndex::unit(n, k), h.iter().map(|c| c * &inv).collect())
}

/// Axis-aligned box `{α : lo_i ≤ α_i ≤ hi_i}` of weights.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Window {
    lo: Vec<i64>,
    hi: Vec<i64>,
}

impl Window {
    pub fn new(lo: Vec<i64>, hi: Vec<i64>) -> Result<Self> {
        check_dim(lo.len(), hi.len())?;
        if lo.iter().zip(&hi).any(|(l, h)| l > h) {
            return Err(Error::WindowTooSmall { reason: "empty window".into() });
        }
        Ok(Window { lo, hi })
    }

    /// `[lo, hi]^n`.
    pub fn cube(n: usize, lo: i64, hi: i64) -> Result<Self> {
        Self::new(vec![lo; n], vec![hi; n])
    }

    pub fn dim(&self) -> usize {
        self.lo.len()
    }

    pub fn contains(&self, alpha: &MIndex) -> bool {
        alpha.dim() == self.dim()
            && (0..self.dim()).all(|i| self.lo[i] <= alpha[i] && alpha[i] <= self.hi[i])
    }

    pub fn num_points(&self) -> usize {
        self.lo.iter().zip(&self.hi).map(|(l, h)| (h - l + 1) as usize).product()
    }

    /// All weights in the window, lexicographically.
    pub fn points(&self) -> Vec<MIndex> {
        let mut out = vec![Vec::with_capacity(self.dim())];
        for (l, h) in self.lo.iter().zip(&self.hi) {
            out = out
                .into_iter()
                .flat_map(|prefix| {
                    (*l..=*h).map(move |v| {
                        let mut p = prefix.clone();
                        p.push(v);
                        p
                    })
                })
                .collect();
        }
        out.into_iter().map(MIndex::new).collect()
    }
}

/// Coordinates `(α, j) ↦ column` for the elements supported in a window.
struct WindowBasis {
    n: usize,
    points: Vec<MIndex>,
}

impl WindowBasis {
    fn new(window: &Window) -> Self {
        WindowBasis { n: window.dim(), points: window.points() }
    }

    fn len(&self) -> usize {
        self.points.len() * self.n
    }

    fn element(&self, col: usize) -> WittElement {
        WittElement::monomial(self.points[col / self.n].clone(), col % self.n, Scalar::one())
    }

    fn decode(&self, v: &SparseVec) -> WittElement {
        let mut out = WittElement::zero(self.n);
        for (&col, c) in v {
            out.0.add_coeff(self.points[col / self.n].clone(), col % self.n, c);
        }
        out
    }
}

/// Assembles `Σ_cols x_col · images[col] = target` coordinatewise.
fn image_system(images: &[WittElement], target: &WittElement) -> LinearSystem {
    let mut rows: BTreeMap<(MIndex, usize), Vec<(usize, Scalar)>> = BTreeMap::new();
    for (col, img) in images.iter().enumerate() {
        for (alpha, v) in img.terms() {
            for (j, c) in v.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                rows.entry((alpha.clone(), j)).or_default().push((col, c.clone()));
            }
        }
    }
    // target coordinates no image reaches still need an equation 0 = c
    for (alpha, v) in target.terms() {
        for (j, _) in v.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            rows.entry((alpha.clone(), j)).or_default();
        }
    }
    let mut sys = LinearSystem::new(images.len());
    for ((alpha, j), coeffs) in rows {
        sys.add_equation(coeffs, target.coeff(&alpha, j));
    }
    sys
}

/// Solutions `w` (supported in a window) of a linear equation in `W_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BracketSolution {
    NoSolution,
    /// `{particular + Σ t_k nullspace[k]}`.
    Family { particular: WittElement, nullspace: Vec<WittElement> },
}

impl BracketSolution {
    /// Whether `w` belongs to the solution family.
    pub fn contains(&self, w: &WittElement) -> bool {
        let BracketSolution::Family { particular, nullspace } = self else {
            return false;
        };
        let Ok(diff) = w.try_sub(particular) else {
            return false;
        };
        !matches!(solve_sparse(&image_system(nullspace, &diff)), SparseSolution::Inconsistent)
    }
}

/// Solves `[w, b] = target` for `w` supported in `window`.
pub fn solve_bracket_equation(b: &WittElement, target: &WittElement, window: &Window) -> Result<BracketSolution> {
    check_dim(b.dim(), target.dim())?;
    check_dim(b.dim(), window.dim())?;
    let basis = WindowBasis::new(window);
    let images = (0..basis.len())
        .map(|col| bracket(&basis.element(col), b))
        .collect::<Result<Vec<_>>>()?;
    Ok(match solve_sparse(&image_system(&images, target)) {
        SparseSolution::Inconsistent => BracketSolution::NoSolution,
        SparseSolution::Consistent { particular, nullspace } => BracketSolution::Family {
            particular: basis.decode(&particular),
            nullspace: nullspace.iter().map(|v| basis.decode(v)).collect(),
        },
    })
}

/// Basis of `{w supported in window : [w, g] = 0 for every generator g}`.
pub fn centralizer_window(generators: &[WittElement], window: &Window) -> Result<Vec<WittElement>> {
    let n = window.dim();
    for g in generators {
        check_dim(n, g.dim())?;
    }
    let basis = WindowBasis::new(window);
    let mut sys = LinearSystem::new(basis.len());
    let zero = WittElement::zero(n);
    for g in generators {
        let images = (0..basis.len())
            .map(|col| bracket(&basis.element(col), g))
            .collect::<Result<Vec<_>>>()?;
        sys.append(image_system(&images, &zero));
    }
    match solve_sparse(&sys) {
        SparseSolution::Consistent { nullspace, .. } => Ok(nullspace.iter().map(|v| basis.decode(v)).collect()),
        SparseSolution::Inconsistent => unreachable!("homogeneous systems are consistent"),
    }
}
