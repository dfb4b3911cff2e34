//! The Virasoro algebra `Vir = W_1 ⊕ Qc`, with bracket
//!
//! ```text
//! [x^i H, x^j H] = (j − i) x^(i+j) H + δ_{i,−j} (i³ − i)/12 · c
//! ```
//!
//! and the lifting of automorphisms of `W_1` to `Vir`. Lifts are found by
//! exact linear solving, never assumed: the unknowns are the image `γ c` of
//! the centre and a correction functional `φ` on the basis `x^i H`.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::autgrp::{self, apply_to_witt, Automorphism};
use crate::error::{check_dim, Error, Result};
use crate::kernel::{frac, int, solve_exact, LinearSystem, MIndex, Scalar, Solution};
use crate::witt::{bracket, WittElement};

/// Window half-width used by default when solving for a lift.
pub const DEFAULT_LIFT_WINDOW: i64 = 6;

/// `w + z·c` with `w ∈ W_1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VirElement {
    w: WittElement,
    z: Scalar,
}

impl VirElement {
    pub fn new(w: WittElement, z: Scalar) -> Result<Self> {
        check_dim(1, w.dim())?;
        Ok(VirElement { w, z })
    }

    pub fn zero() -> Self {
        VirElement { w: WittElement::zero(1), z: Scalar::zero() }
    }

    /// `x^i H`.
    pub fn basis(i: i64) -> Self {
        VirElement { w: WittElement::monomial(MIndex::new(vec![i]), 0, Scalar::one()), z: Scalar::zero() }
    }

    /// The central element `c`.
    pub fn c() -> Self {
        VirElement { w: WittElement::zero(1), z: Scalar::one() }
    }

    pub fn witt_part(&self) -> &WittElement {
        &self.w
    }

    pub fn central(&self) -> &Scalar {
        &self.z
    }

    pub fn is_zero(&self) -> bool {
        self.w.is_zero() && self.z.is_zero()
    }

    /// `(i, coefficient of x^i H)` in increasing `i`.
    pub fn coefficients(&self) -> impl Iterator<Item = (i64, &Scalar)> {
        self.w.terms().map(|(a, v)| (a[0], &v[0]))
    }

    pub fn scale(&self, k: &Scalar) -> Self {
        VirElement { w: self.w.scale(k), z: &self.z * k }
    }
}

impl std::ops::Add for &VirElement {
    type Output = VirElement;
    fn add(self, rhs: &VirElement) -> VirElement {
        VirElement { w: &self.w + &rhs.w, z: &self.z + &rhs.z }
    }
}

impl std::ops::Sub for &VirElement {
    type Output = VirElement;
    fn sub(self, rhs: &VirElement) -> VirElement {
        VirElement { w: &self.w - &rhs.w, z: &self.z - &rhs.z }
    }
}

/// `δ_{i,−j} (i³ − i)/12`.
pub fn cocycle(i: i64, j: i64) -> Scalar {
    if i + j != 0 {
        return Scalar::zero();
    }
    frac(i * i * i - i, 12)
}

pub fn vir_bracket(a: &VirElement, b: &VirElement) -> VirElement {
    let w = bracket(&a.w, &b.w).expect("both operands live in W_1");
    let mut z = Scalar::zero();
    for (i, ai) in a.coefficients() {
        if let Some(bj) = b.w.coeffs_at(&MIndex::new(vec![-i])) {
            z += ai * &bj[0] * cocycle(i, -i);
        }
    }
    VirElement { w, z }
}

/// An automorphism of `Vir` covering an automorphism of `W_1`:
/// `x^i H ↦ base(x^i H) + φ(i) c`, `c ↦ γ c`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VirAutomorphism {
    base: Automorphism,
    gamma: Scalar,
    phi: BTreeMap<i64, Scalar>,
}

impl VirAutomorphism {
    pub fn new(base: Automorphism, gamma: Scalar, phi: BTreeMap<i64, Scalar>) -> Result<Self> {
        check_dim(1, base.dim())?;
        if gamma.is_zero() {
            return Err(Error::NotLiftable { reason: "central image vanishes".into() });
        }
        let phi = phi.into_iter().filter(|(_, v)| !v.is_zero()).collect();
        Ok(VirAutomorphism { base, gamma, phi })
    }

    pub fn identity() -> Self {
        VirAutomorphism { base: Automorphism::identity(1), gamma: Scalar::one(), phi: BTreeMap::new() }
    }

    pub fn base(&self) -> &Automorphism {
        &self.base
    }

    /// The scalar `γ` with `c ↦ γ c`.
    pub fn gamma(&self) -> &Scalar {
        &self.gamma
    }

    /// Nonzero values of the correction functional.
    pub fn phi(&self) -> &BTreeMap<i64, Scalar> {
        &self.phi
    }

    pub fn phi_at(&self, i: i64) -> Scalar {
        self.phi.get(&i).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn apply(&self, v: &VirElement) -> VirElement {
        let w = apply_to_witt(&self.base, &v.w).expect("both live in W_1");
        let mut z = &self.gamma * &v.z;
        for (i, c) in v.coefficients() {
            z += c * self.phi_at(i);
        }
        VirElement { w, z }
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &VirAutomorphism) -> VirAutomorphism {
        let base = autgrp::compose(&self.base, &other.base).expect("both act on W_1");
        let gamma = &self.gamma * &other.gamma;
        let eps = other.base.matrix().get(0, 0);
        let mut degrees: Vec<i64> = other.phi.keys().copied().collect();
        degrees.extend(self.phi.keys().map(|k| eps * k));
        let mut phi = BTreeMap::new();
        for i in degrees {
            let v = self.apply(&other.apply(&VirElement::basis(i))).z;
            if !v.is_zero() {
                phi.insert(i, v);
            }
        }
        VirAutomorphism { base, gamma, phi }
    }

    pub fn is_identity(&self) -> bool {
        self.base.is_identity() && self.gamma.is_one() && self.phi.is_empty()
    }

    /// Whether the map preserves the bracket on every pair `x^i H, x^j H`
    /// with `|i|, |j| ≤ window`, and on pairs involving `c`. Both sides are
    /// antisymmetric, so each unordered pair is checked once.
    pub fn preserves_bracket(&self, window: i64) -> bool {
        let mut basis: Vec<VirElement> = (-window..=window).map(VirElement::basis).collect();
        basis.push(VirElement::c());
        let images: Vec<VirElement> = basis.iter().map(|b| self.apply(b)).collect();
        basis.iter().zip(&images).enumerate().all(|(k, (a, sa))| {
            basis[k + 1..]
                .iter()
                .zip(&images[k + 1..])
                .all(|(b, sb)| self.apply(&vir_bracket(a, b)) == vir_bracket(sa, sb))
        })
    }
}

/// Solves for the unique lift of `σ ∈ Aut(W_1)` to `Vir`.
///
/// Unknowns are `γ` and `φ(k)` for `|k| ≤ window`; constraints are the
/// central components of `σ̂[x^i H, x^j H] = [σ̂ x^i H, σ̂ x^j H]` for every
/// pair with `|i|, |j|, |i+j| ≤ window`. The solution must be unique, and is
/// re-verified on the doubled window with `φ` extended by zero.
pub fn lift_w1_automorphism(sigma: &Automorphism, window: i64) -> Result<VirAutomorphism> {
    check_dim(1, sigma.dim())?;
    if window < 3 {
        return Err(Error::WindowTooSmall { reason: format!("lift window {window} < 3") });
    }
    let unknowns = 1 + (2 * window + 1) as usize;
    let phi_col = |k: i64| 1 + (k + window) as usize;
    let image = |i: i64| VirElement {
        w: apply_to_witt(sigma, &VirElement::basis(i).w).expect("W_1"),
        z: Scalar::zero(),
    };

    let mut system = LinearSystem::new(unknowns);
    for i in -window..=window {
        for j in -window..=window {
            if (i + j).abs() > window {
                continue;
            }
            let rhs = vir_bracket(&image(i), &image(j)).z;
            let mut coeffs = vec![(0, cocycle(i, j))];
            if j != i {
                coeffs.push((phi_col(i + j), int(j - i)));
            }
            system.add_equation(coeffs, rhs);
        }
    }

    let solution = match solve_exact(&system) {
        Solution::Inconsistent => {
            return Err(Error::NotLiftable { reason: "lift constraints are inconsistent".into() })
        }
        Solution::Consistent { nullspace, .. } if !nullspace.is_empty() => {
            return Err(Error::UniquenessViolation { free: nullspace.len() })
        }
        Solution::Consistent { particular, .. } => particular,
    };
    let phi = (-window..=window)
        .map(|k| (k, solution[phi_col(k)].clone()))
        .collect();
    let lift = VirAutomorphism::new(sigma.clone(), solution[0].clone(), phi)?;
    if !lift.preserves_bracket(2 * window) {
        return Err(Error::NotLiftable { reason: "lift fails re-verification on the doubled window".into() });
    }
    Ok(lift)
}
