//! The automorphism group `GL_n(Z) ⋉ (Q*)^n` of `L_n`, acting on `L_n` and on
//! `W_n` by conjugation.
//!
//! An [`Automorphism`] is stored in the canonical form `σ = σ_A ∘ t_λ`:
//! first the torus scaling `x_i ↦ λ_i x_i`, then the monomial change of
//! variables `x^α ↦ x^(Aα)`. Together, `σ(x^α) = λ^α x^(Aα)`.
//!
//! On `W_n` the action is `σ(x^α H_j) = λ^α x^(Aα) Σ_k (A⁻¹)_{jk} H_k`. In
//! particular `σ(H) = A⁻¹ H` for the column `H = (H_1, …, H_n)`, and `σ` sends
//! the weight component of weight `α` to that of weight `Aα`.

use std::fmt;

use num_traits::{One, Zero};

use crate::error::{check_dim, Error, Result};
use crate::kernel::{int, scalar_pow, solve_exact, IntMatrix, LinearSystem, MIndex, Scalar, Solution};
use crate::laurent::Laurent;
use crate::witt::{support, WittElement};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Automorphism {
    a: IntMatrix,
    lambda: Vec<Scalar>,
}

impl Automorphism {
    pub fn new(a: IntMatrix, lambda: Vec<Scalar>) -> Result<Self> {
        check_dim(a.dim(), lambda.len())?;
        if !a.is_unimodular() {
            return Err(Error::NotUnimodular { det: a.det().to_string() });
        }
        if let Some(i) = lambda.iter().position(Zero::is_zero) {
            return Err(Error::NotAUnit { index: i + 1 });
        }
        Ok(Automorphism { a, lambda })
    }

    pub fn identity(n: usize) -> Self {
        Automorphism { a: IntMatrix::identity(n), lambda: vec![Scalar::one(); n] }
    }

    /// The torus element `t_λ`.
    pub fn torus(lambda: Vec<Scalar>) -> Result<Self> {
        Self::new(IntMatrix::identity(lambda.len()), lambda)
    }

    /// The monomial automorphism `σ_A : x_i ↦ Π_j x_j^(a_ji)`.
    pub fn monomial(a: IntMatrix) -> Result<Self> {
        let n = a.dim();
        Self::new(a, vec![Scalar::one(); n])
    }

    pub fn dim(&self) -> usize {
        self.a.dim()
    }

    /// The exponent matrix `A`.
    pub fn matrix(&self) -> &IntMatrix {
        &self.a
    }

    pub fn lambda(&self) -> &[Scalar] {
        &self.lambda
    }

    pub fn is_identity(&self) -> bool {
        self.a.is_identity() && self.lambda.iter().all(One::is_one)
    }

    pub fn is_torus(&self) -> bool {
        self.a.is_identity()
    }

    /// `λ^α = Π λ_i^(α_i)`.
    pub fn lambda_pow(&self, alpha: &MIndex) -> Scalar {
        self.lambda
            .iter()
            .zip(alpha.as_slice())
            .filter(|(_, &e)| e != 0)
            .fold(Scalar::one(), |acc, (l, &e)| acc * scalar_pow(l, e))
    }

    /// The matrix `A_σ` with `σ(H) = A_σ H`; equals `A⁻¹`.
    pub fn cartan_matrix(&self) -> IntMatrix {
        self.a.unimodular_inverse().expect("stored matrix is unimodular")
    }
}

impl fmt::Display for Automorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "A={} lambda=(", self.a)?;
        for (i, l) in self.lambda.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{l}")?;
        }
        write!(f, ")")
    }
}

/// `σ ∘ τ`. With `σ = (A, λ)` and `τ = (B, μ)` the result is `(AB, ν)` where
/// `ν_i = λ^(B e_i) μ_i`.
pub fn compose(sigma: &Automorphism, tau: &Automorphism) -> Result<Automorphism> {
    check_dim(sigma.dim(), tau.dim())?;
    let a = sigma.a.mul(&tau.a)?;
    let lambda = (0..tau.dim())
        .map(|i| sigma.lambda_pow(&tau.a.column(i)) * &tau.lambda[i])
        .collect();
    Ok(Automorphism { a, lambda })
}

/// `(A, λ)⁻¹ = (A⁻¹, μ)` with `μ_i = λ^(−A⁻¹ e_i)`.
pub fn inverse(sigma: &Automorphism) -> Automorphism {
    let a_inv = sigma.cartan_matrix();
    let lambda = (0..sigma.dim())
        .map(|i| sigma.lambda_pow(&a_inv.column(i)).recip())
        .collect();
    Automorphism { a: a_inv, lambda }
}

/// `x^α ↦ λ^α x^(Aα)`, extended linearly.
pub fn apply_to_laurent(sigma: &Automorphism, f: &Laurent) -> Result<Laurent> {
    check_dim(sigma.dim(), f.dim())?;
    let mut out = Laurent::zero(f.dim());
    for (alpha, c) in f.terms() {
        out.add_term(sigma.a.apply(alpha)?, &(sigma.lambda_pow(alpha) * c));
    }
    Ok(out)
}

/// `σ w σ⁻¹` for `w ∈ W_n`.
pub fn apply_to_witt(sigma: &Automorphism, w: &WittElement) -> Result<WittElement> {
    check_dim(sigma.dim(), w.dim())?;
    let n = w.dim();
    let a_inv = sigma.cartan_matrix();
    let mut out = WittElement::zero(n);
    for (alpha, v) in w.terms() {
        let target = sigma.a.apply(alpha)?;
        let scale = sigma.lambda_pow(alpha);
        for (j, c) in v.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            let cj = c * &scale;
            for k in 0..n {
                let e = a_inv.get(j, k);
                if e != 0 {
                    out.add_term(target.clone(), k, &(&cj * int(e)));
                }
            }
        }
    }
    Ok(out)
}

/// `(σ(x_1), …, σ(x_n))`.
pub fn generator_images(sigma: &Automorphism) -> Vec<Laurent> {
    let n = sigma.dim();
    (0..n)
        .map(|i| Laurent::monomial(sigma.a.column(i), sigma.lambda[i].clone()))
        .collect()
}

/// `(σ(H_1), …, σ(H_n))`.
pub fn cartan_images(sigma: &Automorphism) -> Vec<WittElement> {
    let n = sigma.dim();
    (0..n)
        .map(|j| apply_to_witt(sigma, &WittElement::h(n, j)).expect("dimensions agree"))
        .collect()
}

/// `(σ(∂_1), …, σ(∂_n))`.
pub fn partial_images(sigma: &Automorphism) -> Vec<WittElement> {
    let n = sigma.dim();
    (0..n)
        .map(|j| apply_to_witt(sigma, &WittElement::partial(n, j)).expect("dimensions agree"))
        .collect()
}

/// Reads `(A, λ)` off the images `σ(x_i) = λ_i x^(a_i)` of the generators.
/// Each image must be a unit of `L_n`, i.e. a nonzero scalar monomial.
pub fn decompose_ring_map(images: &[Laurent]) -> Result<Automorphism> {
    let n = images.len();
    let mut cols = Vec::with_capacity(n);
    let mut lambda = Vec::with_capacity(n);
    for (i, img) in images.iter().enumerate() {
        check_dim(n, img.dim())?;
        let (alpha, c) = img.as_unit().ok_or(Error::NotAUnit { index: i + 1 })?;
        cols.push(alpha.clone());
        lambda.push(c.clone());
    }
    let rows = (0..n).map(|r| cols.iter().map(|c| c[r]).collect()).collect();
    Automorphism::new(IntMatrix::from_rows(rows)?, lambda)
}

/// Reconstructs `σ` from the images of `H_1, …, H_n` and `∂_1, …, ∂_n`.
///
/// 1. each `σ(H_j)` must lie in the Cartan subalgebra (support `{0}`);
/// 2. the rows of `A_σ` are their coefficient vectors, and `A_σ` must be an
///    integer unimodular matrix;
/// 3. `A = A_σ⁻¹`;
/// 4. `σ_A⁻¹ σ` fixes every `H_j`, so it sends `∂_i` to `x_i⁻¹ Σ_j Λ_ij H_j`.
///    Commutation of the `∂_i` forces `Λ` diagonal; the diagonal is read off
///    by solving `Λ_ij = μ_i δ_ij`, and `λ_i = μ_i⁻¹`;
/// 5. the candidate `(A, λ)` must reproduce all `2n` images.
pub fn recover_from_images(h_images: &[WittElement], partial_images_in: &[WittElement]) -> Result<Automorphism> {
    let n = h_images.len();
    if n == 0 {
        return Err(Error::dim(1, 0));
    }
    check_dim(n, partial_images_in.len())?;
    for w in h_images.iter().chain(partial_images_in) {
        check_dim(n, w.dim())?;
    }

    let zero = MIndex::zeros(n);
    let mut cartan_rows = Vec::with_capacity(n);
    for (j, img) in h_images.iter().enumerate() {
        if support(img).iter().any(|a| *a != zero) {
            return Err(Error::NotCartanPreserving { index: j + 1 });
        }
        let row: Vec<Scalar> = img
            .coeffs_at(&zero)
            .map_or_else(|| vec![Scalar::zero(); n], <[Scalar]>::to_vec);
        cartan_rows.push(row);
    }
    let a_sigma_q = crate::kernel::RatMatrix::from_rows(cartan_rows.clone())?;
    if cartan_rows.iter().flatten().any(|c| !c.is_integer()) {
        return Err(Error::NotUnimodular { det: a_sigma_q.det().to_string() });
    }
    let a_sigma = IntMatrix::from_rows(
        cartan_rows
            .iter()
            .map(|r| {
                r.iter()
                    .map(|c| num_traits::ToPrimitive::to_i64(&c.to_integer()).expect("entry fits i64"))
                    .collect()
            })
            .collect(),
    )?;
    let a = a_sigma.unimodular_inverse()?;

    let untwist = Automorphism::monomial(a.unimodular_inverse()?)?;
    let mut system = LinearSystem::new(n);
    for (i, img) in partial_images_in.iter().enumerate() {
        let fixed = apply_to_witt(&untwist, img)?;
        let weight = -&MIndex::unit(n, i);
        if let Some(off) = support(&fixed).into_iter().find(|a| *a != weight) {
            return Err(Error::NotDiagonalizable {
                reason: format!("image of d{} has a component of weight {off}", i + 1),
            });
        }
        for j in 0..n {
            let coeffs = if i == j { vec![(i, Scalar::one())] } else { vec![] };
            system.add_equation(coeffs, fixed.coeff(&weight, j));
        }
    }
    let mu = match solve_exact(&system) {
        Solution::Consistent { particular, nullspace } if nullspace.is_empty() => particular,
        _ => {
            return Err(Error::NotDiagonalizable {
                reason: "the matrix relating the partial images is not diagonal".into(),
            })
        }
    };
    if let Some(i) = mu.iter().position(Zero::is_zero) {
        return Err(Error::NotDiagonalizable { reason: format!("image of d{} vanishes", i + 1) });
    }
    let sigma = Automorphism::new(a, mu.iter().map(|m| m.recip()).collect())?;

    if cartan_images(&sigma) != h_images || partial_images(&sigma) != partial_images_in {
        return Err(Error::NotDiagonalizable { reason: "images are not reproduced".into() });
    }
    Ok(sigma)
}

/// Membership of `σ` in the fixators of `{H_i}` and of `{∂_i}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FixatorFlags {
    pub fixes_cartan: bool,
    pub fixes_partials: bool,
}

/// Decided by applying `σ` to the generators.
pub fn fixator_flags(sigma: &Automorphism) -> FixatorFlags {
    let n = sigma.dim();
    let fixes = |gens: Vec<WittElement>, images: Vec<WittElement>| gens == images;
    FixatorFlags {
        fixes_cartan: fixes((0..n).map(|j| WittElement::h(n, j)).collect(), cartan_images(sigma)),
        fixes_partials: fixes((0..n).map(|j| WittElement::partial(n, j)).collect(), partial_images(sigma)),
    }
}
