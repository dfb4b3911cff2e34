//! Central extensions of finite-dimensional Lie algebras.
//!
//! For a Lie algebra `G`, a subspace `Z` of its centre and `W = G/Z`, this
//! module computes centres, derived subalgebras, the quotient with its
//! cocycle, the kernel `K = {τ_φ : φ ∈ Hom(W, Z), φ([W, W]) = 0}` of
//! `Aut(G) → Aut(W)`, and the set of lifts of a given automorphism of `W`.
//!
//! Vectors are coordinate columns in the basis `e_1, …, e_d` of `G`; matrices
//! act on columns, so column `i` of a matrix holds the image of `e_i`.

use std::fmt;

use num_traits::{One, Zero};

use crate::error::{check_dim, Error, Result};
use crate::kernel::{
    dense_to_sparse, solve_sparse, sparse_to_dense, LinearSystem, RatMatrix, Rref, Scalar, SparseSolution,
};

/// Raw structure constants `c_ij^k`, not yet known to define a Lie algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureConstants {
    dim: usize,
    data: Vec<Scalar>,
}

/// One bracket `[e_i, e_j] = Σ c_k e_k`, 1-based indices.
pub type BracketEntry = (usize, usize, Vec<(usize, Scalar)>);

impl StructureConstants {
    pub fn zero(dim: usize) -> Self {
        StructureConstants { dim, data: vec![Scalar::zero(); dim * dim * dim] }
    }

    /// Builds constants from a list of brackets. A pair given only once is
    /// completed antisymmetrically; a pair given in both orders is kept as
    /// written so that validation can flag inconsistencies.
    pub fn from_brackets(dim: usize, entries: &[BracketEntry]) -> Result<Self> {
        let mut sc = StructureConstants::zero(dim);
        let mut explicit = vec![false; dim * dim];
        let check = |idx: usize| {
            if idx == 0 || idx > dim {
                Err(Error::InvalidAlgebra { reason: format!("basis index {idx} out of range 1..={dim}") })
            } else {
                Ok(idx - 1)
            }
        };
        for (i, j, terms) in entries {
            let (i, j) = (check(*i)?, check(*j)?);
            explicit[i * dim + j] = true;
            for (k, c) in terms {
                let k = check(*k)?;
                *sc.entry_mut(i, j, k) += c;
            }
        }
        for i in 0..dim {
            for j in 0..dim {
                if explicit[i * dim + j] && !explicit[j * dim + i] {
                    for k in 0..dim {
                        let v = -sc.get(i, j, k).clone();
                        *sc.entry_mut(j, i, k) = v;
                    }
                }
            }
        }
        Ok(sc)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// `c_ij^k`, 0-based.
    pub fn get(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.data[(i * self.dim + j) * self.dim + k]
    }

    pub fn set(&mut self, i: usize, j: usize, k: usize, v: Scalar) {
        *self.entry_mut(i, j, k) = v;
    }

    fn entry_mut(&mut self, i: usize, j: usize, k: usize) -> &mut Scalar {
        let d = self.dim;
        &mut self.data[(i * d + j) * d + k]
    }

    fn basis_bracket(&self, i: usize, j: usize) -> &[Scalar] {
        let start = (i * self.dim + j) * self.dim;
        &self.data[start..start + self.dim]
    }

    fn bracket(&self, u: &[Scalar], v: &[Scalar]) -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(); self.dim];
        for (i, ui) in u.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            for (j, vj) in v.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                let f = ui * vj;
                for (o, c) in out.iter_mut().zip(self.basis_bracket(i, j)) {
                    if !c.is_zero() {
                        *o += &f * c;
                    }
                }
            }
        }
        out
    }
}

/// Outcome of checking antisymmetry and the Jacobi identity. Indices are
/// 1-based, as in the file format.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ValidationReport {
    Valid,
    AntisymmetryViolation { i: usize, j: usize },
    JacobiViolation { i: usize, j: usize, k: usize },
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        matches!(self, ValidationReport::Valid)
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ValidationReport::Valid => write!(f, "valid"),
            ValidationReport::AntisymmetryViolation { i, j } => write!(f, "antisymmetry violated at ({i},{j})"),
            ValidationReport::JacobiViolation { i, j, k } => write!(f, "Jacobi identity violated at ({i},{j},{k})"),
        }
    }
}

/// Checks antisymmetry on every pair, then Jacobi on every triple, and
/// reports the first violation in lexicographic order.
pub fn validate(sc: &StructureConstants) -> ValidationReport {
    let d = sc.dim;
    for i in 0..d {
        for j in i..d {
            let ok = (0..d).all(|k| *sc.get(i, j, k) == -sc.get(j, i, k).clone());
            if !ok {
                return ValidationReport::AntisymmetryViolation { i: i + 1, j: j + 1 };
            }
        }
    }
    let unit = |i: usize| {
        let mut v = vec![Scalar::zero(); d];
        v[i] = Scalar::one();
        v
    };
    for i in 0..d {
        for j in i + 1..d {
            for k in j + 1..d {
                let (a, b, c) = (unit(i), unit(j), unit(k));
                let t1 = sc.bracket(&a, &sc.bracket(&b, &c));
                let t2 = sc.bracket(&b, &sc.bracket(&c, &a));
                let t3 = sc.bracket(&c, &sc.bracket(&a, &b));
                if t1.iter().zip(&t2).zip(&t3).any(|((x, y), z)| !(x + y + z).is_zero()) {
                    return ValidationReport::JacobiViolation { i: i + 1, j: j + 1, k: k + 1 };
                }
            }
        }
    }
    ValidationReport::Valid
}

/// A finite-dimensional Lie algebra over Q given by validated structure
/// constants.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FdLieAlgebra {
    sc: StructureConstants,
    labels: Vec<String>,
}

impl FdLieAlgebra {
    pub fn new(sc: StructureConstants, labels: Option<Vec<String>>) -> Result<Self> {
        let report = validate(&sc);
        if !report.is_valid() {
            return Err(Error::InvalidAlgebra { reason: report.to_string() });
        }
        let labels = match labels {
            Some(l) => {
                check_dim(sc.dim, l.len())?;
                l
            }
            None => (1..=sc.dim).map(|i| format!("e{i}")).collect(),
        };
        Ok(FdLieAlgebra { sc, labels })
    }

    pub fn abelian(dim: usize) -> Self {
        FdLieAlgebra::new(StructureConstants::zero(dim), None).expect("abelian algebras are valid")
    }

    /// Heisenberg algebra `[e, f] = z`.
    pub fn heisenberg() -> Self {
        let sc = StructureConstants::from_brackets(3, &[(1, 2, vec![(3, Scalar::one())])]).expect("valid indices");
        FdLieAlgebra::new(sc, Some(vec!["e".into(), "f".into(), "z".into()])).expect("valid")
    }

    /// `sl_2` with basis `e, f, h`: `[e,f] = h`, `[h,e] = 2e`, `[h,f] = −2f`.
    pub fn sl2() -> Self {
        let two = Scalar::from_integer(2.into());
        let sc = StructureConstants::from_brackets(
            3,
            &[
                (1, 2, vec![(3, Scalar::one())]),
                (3, 1, vec![(1, two.clone())]),
                (3, 2, vec![(2, -two)]),
            ],
        )
        .expect("valid indices");
        FdLieAlgebra::new(sc, Some(vec!["e".into(), "f".into(), "h".into()])).expect("valid")
    }

    /// `L ⊕ Q·z` with `z` central, appended as the last basis vector.
    pub fn with_central_summand(&self, label: &str) -> Self {
        let d = self.dim();
        let mut sc = StructureConstants::zero(d + 1);
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    sc.set(i, j, k, self.sc.get(i, j, k).clone());
                }
            }
        }
        let mut labels = self.labels.clone();
        labels.push(label.to_string());
        FdLieAlgebra::new(sc, Some(labels)).expect("direct sum with an abelian summand is valid")
    }

    pub fn dim(&self) -> usize {
        self.sc.dim
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn structure_constants(&self) -> &StructureConstants {
        &self.sc
    }

    pub fn bracket(&self, u: &[Scalar], v: &[Scalar]) -> Result<Vec<Scalar>> {
        check_dim(self.dim(), u.len())?;
        check_dim(self.dim(), v.len())?;
        Ok(self.sc.bracket(u, v))
    }

    /// Whether `M[e_i, e_j] = [M e_i, M e_j]` for all basis pairs.
    pub fn is_homomorphism(&self, m: &RatMatrix) -> bool {
        let d = self.dim();
        if m.nrows() != d || m.ncols() != d {
            return false;
        }
        let cols: Vec<Vec<Scalar>> = (0..d).map(|i| m.column(i)).collect();
        (0..d).all(|i| {
            (i + 1..d).all(|j| {
                let lhs = m.mul_vec(self.sc.basis_bracket(i, j)).expect("square");
                lhs == self.sc.bracket(&cols[i], &cols[j])
            })
        })
    }

    pub fn is_automorphism(&self, m: &RatMatrix) -> bool {
        self.is_homomorphism(m) && !m.det().is_zero()
    }
}

/// A subspace of `Q^d`, stored by its reduced row echelon basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    basis: Vec<Vec<Scalar>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn span(ambient: usize, vectors: &[Vec<Scalar>]) -> Result<Self> {
        let mut rref = Rref::new(ambient);
        for v in vectors {
            check_dim(ambient, v.len())?;
            rref.insert(dense_to_sparse(v), Scalar::zero());
        }
        Ok(Subspace {
            ambient,
            basis: rref.basis().iter().map(|v| sparse_to_dense(v, ambient)).collect(),
            pivots: rref.pivots(),
        })
    }

    pub fn zero(ambient: usize) -> Self {
        Subspace { ambient, basis: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(ambient: usize) -> Self {
        let id = RatMatrix::identity(ambient);
        Self::span(ambient, &id.rows_vec()).expect("dimensions agree")
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<Scalar>] {
        &self.basis
    }

    /// Pivot columns of the echelon basis (0-based).
    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Coordinates of `v` in the echelon basis, when `v` lies in the subspace.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        if v.len() != self.ambient {
            return None;
        }
        let coords: Vec<Scalar> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let mut rest = v.to_vec();
        for (t, b) in coords.iter().zip(&self.basis) {
            for (r, x) in rest.iter_mut().zip(b) {
                *r -= t * x;
            }
        }
        rest.iter().all(Zero::is_zero).then_some(coords)
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.coordinates(v).is_some()
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.ambient == other.ambient && self.basis.iter().all(|b| other.contains(b))
    }

    /// `M(S)`.
    pub fn image(&self, m: &RatMatrix) -> Result<Subspace> {
        let imgs = self.basis.iter().map(|b| m.mul_vec(b)).collect::<Result<Vec<_>>>()?;
        Subspace::span(m.nrows(), &imgs)
    }
}

/// `Z(G)`: the kernel of the adjoint representation.
pub fn center(l: &FdLieAlgebra) -> Subspace {
    let d = l.dim();
    let mut sys = LinearSystem::new(d);
    for j in 0..d {
        for k in 0..d {
            sys.add_equation((0..d).map(|i| (i, l.sc.get(i, j, k).clone())), Scalar::zero());
        }
    }
    let SparseSolution::Consistent { nullspace, .. } = solve_sparse(&sys) else {
        unreachable!("homogeneous systems are consistent");
    };
    let vecs: Vec<Vec<Scalar>> = nullspace.iter().map(|v| sparse_to_dense(v, d)).collect();
    Subspace::span(d, &vecs).expect("dimensions agree")
}

/// `[G, G]`, the span of all basis brackets.
pub fn derived_subalgebra(l: &FdLieAlgebra) -> Subspace {
    let d = l.dim();
    let mut vecs = Vec::new();
    for i in 0..d {
        for j in i + 1..d {
            vecs.push(l.sc.basis_bracket(i, j).to_vec());
        }
    }
    Subspace::span(d, &vecs).expect("dimensions agree")
}

pub fn is_perfect(l: &FdLieAlgebra) -> bool {
    derived_subalgebra(l).dim() == l.dim()
}

/// `W = G/Z` together with the section and cocycle that describe `G` as
/// `W ⊕ Z`: `[s(a), s(b)] = s([a, b]_W) + z(a, b)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quotient {
    algebra: FdLieAlgebra,
    z: Subspace,
    section: Vec<usize>,
    cocycle: Vec<Vec<Vec<Scalar>>>,
}

impl Quotient {
    /// The quotient algebra `W`.
    pub fn algebra(&self) -> &FdLieAlgebra {
        &self.algebra
    }

    pub fn central_subspace(&self) -> &Subspace {
        &self.z
    }

    /// Basis indices of `G` spanning the section `s(W)`: the non-pivot
    /// columns of `Z`'s echelon basis.
    pub fn section(&self) -> &[usize] {
        &self.section
    }

    /// `z(a, b)` in coordinates of the echelon basis of `Z`.
    pub fn cocycle(&self, a: usize, b: usize) -> &[Scalar] {
        &self.cocycle[a][b]
    }

    pub fn cocycle_is_zero(&self) -> bool {
        self.cocycle.iter().flatten().flatten().all(Zero::is_zero)
    }

    /// Splits `v ∈ G` as `s(w) + z`, returning `(w, z-coordinates)`.
    fn split(&self, v: &[Scalar]) -> (Vec<Scalar>, Vec<Scalar>) {
        let t: Vec<Scalar> = self.z.pivots.iter().map(|&p| v[p].clone()).collect();
        let mut rest = v.to_vec();
        for (tr, b) in t.iter().zip(&self.z.basis) {
            for (r, x) in rest.iter_mut().zip(b) {
                *r -= tr * x;
            }
        }
        (self.section.iter().map(|&c| rest[c].clone()).collect(), t)
    }

    /// Change of basis from `(s(e_1), …, s(e_m), z_1, …, z_r)` to the
    /// standard basis of `G`.
    fn adapted_basis(&self, d: usize) -> RatMatrix {
        let mut cols: Vec<Vec<Scalar>> = self
            .section
            .iter()
            .map(|&c| {
                let mut v = vec![Scalar::zero(); d];
                v[c] = Scalar::one();
                v
            })
            .collect();
        cols.extend(self.z.basis.iter().cloned());
        RatMatrix::from_columns(d, &cols)
    }

    fn to_standard(&self, adapted: &RatMatrix) -> RatMatrix {
        let d = adapted.nrows();
        let b = self.adapted_basis(d);
        let b_inv = b.inverse().expect("adapted basis is a basis");
        b.mul(adapted).and_then(|m| m.mul(&b_inv)).expect("square")
    }
}

fn check_central(l: &FdLieAlgebra, z: &Subspace) -> Result<()> {
    check_dim(l.dim(), z.ambient_dim())?;
    if !z.is_subspace_of(&center(l)) {
        return Err(Error::NotCentral);
    }
    Ok(())
}

pub fn quotient_by_central(l: &FdLieAlgebra, z: &Subspace) -> Result<Quotient> {
    check_central(l, z)?;
    let d = l.dim();
    let section: Vec<usize> = (0..d).filter(|c| !z.pivots.contains(c)).collect();
    let m = section.len();
    let mut partial = Quotient {
        algebra: FdLieAlgebra::abelian(0),
        z: z.clone(),
        section: section.clone(),
        cocycle: Vec::new(),
    };
    let mut sc = StructureConstants::zero(m);
    let mut cocycle = vec![vec![vec![Scalar::zero(); z.dim()]; m]; m];
    for a in 0..m {
        for b in 0..m {
            let (w, t) = partial.split(l.sc.basis_bracket(section[a], section[b]));
            for (k, c) in w.into_iter().enumerate() {
                sc.set(a, b, k, c);
            }
            cocycle[a][b] = t;
        }
    }
    let labels = section.iter().map(|&c| l.labels[c].clone()).collect();
    partial.algebra = FdLieAlgebra::new(sc, Some(labels))?;
    partial.cocycle = cocycle;
    Ok(partial)
}

/// Whether `Z ⊆ [G, G]` and whether `W = [W, W]`: the two conditions under
/// which every automorphism of `W` has at most one lift.
pub fn extension_conditions(l: &FdLieAlgebra, z: &Subspace) -> Result<(bool, bool)> {
    let q = quotient_by_central(l, z)?;
    Ok((z.is_subspace_of(&derived_subalgebra(l)), is_perfect(&q.algebra)))
}

/// Basis of `K`, each element given as the endomorphism `τ_φ = id + φ` of `G`
/// in the standard basis.
pub fn extension_kernel(l: &FdLieAlgebra, z: &Subspace) -> Result<Vec<RatMatrix>> {
    let q = quotient_by_central(l, z)?;
    let (m, r, d) = (q.section.len(), z.dim(), l.dim());
    let var = |a: usize, s: usize| a * r + s;
    let mut sys = LinearSystem::new(m * r);
    for u in derived_subalgebra(&q.algebra).basis() {
        for s in 0..r {
            sys.add_equation((0..m).map(|a| (var(a, s), u[a].clone())), Scalar::zero());
        }
    }
    let SparseSolution::Consistent { nullspace, .. } = solve_sparse(&sys) else {
        unreachable!("homogeneous systems are consistent");
    };
    Ok(nullspace
        .iter()
        .map(|v| {
            let v = sparse_to_dense(v, m * r);
            let mut adapted = RatMatrix::identity(d);
            for a in 0..m {
                for s in 0..r {
                    adapted.set(m + s, a, v[var(a, s)].clone());
                }
            }
            q.to_standard(&adapted)
        })
        .collect())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LiftClass {
    Unique,
    Family,
    None,
}

impl fmt::Display for LiftClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            LiftClass::Unique => "unique",
            LiftClass::Family => "family",
            LiftClass::None => "none",
        })
    }
}

/// All lifts `σ̂ = base + Σ t_k family[k]` of an automorphism of `W`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LiftSolution {
    pub classification: LiftClass,
    pub base: Option<RatMatrix>,
    pub family: Vec<RatMatrix>,
}

/// Solves for the lifts of `σ_W ∈ Aut(W)` to `G`.
///
/// A lift has the form `s(a) ↦ s(σ_W a) + φ(a)`, `z ↦ ζ(z)` with
/// `φ ∈ Hom(W, Z)` and `ζ ∈ End(Z)`. Writing `ζ = id + δ`, the bracket
/// condition is linear in `(φ, δ)`:
///
/// ```text
/// φ([a, b]_W) + δ(z(a, b)) = z(σ_W a, σ_W b) − z(a, b)
/// ```
///
/// Free parameters are set to zero in the base lift, which therefore acts
/// as the identity on `Z` whenever `ζ` is unconstrained.
pub fn lift_fd_automorphism(l: &FdLieAlgebra, z: &Subspace, sigma_w: &RatMatrix) -> Result<LiftSolution> {
    let q = quotient_by_central(l, z)?;
    let w = &q.algebra;
    let (m, r, d) = (q.section.len(), z.dim(), l.dim());
    if sigma_w.nrows() != m || sigma_w.ncols() != m {
        return Err(Error::NotAutomorphism { reason: format!("expected a {m}x{m} matrix") });
    }
    if !w.is_automorphism(sigma_w) {
        return Err(Error::NotAutomorphism { reason: "matrix does not preserve the bracket of W or is singular".into() });
    }

    let phi = |a: usize, s: usize| a * r + s;
    let delta = |p: usize, s: usize| m * r + p * r + s;
    let cols: Vec<Vec<Scalar>> = (0..m).map(|a| sigma_w.column(a)).collect();
    let mut sys = LinearSystem::new(m * r + r * r);
    for a in 0..m {
        for b in a + 1..m {
            let wab = w.sc.basis_bracket(a, b);
            let tab = q.cocycle(a, b);
            // z(σa, σb) by bilinearity
            let mut rhs = vec![Scalar::zero(); r];
            for (a2, x) in cols[a].iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                for (b2, y) in cols[b].iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                    for (acc, t) in rhs.iter_mut().zip(q.cocycle(a2, b2)) {
                        *acc += x * y * t;
                    }
                }
            }
            for p in 0..r {
                let mut coeffs: Vec<(usize, Scalar)> = (0..m).map(|a2| (phi(a2, p), wab[a2].clone())).collect();
                coeffs.extend((0..r).map(|s| (delta(p, s), tab[s].clone())));
                sys.add_equation(coeffs, &rhs[p] - &tab[p]);
            }
        }
    }

    let assemble = |v: &[Scalar], with_identity: bool| {
        let mut adapted = RatMatrix::zeros(d, d);
        for a in 0..m {
            if with_identity {
                for a2 in 0..m {
                    adapted.set(a2, a, sigma_w.get(a2, a).clone());
                }
            }
            for s in 0..r {
                adapted.set(m + s, a, v[phi(a, s)].clone());
            }
        }
        for p in 0..r {
            for s in 0..r {
                let mut e = v[delta(p, s)].clone();
                if with_identity && p == s {
                    e += Scalar::one();
                }
                adapted.set(m + p, m + s, e);
            }
        }
        q.to_standard(&adapted)
    };

    let unknowns = m * r + r * r;
    let (base, family) = match solve_sparse(&sys) {
        SparseSolution::Inconsistent => {
            return Ok(LiftSolution { classification: LiftClass::None, base: None, family: Vec::new() })
        }
        SparseSolution::Consistent { particular, nullspace } => (
            assemble(&sparse_to_dense(&particular, unknowns), true),
            nullspace
                .iter()
                .map(|v| assemble(&sparse_to_dense(v, unknowns), false))
                .collect::<Vec<_>>(),
        ),
    };

    let all_lift = l.is_homomorphism(&base)
        && family
            .iter()
            .all(|f| base.add(f).is_ok_and(|m| l.is_homomorphism(&m)));
    if !all_lift {
        return Err(Error::NotLiftable { reason: "solution fails bracket re-verification".into() });
    }
    let classification = if family.is_empty() { LiftClass::Unique } else { LiftClass::Family };
    Ok(LiftSolution { classification, base: Some(base), family })
}

/// `ψ(σ̂)`: the automorphism of `W` induced by an automorphism of `G` that
/// preserves `Z`.
pub fn project_to_quotient(l: &FdLieAlgebra, z: &Subspace, m: &RatMatrix) -> Result<RatMatrix> {
    let q = quotient_by_central(l, z)?;
    check_dim(l.dim(), m.nrows())?;
    let cols: Vec<Vec<Scalar>> = q
        .section
        .iter()
        .map(|&c| q.split(&m.column(c)).0)
        .collect();
    Ok(RatMatrix::from_columns(q.section.len(), &cols))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::int;

    fn v(xs: &[i64]) -> Vec<Scalar> {
        xs.iter().map(|&x| int(x)).collect()
    }

    fn two_dim() -> FdLieAlgebra {
        let sc = StructureConstants::from_brackets(2, &[(1, 2, vec![(2, int(1))])]).unwrap();
        FdLieAlgebra::new(sc, None).unwrap()
    }

    #[test]
    fn validate_examples() {
        assert_eq!(validate(&StructureConstants::zero(3)), ValidationReport::Valid);
        assert_eq!(validate(FdLieAlgebra::heisenberg().structure_constants()), ValidationReport::Valid);
        assert_eq!(validate(FdLieAlgebra::sl2().structure_constants()), ValidationReport::Valid);
        let bad = StructureConstants::from_brackets(
            2,
            &[(1, 2, vec![(1, int(1))]), (2, 1, vec![(1, int(1))])],
        )
        .unwrap();
        assert_eq!(validate(&bad), ValidationReport::AntisymmetryViolation { i: 1, j: 2 });
        assert!(matches!(FdLieAlgebra::new(bad, None), Err(Error::InvalidAlgebra { .. })));
    }

    #[test]
    fn jacobi_violation_is_detected() {
        // [e1,e2] = e3, [e2,e3] = e1, [e3,e1] = e1 is antisymmetric but not Lie
        let sc = StructureConstants::from_brackets(
            3,
            &[(1, 2, vec![(3, int(1))]), (2, 3, vec![(1, int(1))]), (3, 1, vec![(1, int(1))])],
        )
        .unwrap();
        assert_eq!(validate(&sc), ValidationReport::JacobiViolation { i: 1, j: 2, k: 3 });
    }

    #[test]
    fn center_examples() {
        assert_eq!(center(&FdLieAlgebra::abelian(3)).dim(), 3);
        assert_eq!(center(&FdLieAlgebra::heisenberg()), Subspace::span(3, &[v(&[0, 0, 1])]).unwrap());
        assert_eq!(center(&two_dim()).dim(), 0);
        assert_eq!(center(&FdLieAlgebra::sl2()).dim(), 0);
    }

    #[test]
    fn derived_examples() {
        assert_eq!(derived_subalgebra(&FdLieAlgebra::abelian(3)).dim(), 0);
        assert_eq!(derived_subalgebra(&FdLieAlgebra::heisenberg()), Subspace::span(3, &[v(&[0, 0, 1])]).unwrap());
        assert_eq!(derived_subalgebra(&two_dim()), Subspace::span(2, &[v(&[0, 1])]).unwrap());
        assert!(is_perfect(&FdLieAlgebra::sl2()));
    }

    #[test]
    fn quotient_examples() {
        let h = FdLieAlgebra::heisenberg();
        let q = quotient_by_central(&h, &Subspace::zero(3)).unwrap();
        assert_eq!(q.algebra().structure_constants(), h.structure_constants());
        assert!(q.cocycle_is_zero());

        let z = Subspace::span(3, &[v(&[0, 0, 1])]).unwrap();
        let q = quotient_by_central(&h, &z).unwrap();
        assert_eq!(q.algebra().dim(), 2);
        assert_eq!(derived_subalgebra(q.algebra()).dim(), 0);
        assert_eq!(q.cocycle(0, 1), &v(&[1])[..]);
        assert_eq!(q.cocycle(1, 0), &v(&[-1])[..]);
        assert_eq!(q.section(), &[0, 1]);

        let not_central = Subspace::span(3, &[v(&[1, 0, 0])]).unwrap();
        assert_eq!(quotient_by_central(&h, &not_central), Err(Error::NotCentral));
    }

    #[test]
    fn kernel_examples() {
        assert!(extension_kernel(&FdLieAlgebra::sl2(), &Subspace::zero(3)).unwrap().is_empty());
        let h = FdLieAlgebra::heisenberg();
        let z = Subspace::span(3, &[v(&[0, 0, 1])]).unwrap();
        let k = extension_kernel(&h, &z).unwrap();
        assert_eq!(k.len(), 2);
        for tau in &k {
            assert!(h.is_automorphism(tau));
            assert!(project_to_quotient(&h, &z, tau).unwrap().is_identity());
        }
        let ab = FdLieAlgebra::abelian(2);
        assert!(extension_kernel(&ab, &Subspace::full(2)).unwrap().is_empty());
    }

    #[test]
    fn lift_examples() {
        let h = FdLieAlgebra::heisenberg();
        let z = Subspace::span(3, &[v(&[0, 0, 1])]).unwrap();
        let sol = lift_fd_automorphism(&h, &z, &RatMatrix::identity(2)).unwrap();
        assert_eq!(sol.classification, LiftClass::Family);
        assert_eq!(sol.family.len(), 2);
        assert!(sol.base.as_ref().unwrap().is_identity());

        let sl2 = FdLieAlgebra::sl2();
        let sol = lift_fd_automorphism(&sl2, &Subspace::zero(3), &RatMatrix::identity(3)).unwrap();
        assert_eq!(sol.classification, LiftClass::Unique);
        assert!(sol.base.unwrap().is_identity());

        let g = sl2.with_central_summand("z");
        let z = Subspace::span(4, &[v(&[0, 0, 0, 1])]).unwrap();
        assert_eq!(extension_conditions(&g, &z).unwrap(), (false, true));
        let sol = lift_fd_automorphism(&g, &z, &RatMatrix::identity(3)).unwrap();
        assert_eq!(sol.classification, LiftClass::Family);
        assert_eq!(sol.family.len(), 1);
        assert!(!sol.family[0].get(3, 3).is_zero());
    }

    #[test]
    fn heisenberg_symplectic_lift_scales_centre() {
        // σ_W = diag(2, 3) lifts with ζ = 6 on the centre
        let h = FdLieAlgebra::heisenberg();
        let z = Subspace::span(3, &[v(&[0, 0, 1])]).unwrap();
        let sigma = RatMatrix::from_rows(vec![v(&[2, 0]), v(&[0, 3])]).unwrap();
        let sol = lift_fd_automorphism(&h, &z, &sigma).unwrap();
        let base = sol.base.unwrap();
        assert_eq!(*base.get(2, 2), int(6));
        assert_eq!(project_to_quotient(&h, &z, &base).unwrap(), sigma);
    }

    #[test]
    fn non_automorphism_is_rejected() {
        let sl2 = FdLieAlgebra::sl2();
        let m = RatMatrix::from_rows(vec![v(&[2, 0, 0]), v(&[0, 1, 0]), v(&[0, 0, 1])]).unwrap();
        assert!(matches!(
            lift_fd_automorphism(&sl2, &Subspace::zero(3), &m),
            Err(Error::NotAutomorphism { .. })
        ));
    }

    #[test]
    fn subspace_coordinates() {
        let s = Subspace::span(3, &[v(&[1, 2, 0]), v(&[2, 4, 1])]).unwrap();
        assert_eq!(s.dim(), 2);
        assert_eq!(s.coordinates(&v(&[3, 6, 1])), Some(v(&[3, 1])));
        assert!(!s.contains(&v(&[0, 1, 0])));
    }
}
