//! Laurent polynomials `L_n = Q[x_1^±1, …, x_n^±1]`.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::error::{check_dim, Result};
use crate::kernel::{int, MIndex, Scalar};

/// A finite sum `Σ c_α x^α` with no zero coefficients stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Laurent {
    n: usize,
    terms: BTreeMap<MIndex, Scalar>,
}

impl Laurent {
    pub fn zero(n: usize) -> Self {
        Laurent { n, terms: BTreeMap::new() }
    }

    pub fn monomial(alpha: MIndex, coeff: Scalar) -> Self {
        let mut p = Laurent::zero(alpha.dim());
        p.add_term(alpha, &coeff);
        p
    }

    pub fn constant(n: usize, c: Scalar) -> Self {
        Self::monomial(MIndex::zeros(n), c)
    }

    /// The variable `x_i` (0-based).
    pub fn var(n: usize, i: usize) -> Self {
        Self::monomial(MIndex::unit(n, i), Scalar::one())
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&MIndex, &Scalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, alpha: &MIndex) -> Scalar {
        self.terms.get(alpha).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn add_term(&mut self, alpha: MIndex, c: &Scalar) {
        assert_eq!(alpha.dim(), self.n, "dimension mismatch");
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(alpha.clone()).or_insert_with(Scalar::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&alpha);
        }
    }

    /// `Some((α, c))` when the polynomial is `c x^α` with `c ≠ 0`, i.e. a unit.
    pub fn as_unit(&self) -> Option<(&MIndex, &Scalar)> {
        match self.terms.len() {
            1 => self.terms.iter().next(),
            _ => None,
        }
    }

    pub fn try_add(&self, other: &Laurent) -> Result<Laurent> {
        check_dim(self.n, other.n)?;
        let mut out = self.clone();
        for (a, c) in &other.terms {
            out.add_term(a.clone(), c);
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &Laurent) -> Result<Laurent> {
        check_dim(self.n, other.n)?;
        let mut out = Laurent::zero(self.n);
        for (a, c) in &self.terms {
            for (b, d) in &other.terms {
                out.add_term(a + b, &(c * d));
            }
        }
        Ok(out)
    }

    pub fn scale(&self, k: &Scalar) -> Laurent {
        let mut out = Laurent::zero(self.n);
        for (a, c) in &self.terms {
            out.add_term(a.clone(), &(c * k));
        }
        out
    }

    /// `∂f/∂x_i` (0-based).
    pub fn partial(&self, i: usize) -> Laurent {
        let mut out = Laurent::zero(self.n);
        let e = MIndex::unit(self.n, i);
        for (a, c) in &self.terms {
            if a[i] != 0 {
                out.add_term(a - &e, &(c * int(a[i])));
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partial_of_inverse_power() {
        let f = Laurent::monomial(MIndex::new(vec![-2, 3]), int(5));
        assert_eq!(f.partial(0), Laurent::monomial(MIndex::new(vec![-3, 3]), int(-10)));
        assert_eq!(f.partial(1), Laurent::monomial(MIndex::new(vec![-2, 2]), int(15)));
    }

    #[test]
    fn product_cancels() {
        // (x + 1)(x - 1) = x^2 - 1
        let x = Laurent::var(1, 0);
        let one = Laurent::constant(1, int(1));
        let p = x.try_add(&one).unwrap();
        let q = x.try_add(&one.scale(&int(-1))).unwrap();
        let mut expected = Laurent::monomial(MIndex::new(vec![2]), int(1));
        expected.add_term(MIndex::new(vec![0]), &int(-1));
        assert_eq!(p.try_mul(&q).unwrap(), expected);
        assert!(p.as_unit().is_none());
        assert!(x.as_unit().is_some());
    }
}
