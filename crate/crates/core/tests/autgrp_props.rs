mod common;

use common::{automorphism, witt};
use proptest::prelude::*;
use witt_algebra::autgrp::{
    apply_to_laurent, apply_to_witt, cartan_images, compose, decompose_ring_map, fixator_flags, generator_images,
    inverse, partial_images, recover_from_images, Automorphism,
};
use witt_algebra::kernel::{int, MIndex};
use witt_algebra::laurent::Laurent;
use witt_algebra::text::parse_automorphism;
use witt_algebra::witt::{bracket, support, to_der_basis, DerElement, WittElement};

/// `D(g)` for `D = Σ f_j ∂_j`, computed on Laurent polynomials.
fn derive(d: &DerElement, g: &Laurent) -> Laurent {
    let n = g.dim();
    let mut out = Laurent::zero(n);
    for (beta, coeffs) in d.terms() {
        for (j, c) in coeffs.iter().enumerate() {
            let term = Laurent::monomial(beta.clone(), c.clone()).try_mul(&g.partial(j)).unwrap();
            out = out.try_add(&term).unwrap();
        }
    }
    out
}

/// Conjugation oracle: the coefficient of `∂_i` in `σ D σ^{-1}` is
/// `σ(D(σ^{-1}(x_i)))`.
fn conjugate_oracle(sigma: &Automorphism, w: &WittElement) -> Vec<Laurent> {
    let n = sigma.dim();
    let d = to_der_basis(w);
    let inv = inverse(sigma);
    (0..n)
        .map(|i| {
            let pulled = apply_to_laurent(&inv, &Laurent::var(n, i)).unwrap();
            apply_to_laurent(sigma, &derive(&d, &pulled)).unwrap()
        })
        .collect()
}

fn der_coefficients(w: &WittElement) -> Vec<Laurent> {
    let n = w.dim();
    let d = to_der_basis(w);
    (0..n)
        .map(|i| {
            let mut p = Laurent::zero(n);
            for (beta, coeffs) in d.terms() {
                p.add_term(beta.clone(), &coeffs[i]);
            }
            p
        })
        .collect()
}

fn aut_and_elements() -> impl Strategy<Value = (Automorphism, WittElement, WittElement)> {
    (1usize..=3).prop_flat_map(|n| (automorphism(n), witt(n, 4, 4), witt(n, 4, 4)))
}

fn two_auts() -> impl Strategy<Value = (Automorphism, Automorphism, Automorphism)> {
    (1usize..=3).prop_flat_map(|n| (automorphism(n), automorphism(n), automorphism(n)))
}

proptest! {
    #[test]
    fn action_matches_conjugation((sigma, a, _) in aut_and_elements()) {
        let image = apply_to_witt(&sigma, &a).unwrap();
        prop_assert_eq!(der_coefficients(&image), conjugate_oracle(&sigma, &a));
    }

    #[test]
    fn action_is_a_homomorphism((sigma, a, b) in aut_and_elements()) {
        let lhs = apply_to_witt(&sigma, &bracket(&a, &b).unwrap()).unwrap();
        let rhs = bracket(&apply_to_witt(&sigma, &a).unwrap(), &apply_to_witt(&sigma, &b).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn composition_acts_as_composition((s, t, _) in two_auts()) {
        let n = s.dim();
        let st = compose(&s, &t).unwrap();
        for i in 0..n {
            let x = Laurent::var(n, i);
            let lhs = apply_to_laurent(&st, &x).unwrap();
            let rhs = apply_to_laurent(&s, &apply_to_laurent(&t, &x).unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn group_laws((s, t, u) in two_auts()) {
        let n = s.dim();
        let left = compose(&compose(&s, &t).unwrap(), &u).unwrap();
        let right = compose(&s, &compose(&t, &u).unwrap()).unwrap();
        prop_assert_eq!(left, right);
        prop_assert!(compose(&s, &inverse(&s)).unwrap().is_identity());
        prop_assert!(compose(&inverse(&s), &s).unwrap().is_identity());
        prop_assert_eq!(compose(&s, &Automorphism::identity(n)).unwrap(), s.clone());
        prop_assert_eq!(inverse(&compose(&s, &t).unwrap()), compose(&inverse(&t), &inverse(&s)).unwrap());
    }

    #[test]
    fn round_trips((s, _, _) in two_auts()) {
        prop_assert_eq!(decompose_ring_map(&generator_images(&s)).unwrap(), s.clone());
        prop_assert_eq!(recover_from_images(&cartan_images(&s), &partial_images(&s)).unwrap(), s.clone());
        prop_assert_eq!(parse_automorphism(&s.to_string(), s.dim()).unwrap(), s);
    }

    #[test]
    fn cartan_is_stable_and_transforms_by_inverse_matrix((s, _, _) in two_auts()) {
        let n = s.dim();
        let ainv = s.matrix().unimodular_inverse().unwrap();
        for (j, img) in cartan_images(&s).iter().enumerate() {
            prop_assert!(support(img).iter().all(MIndex::is_zero));
            for k in 0..n {
                prop_assert_eq!(img.coeff(&MIndex::zeros(n), k), int(ainv.get(j, k)));
            }
        }
    }

    #[test]
    fn weights_are_permuted_by_the_matrix((sigma, a, _) in aut_and_elements()) {
        let image = apply_to_witt(&sigma, &a).unwrap();
        let moved: std::collections::BTreeSet<MIndex> =
            support(&a).iter().map(|alpha| sigma.matrix().apply(alpha).unwrap()).collect();
        prop_assert_eq!(support(&image), moved);
    }

    #[test]
    fn fixators((s, _, _) in two_auts()) {
        let flags = fixator_flags(&s);
        prop_assert_eq!(flags.fixes_cartan, s.matrix().is_identity());
        prop_assert_eq!(flags.fixes_partials, s.is_identity());
    }
}
