mod common;

use common::{homogeneous, mindex, witt};
use proptest::prelude::*;
use witt_algebra::kernel::{int, mindex_pairing, MIndex};
use witt_algebra::text::parse_witt;
use witt_algebra::witt::{
    bracket, bracket_der_oracle, from_der_basis, graded_components, is_locally_finite, leading_term, lf_iterates,
    support, to_der_basis, Side, WeightVector, WittElement,
};

fn triple() -> impl Strategy<Value = (WittElement, WittElement, WittElement)> {
    (1usize..=3).prop_flat_map(|n| (witt(n, 4, 5), witt(n, 4, 5), witt(n, 4, 5)))
}

fn weight_and_element() -> impl Strategy<Value = (WeightVector, WittElement)> {
    (1usize..=3).prop_flat_map(|n| {
        (prop::collection::vec(-3i64..=3, n).prop_map(WeightVector::new), witt(n, 6, 4))
    })
}

proptest! {
    #[test]
    fn antisymmetry((a, b, _) in triple()) {
        let ab = bracket(&a, &b).unwrap();
        let ba = bracket(&b, &a).unwrap();
        prop_assert!((&ab + &ba).is_zero());
    }

    #[test]
    fn jacobi((a, b, c) in triple()) {
        let t1 = bracket(&a, &bracket(&b, &c).unwrap()).unwrap();
        let t2 = bracket(&b, &bracket(&c, &a).unwrap()).unwrap();
        let t3 = bracket(&c, &bracket(&a, &b).unwrap()).unwrap();
        prop_assert!((&(&t1 + &t2) + &t3).is_zero());
    }

    #[test]
    fn bracket_matches_derivation_oracle((a, b, _) in triple()) {
        let direct = bracket(&a, &b).unwrap();
        let oracle = from_der_basis(&bracket_der_oracle(&to_der_basis(&a), &to_der_basis(&b)).unwrap());
        prop_assert_eq!(direct, oracle);
    }

    #[test]
    fn der_basis_round_trip((a, _, _) in triple()) {
        prop_assert_eq!(from_der_basis(&to_der_basis(&a)), a);
    }

    #[test]
    fn cartan_acts_by_pairing(
        (alpha, j, h) in (1usize..=2).prop_flat_map(|n| (mindex(n, 4), 0..n, prop::collection::vec(-3i64..=3, n)))
    ) {
        let n = alpha.dim();
        let hs: Vec<_> = h.iter().map(|&x| int(x)).collect();
        let mut cartan = WittElement::zero(n);
        for (k, c) in hs.iter().enumerate() {
            cartan.add_term(MIndex::zeros(n), k, c);
        }
        let x = WittElement::monomial(alpha.clone(), j, int(1));
        prop_assert_eq!(bracket(&cartan, &x).unwrap(), x.scale(&mindex_pairing(&hs, &alpha).unwrap()));
    }

    #[test]
    fn graded_components_sum_back((lambda, a) in weight_and_element()) {
        let comps = graded_components(&a, &lambda).unwrap();
        let mut sum = WittElement::zero(a.dim());
        for (d, w) in &comps {
            prop_assert!(!w.is_zero());
            for alpha in support(w) {
                prop_assert_eq!(lambda.degree(&alpha), *d);
            }
            sum = &sum + w;
        }
        prop_assert_eq!(sum, a);
    }

    #[test]
    fn leading_terms_are_extreme_components((lambda, a) in weight_and_element()) {
        prop_assume!(!a.is_zero());
        let comps = graded_components(&a, &lambda).unwrap();
        let plus = leading_term(&a, &lambda, Side::Plus).unwrap();
        let minus = leading_term(&a, &lambda, Side::Minus).unwrap();
        prop_assert_eq!(&plus, comps.values().next_back().unwrap());
        prop_assert_eq!(&minus, comps.values().next().unwrap());
    }

    #[test]
    fn graded_bracket_is_additive_in_degree((lambda, a) in weight_and_element(), seed in 0usize..6) {
        // [W_d, W_e] ⊆ W_{d+e}
        let comps: Vec<_> = graded_components(&a, &lambda).unwrap().into_iter().collect();
        prop_assume!(!comps.is_empty());
        let (d, x) = &comps[seed % comps.len()];
        let (e, y) = &comps[(seed / 2) % comps.len()];
        for alpha in support(&bracket(x, y).unwrap()) {
            prop_assert_eq!(lambda.degree(&alpha), d + e);
        }
    }

    #[test]
    fn local_finiteness_is_support_zero((a, _, _) in triple()) {
        let expected = support(&a).iter().all(|alpha| alpha.is_zero());
        prop_assert_eq!(is_locally_finite(&a), expected);
    }

    #[test]
    fn iterates_grow_off_the_cartan(a in (1usize..=3).prop_flat_map(|n| homogeneous(n, 3))) {
        let b = witt_algebra::witt::lf_probe(&a).unwrap();
        let its = lf_iterates(&a, &b, 6).unwrap();
        let mut last = -1;
        for it in &its {
            prop_assert!(!it.is_zero());
            let norm = support(it).iter().map(|s| s.norm_max()).max().unwrap();
            prop_assert!(norm > last, "support norm {} after {}", norm, last);
            last = norm;
        }
        // the support moves by the weight of a at every step
        let alpha = a.homogeneous_weight().unwrap().clone();
        for w in its.windows(2) {
            let s0 = support(&w[0]).into_iter().next().unwrap();
            let s1 = support(&w[1]).into_iter().next().unwrap();
            prop_assert_eq!(&s0 + &alpha, s1);
        }
    }

    #[test]
    fn text_round_trip((a, _, _) in triple()) {
        let printed = a.to_string();
        let parsed = parse_witt(&printed, a.dim()).unwrap();
        prop_assert_eq!(parsed.to_string(), printed);
        prop_assert_eq!(parsed, a);
    }

    #[test]
    fn support_has_no_zero_entries((a, _, _) in triple()) {
        for s in support(&a) {
            prop_assert!(a.coeffs_at(&s).unwrap().iter().any(|c| *c != int(0)));
        }
    }
}
