use std::collections::BTreeMap;

use proptest::prelude::*;

use qtwist::bridge::{
    cochain_to_form, digamma, digamma_group_like, form_primitive, form_to_cochain, BiForm, BridgeError, GroupLikeForm,
};
use qtwist::cochain::{coadjoint, extend_seed, product_cochain, Cochain, SeedKind};
use qtwist::linalg::{frac, q, Q};
use qtwist::random;
use qtwist::scenarios::random_ybe_seed;

#[test]
fn unit_form_is_the_counit() {
    let e = BiForm::unit(2, 2, 2);
    assert!(e.is_unit());
    assert!(form_to_cochain(&e).is_identity());
    assert!(digamma(&e).is_identity());
}

#[test]
fn degree_one_values_are_the_transposed_matrix() {
    // χ(t_i^j) at index i·d + j is the (j, i) entry of the level-1 block
    let c = random::cochain(&mut random::rng(2), 1, 2, 2, false);
    let chi = cochain_to_form(&c);
    let b = c.block(&[1]);
    for i in 0..2 {
        for j in 0..2 {
            assert_eq!(&chi.values(&[1])[i * 2 + j], b.get(j, i));
        }
    }
}

#[test]
fn non_invertible_forms_are_rejected() {
    let mut values = BTreeMap::new();
    values.insert(vec![0], vec![q(1)]);
    values.insert(vec![1], vec![q(1), q(1), q(1), q(1)]);
    assert!(matches!(BiForm::new(1, 2, 1, values), Err(BridgeError::NotInvertible(_))));
    let mut zero = BTreeMap::new();
    zero.insert(vec![0], vec![Q::from_integer(0.into())]);
    assert!(GroupLikeForm::new(1, 1, 0, zero).is_err());
}

#[test]
fn form_primitive_of_a_cocycle_form() {
    let seed = random_ybe_seed(&mut random::rng(11), 1);
    let chi = cochain_to_form(&extend_seed(&seed, SeedKind::Bicharacter, 3).unwrap());
    assert!(chi.coboundary().is_unit());
    let lambda = form_primitive(&chi).unwrap();
    assert_eq!(lambda.coboundary(), chi);
    assert!(matches!(form_primitive(&BiForm::unit(1, 2, 2)), Err(BridgeError::Shape(_))));
}

#[test]
fn group_like_digamma_is_the_identity_for_any_values() {
    let mut values = BTreeMap::new();
    values.insert(vec![0, 0], vec![frac(2, 3)]);
    values.insert(vec![1, 0], vec![q(5), q(-1)]);
    values.insert(vec![0, 1], vec![q(7), frac(1, 2)]);
    let chi = GroupLikeForm::new(2, 2, 1, values).unwrap();
    assert!(digamma_group_like(&chi).is_identity());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10))]

    #[test]
    fn iso_round_trips(seed in any::<u64>(), level in 0usize..=2) {
        let c = random::cochain(&mut random::rng(seed), level, 2, 2, false);
        prop_assert_eq!(form_to_cochain(&cochain_to_form(&c)), c);
    }

    #[test]
    fn convolution_is_reversed_composition(seed in any::<u64>(), level in 0usize..=2) {
        let mut g = random::rng(seed);
        let chi = random::form(&mut g, level, 2, 2, false);
        let zeta = random::form(&mut g, level, 2, 2, false);
        let lhs = form_to_cochain(&chi.convolution(&zeta).unwrap());
        prop_assert_eq!(lhs, form_to_cochain(&zeta).compose(&form_to_cochain(&chi)).unwrap());
        prop_assert!(chi.convolution(&chi.convolution_inverse()).unwrap().is_unit());
    }

    #[test]
    fn digamma_is_an_anti_homomorphism(seed in any::<u64>(), level in 0usize..=2) {
        let mut g = random::rng(seed);
        let chi = random::form(&mut g, level, 2, 2, false);
        let zeta = random::form(&mut g, level, 2, 2, false);
        let lhs = digamma(&chi.convolution(&zeta).unwrap());
        prop_assert_eq!(lhs, digamma(&zeta).compose(&digamma(&chi)).unwrap());
        prop_assert!(digamma(&chi.convolution_inverse()).compose(&digamma(&chi)).unwrap().is_identity());
    }

    #[test]
    fn digamma_matches_the_product_cochain(seed in any::<u64>(), level in 0usize..=2) {
        let c = random::cochain(&mut random::rng(seed), level, 2, 2, false);
        prop_assert_eq!(digamma(&cochain_to_form(&c)), product_cochain(&c, &coadjoint(&c)).unwrap());
    }

    #[test]
    fn digamma_intertwines_faces_and_the_coboundary(seed in any::<u64>(), level in 0usize..=1) {
        let chi = random::form(&mut random::rng(seed), level, 2, 2, false);
        let fc = digamma(&chi);
        for i in 0..=level + 1 {
            prop_assert_eq!(digamma(&chi.face(i).unwrap()), fc.coface(i).unwrap());
            prop_assert_eq!(form_to_cochain(&chi.face(i).unwrap()), form_to_cochain(&chi).coface(i).unwrap());
        }
        prop_assert_eq!(digamma(&chi.coboundary()), fc.coboundary().full);
    }

    #[test]
    fn form_coboundary_squares_to_the_unit(seed in any::<u64>(), level in 0usize..=1) {
        let chi = random::form(&mut random::rng(seed), level, 2, 2, false);
        prop_assert!(chi.coboundary().coboundary().is_unit());
    }

    #[test]
    fn counital_forms_give_counital_cochains(seed in any::<u64>(), level in 1usize..=2) {
        let chi = random::form(&mut random::rng(seed), level, 2, 2, true);
        prop_assert!(digamma(&chi).counital_failure().is_none());
    }

    #[test]
    fn group_like_forms_give_the_identity(seed in any::<u64>(), level in 0usize..=2) {
        let chi = random::group_like_form(&mut random::rng(seed), level, 2, 2);
        prop_assert!(digamma_group_like(&chi).is_identity());
    }

    #[test]
    fn form_degeneracies_match_codegeneracies(seed in any::<u64>()) {
        let c: Cochain = random::cochain(&mut random::rng(seed), 2, 2, 2, false);
        let chi = cochain_to_form(&c);
        for i in 0..2 {
            prop_assert_eq!(form_to_cochain(&chi.degeneracy(i).unwrap()), c.codegeneracy(i).unwrap());
        }
    }
}
