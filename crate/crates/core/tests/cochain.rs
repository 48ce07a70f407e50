use proptest::prelude::*;

use qtwist::cochain::{
    coadjoint, cohomology_witness, conjugate_by_iso, extend_seed, primitive, product_cochain, star, star_inverse,
    Cochain, CochainError, SeedKind,
};
use qtwist::linalg::{frac, q, Matrix};
use qtwist::random;
use qtwist::scenarios::{r_matrix, random_ybe_seed, satisfies_ybe};

fn ybe_cocycle(seed: u64, index: usize, cutoff: usize) -> Cochain {
    let s = random_ybe_seed(&mut random::rng(seed), index);
    extend_seed(&s, SeedKind::Bicharacter, cutoff).unwrap()
}

#[test]
fn identity_cochain_is_a_counital_cocycle() {
    let c = Cochain::identity(2, 2, 3);
    let class = c.classify();
    assert!(class.is_counital && class.is_cocycle && class.is_bicharacter && class.is_antibicharacter);
}

#[test]
fn scalar_level_two_cochain_is_a_non_counital_cocycle() {
    let x = frac(3, 2);
    let blocks = qtwist::cochain::multi_indices(2, 3)
        .into_iter()
        .map(|r| {
            let side = 1 << r.iter().sum::<usize>();
            (r, Matrix::scaled_identity(side, &x))
        })
        .collect();
    let c = Cochain::new(2, 2, 3, blocks).unwrap();
    assert!(c.cocycle_failure().is_none());
    assert_eq!(c.counital_failure(), Some(vec![0, 0]));
    for s in 0..=3 {
        assert_eq!(c.block(&[0, s]), &Matrix::scaled_identity(1 << s, &c.scalar_00()));
        assert_eq!(c.block(&[s, 0]), &Matrix::scaled_identity(1 << s, &c.scalar_00()));
    }
}

#[test]
fn r_matrix_satisfies_yang_baxter_and_extends_to_a_cocycle() {
    let r = r_matrix(&frac(3, 2));
    assert!(satisfies_ybe(&r));
    let psi = extend_seed(&r, SeedKind::Bicharacter, 3).unwrap();
    assert!(psi.cocycle_failure().is_none());
}

#[test]
fn generic_seed_violates_yang_baxter_and_gives_a_non_cocycle() {
    let seed = Matrix::from_i64(&[&[1, 2, 0, 1], &[0, 1, 1, 0], &[3, 0, 1, 1], &[0, 1, 0, 2]]);
    assert!(!satisfies_ybe(&seed));
    let psi = extend_seed(&seed, SeedKind::Bicharacter, 3).unwrap();
    assert!(psi.cocycle_failure().is_some());
    assert!(matches!(psi.require_counital_cocycle(), Err(CochainError::NotCocycle(_))));
}

#[test]
fn singular_seed_is_rejected() {
    let seed = Matrix::from_i64(&[&[1, 1, 0, 0], &[1, 1, 0, 0], &[0, 0, 1, 0], &[0, 0, 0, 1]]);
    assert!(matches!(extend_seed(&seed, SeedKind::Bicharacter, 2), Err(CochainError::Singular(_))));
    assert!(matches!(extend_seed(&Matrix::identity(3), SeedKind::Bicharacter, 2), Err(CochainError::Shape(_))));
}

#[test]
fn commuting_leg_seed_extends_to_an_antibicharacter_cocycle() {
    // a diagonal seed commutes with all of its leg placements
    let seed = Matrix::diagonal(&[q(1), q(2), frac(1, 3), q(5)]);
    let psi = extend_seed(&seed, SeedKind::Antibicharacter, 3).unwrap();
    let class = psi.classify();
    assert!(class.is_antibicharacter && class.is_cocycle && class.is_counital);
}

#[test]
fn cohomology_witness_of_a_cocycle_with_itself_is_trivial() {
    let psi = ybe_cocycle(3, 1, 3);
    let theta = cohomology_witness(&psi, &psi, &Matrix::identity(2)).unwrap();
    assert!(theta.is_identity());
}

#[test]
fn truncation_keeps_lower_blocks() {
    let c = random::cochain(&mut random::rng(5), 2, 2, 3, false);
    let t = c.truncate(2).unwrap();
    assert_eq!(t.cutoff(), 2);
    for r in t.indices() {
        assert_eq!(t.block(r), c.block(r));
    }
    assert!(c.truncate(4).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn coface_coface_identity(seed in any::<u64>(), n in 0usize..=2) {
        let c = random::cochain(&mut random::rng(seed), n, 2, 3, false);
        for j in 0..=n + 1 {
            for i in 0..=j {
                let lhs = c.coface(i).unwrap().coface(j + 1).unwrap();
                let rhs = c.coface(j).unwrap().coface(i).unwrap();
                prop_assert_eq!(lhs, rhs, "i={} j={}", i, j);
            }
        }
    }

    #[test]
    fn codegeneracy_after_coface(seed in any::<u64>(), n in 1usize..=2) {
        let c = random::cochain(&mut random::rng(seed), n, 2, 3, false);
        for j in 0..n {
            for i in 0..=n {
                let lhs = c.coface(i).unwrap().codegeneracy(j).unwrap();
                let expected = if i < j {
                    c.codegeneracy(j - 1).unwrap().coface(i).unwrap()
                } else if i == j || i == j + 1 {
                    c.clone()
                } else {
                    c.codegeneracy(j).unwrap().coface(i - 1).unwrap()
                };
                prop_assert_eq!(lhs, expected, "i={} j={}", i, j);
            }
        }
    }

    #[test]
    fn codegeneracy_codegeneracy(seed in any::<u64>()) {
        let c = random::cochain(&mut random::rng(seed), 3, 2, 2, false);
        for j in 0..2 {
            for i in 0..=j {
                let lhs = c.codegeneracy(j + 1).unwrap().codegeneracy(i).unwrap();
                let rhs = c.codegeneracy(i).unwrap().codegeneracy(j).unwrap();
                prop_assert_eq!(lhs, rhs, "i={} j={}", i, j);
            }
        }
    }

    #[test]
    fn coboundary_squares_to_identity_on_low_levels(seed in any::<u64>(), n in 0usize..=1) {
        let c = random::cochain(&mut random::rng(seed), n, 2, 3, false);
        prop_assert!(c.coboundary().full.coboundary().full.is_identity());
    }

    #[test]
    fn coboundary_preserves_counitality(seed in any::<u64>(), n in 0usize..=2) {
        let c = random::cochain(&mut random::rng(seed), n, 2, 3, true);
        prop_assert!(c.coboundary().full.counital_failure().is_none());
    }

    #[test]
    fn level_one_cocycles_are_tensor_powers(seed in any::<u64>()) {
        let mut g = random::rng(seed);
        let w = random::invertible_matrix(&mut g, 2, 3);
        let powers = Cochain::tensor_powers(&w, 3).unwrap();
        prop_assert!(powers.cocycle_failure().is_none());
        let generic = random::cochain(&mut g, 1, 2, 3, true);
        let is_power = generic == Cochain::tensor_powers(generic.block(&[1]), 3).unwrap();
        prop_assert_eq!(generic.cocycle_failure().is_none(), is_power);
    }

    #[test]
    fn seed_extensions_are_counital_and_classified(seed in any::<u64>(), index in 0usize..4) {
        let s = random_ybe_seed(&mut random::rng(seed), index);
        prop_assert!(satisfies_ybe(&s));
        let psi = extend_seed(&s, SeedKind::Bicharacter, 3).unwrap();
        let class = psi.classify();
        prop_assert!(class.is_counital && class.is_bicharacter && class.is_cocycle);
        let generic = random::invertible_matrix(&mut random::rng(seed ^ 1), 4, 2);
        for kind in [SeedKind::Bicharacter, SeedKind::Antibicharacter] {
            let e = extend_seed(&generic, kind, 3).unwrap();
            prop_assert!(e.counital_failure().is_none());
            prop_assert!(e.factorization_failure(kind).is_none());
        }
    }

    #[test]
    fn primitive_inverts_the_coboundary(seed in any::<u64>(), index in 0usize..4) {
        let psi = ybe_cocycle(seed, index, 3);
        let theta = primitive(&psi, &Matrix::identity(2)).unwrap();
        prop_assert_eq!(theta.coboundary().full, psi);
    }

    #[test]
    fn coboundary_then_primitive_recovers_normalised_cochains(seed in any::<u64>()) {
        let theta = random::cochain(&mut random::rng(seed), 1, 2, 3, true);
        let psi = theta.coboundary().full;
        prop_assert_eq!(primitive(&psi, theta.block(&[1])).unwrap(), theta);
    }

    #[test]
    fn star_is_a_group_law(seed in any::<u64>()) {
        let (a, b, c) = (ybe_cocycle(seed, 0, 3), ybe_cocycle(seed ^ 7, 1, 3), ybe_cocycle(seed ^ 9, 2, 3));
        let id = Cochain::identity(2, 2, 3);
        prop_assert_eq!(star(&a, &id).unwrap(), a.clone());
        prop_assert_eq!(star(&id, &a).unwrap(), a.clone());
        prop_assert!(star(&a, &star_inverse(&a).unwrap()).unwrap().is_identity());
        prop_assert!(star(&star_inverse(&a).unwrap(), &a).unwrap().is_identity());
        let left = star(&star(&a, &b).unwrap(), &c).unwrap();
        let right = star(&a, &star(&b, &c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
        prop_assert!(star(&a, &b).unwrap().cocycle_failure().is_none());
    }

    #[test]
    fn coadjoint_is_an_involution_preserving_cocycles(seed in any::<u64>(), index in 0usize..4) {
        let psi = ybe_cocycle(seed, index, 3);
        let co = coadjoint(&psi);
        prop_assert_eq!(coadjoint(&co), psi.clone());
        prop_assert!(co.cocycle_failure().is_none());
    }

    #[test]
    fn product_cochain_of_cocycles_is_a_cocycle(seed in any::<u64>()) {
        let (psi, phi) = (ybe_cocycle(seed, 0, 3), ybe_cocycle(seed ^ 3, 1, 3));
        let j = product_cochain(&psi, &phi).unwrap();
        prop_assert_eq!(j.dim(), 4);
        prop_assert!(j.cocycle_failure().is_none());
        let ids = product_cochain(&Cochain::identity(2, 2, 3), &Cochain::identity(2, 1, 3)).unwrap();
        prop_assert!(ids.is_identity());
    }

    #[test]
    fn conjugation_preserves_cocycles(seed in any::<u64>()) {
        let psi = ybe_cocycle(seed, 1, 3);
        let f = random::invertible_matrix(&mut random::rng(seed), 2, 2);
        let c = conjugate_by_iso(&f, &psi).unwrap();
        prop_assert!(c.cocycle_failure().is_none());
        prop_assert_eq!(conjugate_by_iso(&f.inverse().unwrap(), &c).unwrap(), psi);
    }

    #[test]
    fn cocycles_are_cohomologous_through_the_witness(seed in any::<u64>()) {
        let (psi, phi) = (ybe_cocycle(seed, 0, 3), ybe_cocycle(seed ^ 5, 1, 3));
        let w = random::invertible_matrix(&mut random::rng(seed), 2, 2);
        let theta = cohomology_witness(&psi, &phi, &w).unwrap();
        prop_assert_eq!(theta.block(&[1]), &w);
    }
}
