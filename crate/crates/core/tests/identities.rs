//! Exact identities over the small grids n = 3..=8, λ_1 ≤ 3.

use num_bigint::BigInt;
use valharm_core::*;

fn nonnegative_weights(n: usize, cap: i64) -> Vec<Partition> {
    highest_weights_up_to(n, cap)
        .unwrap()
        .iter()
        .filter_map(|l| Partition::try_from(l).ok())
        .collect()
}

#[test]
fn determinant_equals_barred_character() {
    for n in 3..=7 {
        for lambda in nonnegative_weights(n, 3) {
            assert_eq!(
                second_determinantal_character(n, &lambda).unwrap(),
                barred_character(n, &lambda).unwrap(),
                "SO({n}) {lambda:?}"
            );
        }
    }
}

#[test]
fn determinant_does_not_depend_on_padding() {
    for n in 3..=6 {
        for lambda in nonnegative_weights(n, 2) {
            let base = second_determinantal_character(n, &lambda).unwrap();
            for s in lambda.largest().max(1) as usize..=4 {
                assert_eq!(
                    second_determinantal_character_with(n, &lambda, s).unwrap(),
                    base,
                    "SO({n}) {lambda:?} s = {s}"
                );
            }
        }
    }
}

#[test]
fn products_of_exterior_powers() {
    for n in 4..=8usize {
        for i in n.div_ceil(2)..=n {
            for j in 0..=n - i {
                let (lhs, rhs) = exterior_pair_identity(n, i, j).unwrap();
                assert_eq!(lhs, rhs, "n = {n}, i = {i}, j = {j}");
            }
        }
    }
}

#[test]
fn exterior_powers_are_symmetric() {
    for n in 3..=8 {
        for i in 0..=n as i64 {
            assert_eq!(
                fundamental_character(n, i).unwrap(),
                fundamental_character(n, n as i64 - i).unwrap()
            );
        }
    }
}

#[test]
fn mass_is_dimension() {
    for n in 3..=7 {
        for lambda in highest_weights_up_to(n, 3).unwrap() {
            let c = irreducible_character(n, lambda.entries()).unwrap();
            assert_eq!(c.mass(), dimension(n, lambda.entries()).unwrap());
        }
    }
}

#[test]
fn both_multiplicity_routes_agree() {
    for n in 3..=7 {
        for i in 0..=n {
            for lambda in highest_weights_up_to(n, 3).unwrap() {
                assert_eq!(
                    val_multiplicity_alternating(n, i, &lambda).unwrap(),
                    val_multiplicity_conditions(n, i, &lambda),
                    "SO({n}), i = {i}, λ = {lambda}"
                );
            }
        }
    }
}

#[test]
fn conditions_are_closed_under_duals() {
    for n in 3..=10 {
        for i in 0..=n {
            for lambda in highest_weights_up_to(n, 4).unwrap() {
                assert_eq!(
                    val_multiplicity_conditions(n, i, &lambda),
                    val_multiplicity_conditions(n, i, &lambda.dual())
                );
            }
        }
    }
}

#[test]
fn lefschetz_symmetry_of_weight_sets() {
    for n in 3..=7 {
        for i in 0..=n {
            assert!(hard_lefschetz_check(n, i, 4).unwrap(), "n = {n}, i = {i}");
        }
    }
}

#[test]
fn branching_conserves_dimension() {
    for n in 3..=7 {
        for lambda in highest_weights_up_to(n, 3).unwrap() {
            let total: BigInt = branch_restriction(n, lambda.entries())
                .unwrap()
                .children
                .iter()
                .map(|mu| dimension(n - 1, mu.entries()).unwrap())
                .sum();
            assert_eq!(total, dimension(n, lambda.entries()).unwrap());
        }
    }
}

#[test]
fn symmetric_power_decomposition() {
    for n in 3..=7 {
        for k in 0..=6i64 {
            let d = decompose_character(&symmetric_power_character(n, k as usize).unwrap()).unwrap();
            let mut expected: Vec<Vec<i64>> = (0..=k / 2)
                .map(|j| {
                    let mut v = vec![0; n / 2];
                    v[0] = k - 2 * j;
                    v
                })
                .collect();
            expected.sort();
            let got: Vec<Vec<i64>> = d.keys().map(|l| l.entries().to_vec()).collect();
            assert_eq!(got, expected, "Sym^{k} for SO({n})");
            assert!(d.values().all(|m| *m == BigInt::from(1)));
        }
    }
}

#[test]
fn equivariant_dimensions_of_named_modules() {
    for n in 3..=7usize {
        let decomp = |c: CharacterMap| decompose_character(&c).unwrap();
        let trivial = decomp(fundamental_character(n, 0).unwrap());
        let standard = decomp(fundamental_character(n, 1).unwrap());
        for i in 0..=n {
            assert_eq!(equivariant_dimension(n, i, &trivial).unwrap(), BigInt::from(1));
            assert_eq!(equivariant_dimension(n, i, &standard).unwrap(), BigInt::from(0));
        }
        for i in 1..n {
            let wedge2 = decomp(fundamental_character(n, 2).unwrap());
            assert_eq!(equivariant_dimension(n, i, &wedge2).unwrap(), BigInt::from(0), "n = {n}");
            for k in 0..=6usize {
                let sym = decomp(symmetric_power_character(n, k).unwrap());
                let expected = if k % 2 == 0 { k / 2 + 1 } else { (k - 1) / 2 };
                assert_eq!(
                    equivariant_dimension(n, i, &sym).unwrap(),
                    BigInt::from(expected),
                    "n = {n}, i = {i}, k = {k}"
                );
            }
        }
    }
}

#[test]
fn verdict_table() {
    for n in 3..=10 {
        for i in 0..=n {
            let closed = bivaluation_symmetry_verdict(n, i).unwrap();
            let derived = symmetry_verdict_from_weights(n, i, 2).unwrap();
            assert_eq!(closed, derived);
            let asym = closed == SymmetryVerdict::AsymmetricWitnessExists;
            assert_eq!(asym, matches!((i, n), (3, 6) | (5, 10)), "n = {n}, i = {i}");
        }
    }
}
