//! Values checked against independent brute-force computations that share
//! no code with the library.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use valharm_core::*;

/// Weights of V^{⊗k} for the standard representation, by enumerating all
/// k-tuples of standard weights.
fn tensor_power_weights(n: usize, k: usize) -> BTreeMap<Vec<i64>, i64> {
    let m = n / 2;
    let mut basis: Vec<Vec<i64>> = Vec::new();
    for j in 0..m {
        for s in [1, -1] {
            let mut w = vec![0; m];
            w[j] = s;
            basis.push(w);
        }
    }
    if n % 2 == 1 {
        basis.push(vec![0; m]);
    }
    let mut out = BTreeMap::new();
    let mut idx = vec![0usize; k];
    loop {
        let mut w = vec![0; m];
        for &b in &idx {
            for (x, y) in w.iter_mut().zip(&basis[b]) {
                *x += y;
            }
        }
        *out.entry(w).or_insert(0) += 1;
        let mut p = 0;
        loop {
            if p == k {
                return out;
            }
            idx[p] += 1;
            if idx[p] < basis.len() {
                break;
            }
            idx[p] = 0;
            p += 1;
        }
    }
}

/// Greedy decomposition by hand-rolled dominant-weight bookkeeping, using
/// only the library's irreducible characters as a lookup table.
fn peel(n: usize, mut rest: BTreeMap<Vec<i64>, i64>) -> BTreeMap<Vec<i64>, i64> {
    let mut out = BTreeMap::new();
    while let Some((top, &mult)) = rest.iter().next_back() {
        let top = top.clone();
        assert!(mult > 0);
        let chi = irreducible_character(n, &top).unwrap();
        for (w, m) in chi.iter() {
            let m: i64 = m.try_into().unwrap();
            let e = rest.entry(w.0.clone()).or_insert(0);
            *e -= mult * m;
            assert!(*e >= 0);
            if *e == 0 {
                rest.remove(&w.0);
            }
        }
        out.insert(top, mult);
    }
    out
}

#[test]
fn tensor_square_of_standard_representation() {
    let weights = tensor_power_weights(5, 2);
    assert_eq!(weights.values().sum::<i64>(), 25);
    let by_hand = peel(5, weights);
    let expected: BTreeMap<Vec<i64>, i64> =
        [(vec![0, 0], 1), (vec![1, 1], 1), (vec![2, 0], 1)].into_iter().collect();
    assert_eq!(by_hand, expected);
    let e1 = fundamental_character(5, 1).unwrap();
    let lib = decompose_character(&char_product(&e1, &e1).unwrap()).unwrap();
    let lib: BTreeMap<Vec<i64>, i64> = lib
        .iter()
        .map(|(l, m)| (l.entries().to_vec(), m.try_into().unwrap()))
        .collect();
    assert_eq!(lib, expected);
    // 14 + 10 + 1.
    assert_eq!(dimension(5, &[2, 0]).unwrap(), BigInt::from(14));
}

fn binomial(n: i64, k: i64) -> i64 {
    (0..k).fold(1, |acc, j| acc * (n - j) / (j + 1))
}

#[test]
fn exterior_square_dimension_by_counting_subsets() {
    assert_eq!(dimension(5, &[1, 1]).unwrap(), BigInt::from(binomial(5, 2)));
    for n in 3..=9usize {
        for i in 0..=n as i64 {
            assert_eq!(fundamental_character(n, i).unwrap().mass(), BigInt::from(binomial(n as i64, i)));
        }
    }
}

#[test]
fn sum_of_characters_has_summed_mass() {
    let a = irreducible_character(5, &[2, 0]).unwrap();
    let b = irreducible_character(5, &[1, 1]).unwrap();
    assert_eq!(char_sum(&a, &b).unwrap().mass(), BigInt::from(14 + 10));
}

/// Weights of Val_i filtered straight from the three conditions, without
/// the library's enumeration helpers.
fn val_weights_by_filter(n: usize, i: usize, cap: i64) -> Vec<Vec<i64>> {
    let m = n / 2;
    let r = i.min(n - i);
    let mut out = Vec::new();
    let total = (2 * cap + 1).pow(m as u32);
    for code in 0..total {
        let mut c = code;
        let mut v = Vec::with_capacity(m);
        for _ in 0..m {
            v.push(c % (2 * cap + 1) - cap);
            c /= 2 * cap + 1;
        }
        if !validate_highest_weight(n, &v).unwrap() {
            continue;
        }
        let ok = v.iter().enumerate().all(|(j, &x)| (j < r || x == 0) && x.abs() != 1)
            && (m < 2 || v[1].abs() <= 2);
        if ok {
            out.push(v);
        }
    }
    out.sort();
    out
}

#[test]
fn val_weight_lists_match_filter() {
    assert_eq!(val_weights_by_filter(4, 1, 3), vec![vec![0, 0], vec![2, 0], vec![3, 0]]);
    assert_eq!(
        val_weights_by_filter(4, 2, 2),
        vec![vec![0, 0], vec![2, -2], vec![2, 0], vec![2, 2]]
    );
    for n in 3..=8 {
        for i in 0..=n {
            let lib: Vec<Vec<i64>> = enumerate_val_weights(n, i, 4)
                .unwrap()
                .iter()
                .map(|l| l.entries().to_vec())
                .collect();
            assert_eq!(lib, val_weights_by_filter(n, i, 4), "n = {n}, i = {i}");
        }
    }
}

#[test]
fn sigma_set_for_five_three() {
    // j = 0: one 1 and no 2; j = 1: no 1 and at most one 2.
    let got: Vec<(usize, Vec<i64>, u32)> = enumerate_sigma_set(5, 3)
        .unwrap()
        .into_iter()
        .map(|s| (s.j, s.sigma.entries().to_vec(), s.sign_exponent))
        .collect();
    assert_eq!(got, vec![(0, vec![1, 0], 1), (1, vec![0, 0], 0), (1, vec![2, 0], 0)]);
}

#[test]
fn frobenius_reciprocity_by_characters() {
    for n in 3..=7 {
        for lambda in highest_weights_up_to(n, 2).unwrap() {
            for sigma in highest_weights_up_to(n - 1, 3).unwrap() {
                assert_eq!(
                    induced_multiplicity(n, sigma.entries(), lambda.entries()).unwrap(),
                    induced_multiplicity_by_characters(n, sigma.entries(), lambda.entries()).unwrap(),
                );
            }
        }
    }
}
