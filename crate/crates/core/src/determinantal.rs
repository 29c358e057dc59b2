//! Barred modules Γ̄_λ and their determinantal expression in the E_i.

use num_bigint::BigInt;
use num_traits::One;

use crate::character::{char_product, char_sum, fundamental_character, CharacterMap};
use crate::error::{Error, Result};
use crate::freudenthal::irreducible_character_shared;
use crate::group::{HighestWeight, Partition};

/// μ_j = #{k : λ_k >= j} for j = 1..=s.
pub fn conjugate_partition(lambda: &Partition, s: usize) -> Result<Partition> {
    let largest = lambda.largest();
    if (s as i64) < largest {
        return Err(Error::InvalidLength { s, largest });
    }
    let mu: Vec<i64> = (1..=s as i64)
        .map(|j| lambda.entries().iter().filter(|&&x| x >= j).count() as i64)
        .collect();
    Partition::new(mu)
}

/// Γ_λ ⊕ Γ_λ' when n is even and the last entry is non-zero, Γ_λ otherwise.
pub fn barred_character(n: usize, lambda: &Partition) -> Result<CharacterMap> {
    let hw = lambda.to_highest_weight(n)?;
    let base = irreducible_character_shared(&hw)?;
    if hw.has_signed_tail() {
        let other = irreducible_character_shared(&hw.flipped())?;
        char_sum(&base, &other)
    } else {
        Ok((*base).clone())
    }
}

/// The default matrix size: max(λ_1, 2).
pub fn default_size(lambda: &Partition) -> usize {
    lambda.largest().max(2) as usize
}

/// Γ̄_λ as an s×s determinant in the exterior-power characters E_k, using
/// the default size.
pub fn second_determinantal_character(n: usize, lambda: &Partition) -> Result<CharacterMap> {
    second_determinantal_character_with(n, lambda, default_size(lambda))
}

/// As [`second_determinantal_character`], with an explicit size `s >= λ_1`.
pub fn second_determinantal_character_with(
    n: usize,
    lambda: &Partition,
    s: usize,
) -> Result<CharacterMap> {
    let hw: HighestWeight = lambda.to_highest_weight(n)?;
    let mu = conjugate_partition(lambda, s)?;
    let group = hw.group();

    let e = |k: i64| fundamental_character(n, k);
    let mut matrix: Vec<Vec<CharacterMap>> = Vec::with_capacity(s);
    for (row, &mu_i) in mu.entries().iter().enumerate() {
        let base = mu_i - row as i64;
        let mut entries = Vec::with_capacity(s);
        entries.push(e(base)?);
        for j in 2..=s as i64 {
            entries.push(char_sum(&e(base + j - 1)?, &e(base - j + 1)?)?);
        }
        matrix.push(entries);
    }

    // Expand row by row, indexing partial sums by the set of columns used.
    let mut partial: Vec<Option<CharacterMap>> = vec![None; 1 << s];
    partial[0] = Some(CharacterMap::trivial(group));
    for mask in 0usize..(1 << s) {
        let Some(acc) = partial[mask].take() else {
            continue;
        };
        let row = mask.count_ones() as usize;
        if row == s {
            partial[mask] = Some(acc);
            continue;
        }
        for col in 0..s {
            if mask & (1 << col) != 0 || matrix[row][col].is_zero() {
                continue;
            }
            let inversions = (mask >> (col + 1)).count_ones();
            let sign = if inversions % 2 == 0 {
                BigInt::one()
            } else {
                -BigInt::one()
            };
            let term = char_product(&acc, &matrix[row][col])?;
            let slot = partial[mask | (1 << col)].get_or_insert_with(|| CharacterMap::zero(group));
            slot.add_assign_scaled(&term, &sign)?;
        }
    }
    Ok(partial[(1 << s) - 1]
        .take()
        .unwrap_or_else(|| CharacterMap::zero(group)))
}

/// Both sides of E_i·E_j − E_{i−1}·E_{j−1} = Σ_λ char Γ̄_λ, the sum over
/// non-negative highest weights with λ_1 ≤ 2, #(λ,1) = n−i−j and
/// #(λ,2) ≤ j. Requires n/2 ≤ i ≤ n and i + j ≤ n.
pub fn exterior_pair_identity(n: usize, i: usize, j: usize) -> Result<(CharacterMap, CharacterMap)> {
    let group = crate::group::GroupTag::new(n)?;
    if 2 * i < n || i > n || i + j > n {
        return Err(Error::DegreeOutOfRange { n, i: i as i64 });
    }
    let (i, j) = (i as i64, j as i64);
    let e = |k: i64| fundamental_character(n, k);
    let lhs = crate::character::char_difference(
        &char_product(&e(i)?, &e(j)?)?,
        &char_product(&e(i - 1)?, &e(j - 1)?)?,
    )?;
    let m = group.rank();
    let ones = (n as i64 - i - j) as usize;
    let mut rhs = CharacterMap::zero(group);
    if ones <= m {
        for twos in 0..=(j as usize).min(m - ones) {
            let mut entries = vec![2; twos];
            entries.extend(std::iter::repeat_n(1, ones));
            entries.resize(m, 0);
            let chi = barred_character(n, &Partition::new(entries)?)?;
            rhs.add_assign_scaled(&chi, &BigInt::one())?;
        }
    }
    Ok((lhs, rhs))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[i64]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn conjugates() {
        assert_eq!(conjugate_partition(&p(&[2, 2, 1, 0]), 3).unwrap(), p(&[3, 2, 0]));
        assert_eq!(conjugate_partition(&p(&[0, 0, 0]), 1).unwrap(), p(&[0]));
        assert_eq!(conjugate_partition(&p(&[2, 2]), 2).unwrap(), p(&[2, 2]));
        assert_eq!(
            conjugate_partition(&p(&[3, 0]), 2),
            Err(Error::InvalidLength { s: 2, largest: 3 })
        );
    }

    #[test]
    fn small_determinants() {
        assert_eq!(
            second_determinantal_character(5, &p(&[1, 0])).unwrap(),
            fundamental_character(5, 1).unwrap()
        );
        assert_eq!(
            second_determinantal_character(5, &p(&[1, 1])).unwrap(),
            fundamental_character(5, 2).unwrap()
        );
        assert_eq!(
            second_determinantal_character(5, &p(&[2, 2])).unwrap(),
            barred_character(5, &p(&[2, 2])).unwrap()
        );
        assert_eq!(
            barred_character(6, &p(&[1, 1, 1])).unwrap(),
            fundamental_character(6, 3).unwrap()
        );
    }

    #[test]
    fn padding_does_not_matter() {
        let lambda = p(&[2, 1, 0]);
        let base = second_determinantal_character_with(7, &lambda, 2).unwrap();
        for s in 3..=5 {
            assert_eq!(second_determinantal_character_with(7, &lambda, s).unwrap(), base);
        }
    }
}
