//! Splitting a character into irreducibles.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Signed;

use crate::character::CharacterMap;
use crate::error::{Error, Result};
use crate::freudenthal::irreducible_character_shared;
use crate::group::HighestWeight;

/// A module given by its irreducible constituents and their multiplicities.
pub type Decomposition = BTreeMap<HighestWeight, BigInt>;

/// Decomposes a genuine character by repeatedly peeling off the irreducible
/// whose highest weight is the lexicographically largest weight left.
///
/// Fails with [`Error::NotACharacter`] as soon as a multiplicity would turn
/// negative, which is what happens for virtual input.
pub fn decompose_character(c: &CharacterMap) -> Result<Decomposition> {
    let group = c.group();
    let mut rest = c.clone();
    let mut out = Decomposition::new();
    while let Some((w, mult)) = rest.leading_weight() {
        if mult.is_negative() || !group.is_dominant(&w.0) {
            return Err(Error::NotACharacter {
                weight: w.0.clone(),
                value: mult.to_string(),
            });
        }
        let mult = mult.clone();
        let lambda = HighestWeight::new(group.n(), w.0.clone())?;
        let chi = irreducible_character_shared(&lambda)?;
        rest.add_assign_scaled(&chi, &-mult.clone())?;
        if let Some((w, m)) = rest.iter().find(|(_, m)| m.is_negative()) {
            return Err(Error::NotACharacter {
                weight: w.0.clone(),
                value: m.to_string(),
            });
        }
        out.insert(lambda, mult);
    }
    Ok(out)
}

/// Σ mult · char Γ_λ.
pub fn recompose(n: usize, parts: &Decomposition) -> Result<CharacterMap> {
    let group = crate::group::GroupTag::new(n)?;
    let mut out = CharacterMap::zero(group);
    for (lambda, mult) in parts {
        let chi = irreducible_character_shared(lambda)?;
        out.add_assign_scaled(&chi, mult)?;
    }
    Ok(out)
}

/// Multiplicity of Γ_λ in a genuine character.
pub fn multiplicity_in(c: &CharacterMap, lambda: &HighestWeight) -> Result<BigInt> {
    Ok(decompose_character(c)?
        .get(lambda)
        .cloned()
        .unwrap_or_default())
}
