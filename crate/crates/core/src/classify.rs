//! O(n) lifts, reality of SO(n) modules, and the symmetry of bivaluations
//! that follows from them.

use serde::Serialize;

use crate::error::Result;
use crate::group::HighestWeight;
use crate::valuation::{enumerate_val_weights, ValDescriptor};

/// How Γ_λ extends to O(n).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OnLift {
    /// Γ_λ is the restriction of exactly two irreducible O(n) modules.
    TwoLifts,
    /// Γ_λ lifts to nothing on its own; Γ_λ ⊕ Γ_partner is the restriction
    /// of one irreducible O(n) module.
    PairedLift { partner: HighestWeight },
}

pub fn on_lift_classification(lambda: &HighestWeight) -> OnLift {
    if lambda.has_signed_tail() {
        OnLift::PairedLift {
            partner: lambda.flipped(),
        }
    } else {
        OnLift::TwoLifts
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Reality {
    /// Γ_λ is self-dual and carries a real structure.
    Real,
    /// Γ_λ is dual to Γ_partner ≠ Γ_λ.
    DualPair { partner: HighestWeight },
}

pub fn reality_classification(lambda: &HighestWeight) -> Reality {
    let dual = lambda.dual();
    if &dual == lambda {
        Reality::Real
    } else {
        Reality::DualPair { partner: dual }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SymmetryVerdict {
    #[serde(rename = "always-symmetric-O(n)")]
    AlwaysSymmetricO,
    #[serde(rename = "always-symmetric-SO(n)")]
    AlwaysSymmetricSO,
    AsymmetricWitnessExists,
}

/// Which group the bivaluations are invariant under.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum InvarianceGroup {
    O,
    SO,
}

/// Symmetry of SO(n) invariant bivaluations of bidegree (i, i), by the
/// closed form: asymmetric exactly for (i, n) = (2k+1, 4k+2).
pub fn bivaluation_symmetry_verdict(n: usize, i: usize) -> Result<SymmetryVerdict> {
    bivaluation_symmetry_verdict_for(n, i, InvarianceGroup::SO)
}

/// As [`bivaluation_symmetry_verdict`], choosing the invariance group.
/// O(n) invariant bivaluations are always symmetric.
pub fn bivaluation_symmetry_verdict_for(
    n: usize,
    i: usize,
    group: InvarianceGroup,
) -> Result<SymmetryVerdict> {
    ValDescriptor::new(n, i as i64)?;
    Ok(match group {
        InvarianceGroup::O => SymmetryVerdict::AlwaysSymmetricO,
        InvarianceGroup::SO if n % 4 == 2 && 2 * i == n => SymmetryVerdict::AsymmetricWitnessExists,
        InvarianceGroup::SO => SymmetryVerdict::AlwaysSymmetricSO,
    })
}

/// The SO(n) verdict derived from the weights of Val_i: an asymmetric
/// bivaluation exists iff some weight of Val_i is not self-dual.
///
/// Every weight of Val_i with a non-zero last entry already occurs with
/// λ_1 ≤ 2, so `cap = 2` decides the question.
pub fn symmetry_verdict_from_weights(n: usize, i: usize, cap: i64) -> Result<SymmetryVerdict> {
    let weights = enumerate_val_weights(n, i, cap)?;
    let witness = weights
        .iter()
        .any(|l| matches!(reality_classification(l), Reality::DualPair { .. }));
    Ok(if witness {
        SymmetryVerdict::AsymmetricWitnessExists
    } else {
        SymmetryVerdict::AlwaysSymmetricSO
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hw(n: usize, v: &[i64]) -> HighestWeight {
        HighestWeight::new(n, v.to_vec()).unwrap()
    }

    #[test]
    fn lifts() {
        assert_eq!(on_lift_classification(&hw(5, &[2, 0])), OnLift::TwoLifts);
        assert_eq!(on_lift_classification(&hw(6, &[2, 0, 0])), OnLift::TwoLifts);
        assert_eq!(
            on_lift_classification(&hw(6, &[2, 2, 2])),
            OnLift::PairedLift {
                partner: hw(6, &[2, 2, -2])
            }
        );
    }

    #[test]
    fn reality() {
        assert_eq!(reality_classification(&hw(5, &[3, 2])), Reality::Real);
        assert_eq!(
            reality_classification(&hw(6, &[2, 2, 2])),
            Reality::DualPair {
                partner: hw(6, &[2, 2, -2])
            }
        );
        assert_eq!(reality_classification(&hw(8, &[2, 2, 2, 2])), Reality::Real);
    }

    #[test]
    fn verdicts() {
        use SymmetryVerdict::*;
        assert_eq!(bivaluation_symmetry_verdict(6, 3).unwrap(), AsymmetricWitnessExists);
        assert_eq!(bivaluation_symmetry_verdict(6, 2).unwrap(), AlwaysSymmetricSO);
        for i in 0..=5 {
            assert_eq!(bivaluation_symmetry_verdict(5, i).unwrap(), AlwaysSymmetricSO);
        }
        assert_eq!(
            bivaluation_symmetry_verdict_for(6, 3, InvarianceGroup::O).unwrap(),
            AlwaysSymmetricO
        );
        for n in 3..=10 {
            for i in 0..=n {
                assert_eq!(
                    bivaluation_symmetry_verdict(n, i).unwrap(),
                    symmetry_verdict_from_weights(n, i, 2).unwrap()
                );
            }
        }
    }
}
