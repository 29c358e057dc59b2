//! Representation theory of SO(n) as it enters the decomposition of
//! translation invariant valuations.
//!
//! The crate covers highest weights and characters of SO(n) (types B_m and
//! D_m), the branching rule to SO(n-1), and two independent computations of
//! the multiplicity of an irreducible module Γ_λ in Val_i.
//!
//! ```
//! use valharm_core::{val_multiplicity_alternating, val_multiplicity_conditions, HighestWeight};
//!
//! let lambda = HighestWeight::new(6, vec![2, 2, -2])?;
//! assert_eq!(val_multiplicity_conditions(6, 3, &lambda), 1);
//! assert_eq!(val_multiplicity_alternating(6, 3, &lambda)?, 1);
//! # Ok::<(), valharm_core::Error>(())
//! ```

mod branching;
mod character;
mod classify;
mod decompose;
mod determinantal;
mod error;
mod freudenthal;
mod group;
pub mod json;
mod valuation;

pub use branching::{
    branch_restriction, induced_multiplicity, induced_multiplicity_by_characters, interlaces, BranchList,
};
pub use character::{
    char_difference, char_product, char_sum, fundamental_character, symmetric_power_character, weyl_orbit,
    CharacterMap,
};
pub use classify::{
    bivaluation_symmetry_verdict, bivaluation_symmetry_verdict_for, on_lift_classification,
    reality_classification, symmetry_verdict_from_weights, InvarianceGroup, OnLift, Reality, SymmetryVerdict,
};
pub use decompose::{decompose_character, multiplicity_in, recompose, Decomposition};
pub use determinantal::{
    barred_character, conjugate_partition, default_size, exterior_pair_identity, second_determinantal_character,
    second_determinantal_character_with,
};
pub use error::{Error, Result};
pub use freudenthal::{dimension, irreducible_character};
pub use group::{
    highest_weights_up_to, validate_highest_weight, Family, GroupTag, HighestWeight, Partition, WeightVector,
};
pub use valuation::{
    enumerate_sigma_set, enumerate_val_weights, equivariant_dimension, exterior_multiplicity,
    hard_lefschetz_check, primitive_form_multiplicity, reduce_by_lefschetz, sigma_sum, sigma_sum_via_star,
    val_multiplicity_alternating, val_multiplicity_conditions, SigmaDescriptor, StarWeight, ValDescriptor,
};

/// Crate version, recorded in reports.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");
