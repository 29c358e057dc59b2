//! Restriction from SO(n) to SO(n-1) and the induced multiplicities it
//! determines.

use crate::character::CharacterMap;
use crate::decompose::multiplicity_in;
use crate::error::{Error, Result};
use crate::freudenthal::irreducible_character_shared;
use crate::group::{GroupTag, HighestWeight};

/// The irreducible constituents of Γ_λ restricted to SO(n-1). Each occurs
/// exactly once.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BranchList {
    pub parent: HighestWeight,
    pub children: Vec<HighestWeight>,
}

impl BranchList {
    pub fn contains(&self, mu: &HighestWeight) -> bool {
        self.children.binary_search(mu).is_ok()
    }
}

/// Interlacing test between λ (for SO(n)) and μ (for SO(n-1)).
///
/// Odd n:  λ_1 ≥ μ_1 ≥ λ_2 ≥ … ≥ μ_{m-1} ≥ λ_m ≥ |μ_m|.
/// Even n: λ_1 ≥ μ_1 ≥ λ_2 ≥ … ≥ μ_{m-1} ≥ |λ_m|.
pub fn interlaces(n: usize, lambda: &[i64], mu: &[i64]) -> bool {
    if n < 3 || lambda.len() != n / 2 || mu.len() != (n - 1) / 2 {
        return false;
    }
    interlacing_ranges(n, lambda)
        .iter()
        .zip(mu)
        .all(|(&(lo, hi), &x)| lo <= x && x <= hi)
}

/// Admissible interval for each μ_j.
fn interlacing_ranges(n: usize, lam: &[i64]) -> Vec<(i64, i64)> {
    (0..(n - 1) / 2)
        .map(|j| {
            let lo = match lam.get(j + 1) {
                Some(next) => next.abs(),
                None => -lam[j],
            };
            (lo, lam[j])
        })
        .collect()
}

/// All μ for SO(n-1) interlacing with λ, sorted.
pub fn branch_restriction(n: usize, lambda: &[i64]) -> Result<BranchList> {
    GroupTag::so(n)?;
    let parent = HighestWeight::new(n, lambda.to_vec())?;
    let ranges = interlacing_ranges(n, parent.entries());
    let mut children = Vec::new();
    let mut current = Vec::with_capacity(ranges.len());
    fill(&ranges, &mut current, &mut |mu| {
        children.push(HighestWeight::new(n - 1, mu.to_vec()).expect("interlacing gives a highest weight"));
    });
    children.sort();
    Ok(BranchList { parent, children })
}

fn fill(ranges: &[(i64, i64)], current: &mut Vec<i64>, f: &mut impl FnMut(&[i64])) {
    if current.len() == ranges.len() {
        f(current);
        return;
    }
    let (lo, hi) = ranges[current.len()];
    for x in lo..=hi {
        current.push(x);
        fill(ranges, current, f);
        current.pop();
    }
}

/// Multiplicity of Γ_λ in the SO(n)-module induced from Γ_σ, read off from
/// the branching rule.
pub fn induced_multiplicity(n: usize, sigma: &[i64], lambda: &[i64]) -> Result<u32> {
    let lambda = HighestWeight::new(n, lambda.to_vec())?;
    if n < 3 {
        return Err(Error::UnsupportedDimension { n, min: 3 });
    }
    let sigma = HighestWeight::new(n - 1, sigma.to_vec())?;
    Ok(interlaces(n, lambda.entries(), sigma.entries()) as u32)
}

/// The same multiplicity computed from characters: restrict char Γ_λ to
/// SO(n-1) and decompose.
pub fn induced_multiplicity_by_characters(n: usize, sigma: &[i64], lambda: &[i64]) -> Result<u32> {
    let lambda = HighestWeight::new(n, lambda.to_vec())?;
    if n < 3 {
        return Err(Error::UnsupportedDimension { n, min: 3 });
    }
    let sigma = HighestWeight::new(n - 1, sigma.to_vec())?;
    let restricted: CharacterMap = irreducible_character_shared(&lambda)?.restrict()?;
    let m = multiplicity_in(&restricted, &sigma)?;
    u32::try_from(m).map_err(|e| Error::Inconsistent(e.to_string()))
}
