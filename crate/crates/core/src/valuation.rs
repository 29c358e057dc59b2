//! Multiplicity of Γ_λ in the space Val_i of continuous translation
//! invariant valuations of degree i on R^n, computed two ways.
//!
//! [`val_multiplicity_conditions`] reads the answer off three closed-form
//! conditions on λ. [`val_multiplicity_alternating`] assembles it from
//! exterior powers and induced modules, which only needs characters and the
//! branching rule.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::branching::interlaces;
use crate::character::fundamental_character;
use crate::decompose::{decompose_character, Decomposition};
use crate::error::{Error, Result};
use crate::group::{highest_weights_up_to, GroupTag, HighestWeight, Partition};

/// The pair (n, i) naming Val_i on R^n.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ValDescriptor {
    n: usize,
    i: usize,
}

impl ValDescriptor {
    pub fn new(n: usize, i: i64) -> Result<Self> {
        GroupTag::so(n)?;
        if i < 0 || i > n as i64 {
            return Err(Error::DegreeOutOfRange { n, i });
        }
        Ok(Self { n, i: i as usize })
    }

    pub fn n(self) -> usize {
        self.n
    }

    pub fn i(self) -> usize {
        self.i
    }
}

/// Degree with the same decomposition and i >= n/2.
pub fn reduce_by_lefschetz(n: usize, i: usize) -> usize {
    if 2 * i < n {
        n - i
    } else {
        i
    }
}

/// 1 if λ satisfies all of
///
/// (i) λ_j = 0 for j > min(i, n-i),
/// (ii) |λ_j| ≠ 1 for all j,
/// (iii) |λ_2| ≤ 2,
///
/// and 0 otherwise.
pub fn val_multiplicity_conditions(n: usize, i: usize, lambda: &HighestWeight) -> u32 {
    if i > n || lambda.n() != n {
        return 0;
    }
    let r = i.min(n - i);
    let e = lambda.entries();
    let vanishing_tail = e.iter().skip(r).all(|&x| x == 0);
    let no_ones = e.iter().all(|x| x.abs() != 1);
    let small_second = e.get(1).is_none_or(|x| x.abs() <= 2);
    (vanishing_tail && no_ones && small_second) as u32
}

/// One index σ of the alternating sum, together with the slice j it
/// belongs to.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SigmaDescriptor {
    pub n: usize,
    pub i: usize,
    pub j: usize,
    pub sigma: Partition,
    /// |σ| mod 2; the term enters with sign (-1)^sign_exponent.
    pub sign_exponent: u32,
}

fn check_upper_half(n: usize, i: usize) -> Result<()> {
    GroupTag::so(n)?;
    if 2 * i < n || i >= n {
        return Err(Error::DegreeOutOfRange { n, i: i as i64 });
    }
    Ok(())
}

/// Non-negative weights σ of SO(n-1) with σ_1 ≤ 2, #(σ,1) = n-1-i-j and
/// #(σ,2) ≤ j, over j = 0..=n-1-i.
pub fn enumerate_sigma_set(n: usize, i: usize) -> Result<Vec<SigmaDescriptor>> {
    check_upper_half(n, i)?;
    let mut out = Vec::new();
    for j in 0..n - i {
        out.extend(sigma_slice(n, i, j));
    }
    Ok(out)
}

fn sigma_slice(n: usize, i: usize, j: usize) -> Vec<SigmaDescriptor> {
    let k = (n - 1) / 2;
    let ones = n - 1 - i - j;
    let mut out = Vec::new();
    if ones > k {
        return out;
    }
    for twos in 0..=j.min(k - ones) {
        let mut entries = vec![2; twos];
        entries.extend(std::iter::repeat_n(1, ones));
        entries.resize(k, 0);
        out.push(SigmaDescriptor {
            n,
            i,
            j,
            sigma: Partition::new(entries).expect("non-increasing by construction"),
            sign_exponent: (ones % 2) as u32,
        });
    }
    out
}

/// Multiplicity of Γ_λ in the module induced from Γ̄_σ.
fn induced_barred(n: usize, sigma: &[i64], lambda: &[i64]) -> u32 {
    let mut m = interlaces(n, lambda, sigma) as u32;
    let sub_even = (n - 1) % 2 == 0;
    if sub_even && sigma.last().is_some_and(|&x| x != 0) {
        let mut flipped = sigma.to_vec();
        let last = flipped.len() - 1;
        flipped[last] = -flipped[last];
        m += interlaces(n, lambda, &flipped) as u32;
    }
    m
}

/// Σ over the j-th slice of σ of the multiplicity of Γ_λ in Ind Γ̄_σ.
pub fn primitive_form_multiplicity(n: usize, i: usize, j: usize, lambda: &HighestWeight) -> Result<u32> {
    GroupTag::so(n)?;
    if i + j > n - 1 {
        return Err(Error::DegreeOutOfRange { n, i: (i + j) as i64 });
    }
    if lambda.n() != n {
        return Err(Error::GroupMismatch { left: n, right: lambda.n() });
    }
    Ok(sigma_slice(n, i, j)
        .iter()
        .map(|s| induced_barred(n, s.sigma.entries(), lambda.entries()))
        .sum())
}

type ExteriorCache = Mutex<HashMap<(usize, usize), Decomposition>>;

fn exterior_decomposition(n: usize, i: usize) -> Result<Decomposition> {
    static CACHE: OnceLock<ExteriorCache> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(d) = cache.lock().expect("exterior cache poisoned").get(&(n, i)) {
        return Ok(d.clone());
    }
    let d = decompose_character(&fundamental_character(n, i as i64)?)?;
    cache
        .lock()
        .expect("exterior cache poisoned")
        .insert((n, i), d.clone());
    Ok(d)
}

/// m(Λ^i V_C, λ).
pub fn exterior_multiplicity(n: usize, i: usize, lambda: &HighestWeight) -> Result<i64> {
    let d = exterior_decomposition(n, i)?;
    Ok(d.get(lambda).and_then(|m| m.to_i64()).unwrap_or(0))
}

/// The signed σ-sum Σ_{σ ∈ P_i} (-1)^{|σ|} m(Ind Γ̄_σ, λ).
pub fn sigma_sum(n: usize, i: usize, lambda: &HighestWeight) -> Result<i64> {
    Ok(enumerate_sigma_set(n, i)?
        .iter()
        .map(|s| {
            let m = induced_barred(n, s.sigma.entries(), lambda.entries()) as i64;
            if s.sign_exponent == 1 {
                -m
            } else {
                m
            }
        })
        .sum())
}

/// λ* = (min(λ_1, 2), |λ_2|, …, |λ_m|).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StarWeight(pub Vec<i64>);

impl StarWeight {
    pub fn of(lambda: &HighestWeight) -> Self {
        let e = lambda.entries();
        StarWeight(
            e.iter()
                .enumerate()
                .map(|(k, &x)| if k == 0 { x.min(2) } else { x.abs() })
                .collect(),
        )
    }
}

/// The σ-sum evaluated through λ*: Σ (-1)^{|μ|} over μ of length
/// ⌊(n-1)/2⌋ with μ_{n-i} = 0 interlacing λ*.
pub fn sigma_sum_via_star(n: usize, i: usize, lambda: &HighestWeight) -> Result<i64> {
    check_upper_half(n, i)?;
    let star = StarWeight::of(lambda).0;
    let m = n / 2;
    let k = (n - 1) / 2;
    let mut ranges = Vec::with_capacity(k);
    for j in 0..k {
        let hi = star[j];
        let lo = if j + 1 < m { star[j + 1] } else { -star[j] };
        ranges.push((lo, hi));
    }
    // μ_{n-i} = 0 in one-based indexing.
    let pinned = n - i - 1;
    let mut total = 0i64;
    let mut current = Vec::with_capacity(k);
    signed_count(&ranges, pinned, &mut current, &mut total);
    Ok(total)
}

fn signed_count(ranges: &[(i64, i64)], pinned: usize, current: &mut Vec<i64>, total: &mut i64) {
    let pos = current.len();
    if pos == ranges.len() {
        let size: i64 = current.iter().map(|x| x.abs()).sum();
        *total += if size % 2 == 0 { 1 } else { -1 };
        return;
    }
    let (lo, hi) = ranges[pos];
    for x in lo..=hi {
        if pos == pinned && x != 0 {
            continue;
        }
        current.push(x);
        signed_count(ranges, pinned, current, total);
        current.pop();
    }
}

/// m(Val_i, λ) from the alternating sum
/// (-1)^{n-i} m(Λ^i V_C, λ) + Σ_{σ ∈ P_i} (-1)^{|σ|} m(Ind Γ̄_σ, λ).
///
/// Degrees below n/2 are first moved to n-i. A value outside {0, 1} means
/// the computation itself is broken and is reported as
/// [`Error::Inconsistent`].
pub fn val_multiplicity_alternating(n: usize, i: usize, lambda: &HighestWeight) -> Result<u32> {
    ValDescriptor::new(n, i as i64)?;
    if lambda.n() != n {
        return Err(Error::GroupMismatch { left: n, right: lambda.n() });
    }
    let i = reduce_by_lefschetz(n, i);
    let exterior = exterior_multiplicity(n, i, lambda)?;
    let signed_exterior = if (n - i) % 2 == 0 { exterior } else { -exterior };
    let rest = if i == n { 0 } else { sigma_sum(n, i, lambda)? };
    let value = signed_exterior + rest;
    match value {
        0 | 1 => Ok(value as u32),
        _ => Err(Error::Inconsistent(format!(
            "alternating sum gives {value} for SO({n}), i = {i}, λ = {lambda}"
        ))),
    }
}

/// All λ with λ_1 ≤ cap occurring in Val_i, in lexicographic order.
pub fn enumerate_val_weights(n: usize, i: usize, cap: i64) -> Result<Vec<HighestWeight>> {
    ValDescriptor::new(n, i as i64)?;
    Ok(highest_weights_up_to(n, cap)?
        .into_iter()
        .filter(|l| val_multiplicity_conditions(n, i, l) == 1)
        .collect())
}

/// dim (Val_i ⊗ Γ)^{SO(n)} for Γ given by its decomposition: the number of
/// constituents whose dual occurs in Val_i, counted with multiplicity.
pub fn equivariant_dimension(n: usize, i: usize, gamma: &Decomposition) -> Result<BigInt> {
    ValDescriptor::new(n, i as i64)?;
    let mut total = BigInt::default();
    for (mu, mult) in gamma {
        if mu.n() != n {
            return Err(Error::GroupMismatch { left: n, right: mu.n() });
        }
        if val_multiplicity_conditions(n, i, &mu.dual()) == 1 {
            total += mult;
        }
    }
    Ok(total)
}

/// Val_i and Val_{n-i} contain the same weights up to `cap`.
pub fn hard_lefschetz_check(n: usize, i: usize, cap: i64) -> Result<bool> {
    ValDescriptor::new(n, i as i64)?;
    Ok(enumerate_val_weights(n, i, cap)? == enumerate_val_weights(n, n - i, cap)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hw(n: usize, v: &[i64]) -> HighestWeight {
        HighestWeight::new(n, v.to_vec()).unwrap()
    }

    #[test]
    fn conditions_examples() {
        assert_eq!(val_multiplicity_conditions(5, 0, &hw(5, &[0, 0])), 1);
        assert_eq!(val_multiplicity_conditions(5, 0, &hw(5, &[2, 0])), 0);
        assert_eq!(val_multiplicity_conditions(6, 3, &hw(6, &[2, 2, -2])), 1);
        assert_eq!(val_multiplicity_conditions(5, 2, &hw(5, &[3, 0])), 1);
        assert_eq!(val_multiplicity_conditions(5, 2, &hw(5, &[3, 1])), 0);
        assert_eq!(val_multiplicity_conditions(6, 3, &hw(6, &[3, 3, 0])), 0);
    }

    #[test]
    fn alternating_examples() {
        assert_eq!(val_multiplicity_alternating(4, 2, &hw(4, &[2, 2])).unwrap(), 1);
        assert_eq!(val_multiplicity_alternating(4, 2, &hw(4, &[2, 1])).unwrap(), 0);
        assert_eq!(val_multiplicity_alternating(5, 2, &hw(5, &[0, 0])).unwrap(), 1);
        assert_eq!(val_multiplicity_alternating(3, 2, &hw(3, &[0])).unwrap(), 1);
        assert_eq!(val_multiplicity_alternating(3, 2, &hw(3, &[1])).unwrap(), 0);
    }

    #[test]
    fn sigma_sets() {
        let s = enumerate_sigma_set(4, 3).unwrap();
        assert_eq!(s.len(), 1);
        assert_eq!(s[0].sigma.entries(), &[0]);
        let s = enumerate_sigma_set(5, 4).unwrap();
        assert_eq!(s.len(), 1);
        assert_eq!(s[0].sigma.entries(), &[0, 0]);
        let s: Vec<(usize, Vec<i64>)> = enumerate_sigma_set(5, 3)
            .unwrap()
            .into_iter()
            .map(|d| (d.j, d.sigma.entries().to_vec()))
            .collect();
        assert_eq!(s, vec![(0, vec![1, 0]), (1, vec![0, 0]), (1, vec![2, 0])]);
        assert!(enumerate_sigma_set(5, 2).is_err());
        assert!(enumerate_sigma_set(5, 5).is_err());
    }

    #[test]
    fn primitive_forms_of_trivial() {
        for n in 3usize..=7 {
            let zero = HighestWeight::trivial(n).unwrap();
            for i in n.div_ceil(2)..n {
                for j in 0..n - i {
                    let expected = (j == n - 1 - i) as u32;
                    assert_eq!(primitive_form_multiplicity(n, i, j, &zero).unwrap(), expected);
                }
            }
        }
    }

    #[test]
    fn lefschetz_reduction() {
        assert_eq!(reduce_by_lefschetz(5, 1), 4);
        assert_eq!(reduce_by_lefschetz(6, 3), 3);
        assert_eq!(reduce_by_lefschetz(7, 5), 5);
    }

    #[test]
    fn weight_lists() {
        let names = |v: Vec<HighestWeight>| v.iter().map(|l| l.entries().to_vec()).collect::<Vec<_>>();
        assert_eq!(
            names(enumerate_val_weights(4, 1, 3).unwrap()),
            vec![vec![0, 0], vec![2, 0], vec![3, 0]]
        );
        assert_eq!(
            names(enumerate_val_weights(4, 2, 2).unwrap()),
            vec![vec![0, 0], vec![2, -2], vec![2, 0], vec![2, 2]]
        );
        assert_eq!(names(enumerate_val_weights(6, 0, 5).unwrap()), vec![vec![0, 0, 0]]);
    }

    #[test]
    fn star_route_matches_sigma_sum() {
        for n in 3usize..=7 {
            for i in n.div_ceil(2)..n {
                for lambda in highest_weights_up_to(n, 4).unwrap() {
                    assert_eq!(
                        sigma_sum(n, i, &lambda).unwrap(),
                        sigma_sum_via_star(n, i, &lambda).unwrap(),
                        "SO({n}), i = {i}, λ = {lambda}"
                    );
                }
            }
        }
    }
}
