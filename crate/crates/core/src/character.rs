//! Characters as sparse maps from weights to multiplicities.
//!
//! Multiplicities are arbitrary-precision and may be negative: signed maps
//! show up as intermediate values of determinant expansions. Only
//! [`crate::decompose_character`] insists on a genuine character.

use std::collections::btree_map;
use std::collections::{BTreeMap, HashMap};
use std::fmt;

use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::group::{GroupTag, WeightVector};

/// A virtual character of SO(n), stored as the full weight-multiplicity map.
#[derive(Clone, PartialEq, Eq)]
pub struct CharacterMap {
    group: GroupTag,
    support: BTreeMap<WeightVector, BigInt>,
}

impl CharacterMap {
    pub fn zero(group: GroupTag) -> Self {
        Self {
            group,
            support: BTreeMap::new(),
        }
    }

    /// The character of the trivial representation.
    pub fn trivial(group: GroupTag) -> Self {
        let mut c = Self::zero(group);
        c.support
            .insert(WeightVector::zero(group.rank()), BigInt::one());
        c
    }

    /// Builds a map from (weight, multiplicity) pairs, merging repeats and
    /// dropping zeros.
    pub fn from_entries<I>(group: GroupTag, entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = (WeightVector, BigInt)>,
    {
        let mut c = Self::zero(group);
        for (w, mult) in entries {
            if w.0.len() != group.rank() {
                return Err(Error::LengthMismatch {
                    n: group.n(),
                    expected: group.rank(),
                    got: w.0.len(),
                });
            }
            c.add_at(w, mult);
        }
        Ok(c)
    }

    pub fn group(&self) -> GroupTag {
        self.group
    }

    pub fn n(&self) -> usize {
        self.group.n()
    }

    pub fn is_zero(&self) -> bool {
        self.support.is_empty()
    }

    /// Number of weights with non-zero multiplicity.
    pub fn len(&self) -> usize {
        self.support.len()
    }

    pub fn is_empty(&self) -> bool {
        self.support.is_empty()
    }

    pub fn get(&self, w: &[i64]) -> BigInt {
        self.support
            .get(&WeightVector(w.to_vec()))
            .cloned()
            .unwrap_or_default()
    }

    pub fn iter(&self) -> btree_map::Iter<'_, WeightVector, BigInt> {
        self.support.iter()
    }

    /// The lexicographically greatest weight in the support.
    pub fn leading_weight(&self) -> Option<(&WeightVector, &BigInt)> {
        self.support.last_key_value()
    }

    /// Sum of all multiplicities; the dimension for a genuine character.
    pub fn mass(&self) -> BigInt {
        self.support.values().sum()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.support.values().all(|v| !v.is_negative())
    }

    pub(crate) fn add_at(&mut self, w: WeightVector, mult: BigInt) {
        if mult.is_zero() {
            return;
        }
        match self.support.entry(w) {
            btree_map::Entry::Vacant(e) => {
                e.insert(mult);
            }
            btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += mult;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn scaled(&self, factor: &BigInt) -> CharacterMap {
        if factor.is_zero() {
            return CharacterMap::zero(self.group);
        }
        CharacterMap {
            group: self.group,
            support: self
                .support
                .iter()
                .map(|(w, m)| (w.clone(), m * factor))
                .collect(),
        }
    }

    pub fn negated(&self) -> CharacterMap {
        self.scaled(&BigInt::from(-1))
    }

    fn check_group(&self, other: &CharacterMap) -> Result<()> {
        if self.group != other.group {
            return Err(Error::GroupMismatch {
                left: self.group.n(),
                right: other.group.n(),
            });
        }
        Ok(())
    }

    pub fn add_assign_scaled(&mut self, other: &CharacterMap, factor: &BigInt) -> Result<()> {
        self.check_group(other)?;
        for (w, m) in &other.support {
            self.add_at(w.clone(), m * factor);
        }
        Ok(())
    }

    /// Invariance under the Weyl group, checked against each weight's orbit.
    pub fn is_weyl_invariant(&self) -> bool {
        self.support.iter().all(|(w, m)| {
            let dom = self.group.dominant_conjugate(&w.0);
            self.support.get(&WeightVector(dom)) == Some(m)
        }) && self.support.keys().all(|w| {
            let dom = self.group.dominant_conjugate(&w.0);
            weyl_orbit(self.group, &dom)
                .into_iter()
                .all(|v| self.support.contains_key(&v))
        })
    }

    /// Restriction to SO(n-1) along the standard embedding.
    ///
    /// SO(2m+1) and SO(2m) share a maximal torus, so odd n keeps the map as
    /// it is; for even n the last coordinate is summed out.
    pub fn restrict(&self) -> Result<CharacterMap> {
        let sub = self.group.subgroup()?;
        let mut out = CharacterMap::zero(sub);
        for (w, m) in &self.support {
            let coords = w.0[..sub.rank()].to_vec();
            out.add_at(WeightVector(coords), m.clone());
        }
        Ok(out)
    }
}

impl fmt::Debug for CharacterMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CharacterMap[{}]", self.group)?;
        f.debug_map()
            .entries(self.support.iter().map(|(w, m)| (&w.0, m.to_string())))
            .finish()
    }
}

impl<'a> IntoIterator for &'a CharacterMap {
    type Item = (&'a WeightVector, &'a BigInt);
    type IntoIter = btree_map::Iter<'a, WeightVector, BigInt>;

    fn into_iter(self) -> Self::IntoIter {
        self.support.iter()
    }
}

/// Pointwise sum.
pub fn char_sum(a: &CharacterMap, b: &CharacterMap) -> Result<CharacterMap> {
    let mut out = a.clone();
    out.add_assign_scaled(b, &BigInt::one())?;
    Ok(out)
}

/// Pointwise difference `a - b`; the result may be virtual.
pub fn char_difference(a: &CharacterMap, b: &CharacterMap) -> Result<CharacterMap> {
    let mut out = a.clone();
    out.add_assign_scaled(b, &BigInt::from(-1))?;
    Ok(out)
}

/// Product of characters, i.e. convolution on the weight lattice.
pub fn char_product(a: &CharacterMap, b: &CharacterMap) -> Result<CharacterMap> {
    a.check_group(b)?;
    let (small, large) = if a.len() <= b.len() { (a, b) } else { (b, a) };
    let mut acc: HashMap<Vec<i64>, BigInt> = HashMap::with_capacity(large.len() * 2);
    for (wa, ma) in &small.support {
        for (wb, mb) in &large.support {
            let w: Vec<i64> = wa.0.iter().zip(&wb.0).map(|(x, y)| x + y).collect();
            *acc.entry(w).or_default() += ma * mb;
        }
    }
    let support = acc
        .into_iter()
        .filter(|(_, m)| !m.is_zero())
        .map(|(w, m)| (WeightVector(w), m))
        .collect();
    Ok(CharacterMap {
        group: a.group,
        support,
    })
}

/// E_i, the character of the i-th exterior power of the standard
/// representation. Zero for i outside 0..=n.
pub fn fundamental_character(n: usize, i: i64) -> Result<CharacterMap> {
    let group = GroupTag::new(n)?;
    let mut out = CharacterMap::zero(group);
    if i < 0 || i > n as i64 {
        return Ok(out);
    }
    let weights = group.standard_weights();
    for subset in weights.iter().combinations(i as usize) {
        let w = subset
            .iter()
            .fold(WeightVector::zero(group.rank()), |acc, v| acc.add(v));
        out.add_at(w, BigInt::one());
    }
    Ok(out)
}

/// Character of Sym^k of the standard representation.
pub fn symmetric_power_character(n: usize, k: usize) -> Result<CharacterMap> {
    let group = GroupTag::new(n)?;
    let mut out = CharacterMap::zero(group);
    let weights = group.standard_weights();
    for multiset in weights.iter().combinations_with_replacement(k) {
        let w = multiset
            .iter()
            .fold(WeightVector::zero(group.rank()), |acc, v| acc.add(v));
        out.add_at(w, BigInt::one());
    }
    Ok(out)
}

/// All weights in the Weyl orbit of `w`, sorted.
pub fn weyl_orbit(group: GroupTag, w: &[i64]) -> Vec<WeightVector> {
    let abs: Vec<i64> = w.iter().map(|x| x.abs()).collect();
    let negatives = w.iter().filter(|&&x| x < 0).count() % 2;
    let has_zero = abs.contains(&0);
    let restrict_parity = group.family() == crate::group::Family::D && !has_zero;
    let mut out = Vec::new();
    for perm in abs.iter().copied().permutations(abs.len()).unique() {
        let nonzero: Vec<usize> = (0..perm.len()).filter(|&k| perm[k] != 0).collect();
        for mask in 0u32..(1u32 << nonzero.len()) {
            if restrict_parity && (mask.count_ones() as usize) % 2 != negatives {
                continue;
            }
            let mut v = perm.clone();
            for (bit, &k) in nonzero.iter().enumerate() {
                if mask & (1 << bit) != 0 {
                    v[k] = -v[k];
                }
            }
            out.push(WeightVector(v));
        }
    }
    out.sort();
    out.dedup();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(n: usize) -> GroupTag {
        GroupTag::new(n).unwrap()
    }

    #[test]
    fn exterior_powers() {
        let e1 = fundamental_character(5, 1).unwrap();
        assert_eq!(e1.len(), 5);
        assert_eq!(e1.mass(), BigInt::from(5));
        assert_eq!(fundamental_character(6, 0).unwrap(), CharacterMap::trivial(g(6)));
        assert!(fundamental_character(5, 7).unwrap().is_zero());
        assert!(fundamental_character(5, -1).unwrap().is_zero());
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
    fn products_and_sums() {
        let e1 = fundamental_character(5, 1).unwrap();
        let one = CharacterMap::trivial(g(5));
        assert_eq!(char_product(&e1, &one).unwrap(), e1);
        assert_eq!(char_sum(&e1, &CharacterMap::zero(g(5))).unwrap(), e1);
        let sq = char_product(&e1, &e1).unwrap();
        assert_eq!(sq.mass(), BigInt::from(25));
        let doubled = char_sum(&e1, &e1).unwrap();
        assert!(doubled.iter().all(|(_, m)| *m == BigInt::from(2)));
        assert!(char_difference(&e1, &e1).unwrap().is_zero());
        assert!(char_sum(&e1, &CharacterMap::trivial(g(6))).is_err());
    }

    #[test]
    fn symmetric_powers() {
        assert_eq!(symmetric_power_character(5, 0).unwrap(), CharacterMap::trivial(g(5)));
        assert_eq!(
            symmetric_power_character(5, 1).unwrap(),
            fundamental_character(5, 1).unwrap()
        );
        assert_eq!(symmetric_power_character(5, 2).unwrap().mass(), BigInt::from(15));
    }

    #[test]
    fn orbits() {
        assert_eq!(weyl_orbit(g(5), &[1, 0]).len(), 4);
        assert_eq!(weyl_orbit(g(5), &[2, 1]).len(), 8);
        // D_2 keeps the sign parity when no entry vanishes.
        assert_eq!(weyl_orbit(g(4), &[1, 1]).len(), 2);
        assert_eq!(weyl_orbit(g(4), &[1, -1]).len(), 2);
        assert_eq!(weyl_orbit(g(6), &[1, 0, 0]).len(), 6);
    }

    #[test]
    fn restriction_drops_or_keeps_coordinates() {
        let e1 = fundamental_character(6, 1).unwrap();
        let r = e1.restrict().unwrap();
        assert_eq!(r.n(), 5);
        let expected = char_sum(&fundamental_character(5, 1).unwrap(), &CharacterMap::trivial(g(5))).unwrap();
        assert_eq!(r, expected);
        let e1 = fundamental_character(5, 1).unwrap();
        let r = e1.restrict().unwrap();
        assert_eq!(r.mass(), BigInt::from(5));
        assert_eq!(r.get(&[0, 0]), BigInt::one());
    }

    #[test]
    fn invariance_detected() {
        assert!(fundamental_character(7, 3).unwrap().is_weyl_invariant());
        let lopsided =
            CharacterMap::from_entries(g(5), [(WeightVector(vec![1, 0]), BigInt::one())]).unwrap();
        assert!(!lopsided.is_weyl_invariant());
    }
}
