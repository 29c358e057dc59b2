//! Groups SO(n) and the integer tuples that index their representations.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Root system family of SO(n): `B` for odd n = 2m+1, `D` for even n = 2m.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    B,
    D,
}

/// The group SO(n), identified by its ambient dimension.
///
/// `n >= 2` is accepted so that SO(2) can appear as the target of the
/// branching SO(3) -> SO(2); all public entry points that talk about
/// valuations require `n >= 3`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct GroupTag {
    n: usize,
}

impl GroupTag {
    pub fn new(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::UnsupportedDimension { n, min: 2 });
        }
        Ok(Self { n })
    }

    /// Like [`GroupTag::new`] but insists on `n >= 3`.
    pub fn so(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::UnsupportedDimension { n, min: 3 });
        }
        Ok(Self { n })
    }

    pub fn n(self) -> usize {
        self.n
    }

    /// m = floor(n/2).
    pub fn rank(self) -> usize {
        self.n / 2
    }

    pub fn family(self) -> Family {
        if self.n % 2 == 1 {
            Family::B
        } else {
            Family::D
        }
    }

    pub fn is_even(self) -> bool {
        self.family() == Family::D
    }

    /// SO(n-1), the stabiliser of a unit vector.
    pub fn subgroup(self) -> Result<Self> {
        GroupTag::new(self.n - 1)
    }

    /// Twice the half-sum of positive roots, in the standard basis e_1..e_m.
    pub(crate) fn two_rho(self) -> Vec<i64> {
        let m = self.rank() as i64;
        match self.family() {
            Family::B => (0..m).map(|j| 2 * (m - j) - 1).collect(),
            Family::D => (0..m).map(|j| 2 * (m - 1 - j)).collect(),
        }
    }

    /// Positive roots as integer vectors. For D_1 (SO(2)) the list is empty.
    pub(crate) fn positive_roots(self) -> Vec<Vec<i64>> {
        let m = self.rank();
        let mut roots = Vec::new();
        for i in 0..m {
            for j in i + 1..m {
                let mut minus = vec![0; m];
                minus[i] = 1;
                minus[j] = -1;
                roots.push(minus);
                let mut plus = vec![0; m];
                plus[i] = 1;
                plus[j] = 1;
                roots.push(plus);
            }
            if self.family() == Family::B {
                let mut short = vec![0; m];
                short[i] = 1;
                roots.push(short);
            }
        }
        roots
    }

    /// Weights of the standard representation on C^n: ±e_1..±e_m, plus 0 for odd n.
    pub fn standard_weights(self) -> Vec<WeightVector> {
        let m = self.rank();
        let mut out = Vec::with_capacity(self.n);
        for j in 0..m {
            for sign in [1, -1] {
                let mut w = vec![0; m];
                w[j] = sign;
                out.push(WeightVector(w));
            }
        }
        if self.family() == Family::B {
            out.push(WeightVector(vec![0; m]));
        }
        out
    }

    /// The dominant Weyl-conjugate of a weight.
    ///
    /// B_m acts by all signed permutations, D_m only by those with an even
    /// number of sign changes.
    pub fn dominant_conjugate(self, w: &[i64]) -> Vec<i64> {
        let negatives = w.iter().filter(|&&x| x < 0).count();
        let has_zero = w.contains(&0);
        let mut out: Vec<i64> = w.iter().map(|x| x.abs()).collect();
        out.sort_unstable_by(|a, b| b.cmp(a));
        if self.family() == Family::D && negatives % 2 == 1 && !has_zero {
            if let Some(last) = out.last_mut() {
                *last = -*last;
            }
        }
        out
    }

    pub fn is_dominant(self, w: &[i64]) -> bool {
        validate_entries(self, w)
    }
}

impl fmt::Display for GroupTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SO({})", self.n)
    }
}

/// A point of the weight lattice Z^m.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct WeightVector(pub Vec<i64>);

impl WeightVector {
    pub fn zero(m: usize) -> Self {
        WeightVector(vec![0; m])
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn add(&self, other: &WeightVector) -> WeightVector {
        WeightVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

fn validate_entries(group: GroupTag, entries: &[i64]) -> bool {
    if entries.len() != group.rank() {
        return false;
    }
    let m = entries.len();
    if m == 0 {
        return true;
    }
    // λ_1 >= ... >= λ_{m-1} >= |λ_m| for even n, with λ_m >= 0 added for odd n.
    let non_increasing = entries[..m - 1].windows(2).all(|w| w[0] >= w[1]);
    let last = entries[m - 1];
    let last_ok = match group.family() {
        Family::B => last >= 0 && (m == 1 || entries[m - 2] >= last),
        Family::D => m == 1 || entries[m - 2] >= last.abs(),
    };
    non_increasing && last_ok
}

/// True iff `entries` is a highest weight of SO(n).
pub fn validate_highest_weight(n: usize, entries: &[i64]) -> Result<bool> {
    let group = GroupTag::new(n)?;
    if entries.len() != group.rank() {
        return Err(Error::LengthMismatch {
            n,
            expected: group.rank(),
            got: entries.len(),
        });
    }
    Ok(validate_entries(group, entries))
}

/// A highest weight (λ_1, …, λ_m) of SO(n), validated on construction.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HighestWeight {
    group: GroupTag,
    entries: Vec<i64>,
}

impl HighestWeight {
    pub fn new(n: usize, entries: impl Into<Vec<i64>>) -> Result<Self> {
        let entries = entries.into();
        if !validate_highest_weight(n, &entries)? {
            return Err(Error::InvalidWeight { n, lambda: entries });
        }
        Ok(Self {
            group: GroupTag::new(n)?,
            entries,
        })
    }

    pub fn trivial(n: usize) -> Result<Self> {
        let group = GroupTag::new(n)?;
        Self::new(n, vec![0; group.rank()])
    }

    /// (1, 0, …, 0), the standard representation. SO(2) has no such weight
    /// with this meaning, but (1) is returned all the same.
    pub fn standard(n: usize) -> Result<Self> {
        let group = GroupTag::new(n)?;
        let mut e = vec![0; group.rank()];
        e[0] = 1;
        Self::new(n, e)
    }

    pub fn group(&self) -> GroupTag {
        self.group
    }

    pub fn n(&self) -> usize {
        self.group.n()
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|&x| x == 0)
    }

    /// λ' = (λ_1, …, λ_{m-1}, -λ_m).
    pub fn flipped(&self) -> HighestWeight {
        let mut entries = self.entries.clone();
        if self.group.is_even() {
            if let Some(last) = entries.last_mut() {
                *last = -*last;
            }
        }
        HighestWeight {
            group: self.group,
            entries,
        }
    }

    /// Whether the last entry is non-zero for even n, i.e. λ ≠ λ'.
    pub fn has_signed_tail(&self) -> bool {
        self.group.is_even() && self.entries.last().is_some_and(|&x| x != 0)
    }

    pub fn as_weight(&self) -> WeightVector {
        WeightVector(self.entries.clone())
    }

    /// Highest weight of the dual module. Only SO(n) with n ≡ 2 mod 4 has
    /// non-self-dual irreducibles, and there the dual of Γ_λ is Γ_λ'.
    pub fn dual(&self) -> HighestWeight {
        if self.n() % 4 == 2 {
            self.flipped()
        } else {
            self.clone()
        }
    }
}

impl fmt::Display for HighestWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, x) in self.entries.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

/// A non-increasing tuple of non-negative integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Vec<i64>);

impl Partition {
    pub fn new(entries: impl Into<Vec<i64>>) -> Result<Self> {
        let entries = entries.into();
        let ok = entries.iter().all(|&x| x >= 0) && entries.windows(2).all(|w| w[0] >= w[1]);
        if !ok {
            return Err(Error::InvalidWeight {
                n: 0,
                lambda: entries,
            });
        }
        Ok(Partition(entries))
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    pub fn largest(&self) -> i64 {
        self.0.first().copied().unwrap_or(0)
    }

    /// |λ| = λ_1 + λ_2 + ….
    pub fn size(&self) -> i64 {
        self.0.iter().sum()
    }

    /// #(λ, j): number of entries equal to `j`.
    pub fn count_of(&self, j: i64) -> usize {
        self.0.iter().filter(|&&x| x == j).count()
    }

    pub fn to_highest_weight(&self, n: usize) -> Result<HighestWeight> {
        HighestWeight::new(n, self.0.clone())
    }
}

impl TryFrom<&HighestWeight> for Partition {
    type Error = Error;

    fn try_from(value: &HighestWeight) -> Result<Self> {
        Partition::new(value.entries().to_vec()).map_err(|_| Error::InvalidWeight {
            n: value.n(),
            lambda: value.entries().to_vec(),
        })
    }
}

/// All highest weights of SO(n) with λ_1 <= cap, in lexicographic order.
pub fn highest_weights_up_to(n: usize, cap: i64) -> Result<Vec<HighestWeight>> {
    let group = GroupTag::new(n)?;
    let m = group.rank();
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(m);
    fill_weights(group, cap, &mut current, &mut out);
    out.sort();
    Ok(out)
}

fn fill_weights(group: GroupTag, bound: i64, current: &mut Vec<i64>, out: &mut Vec<HighestWeight>) {
    let m = group.rank();
    if current.len() == m {
        out.push(HighestWeight {
            group,
            entries: current.clone(),
        });
        return;
    }
    let is_last = current.len() + 1 == m;
    let low = if is_last && group.is_even() { -bound } else { 0 };
    for x in low..=bound {
        current.push(x);
        fill_weights(group, x.abs(), current, out);
        current.pop();
    }
}
