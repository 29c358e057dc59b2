//! Irreducible characters via the Freudenthal multiplicity recursion, and
//! the Weyl dimension formula.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::character::{weyl_orbit, CharacterMap};
use crate::error::{Error, Result};
use crate::group::{Family, GroupTag, HighestWeight};

fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Whether `lambda - mu` is a non-negative integer combination of simple roots.
fn dominates(group: GroupTag, lambda: &[i64], mu: &[i64]) -> bool {
    let m = group.rank();
    let d: Vec<i64> = lambda.iter().zip(mu).map(|(a, b)| a - b).collect();
    let mut partial = Vec::with_capacity(m);
    let mut s = 0;
    for x in &d {
        s += x;
        partial.push(s);
    }
    match group.family() {
        Family::B => partial.iter().all(|&x| x >= 0),
        Family::D => {
            if m == 1 {
                return d[0] == 0;
            }
            let head_ok = partial[..m - 2].iter().all(|&x| x >= 0);
            let total = partial[m - 1];
            head_ok && total >= 0 && total % 2 == 0 && partial[m - 2] - d[m - 1] >= 0
        }
    }
}

/// Dominant weights below `lambda` in the dominance order.
fn dominant_weights_below(group: GroupTag, lambda: &[i64]) -> Vec<Vec<i64>> {
    let bound = lambda.first().copied().unwrap_or(0);
    let mut out = Vec::new();
    let mut current = Vec::new();
    collect_dominant(group, bound, &mut current, &mut |mu| {
        if dominates(group, lambda, mu) {
            out.push(mu.to_vec());
        }
    });
    out
}

fn collect_dominant(group: GroupTag, bound: i64, current: &mut Vec<i64>, f: &mut impl FnMut(&[i64])) {
    let m = group.rank();
    if current.len() == m {
        f(current);
        return;
    }
    let is_last = current.len() + 1 == m;
    let low = if is_last && group.family() == Family::D { -bound } else { 0 };
    for x in low..=bound {
        current.push(x);
        collect_dominant(group, x.abs(), current, f);
        current.pop();
    }
}

/// Multiplicities of the dominant weights of Γ_λ.
fn dominant_multiplicities(lambda: &HighestWeight) -> Result<HashMap<Vec<i64>, BigInt>> {
    let group = lambda.group();
    let lam = lambda.entries();
    let mut mults: HashMap<Vec<i64>, BigInt> = HashMap::new();
    if group.rank() == 1 && group.family() == Family::D {
        mults.insert(lam.to_vec(), BigInt::one());
        return Ok(mults);
    }
    let two_rho = group.two_rho();
    let roots = group.positive_roots();
    let bound = lam[0];
    let mut weights = dominant_weights_below(group, lam);
    // (α, 2ρ) > 0 for every positive root, so this puts every weight after
    // all weights that dominate it.
    weights.sort_by_key(|mu| std::cmp::Reverse(dot(mu, &two_rho)));
    let lam_shift: Vec<i64> = lam.iter().zip(&two_rho).map(|(a, r)| a + r).collect();
    for mu in weights {
        if mu.as_slice() == lam {
            mults.insert(mu, BigInt::one());
            continue;
        }
        let mut numerator = BigInt::zero();
        for alpha in &roots {
            let mut k = 1;
            loop {
                let shifted: Vec<i64> = mu.iter().zip(alpha).map(|(x, a)| x + k * a).collect();
                if shifted.iter().any(|x| x.abs() > bound) {
                    break;
                }
                let dom = group.dominant_conjugate(&shifted);
                if let Some(m) = mults.get(&dom) {
                    numerator += m * BigInt::from(dot(&shifted, alpha));
                }
                k += 1;
            }
        }
        numerator *= 2;
        let diff: Vec<i64> = lam.iter().zip(&mu).map(|(a, b)| a - b).collect();
        let sum: Vec<i64> = lam_shift.iter().zip(&mu).map(|(a, b)| a + b).collect();
        let denominator = dot(&diff, &sum);
        if denominator <= 0 {
            return Err(Error::Inconsistent(format!(
                "Freudenthal denominator {denominator} at {mu:?} below {lam:?}"
            )));
        }
        let (q, r) = numerator.div_rem(&BigInt::from(denominator));
        if !r.is_zero() {
            return Err(Error::Inconsistent(format!(
                "Freudenthal recursion not integral at {mu:?} below {lam:?}"
            )));
        }
        if !q.is_zero() {
            mults.insert(mu, q);
        }
    }
    Ok(mults)
}

fn compute_character(lambda: &HighestWeight) -> Result<CharacterMap> {
    let group = lambda.group();
    let mut out = CharacterMap::zero(group);
    for (mu, m) in dominant_multiplicities(lambda)? {
        for w in weyl_orbit(group, &mu) {
            out.add_at(w, m.clone());
        }
    }
    Ok(out)
}

type CharacterCache = Mutex<HashMap<(usize, Vec<i64>), Arc<CharacterMap>>>;

fn cache() -> &'static CharacterCache {
    static CACHE: OnceLock<CharacterCache> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// Shared handle to the character of Γ_λ; computed once per process.
pub(crate) fn irreducible_character_shared(lambda: &HighestWeight) -> Result<Arc<CharacterMap>> {
    let key = (lambda.n(), lambda.entries().to_vec());
    if let Some(c) = cache().lock().expect("character cache poisoned").get(&key) {
        return Ok(Arc::clone(c));
    }
    let c = Arc::new(compute_character(lambda)?);
    cache()
        .lock()
        .expect("character cache poisoned")
        .insert(key, Arc::clone(&c));
    Ok(c)
}

/// The full weight-multiplicity map of the irreducible module Γ_λ.
pub fn irreducible_character(n: usize, lambda: &[i64]) -> Result<CharacterMap> {
    let lambda = HighestWeight::new(n, lambda.to_vec())?;
    Ok((*irreducible_character_shared(&lambda)?).clone())
}

/// Weyl dimension formula: the product over positive roots of
/// (λ+ρ, α)/(ρ, α).
pub fn dimension(n: usize, lambda: &[i64]) -> Result<BigInt> {
    let lambda = HighestWeight::new(n, lambda.to_vec())?;
    Ok(weyl_dimension(&lambda))
}

pub(crate) fn weyl_dimension(lambda: &HighestWeight) -> BigInt {
    let group = lambda.group();
    let two_rho = group.two_rho();
    let shifted: Vec<i64> = lambda
        .entries()
        .iter()
        .zip(&two_rho)
        .map(|(l, r)| 2 * l + r)
        .collect();
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for alpha in group.positive_roots() {
        num *= dot(&shifted, &alpha);
        den *= dot(&two_rho, &alpha);
    }
    num / den
}


#[cfg(test)]
mod tests {
    use super::*;
    use crate::character::fundamental_character;
    use crate::character::char_sum;
    use crate::group::highest_weights_up_to;

    #[test]
    fn small_dimensions() {
        assert_eq!(dimension(5, &[0, 0]).unwrap(), BigInt::from(1));
        assert_eq!(dimension(5, &[1, 0]).unwrap(), BigInt::from(5));
        assert_eq!(dimension(5, &[1, 1]).unwrap(), BigInt::from(10));
        assert_eq!(dimension(5, &[2, 0]).unwrap(), BigInt::from(14));
        assert_eq!(dimension(3, &[2]).unwrap(), BigInt::from(5));
        assert_eq!(dimension(6, &[1, 1, 1]).unwrap(), BigInt::from(10));
        assert_eq!(dimension(2, &[-4]).unwrap(), BigInt::from(1));
        assert_eq!(dimension(7, &[1, 1, 0]).unwrap(), BigInt::from(21));
        assert_eq!(dimension(8, &[1, 1, 1, 1]).unwrap(), BigInt::from(35));
    }

    #[test]
    fn standard_and_trivial() {
        assert_eq!(
            irreducible_character(5, &[1, 0]).unwrap(),
            fundamental_character(5, 1).unwrap()
        );
        let t = irreducible_character(7, &[0, 0, 0]).unwrap();
        assert_eq!(t.len(), 1);
        assert_eq!(t.mass(), BigInt::one());
    }

    #[test]
    fn middle_exterior_power_splits() {
        let a = irreducible_character(6, &[1, 1, 1]).unwrap();
        let b = irreducible_character(6, &[1, 1, -1]).unwrap();
        assert_eq!(char_sum(&a, &b).unwrap(), fundamental_character(6, 3).unwrap());
    }

    #[test]
    fn mass_matches_weyl_dimension() {
        for n in 3..=7 {
            for lambda in highest_weights_up_to(n, 3).unwrap() {
                let c = irreducible_character(n, lambda.entries()).unwrap();
                assert_eq!(c.mass(), weyl_dimension(&lambda), "SO({n}) {lambda}");
                assert!(c.is_weyl_invariant());
            }
        }
    }

    #[test]
    fn dominance_examples() {
        let b2 = GroupTag::new(5).unwrap();
        assert!(dominates(b2, &[1, 0], &[0, 0]));
        assert!(dominates(b2, &[2, 0], &[1, 1]));
        let d2 = GroupTag::new(4).unwrap();
        assert!(!dominates(d2, &[1, 0], &[0, 0]));
        assert!(dominates(d2, &[2, 0], &[0, 0]));
        assert!(!dominates(d2, &[1, 1], &[1, -1]));
        let d3 = GroupTag::new(6).unwrap();
        assert!(dominates(d3, &[1, 1, 0], &[0, 0, 0]));
        assert!(!dominates(d3, &[1, 1, 1], &[1, 1, -1]));
    }
}
