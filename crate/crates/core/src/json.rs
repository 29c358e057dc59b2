//! JSON forms of weights, characters and multiplicity records.
//!
//! Multiplicities are written as JSON numbers when they fit in an `i64`
//! and as decimal strings otherwise; both are accepted on input.

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::character::CharacterMap;
use crate::error::{Error, Result};
use crate::group::{GroupTag, HighestWeight, WeightVector};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightJson {
    pub n: usize,
    pub lambda: Vec<i64>,
}

impl From<&HighestWeight> for WeightJson {
    fn from(w: &HighestWeight) -> Self {
        WeightJson {
            n: w.n(),
            lambda: w.entries().to_vec(),
        }
    }
}

impl TryFrom<WeightJson> for HighestWeight {
    type Error = Error;

    fn try_from(w: WeightJson) -> Result<Self> {
        HighestWeight::new(w.n, w.lambda)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CharacterJson {
    pub n: usize,
    pub support: Vec<(Vec<i64>, Value)>,
}

fn mult_to_value(m: &BigInt) -> Value {
    match m.to_i64() {
        Some(x) => Value::from(x),
        None => Value::from(m.to_string()),
    }
}

fn value_to_mult(v: &Value) -> Result<BigInt> {
    let bad = || Error::Inconsistent(format!("multiplicity {v} is not an integer"));
    match v {
        Value::Number(num) => num.as_i64().map(BigInt::from).ok_or_else(bad),
        Value::String(s) => s.parse().map_err(|_| bad()),
        _ => Err(bad()),
    }
}

impl From<&CharacterMap> for CharacterJson {
    fn from(c: &CharacterMap) -> Self {
        CharacterJson {
            n: c.n(),
            support: c.iter().map(|(w, m)| (w.0.clone(), mult_to_value(m))).collect(),
        }
    }
}

impl TryFrom<CharacterJson> for CharacterMap {
    type Error = Error;

    fn try_from(c: CharacterJson) -> Result<Self> {
        let group = GroupTag::new(c.n)?;
        let entries = c
            .support
            .iter()
            .map(|(w, m)| Ok((WeightVector(w.clone()), value_to_mult(m)?)))
            .collect::<Result<Vec<_>>>()?;
        CharacterMap::from_entries(group, entries)
    }
}

/// One row of a multiplicity table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MultiplicityRecord {
    pub n: usize,
    pub i: usize,
    pub lambda: Vec<i64>,
    pub mult_conditions: u32,
    pub mult_alternating: u32,
}

pub fn character_to_json(c: &CharacterMap) -> String {
    serde_json::to_string(&CharacterJson::from(c)).expect("character serialises")
}

pub fn character_from_json(s: &str) -> Result<CharacterMap> {
    let parsed: CharacterJson =
        serde_json::from_str(s).map_err(|e| Error::Inconsistent(format!("bad character JSON: {e}")))?;
    parsed.try_into()
}
