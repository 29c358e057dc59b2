use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Parses "p/q", "p" or a terminating decimal such as "-0.125".
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let t = s.trim();
    let bad = || Error::Parse(format!("not a rational: {s:?}"));
    if let Some((p, q)) = t.split_once('/') {
        let p = BigInt::from_str(p.trim()).map_err(|_| bad())?;
        let q = BigInt::from_str(q.trim()).map_err(|_| bad())?;
        if q.is_zero() {
            return Err(bad());
        }
        return Ok(BigRational::new(p, q));
    }
    if let Some((int, frac)) = t.split_once('.') {
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let neg = int.starts_with('-');
        let int_part = if int.is_empty() || int == "-" || int == "+" {
            BigInt::zero()
        } else {
            BigInt::from_str(int).map_err(|_| bad())?.abs()
        };
        let scale = BigInt::from(10).pow(frac.len() as u32);
        let frac_part = BigInt::from_str(frac).map_err(|_| bad())?;
        let mag = BigRational::new(int_part * &scale + frac_part, scale);
        return Ok(if neg { -mag } else { mag });
    }
    BigInt::from_str(t).map(BigRational::from_integer).map_err(|_| bad())
}

/// "p/q" in lowest terms, or "p" for integers.
pub fn format_rational(q: &BigRational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

pub fn rat(p: i64, q: i64) -> BigRational {
    BigRational::new(p.into(), q.into())
}

/// A point or direction with exact rational coordinates.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RationalVector(pub Vec<BigRational>);

impl RationalVector {
    pub fn new(coords: Vec<BigRational>) -> RationalVector {
        RationalVector(coords)
    }

    pub fn zero(dim: usize) -> RationalVector {
        RationalVector(vec![BigRational::zero(); dim])
    }

    pub fn from_ints(coords: &[i64]) -> RationalVector {
        RationalVector(coords.iter().map(|&c| BigRational::from_integer(c.into())).collect())
    }

    pub fn from_bigints(coords: &[BigInt], den: &BigInt) -> RationalVector {
        RationalVector(coords.iter().map(|c| BigRational::new(c.clone(), den.clone())).collect())
    }

    pub fn parse(coords: &[&str]) -> Result<RationalVector> {
        coords.iter().map(|s| parse_rational(s)).collect::<Result<_>>().map(RationalVector)
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[BigRational] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn dot(&self, other: &RationalVector) -> BigRational {
        debug_assert_eq!(self.dim(), other.dim());
        self.0.iter().zip(&other.0).map(|(a, b)| a * b).sum()
    }

    pub fn norm_squared(&self) -> BigRational {
        self.dot(self)
    }

    pub fn scale(&self, t: &BigRational) -> RationalVector {
        RationalVector(self.0.iter().map(|a| a * t).collect())
    }

    pub fn cross(&self, other: &RationalVector) -> RationalVector {
        assert_eq!(self.dim(), 3, "cross product needs dimension 3");
        let (a, b) = (&self.0, &other.0);
        RationalVector(vec![
            &a[1] * &b[2] - &a[2] * &b[1],
            &a[2] * &b[0] - &a[0] * &b[2],
            &a[0] * &b[1] - &a[1] * &b[0],
        ])
    }

    /// Quarter turn counterclockwise in the plane.
    pub fn rotate90(&self) -> RationalVector {
        assert_eq!(self.dim(), 2, "rotation needs dimension 2");
        RationalVector(vec![-self.0[1].clone(), self.0[0].clone()])
    }

    /// Least common multiple of the coordinate denominators.
    pub fn common_denominator(&self) -> BigInt {
        self.0.iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()))
    }

    /// Coordinates times `den`, which must clear every denominator.
    pub fn scaled_integers(&self, den: &BigInt) -> Vec<BigInt> {
        self.0
            .iter()
            .map(|q| {
                let (quot, rem) = (q.numer() * den).div_rem(q.denom());
                debug_assert!(rem.is_zero());
                quot
            })
            .collect()
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.0.iter().map(format_rational).collect()
    }

    pub fn to_f64(&self) -> Vec<f64> {
        self.0.iter().map(crate::real::rational_to_f64).collect()
    }
}

/// lcm of denominators over a set of vectors.
pub fn common_denominator<'a>(vs: impl IntoIterator<Item = &'a RationalVector>) -> BigInt {
    vs.into_iter().fold(BigInt::one(), |acc, v| acc.lcm(&v.common_denominator()))
}

impl Add for &RationalVector {
    type Output = RationalVector;
    fn add(self, other: &RationalVector) -> RationalVector {
        debug_assert_eq!(self.dim(), other.dim());
        RationalVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &RationalVector {
    type Output = RationalVector;
    fn sub(self, other: &RationalVector) -> RationalVector {
        debug_assert_eq!(self.dim(), other.dim());
        RationalVector(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &RationalVector {
    type Output = RationalVector;
    fn neg(self) -> RationalVector {
        RationalVector(self.0.iter().map(|a| -a).collect())
    }
}

impl fmt::Debug for RationalVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.to_strings().join(", "))
    }
}

impl fmt::Display for RationalVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl Serialize for RationalVector {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_strings().serialize(s)
    }
}

impl<'de> Deserialize<'de> for RationalVector {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = Vec::<serde_json::Value>::deserialize(d)?;
        raw.iter()
            .map(|v| match v {
                serde_json::Value::String(s) => parse_rational(s),
                serde_json::Value::Number(n) => parse_rational(&n.to_string()),
                other => Err(Error::Parse(format!("not a rational: {other}"))),
            })
            .collect::<Result<Vec<_>>>()
            .map(RationalVector)
            .map_err(serde::de::Error::custom)
    }
}
