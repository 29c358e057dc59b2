//! Certified real numbers: closed intervals with fixed-point endpoints.
//!
//! A [`Real`] holds integers `lo <= hi` and a binary precision `p`, standing
//! for the interval `[lo / 2^p, hi / 2^p]`. Every operation rounds outward,
//! so the true value of an expression is always inside the interval
//! computed for it.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::sync::{Mutex, OnceLock};

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Decimal digits used when no precision is given explicitly.
pub const DEFAULT_DIGITS: u32 = 50;

/// Environment variable overriding [`DEFAULT_DIGITS`].
pub const PRECISION_ENV: &str = "VALHARM_PRECISION";

const GUARD_BITS: u32 = 40;

/// Working precision in decimal digits: `VALHARM_PRECISION` if set to a
/// positive integer, else 50.
pub fn default_digits() -> u32 {
    std::env::var(PRECISION_ENV)
        .ok()
        .and_then(|s| s.trim().parse::<u32>().ok())
        .filter(|&d| d > 0)
        .unwrap_or(DEFAULT_DIGITS)
}

/// Binary precision carrying `digits` decimal digits plus guard bits.
pub fn bits_for_digits(digits: u32) -> u32 {
    (f64::from(digits) * std::f64::consts::LOG2_10).ceil() as u32 + GUARD_BITS
}

/// Binary precision for [`default_digits`].
pub fn default_bits() -> u32 {
    bits_for_digits(default_digits())
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Real {
    lo: BigInt,
    hi: BigInt,
    prec: u32,
}

fn pow2(p: u32) -> BigInt {
    BigInt::one() << p
}

fn floor_div(a: &BigInt, b: &BigInt) -> BigInt {
    a.div_floor(b)
}

fn ceil_div(a: &BigInt, b: &BigInt) -> BigInt {
    -((-a).div_floor(b))
}

fn ceil_sqrt(x: &BigInt) -> BigInt {
    let s = x.sqrt();
    if &(&s * &s) < x {
        s + 1
    } else {
        s
    }
}

fn ceil_root(x: &BigInt, k: u32) -> BigInt {
    let s = x.nth_root(k);
    if &s.pow(k) < x {
        s + 1
    } else {
        s
    }
}

impl Real {
    pub fn precision(&self) -> u32 {
        self.prec
    }

    pub fn from_integer(x: impl Into<BigInt>, prec: u32) -> Real {
        let v = x.into() << prec;
        Real {
            lo: v.clone(),
            hi: v,
            prec,
        }
    }

    pub fn zero(prec: u32) -> Real {
        Real::from_integer(0, prec)
    }

    pub fn from_rational(q: &BigRational, prec: u32) -> Real {
        let num = q.numer() << prec;
        Real {
            lo: floor_div(&num, q.denom()),
            hi: ceil_div(&num, q.denom()),
            prec,
        }
    }

    /// The interval spanned by two rationals, in either order.
    pub fn between(a: &BigRational, b: &BigRational, prec: u32) -> Real {
        Real::from_rational(a, prec).hull(&Real::from_rational(b, prec))
    }

    /// Smallest interval containing both.
    pub fn hull(&self, other: &Real) -> Real {
        let (a, b) = self.aligned(other);
        Real {
            lo: a.lo.clone().min(b.lo.clone()),
            hi: a.hi.clone().max(b.hi.clone()),
            prec: a.prec,
        }
    }

    /// Common part of two enclosures of the same quantity, if any.
    pub fn intersect(&self, other: &Real) -> Option<Real> {
        let (a, b) = self.aligned(other);
        let lo = a.lo.clone().max(b.lo.clone());
        let hi = a.hi.clone().min(b.hi.clone());
        (lo <= hi).then_some(Real { lo, hi, prec: a.prec })
    }

    pub fn intersects(&self, other: &Real) -> bool {
        self.intersect(other).is_some()
    }

    fn with_prec(&self, prec: u32) -> Real {
        match prec.cmp(&self.prec) {
            Ordering::Equal => self.clone(),
            Ordering::Greater => {
                let s = prec - self.prec;
                Real {
                    lo: &self.lo << s,
                    hi: &self.hi << s,
                    prec,
                }
            }
            Ordering::Less => {
                let d = pow2(self.prec - prec);
                Real {
                    lo: floor_div(&self.lo, &d),
                    hi: ceil_div(&self.hi, &d),
                    prec,
                }
            }
        }
    }

    fn aligned(&self, other: &Real) -> (Real, Real) {
        let p = self.prec.max(other.prec);
        (self.with_prec(p), other.with_prec(p))
    }

    pub fn lo(&self) -> BigRational {
        BigRational::new(self.lo.clone(), pow2(self.prec))
    }

    pub fn hi(&self) -> BigRational {
        BigRational::new(self.hi.clone(), pow2(self.prec))
    }

    pub fn width(&self) -> BigRational {
        BigRational::new(&self.hi - &self.lo, pow2(self.prec))
    }

    /// Midpoint as a float, for display and diagnostics only.
    pub fn to_f64(&self) -> f64 {
        let mid = BigRational::new(&self.lo + &self.hi, pow2(self.prec + 1));
        rational_to_f64(&mid)
    }

    pub fn contains(&self, q: &BigRational) -> bool {
        &self.lo() <= q && q <= &self.hi()
    }

    /// Certainly > 0.
    pub fn is_positive(&self) -> bool {
        self.lo.is_positive()
    }

    /// Certainly >= 0.
    pub fn is_nonnegative(&self) -> bool {
        !self.lo.is_negative()
    }

    /// Certainly < 0.
    pub fn is_negative(&self) -> bool {
        self.hi.is_negative()
    }

    /// Certainly `self < other`.
    pub fn certainly_lt(&self, other: &Real) -> bool {
        let (a, b) = self.aligned(other);
        a.hi < b.lo
    }

    pub fn certainly_le(&self, other: &Real) -> bool {
        let (a, b) = self.aligned(other);
        a.hi <= b.lo
    }

    pub fn neg(&self) -> Real {
        Real {
            lo: -&self.hi,
            hi: -&self.lo,
            prec: self.prec,
        }
    }

    pub fn add(&self, other: &Real) -> Real {
        let (a, b) = self.aligned(other);
        Real {
            lo: a.lo + b.lo,
            hi: a.hi + b.hi,
            prec: a.prec,
        }
    }

    pub fn sub(&self, other: &Real) -> Real {
        self.add(&other.neg())
    }

    pub fn add_rational(&self, q: &BigRational) -> Real {
        self.add(&Real::from_rational(q, self.prec))
    }

    pub fn mul(&self, other: &Real) -> Real {
        let (a, b) = self.aligned(other);
        let products = [&a.lo * &b.lo, &a.lo * &b.hi, &a.hi * &b.lo, &a.hi * &b.hi];
        let min = products.iter().min().expect("four products");
        let max = products.iter().max().expect("four products");
        let d = pow2(a.prec);
        Real {
            lo: floor_div(min, &d),
            hi: ceil_div(max, &d),
            prec: a.prec,
        }
    }

    pub fn mul_rational(&self, q: &BigRational) -> Real {
        let scale = |x: &BigInt, up: bool| {
            let num = x * q.numer();
            if up {
                ceil_div(&num, q.denom())
            } else {
                floor_div(&num, q.denom())
            }
        };
        let a = (scale(&self.lo, false), scale(&self.lo, true));
        let b = (scale(&self.hi, false), scale(&self.hi, true));
        Real {
            lo: a.0.clone().min(b.0.clone()),
            hi: a.1.max(b.1),
            prec: self.prec,
        }
    }

    pub fn mul_int(&self, k: i64) -> Real {
        self.mul_rational(&BigRational::from_integer(k.into()))
    }

    /// Quotient; `None` if the divisor interval contains zero.
    pub fn div(&self, other: &Real) -> Option<Real> {
        let (a, b) = self.aligned(other);
        if !b.lo.is_positive() && !b.hi.is_negative() {
            return None;
        }
        let mut lo: Option<BigInt> = None;
        let mut hi: Option<BigInt> = None;
        for x in [&a.lo, &a.hi] {
            for y in [&b.lo, &b.hi] {
                let num = x << a.prec;
                let f = floor_div(&num, y);
                let c = ceil_div(&num, y);
                lo = Some(lo.map_or(f.clone(), |l| l.min(f)));
                hi = Some(hi.map_or(c.clone(), |h| h.max(c)));
            }
        }
        Some(Real {
            lo: lo.expect("set"),
            hi: hi.expect("set"),
            prec: a.prec,
        })
    }

    /// Square root of a quantity known to be non-negative; a negative
    /// lower endpoint is clamped to zero.
    pub fn sqrt(&self) -> Real {
        self.nth_root(2)
    }

    /// k-th root of a quantity known to be non-negative.
    pub fn nth_root(&self, k: u32) -> Real {
        assert!(k >= 1);
        assert!(!self.hi.is_negative(), "root of a negative quantity");
        let lo = self.lo.clone().max(BigInt::zero());
        let shift = self.prec * (k - 1);
        let lo = (&lo << shift).nth_root(k);
        let hi = ceil_root(&(&self.hi << shift), k);
        Real {
            lo,
            hi,
            prec: self.prec,
        }
    }

    /// sqrt of an exact non-negative rational.
    pub fn sqrt_rational(q: &BigRational, prec: u32) -> Real {
        assert!(!q.is_negative(), "sqrt of a negative rational");
        // floor(sqrt(n/d) 2^p) = floor(sqrt(n d 2^{2p}) / d).
        let nd = (q.numer() * q.denom()) << (2 * prec);
        let d = q.denom();
        let lo = floor_div(&nd.sqrt(), d);
        let hi = ceil_div(&ceil_sqrt(&nd), d);
        Real { lo, hi, prec }
    }

    /// k-th root of an exact non-negative rational.
    pub fn root_rational(q: &BigRational, k: u32, prec: u32) -> Real {
        assert!(!q.is_negative(), "root of a negative rational");
        let d = q.denom();
        // (n/d)^(1/k) = (n d^(k-1))^(1/k) / d.
        let radicand = (q.numer() * d.pow(k - 1)) << (k * prec);
        let lo = floor_div(&radicand.nth_root(k), d);
        let hi = ceil_div(&ceil_root(&radicand, k), d);
        Real { lo, hi, prec }
    }

    pub fn pow(&self, k: u32) -> Real {
        let mut out = Real::from_integer(1, self.prec);
        for _ in 0..k {
            out = out.mul(self);
        }
        out
    }

    /// π, cached per precision.
    pub fn pi(prec: u32) -> Real {
        static CACHE: OnceLock<Mutex<HashMap<u32, Real>>> = OnceLock::new();
        let cache = CACHE.get_or_init(Default::default);
        if let Some(p) = cache.lock().expect("pi cache poisoned").get(&prec) {
            return p.clone();
        }
        // Machin: π = 16 atan(1/5) - 4 atan(1/239), worked at extra precision.
        let work = prec + 16;
        let a = atan_small_rational(1, 5, work);
        let b = atan_small_rational(1, 239, work);
        let pi = a.mul_int(16).sub(&b.mul_int(4)).with_prec(prec);
        cache
            .lock()
            .expect("pi cache poisoned")
            .insert(prec, pi.clone());
        pi
    }

    /// Enclosure of atan over the interval.
    pub fn atan(&self) -> Real {
        let work = self.prec + 16;
        let lo = atan_point(&self.lo, self.prec, work);
        let hi = atan_point(&self.hi, self.prec, work);
        Real {
            lo: lo.with_prec(self.prec).lo,
            hi: hi.with_prec(self.prec).hi,
            prec: self.prec,
        }
    }

    /// The angle atan2(y, x) in [0, π] for y >= 0.
    ///
    /// `y` must be certainly positive unless `x` is certainly non-zero;
    /// callers handle exactly parallel directions before getting here.
    pub fn angle(y: &Real, x: &Real) -> Real {
        let prec = y.prec.max(x.prec);
        let (y, x) = (y.with_prec(prec), x.with_prec(prec));
        let pi = Real::pi(prec);
        if x.certainly_lt(&y.neg()) || y.certainly_lt(&x) {
            // |x| clearly dominates: the ratio y/|x| is below one.
            let ratio = y.div(&x.abs()).expect("x bounded away from zero").atan();
            if x.is_positive() {
                ratio
            } else {
                pi.sub(&ratio)
            }
        } else if y.is_positive() {
            let half_pi = pi.mul_rational(&BigRational::new(1.into(), 2.into()));
            half_pi.sub(&x.div(&y).expect("y positive").atan())
        } else {
            Real::zero(prec).hull(&pi)
        }
    }

    pub fn abs(&self) -> Real {
        if !self.lo.is_negative() {
            self.clone()
        } else if !self.hi.is_positive() {
            self.neg()
        } else {
            Real {
                lo: BigInt::zero(),
                hi: (-&self.lo).max(self.hi.clone()),
                prec: self.prec,
            }
        }
    }

    /// Lower endpoint as a decimal string with `digits` fractional digits,
    /// rounded down.
    pub fn lo_decimal(&self, digits: u32) -> String {
        decimal(&self.lo, self.prec, digits, false)
    }

    /// Upper endpoint, rounded up.
    pub fn hi_decimal(&self, digits: u32) -> String {
        decimal(&self.hi, self.prec, digits, true)
    }

    /// Relative width (hi - lo) / |mid|; `None` when the midpoint is zero.
    pub fn relative_width(&self) -> Option<BigRational> {
        let mid = (&self.lo + &self.hi).abs();
        if mid.is_zero() {
            return None;
        }
        Some(BigRational::new(2 * (&self.hi - &self.lo), mid))
    }
}

fn decimal(x: &BigInt, prec: u32, digits: u32, up: bool) -> String {
    let scaled = x * BigInt::from(10).pow(digits);
    let d = pow2(prec);
    let v = if up { ceil_div(&scaled, &d) } else { floor_div(&scaled, &d) };
    let neg = v.sign() == Sign::Minus;
    let s = v.abs().to_string();
    let digits = digits as usize;
    let padded = if s.len() <= digits {
        format!("{}{}", "0".repeat(digits + 1 - s.len()), s)
    } else {
        s
    };
    let (int, frac) = padded.split_at(padded.len() - digits);
    let sign = if neg { "-" } else { "" };
    if digits == 0 {
        format!("{sign}{int}")
    } else {
        format!("{sign}{int}.{frac}")
    }
}

pub(crate) fn rational_to_f64(q: &BigRational) -> f64 {
    use num_traits::ToPrimitive;
    q.to_f64().unwrap_or_else(|| {
        let n = q.numer().bits() as i64;
        let d = q.denom().bits() as i64;
        let shift = (n - d - 60).max(0) as u32;
        let approx = (q.numer() >> shift) / q.denom();
        approx.to_f64().unwrap_or(f64::NAN) * 2f64.powi(shift as i32)
    })
}

/// atan(num/den) for |num/den| <= 1/5 by the plain alternating series.
fn atan_small_rational(num: i64, den: i64, prec: u32) -> Real {
    let x = BigRational::new(num.into(), den.into());
    let x_real = Real::from_rational(&x, prec);
    atan_series(&x_real, &x.abs(), prec)
}

/// Alternating series for atan on an interval whose magnitude is at most
/// `bound < 1`, including a rigorous tail term.
fn atan_series(x: &Real, bound: &BigRational, prec: u32) -> Real {
    let x2 = x.mul(x);
    let mut term = x.clone();
    let mut sum = Real::zero(prec);
    let mut k: i64 = 0;
    let eps = BigRational::new(BigInt::one(), pow2(prec + 2));
    let b2 = bound * bound;
    let mut bound_pow = bound.clone();
    loop {
        let t = term.mul_rational(&BigRational::new(1.into(), (2 * k + 1).into()));
        sum = if k % 2 == 0 { sum.add(&t) } else { sum.sub(&t) };
        k += 1;
        term = term.mul(&x2);
        bound_pow = &bound_pow * &b2;
        let tail = &bound_pow / BigRational::from_integer((2 * k + 1).into());
        if tail < eps {
            let slack = Real::between(&-tail.clone(), &tail, prec);
            return sum.add(&slack);
        }
    }
}

/// Enclosure of atan(v / 2^vprec) at precision `prec`.
fn atan_point(v: &BigInt, vprec: u32, prec: u32) -> Real {
    let x = Real {
        lo: v.clone(),
        hi: v.clone(),
        prec: vprec,
    }
    .with_prec(prec);
    let one = Real::from_integer(1, prec);
    if v.abs() > pow2(vprec) {
        // atan x = sign(x) π/2 - atan(1/x).
        let inv = one.div(&x).expect("|x| > 1");
        let half_pi = Real::pi(prec).mul_rational(&BigRational::new(1.into(), 2.into()));
        let inner = atan_reduced(&inv, prec);
        return if v.is_positive() {
            half_pi.sub(&inner)
        } else {
            half_pi.neg().sub(&inner)
        };
    }
    atan_reduced(&x, prec)
}

/// atan on an interval inside [-1, 1]: three halvings of the argument
/// bring it below 0.1, then the series.
fn atan_reduced(x: &Real, prec: u32) -> Real {
    let one = Real::from_integer(1, prec);
    let mut y = x.clone();
    for _ in 0..3 {
        let root = one.add(&y.mul(&y)).sqrt();
        y = y.div(&one.add(&root)).expect("denominator >= 1");
    }
    let bound = BigRational::new(1.into(), 10.into());
    debug_assert!(y.hi() <= bound && y.lo() >= -bound.clone());
    atan_series(&y, &bound, prec).mul_int(8)
}

impl fmt::Debug for Real {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lo_decimal(20), self.hi_decimal(20))
    }
}

impl fmt::Display for Real {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:.15}", self.to_f64())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    const P: u32 = 220;

    #[test]
    fn pi_digits() {
        let pi = Real::pi(P);
        let s = pi.lo_decimal(50);
        assert_eq!(s, "3.14159265358979323846264338327950288419716939937510");
        assert!(pi.width() < q(1, 1_000_000_000_000) * q(1, 1_000_000_000_000) * q(1, 1_000_000_000_000));
    }

    #[test]
    fn square_roots() {
        let two = Real::sqrt_rational(&q(2, 1), P);
        assert_eq!(two.lo_decimal(40), "1.4142135623730950488016887242096980785696");
        let sq = two.mul(&two);
        assert!(sq.contains(&q(2, 1)));
        let r = Real::root_rational(&q(64, 729), 6, P);
        assert!(r.contains(&q(2, 3)));
        let r = Real::from_rational(&q(64, 729), P).nth_root(6);
        assert!(r.contains(&q(2, 3)));
    }

    #[test]
    fn arctangents() {
        // atan(1) = π/4.
        let one = Real::from_integer(1, P);
        let quarter = Real::pi(P).mul_rational(&q(1, 4));
        assert!(one.atan().intersects(&quarter));
        // atan(sqrt 3) = π/3.
        let r3 = Real::sqrt_rational(&q(3, 1), P);
        assert!(r3.atan().intersects(&Real::pi(P).mul_rational(&q(1, 3))));
        // atan(-7) + atan(1/7) = -π/2 + 2 atan(1/7).
        let a = Real::from_integer(-7, P).atan();
        assert!(a.to_f64() + 1.4288992721907328 < 1e-12);
    }

    #[test]
    fn angles() {
        let pi = Real::pi(P);
        let right = Real::angle(&Real::from_integer(1, P), &Real::zero(P));
        assert!(right.intersects(&pi.mul_rational(&q(1, 2))));
        let obtuse = Real::angle(&Real::from_integer(1, P), &Real::from_integer(-1, P));
        assert!(obtuse.intersects(&pi.mul_rational(&q(3, 4))));
        let small = Real::angle(&Real::from_integer(1, P), &Real::from_integer(1000, P));
        assert!((small.to_f64() - 0.000999999666666867).abs() < 1e-15);
        let wide = Real::angle(&Real::from_integer(1, P), &Real::from_integer(-1000, P));
        assert!((wide.to_f64() - (std::f64::consts::PI - 0.000999999666666867)).abs() < 1e-12);
    }

    #[test]
    fn decimal_rounding_is_outward() {
        let third = Real::from_rational(&q(1, 3), P);
        assert_eq!(third.lo_decimal(5), "0.33333");
        assert_eq!(third.hi_decimal(5), "0.33334");
        let m = third.neg();
        assert_eq!(m.lo_decimal(5), "-0.33334");
        assert_eq!(m.hi_decimal(5), "-0.33333");
    }

    #[test]
    fn division_by_straddling_interval_fails() {
        let a = Real::from_integer(1, P);
        let z = Real::between(&q(-1, 10), &q(1, 10), P);
        assert!(a.div(&z).is_none());
    }

    #[test]
    fn digits_to_bits() {
        assert!(bits_for_digits(50) >= 166 + 40);
    }
}
