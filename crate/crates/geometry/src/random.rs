use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::polytope::Polytope;
use crate::rational::RationalVector;

/// Random coordinates are multiples of 2^-6.
pub const RANDOM_GRID_BITS: u32 = 6;

const MAX_ATTEMPTS: usize = 1000;

/// Hull of `k` random dyadic points in [-bound, bound]³, redrawn until
/// full-dimensional. Deterministic in `seed`.
pub fn random_polytope(seed: u64, k: usize, bound: &BigRational) -> Result<Polytope> {
    random_polytope_from(&mut ChaCha8Rng::seed_from_u64(seed), k, bound)
}

/// As [`random_polytope`], drawing from the given generator.
pub fn random_polytope_from<R: Rng>(rng: &mut R, k: usize, bound: &BigRational) -> Result<Polytope> {
    if k < 4 {
        return Err(Error::OutOfRange {
            what: "random polytope point count",
            value: k as i64,
        });
    }
    let grid = BigInt::from(1) << RANDOM_GRID_BITS;
    let steps = (bound.abs() * BigRational::from_integer(grid.clone()))
        .floor()
        .to_integer()
        .to_i64()
        .filter(|&s| s > 0)
        .ok_or(Error::OutOfRange {
            what: "random polytope bound (in units of 1/64)",
            value: 0,
        })?;
    for _ in 0..MAX_ATTEMPTS {
        let pts: Vec<RationalVector> = (0..k)
            .map(|_| {
                RationalVector(
                    (0..3)
                        .map(|_| BigRational::new(rng.random_range(-steps..=steps).into(), grid.clone()))
                        .collect(),
                )
            })
            .collect();
        let p = Polytope::new(pts)?;
        if p.is_full_dimensional() {
            return Ok(p);
        }
    }
    Err(Error::Degenerate("no full-dimensional sample".into()))
}
