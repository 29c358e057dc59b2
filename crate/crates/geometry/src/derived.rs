//! The derived projection operators Π_1 and Π_2 = Π in space.
//!
//! Π_1 P has support function u ↦ c · V(P, B, [0, u]) with c = 3/π, the
//! constant for which Π_1 B = B. Since V(P, B, [0, u]) = (1/6) Σ |u·MA|
//! over the mixed area vectors MA(P, B), Π_1 P is c times the zonotope
//! generated by MA(P, B)/3. With B replaced by the ball approximation this
//! gives a zonotope Z with c·Z ⊆ Π_1 P ⊆ (c / r_lo)·Z.

use num_rational::BigRational;

use crate::ball::BallApprox;
use crate::error::{Error, Result};
use crate::mixed::mixed_area_vectors;
use crate::polytope::Polytope;
use crate::rational::RationalVector;
use crate::real::Real;
use crate::zonotope::{projection_body, Zonotope};

/// The normalising constant 3/π of Π_1.
pub fn pi1_constant(prec: u32) -> Real {
    Real::from_integer(3, prec).div(&Real::pi(prec)).expect("π > 0")
}

/// A body known up to homothety: it contains `factor.lo() · base` and is
/// contained in `factor.hi() · base`.
#[derive(Debug, Clone)]
pub struct DerivedBody {
    pub base: Zonotope,
    pub factor: Real,
    pub level: u32,
}

impl DerivedBody {
    /// Enclosure of the support function in direction u.
    pub fn support(&self, u: &RationalVector) -> Real {
        self.factor.mul_rational(&self.base.support(u))
    }
}

#[derive(Debug, Clone)]
pub enum DerivedProjection {
    Exact(Zonotope),
    Enclosed(DerivedBody),
}

/// Π_i P for i ∈ {1, 2}; i = 2 is the projection body.
pub fn derived_projection(p: &Polytope, i: usize, level: u32, prec: u32) -> Result<DerivedProjection> {
    match i {
        2 => projection_body(p).map(DerivedProjection::Exact),
        1 => pi1(p, level, prec).map(DerivedProjection::Enclosed),
        _ => Err(Error::OutOfRange {
            what: "derived projection index",
            value: i as i64,
        }),
    }
}

/// Π_1 P at ball level `level`.
pub fn pi1(p: &Polytope, level: u32, prec: u32) -> Result<DerivedBody> {
    if p.dim() != 3 {
        return Err(Error::UnsupportedDimension(p.dim()));
    }
    let ball = BallApprox::shared(level)?;
    let third = BigRational::new(1.into(), 3.into());
    let gens = mixed_area_vectors(p, ball.inner())?
        .iter()
        .map(|v| v.scale(&third))
        .collect();
    let base = Zonotope::centered(gens, 3)?.merged();
    let c = pi1_constant(prec);
    let upper = c.mul_rational(&(BigRational::from_integer(1.into()) / ball.r_lo()));
    Ok(DerivedBody {
        base,
        factor: c.hull(&upper),
        level,
    })
}
