//! Exact rational convex geometry in the plane and in space: hulls,
//! Minkowski sums, volumes and mixed volumes, projection bodies,
//! quermassintegrals, intrinsic volumes and Steiner points.
//!
//! Everything rational is computed exactly. Quantities involving π or
//! square roots are returned as certified intervals ([`Real`]), and the
//! unit ball enters only through inner/outer polytopal approximations
//! ([`BallApprox`]).
//!
//! ```
//! use valharm_geometry::{mixed_volume_of, projection_body, rat, Polytope};
//!
//! let cube = Polytope::unit_cube(3);
//! assert_eq!(cube.volume(), rat(1, 1));
//! let pi = projection_body(&cube)?;
//! assert_eq!(pi.to_polytope(), Polytope::centered_cube(3, &rat(1, 1)));
//! let z = pi.to_polytope();
//! assert_eq!(mixed_volume_of(&[&cube, &cube, &z])?, rat(2, 1));
//! # Ok::<(), valharm_geometry::Error>(())
//! ```

mod ball;
mod derived;
mod error;
mod hull;
pub mod json;
mod mixed;
mod polytope;
mod quermass;
mod random;
mod rational;
mod real;
mod zonotope;

pub use ball::{BallApprox, GRID_BITS, MAX_LEVEL};
pub use derived::{derived_projection, pi1, pi1_constant, DerivedBody, DerivedProjection};
pub use error::{Error, Result};
pub use mixed::{
    mixed_area_vectors, mixed_volume, mixed_volume_area_route, mixed_volume_facets, mixed_volume_of,
    mixed_volume_two_balls, mixed_volume_with_ball, mixed_volume_with_exact_ball, BallSide, Body, MixedVolumeSpec,
};
pub use polytope::{convex_hull, Edge, Facet, HullKind, Polytope};
pub use quermass::{
    edge_curvature_sum, intrinsic_volume, kappa, mixed_quermass, quermassintegral, rational_sqrt, steiner_point,
    surface_area, zonotope_w2, RealJson, Value,
};
pub use random::{random_polytope, random_polytope_from, RANDOM_GRID_BITS};
pub use rational::{common_denominator, format_rational, parse_rational, rat, RationalVector};
pub use real::{bits_for_digits, default_bits, default_digits, Real, DEFAULT_DIGITS, PRECISION_ENV};
pub use zonotope::{projection_body, Zonotope};

/// Crate version, recorded in verification reports.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");
