//! Mixed volumes by three routes: polarization over volumes of Minkowski
//! sums, the facet formula V(K,..,K,L) = (1/n) Σ_f h(L, w_f), and the mixed
//! area measure V(K,L,M) = (1/3) Σ h(M, MA(K,L)) in space.

use std::borrow::Cow;
use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use crate::ball::{BallApprox, GRID_BITS};
use crate::error::{Error, Result};
use crate::polytope::Polytope;
use crate::rational::{common_denominator, RationalVector};
use crate::real::Real;
use crate::zonotope::{Accumulator, Zonotope};

/// Which side of a ball approximation stands in for the ball.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BallSide {
    Inner,
    Outer,
}

/// One argument of a mixed volume.
#[derive(Debug, Clone, Copy)]
pub enum Body<'a> {
    Polytope(&'a Polytope),
    Zonotope(&'a Zonotope),
    Ball(&'a BallApprox, BallSide),
}

impl<'a> Body<'a> {
    pub fn dim(&self) -> usize {
        match self {
            Body::Polytope(p) => p.dim(),
            Body::Zonotope(z) => z.dim(),
            Body::Ball(..) => 3,
        }
    }

    pub fn to_polytope(&self) -> Cow<'a, Polytope> {
        match *self {
            Body::Polytope(p) => Cow::Borrowed(p),
            Body::Zonotope(z) => Cow::Owned(z.to_polytope()),
            Body::Ball(b, BallSide::Inner) => Cow::Borrowed(b.inner()),
            Body::Ball(b, BallSide::Outer) => Cow::Borrowed(b.outer()),
        }
    }

    pub fn support(&self, u: &RationalVector) -> BigRational {
        match self {
            Body::Polytope(p) => p.support(u),
            Body::Zonotope(z) => z.support(u),
            Body::Ball(b, BallSide::Inner) => b.inner_support(u),
            Body::Ball(b, BallSide::Outer) => b.outer_support(u),
        }
    }
}

/// The ordered argument list of V(K_1, ..., K_n).
#[derive(Debug, Clone)]
pub struct MixedVolumeSpec<'a> {
    pub bodies: Vec<Body<'a>>,
}

impl<'a> MixedVolumeSpec<'a> {
    pub fn new(bodies: Vec<Body<'a>>) -> MixedVolumeSpec<'a> {
        MixedVolumeSpec { bodies }
    }
}

/// V(K_1, ..., K_n) by polarization; balls are replaced by the chosen side.
pub fn mixed_volume(spec: &MixedVolumeSpec) -> Result<BigRational> {
    let polys: Vec<Cow<Polytope>> = spec.bodies.iter().map(Body::to_polytope).collect();
    let refs: Vec<&Polytope> = polys.iter().map(|p| p.as_ref()).collect();
    mixed_volume_of(&refs)
}

/// V(K_1, ..., K_n) = (1/n!) Σ_{∅≠S} (-1)^{n-|S|} vol(Σ_{i∈S} K_i).
pub fn mixed_volume_of(bodies: &[&Polytope]) -> Result<BigRational> {
    let n = bodies.first().ok_or(Error::Arity { expected: 2, got: 0 })?.dim();
    if bodies.len() != n {
        return Err(Error::Arity {
            expected: n,
            got: bodies.len(),
        });
    }
    if let Some(b) = bodies.iter().find(|b| b.dim() != n) {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: b.dim(),
        });
    }
    // Repeated arguments collapse to multiplicities, so subsets with the
    // same multiset of bodies share one volume.
    let mut distinct: Vec<&Polytope> = Vec::new();
    let slot: Vec<usize> = bodies
        .iter()
        .map(|b| {
            distinct.iter().position(|d| d == b).unwrap_or_else(|| {
                distinct.push(b);
                distinct.len() - 1
            })
        })
        .collect();
    let mut cache: HashMap<Vec<u32>, BigRational> = HashMap::new();
    let mut total = BigRational::zero();
    for mask in 1u32..(1 << n) {
        let mut counts = vec![0u32; distinct.len()];
        for (i, &s) in slot.iter().enumerate() {
            if mask & (1 << i) != 0 {
                counts[s] += 1;
            }
        }
        let vol = match cache.get(&counts) {
            Some(v) => v.clone(),
            None => {
                let v = volume_of_combination(&distinct, &counts);
                cache.insert(counts.clone(), v.clone());
                v
            }
        };
        if (n as u32 - mask.count_ones()) % 2 == 0 {
            total += vol;
        } else {
            total -= vol;
        }
    }
    let factorial: u32 = (1..=n as u32).product();
    Ok(total / BigRational::from_integer(factorial.into()))
}

fn volume_of_combination(bodies: &[&Polytope], counts: &[u32]) -> BigRational {
    let used: Vec<(usize, u32)> = counts.iter().copied().enumerate().filter(|&(_, c)| c > 0).collect();
    let dim = bodies[0].dim() as u32;
    if let [(j, c)] = used[..] {
        return bodies[j].volume() * BigRational::from_integer(BigInt::from(c).pow(dim));
    }
    let mut acc: Option<Polytope> = None;
    for (j, c) in used {
        let part = if c == 1 {
            bodies[j].clone()
        } else {
            bodies[j].scale(&BigRational::from_integer(c.into()))
        };
        acc = Some(match acc {
            None => part,
            Some(a) => a.minkowski_sum(&part).expect("dimensions checked"),
        });
    }
    acc.expect("non-empty subset").volume()
}

/// V(K, ..., K, L) = (1/n) Σ_f h(L, w_f) over the facets of K.
pub fn mixed_volume_facets(k: &Polytope, l: Body) -> Result<BigRational> {
    if l.dim() != k.dim() {
        return Err(Error::DimensionMismatch {
            expected: k.dim(),
            got: l.dim(),
        });
    }
    let total: BigRational = k.facets().iter().map(|f| l.support(&f.area)).sum();
    Ok(total / BigRational::from_integer(k.dim().into()))
}

/// Mixed area vectors of K and L in space: for each facet normal ν of
/// K + L, (A_{K+L}(ν) - A_K(ν) - A_L(ν)) / 2, dropping zeros.
pub fn mixed_area_vectors(k: &Polytope, l: &Polytope) -> Result<Vec<RationalVector>> {
    if k.dim() != 3 || l.dim() != 3 {
        return Err(Error::UnsupportedDimension(k.dim().min(l.dim())));
    }
    let sum = k.minkowski_sum(l)?;
    let half = BigRational::new(1.into(), 2.into());
    let mut out = Vec::new();
    for f in sum.facets() {
        let mut v = f.area.clone();
        for part in [k, l] {
            if let Some(a) = part.area_vector_for(&f.normal) {
                v = &v - a;
            }
        }
        if !v.is_zero() {
            out.push(v.scale(&half));
        }
    }
    Ok(out)
}

/// V(K, L, M) = (1/3) Σ h(M, MA(K, L)) in space.
pub fn mixed_volume_area_route(k: &Polytope, l: &Polytope, m: Body) -> Result<BigRational> {
    let ma = mixed_area_vectors(k, l)?;
    let total: BigRational = ma.iter().map(|v| m.support(v)).sum();
    Ok(total / BigRational::from_integer(3.into()))
}

/// Certified bounds [lo, hi] for V(K, L, B) from the ball approximation:
/// lo uses the inner body, hi = lo / r_lo.
pub fn mixed_volume_with_ball(k: &Polytope, l: &Polytope, ball: &BallApprox) -> Result<(BigRational, BigRational)> {
    let ma = mixed_area_vectors(k, l)?;
    let lo: BigRational = ma.iter().map(|v| ball.inner_support(v)).sum::<BigRational>() / BigRational::from_integer(3.into());
    let hi = &lo / ball.r_lo();
    Ok((lo, hi))
}

/// V(K, L, B) from h(B, v) = |v|: (1/3) Σ |MA(K, L)|, as a certified real.
pub fn mixed_volume_with_exact_ball(k: &Polytope, l: &Polytope, prec: u32) -> Result<Real> {
    let ma = mixed_area_vectors(k, l)?;
    Ok(norm_sum(&ma, prec).mul_rational(&BigRational::new(1.into(), 3.into())))
}

pub(crate) fn norm_sum(vs: &[RationalVector], prec: u32) -> Real {
    vs.iter()
        .map(|v| Real::sqrt_rational(&v.norm_squared(), prec))
        .fold(Real::zero(prec), |a, b| a.add(&b))
}

/// Integer form of a body's support data, evaluated against the ball's
/// integer facet normals.
enum IntSupport {
    Vertices(Vec<[i128; 3]>),
    Segments(Vec<[i128; 3]>),
}

const FAST_BITS: u64 = 60;

fn integer_rows(vs: &[RationalVector], den: &BigInt) -> Option<Vec<[i128; 3]>> {
    vs.iter()
        .map(|v| {
            let ints = v.scaled_integers(den);
            if ints.iter().all(|c| c.bits() <= FAST_BITS) {
                Some([0, 1, 2].map(|k| ints[k].to_i128().expect("60-bit")))
            } else {
                None
            }
        })
        .collect()
}

/// Σ over ball facets g of h(L, w_g), for the inner body's facets.
fn ball_facet_sum(ball: &BallApprox, l: Body) -> BigRational {
    // w_g = n_g / 2^49 with n_g the integer normals.
    let scale = BigInt::from(2) << (2 * GRID_BITS);
    let fast = match l {
        Body::Polytope(p) => {
            let den = common_denominator(p.vertices());
            integer_rows(p.vertices(), &den).map(|rows| (IntSupport::Vertices(rows), den))
        }
        Body::Zonotope(z) => {
            let gens = z.merged().generators().to_vec();
            let den = common_denominator(&gens);
            // The centre contributes c·Σ n_g = 0 on a closed surface.
            integer_rows(&gens, &den).map(|rows| (IntSupport::Segments(rows), den * 2))
        }
        Body::Ball(..) => None,
    };
    let Some((data, den)) = fast else {
        let total: BigRational = ball
            .scaled_normals()
            .iter()
            .map(|n| l.support(&RationalVector::from_bigints(&n.map(BigInt::from), &BigInt::from(1))))
            .sum();
        return total / BigRational::from_integer(scale);
    };
    let mut acc = Accumulator::new();
    let dot = |a: &[i128; 3], b: &[i128; 3]| a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
    for n in ball.scaled_normals() {
        match &data {
            IntSupport::Vertices(rows) => acc.add(rows.iter().map(|v| dot(v, n)).max().expect("vertices")),
            IntSupport::Segments(rows) => {
                for g in rows {
                    acc.add(dot(g, n).abs());
                }
            }
        }
    }
    BigRational::new(acc.finish(), den * scale)
}

/// Certified bounds for V(B, B, L): lo = (1/3) Σ_g h(L, w_g) over the inner
/// body's facets, hi = lo / r_lo².
pub fn mixed_volume_two_balls(l: Body, ball: &BallApprox) -> Result<(BigRational, BigRational)> {
    if l.dim() != 3 {
        return Err(Error::UnsupportedDimension(l.dim()));
    }
    let lo = ball_facet_sum(ball, l) / BigRational::from_integer(3.into());
    let r = ball.r_lo();
    let hi = &lo / (r * r);
    Ok((lo, hi))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn cube() -> Polytope {
        Polytope::unit_cube(3)
    }

    #[test]
    fn diagonal_is_volume() {
        let c = cube();
        assert_eq!(mixed_volume_of(&[&c, &c, &c]).unwrap(), rat(1, 1));
        let s = Polytope::standard_simplex(3);
        assert_eq!(mixed_volume_of(&[&s, &s, &s]).unwrap(), rat(1, 6));
    }

    #[test]
    fn cube_cube_segment() {
        let c = cube();
        let seg = Polytope::segment(RationalVector::zero(3), RationalVector::from_ints(&[0, 0, 1]));
        assert_eq!(mixed_volume_of(&[&c, &c, &seg]).unwrap(), rat(1, 3));
        assert_eq!(mixed_volume_facets(&c, Body::Polytope(&seg)).unwrap(), rat(1, 3));
        assert_eq!(mixed_volume_area_route(&c, &c, Body::Polytope(&seg)).unwrap(), rat(1, 3));
    }

    #[test]
    fn routes_agree_on_mixed_triples() {
        let k = Polytope::standard_simplex(3);
        let l = cube().translate(&RationalVector::parse(&["1/2", "-1", "0"]).unwrap());
        let m = Polytope::new(vec![
            RationalVector::from_ints(&[0, 0, 0]),
            RationalVector::from_ints(&[2, 1, 0]),
            RationalVector::from_ints(&[0, 1, 3]),
            RationalVector::from_ints(&[1, -1, 1]),
            RationalVector::from_ints(&[-1, 0, 1]),
        ])
        .unwrap();
        let polar = mixed_volume_of(&[&k, &l, &m]).unwrap();
        assert_eq!(polar, mixed_volume_area_route(&k, &l, Body::Polytope(&m)).unwrap());
        assert_eq!(polar, mixed_volume_area_route(&m, &k, Body::Polytope(&l)).unwrap());
        let kkl = mixed_volume_of(&[&k, &k, &m]).unwrap();
        assert_eq!(kkl, mixed_volume_facets(&k, Body::Polytope(&m)).unwrap());
    }

    #[test]
    fn planar_mixed_area() {
        let sq = Polytope::unit_cube(2);
        let tri = Polytope::standard_simplex(2);
        // V(square, triangle) = (1/2) Σ_f h(T, w_f) = (1/2)(1 + 1 + 0 + 0).
        assert_eq!(mixed_volume_of(&[&sq, &tri]).unwrap(), rat(1, 1));
        assert_eq!(mixed_volume_facets(&sq, Body::Polytope(&tri)).unwrap(), rat(1, 1));
    }

    #[test]
    fn arity_is_checked() {
        let c = cube();
        assert!(matches!(mixed_volume_of(&[&c, &c]), Err(Error::Arity { .. })));
    }

    #[test]
    fn ball_bounds_bracket_the_closed_form() {
        let c = cube();
        let ball = BallApprox::new(3).unwrap();
        let (lo, hi) = mixed_volume_with_ball(&c, &c, &ball).unwrap();
        // V(C, C, B) = W_1(C) = surface area / 3 = 2.
        assert!(lo <= rat(2, 1) && rat(2, 1) <= hi);
        let exact = mixed_volume_with_exact_ball(&c, &c, 200).unwrap();
        assert!(exact.contains(&rat(2, 1)));
        let (lo, hi) = mixed_volume_two_balls(Body::Polytope(&c), &ball).unwrap();
        // W_2(C) = π (three edges per direction, length 1, angle π/2, times 4 / 6).
        let pi = std::f64::consts::PI;
        assert!(crate::real::rational_to_f64(&lo) <= pi && pi <= crate::real::rational_to_f64(&hi));
    }

    #[test]
    fn two_ball_routes_agree_for_zonotopes() {
        let z = Zonotope::centered(
            vec![RationalVector::from_ints(&[1, 0, 0]), RationalVector::parse(&["1/3", "2", "-1"]).unwrap()],
            3,
        )
        .unwrap();
        let ball = BallApprox::new(1).unwrap();
        let fast = mixed_volume_two_balls(Body::Zonotope(&z), &ball).unwrap();
        let poly = z.to_polytope();
        let slow = mixed_volume_two_balls(Body::Polytope(&poly), &ball).unwrap();
        assert_eq!(fast, slow);
        let facets = mixed_volume_facets(ball.inner(), Body::Zonotope(&z)).unwrap();
        assert_eq!(fast.0, facets);
    }
}
