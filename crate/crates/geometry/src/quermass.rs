use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::ball::BallApprox;
use crate::error::{Error, Result};
use crate::mixed::{mixed_volume_facets, mixed_volume_two_balls, mixed_volume_with_ball, norm_sum, Body};
use crate::polytope::{HullKind, Polytope};
use crate::rational::RationalVector;
use crate::real::Real;
use crate::zonotope::Zonotope;

/// A quantity that is either known exactly or enclosed by an interval.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Value {
    Exact(BigRational),
    Enclosed(Real),
}

impl Value {
    pub fn to_real(&self, prec: u32) -> Real {
        match self {
            Value::Exact(q) => Real::from_rational(q, prec),
            Value::Enclosed(r) => r.clone(),
        }
    }

    pub fn exact(&self) -> Option<&BigRational> {
        match self {
            Value::Exact(q) => Some(q),
            Value::Enclosed(_) => None,
        }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, Value::Exact(_))
    }
}

/// JSON form of an enclosure: decimal endpoints rounded outward.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RealJson {
    pub lo: String,
    pub hi: String,
}

impl RealJson {
    pub fn from_real(r: &Real, digits: u32) -> RealJson {
        RealJson {
            lo: r.lo_decimal(digits),
            hi: r.hi_decimal(digits),
        }
    }

    /// Back to an interval; the decimals are read exactly.
    pub fn to_real(&self, prec: u32) -> Result<Real> {
        let lo = crate::rational::parse_rational(&self.lo)?;
        let hi = crate::rational::parse_rational(&self.hi)?;
        Ok(Real::between(&lo, &hi, prec))
    }
}

/// Volume of the unit ball in dimension i (i <= 3).
pub fn kappa(i: usize, prec: u32) -> Real {
    let pi = Real::pi(prec);
    match i {
        0 => Real::from_integer(1, prec),
        1 => Real::from_integer(2, prec),
        2 => pi,
        3 => pi.mul_rational(&BigRational::new(4.into(), 3.into())),
        _ => panic!("kappa is only tabulated up to dimension 3"),
    }
}

/// Exact square root of a rational, when it has one.
pub fn rational_sqrt(q: &BigRational) -> Option<BigRational> {
    if q.is_negative() {
        return None;
    }
    let n = q.numer().sqrt();
    let d = q.denom().sqrt();
    (&n * &n == *q.numer() && &d * &d == *q.denom()).then(|| BigRational::new(n, d))
}

/// Σ |v| over a list of vectors, exact when every norm is rational.
fn norm_total(vs: &[RationalVector], prec: u32) -> Value {
    let exact: Option<BigRational> = vs.iter().map(|v| rational_sqrt(&v.norm_squared())).sum();
    match exact {
        Some(q) => Value::Exact(q),
        None => Value::Enclosed(norm_sum(vs, prec)),
    }
}

fn require_space(p: &Polytope) -> Result<()> {
    if p.dim() != 3 {
        return Err(Error::UnsupportedDimension(p.dim()));
    }
    Ok(())
}

/// Surface area (both sides of a flat body).
pub fn surface_area(p: &Polytope, prec: u32) -> Value {
    norm_total(&p.area_vectors(), prec)
}

/// Σ over edges of length times exterior angle (the angle between the
/// outward normals of the two facets; π for a flat body, 2π for a segment).
pub fn edge_curvature_sum(p: &Polytope, prec: u32) -> Result<Real> {
    require_space(p)?;
    let pi = Real::pi(prec);
    let mut total = Real::zero(prec);
    for e in p.edges() {
        let [a, b] = e.ends.map(|i| &p.vertices()[i]);
        let len = Real::sqrt_rational(&(b - a).norm_squared(), prec);
        let angle = match e.facets {
            None => pi.mul_int(2),
            Some([f, g]) => {
                let (n1, n2) = (&p.facets()[f].normal, &p.facets()[g].normal);
                facet_angle(n1, n2, prec)
            }
        };
        total = total.add(&len.mul(&angle));
    }
    Ok(total)
}

fn facet_angle(n1: &[BigInt], n2: &[BigInt], prec: u32) -> Real {
    let dot: BigInt = n1.iter().zip(n2).map(|(a, b)| a * b).sum();
    let cross = [
        &n1[1] * &n2[2] - &n1[2] * &n2[1],
        &n1[2] * &n2[0] - &n1[0] * &n2[2],
        &n1[0] * &n2[1] - &n1[1] * &n2[0],
    ];
    let c2: BigInt = cross.iter().map(|c| c * c).sum();
    if c2.is_zero() {
        return if dot.is_positive() {
            Real::zero(prec)
        } else {
            Real::pi(prec)
        };
    }
    let y = Real::sqrt_rational(&BigRational::from_integer(c2), prec);
    Real::angle(&y, &Real::from_integer(dot, prec))
}

/// W_i(P) for a body in space: W_0 = volume, W_1 = S/3,
/// W_2 = (1/6) Σ_edges length · exterior angle, W_3 = 4π/3.
pub fn quermassintegral(p: &Polytope, i: usize, prec: u32) -> Result<Value> {
    require_space(p)?;
    Ok(match i {
        0 => Value::Exact(p.volume()),
        1 => match surface_area(p, prec) {
            Value::Exact(s) => Value::Exact(s / BigRational::from_integer(3.into())),
            Value::Enclosed(s) => Value::Enclosed(s.mul_rational(&BigRational::new(1.into(), 3.into()))),
        },
        2 => Value::Enclosed(edge_curvature_sum(p, prec)?.mul_rational(&BigRational::new(1.into(), 6.into()))),
        3 => Value::Enclosed(kappa(3, prec)),
        _ => {
            return Err(Error::OutOfRange {
                what: "quermassintegral index",
                value: i as i64,
            })
        }
    })
}

/// W_2 of a zonotope in closed form: (π/3) Σ |g|.
pub fn zonotope_w2(z: &Zonotope, prec: u32) -> Result<Real> {
    if z.dim() != 3 {
        return Err(Error::UnsupportedDimension(z.dim()));
    }
    let total = norm_total(z.generators(), prec).to_real(prec);
    Ok(total.mul(&Real::pi(prec)).mul_rational(&BigRational::new(1.into(), 3.into())))
}

/// V_i(P) = C(3, i) W_{3-i}(P) / κ_{3-i}.
pub fn intrinsic_volume(p: &Polytope, i: usize, prec: u32) -> Result<Value> {
    if i > 3 {
        return Err(Error::OutOfRange {
            what: "intrinsic volume index",
            value: i as i64,
        });
    }
    let binom = [1, 3, 3, 1][i];
    Ok(match (i, quermassintegral(p, 3 - i, prec)?) {
        (0, _) => Value::Exact(BigRational::from_integer(1.into())),
        (_, Value::Exact(w)) if i >= 2 => {
            // κ_0 = 1 and κ_1 = 2 keep V_3 and V_2 rational.
            Value::Exact(w * BigRational::new(binom.into(), [1, 2, 1, 1][3 - i].into()))
        }
        (_, w) => Value::Enclosed(
            w.to_real(prec)
                .mul_int(binom)
                .div(&kappa(3 - i, prec))
                .expect("κ is positive"),
        ),
    })
}

/// Steiner point Σ_v v · ext(v), with the external angle of v read off the
/// angles of the boundary triangles at v.
pub fn steiner_point(p: &Polytope, prec: u32) -> Result<Vec<Real>> {
    let dim = p.dim();
    let verts = p.vertices();
    if p.kind() == HullKind::Point {
        return Ok(verts[0].coords().iter().map(|c| Real::from_rational(c, prec)).collect());
    }
    let mut angle_sum: Vec<Real> = vec![Real::zero(prec); verts.len()];
    for t in p.triangles() {
        for k in 0..3 {
            let (v, a, b) = (t[k], t[(k + 1) % 3], t[(k + 2) % 3]);
            let e1 = &verts[a] - &verts[v];
            let e2 = &verts[b] - &verts[v];
            let y2 = if dim == 3 {
                e1.cross(&e2).norm_squared()
            } else {
                let d = &e1.0[0] * &e2.0[1] - &e1.0[1] * &e2.0[0];
                &d * &d
            };
            let y = Real::sqrt_rational(&y2, prec);
            let x = Real::from_rational(&e1.dot(&e2), prec);
            angle_sum[v] = angle_sum[v].add(&Real::angle(&y, &x));
        }
    }
    // In space ext(v) = (2π - Σα)/(4π); in the plane (π - α)/(2π).
    let pi = Real::pi(prec);
    let (full, norm) = if dim == 3 {
        (pi.mul_int(2), pi.mul_int(4))
    } else {
        (pi.clone(), pi.mul_int(2))
    };
    let mut out = vec![Real::zero(prec); dim];
    for (v, alpha) in verts.iter().zip(&angle_sum) {
        let ext = full.sub(alpha).div(&norm).expect("π > 0");
        for (o, c) in out.iter_mut().zip(v.coords()) {
            *o = o.add(&ext.mul_rational(c));
        }
    }
    Ok(out)
}

/// W_i(P, L) = V(P[2-i], B[i], L) in space.
///
/// i = 0 is exact. For i >= 1 the ball is replaced by the level-`level`
/// approximation and the result is the certified enclosure between the
/// inner and outer bodies.
pub fn mixed_quermass(p: &Polytope, l: Body, i: usize, level: u32, prec: u32) -> Result<Value> {
    require_space(p)?;
    match i {
        0 => Ok(Value::Exact(mixed_volume_facets(p, l)?)),
        1 => {
            let ball = BallApprox::shared(level)?;
            let lp = l.to_polytope();
            let (lo, hi) = mixed_volume_with_ball(p, &lp, &ball)?;
            Ok(Value::Enclosed(Real::between(&lo, &hi, prec)))
        }
        2 => {
            let ball = BallApprox::shared(level)?;
            let (lo, hi) = mixed_volume_two_balls(l, &ball)?;
            Ok(Value::Enclosed(Real::between(&lo, &hi, prec)))
        }
        _ => Err(Error::OutOfRange {
            what: "mixed quermassintegral index",
            value: i as i64,
        }),
    }
}
