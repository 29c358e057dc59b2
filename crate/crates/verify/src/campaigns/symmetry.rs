//! W_{n-1-i}(K, Φ_i L) = W_{n-1-i}(L, Φ_i K) for Φ_2 = Π (exact) and Φ_1 = Π_1
//! (ball enclosures).

use num_rational::BigRational;
use num_traits::Signed;
use valharm_geometry::{
    mixed_area_vectors, mixed_volume_facets, mixed_volume_of, pi1, pi1_constant, projection_body, BallApprox, Body,
    Polytope, Real, RationalVector, Zonotope,
};

use super::{decimal, demote, probe_shift, Ctx, Metadata, RecordBase};
use crate::error::Result;
use crate::report::{BodyInput, TrialRecord};

const PROBES: [&str; 2] = ["equal-bodies", "translate"];

pub(super) fn run(ctx: &Ctx) -> Result<(Vec<TrialRecord>, Metadata)> {
    let mut meta = Metadata::new();
    let pair = |t: usize, kind: &str, p: &Polytope, q: &Polytope| {
        if ctx.cfg.i == 2 {
            exact_pair(ctx, t, kind, p, q)
        } else {
            enclosed_pair(ctx, t, kind, p, q)
        }
    };
    let mut records = ctx.random_trials(|t, rng| {
        let p = ctx.random_body(rng)?;
        let q = ctx.random_body(rng)?;
        pair(t, "random", &p, &q)
    })?;
    records.extend(ctx.probes(&PROBES, |t, name, rng| {
        let p = ctx.random_body(rng)?;
        let q = if name == "translate" { p.translate(&probe_shift()) } else { p.clone() };
        pair(t, name, &p, &q)
    })?);
    if ctx.cfg.i == 1 {
        let ball = BallApprox::shared(ctx.cfg.ball_level)?;
        meta.insert("pi1-constant".into(), decimal(&pi1_constant(ctx.prec), ctx.digits));
        meta.insert("ball-level".into(), ctx.cfg.ball_level.into());
        meta.insert("ball-facets".into(), ball.facet_count().into());
    }
    Ok((records, meta))
}

/// (1/6) Σ_f Σ_g |w_f · w_g|, symmetric in P and Q by construction.
fn double_sum(p: &Polytope, q: &Polytope) -> BigRational {
    let (wp, wq) = (p.area_vectors(), q.area_vectors());
    let total: BigRational = wp.iter().flat_map(|a| wq.iter().map(move |b| a.dot(b).abs())).sum();
    total / BigRational::from_integer(6.into())
}

/// V(P, P, ΠQ) by polarization with ΠQ as a polytope, and by the facet
/// route against the zonotope.
fn side(p: &Polytope, pi_q: &Zonotope) -> Result<(BigRational, Option<String>)> {
    let polar = mixed_volume_of(&[p, p, &pi_q.to_polytope()])?;
    let facets = mixed_volume_facets(p, Body::Zonotope(pi_q))?;
    let problem = (polar != facets).then(|| format!("polarization {polar} and facet route {facets} disagree"));
    Ok((polar, problem))
}

fn exact_pair(ctx: &Ctx, t: usize, kind: &str, p: &Polytope, q: &Polytope) -> Result<TrialRecord> {
    let (pi_p, pi_q) = (projection_body(p)?, projection_body(q)?);
    let (lhs, lhs_problem) = side(p, &pi_q)?;
    let (rhs, rhs_problem) = side(q, &pi_p)?;
    let closed = double_sum(p, q);
    let base = RecordBase::new(t, kind, vec![BodyInput::polytope("P", p), BodyInput::polytope("Q", q)])
        .note(format!("closed form agrees: {}", lhs == closed && rhs == closed));
    let rec = ctx.exact_equality(base, &lhs, &rhs);
    Ok(demote(rec, lhs_problem.or(rhs_problem)))
}

struct Pi1Side {
    base: Zonotope,
    factor: Real,
    mixed_areas: Vec<RationalVector>,
}

fn pi1_side(ctx: &Ctx, p: &Polytope, ball: &BallApprox) -> Result<Pi1Side> {
    let body = pi1(p, ctx.cfg.ball_level, ctx.prec)?;
    Ok(Pi1Side {
        base: body.base,
        factor: body.factor,
        mixed_areas: mixed_area_vectors(p, ball.inner())?,
    })
}

/// Enclosure of W_1(P, Π_1 Q) = V(P, B, Π_1 Q) together with its exact
/// lower bound V(P, B_in, Z_Q).
fn w1_against(ctx: &Ctx, p: &Pi1Side, q: &Pi1Side, ball: &BallApprox) -> (Real, BigRational) {
    let three = BigRational::from_integer(3.into());
    let lo: BigRational = p.mixed_areas.iter().map(|v| q.base.support(v)).sum::<BigRational>() / three;
    let hi = &lo / ball.r_lo();
    // Π_1 Q lies between factor.lo · Z_Q and factor.hi · Z_Q.
    (Real::between(&lo, &hi, ctx.prec).mul(&q.factor), lo)
}

fn enclosed_pair(ctx: &Ctx, t: usize, kind: &str, p: &Polytope, q: &Polytope) -> Result<TrialRecord> {
    let ball = BallApprox::shared(ctx.cfg.ball_level)?;
    let sp = pi1_side(ctx, p, &ball)?;
    let sq = pi1_side(ctx, q, &ball)?;
    let (lhs, lo_pq) = w1_against(ctx, &sp, &sq, &ball);
    let (rhs, lo_qp) = w1_against(ctx, &sq, &sp, &ball);
    let base = RecordBase::new(t, kind, vec![BodyInput::polytope("P", p), BodyInput::polytope("Q", q)])
        .note(format!("inner-ball lower bounds equal: {}", lo_pq == lo_qp));
    Ok(ctx.enclosed_equality(base, &lhs, &rhs))
}
