//! The ratio W_2(Φ_i K) / W_{3-i}(K) over a corpus of bodies, and the upper
//! bound W_1(K)^3 >= κ_3² / r³ · W_0(ΠK) that uses it.

use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use valharm_geometry::{
    kappa, mixed_volume_two_balls, pi1, pi1_constant, projection_body, quermassintegral, random_polytope_from, rat,
    zonotope_w2, BallApprox, Body, Polytope, Real, RationalVector,
};

use super::{decimal, demote, Ctx, Metadata, RecordBase};
use crate::error::Result;
use crate::report::{BodyInput, TrialRecord};

/// The named bodies at the start of the corpus.
fn named_body(t: usize) -> Option<(&'static str, Polytope)> {
    let pts = |rows: &[[i64; 3]]| Polytope::new(rows.iter().map(|r| RationalVector::from_ints(r)).collect()).expect("body");
    Some(match t {
        0 => ("cube", Polytope::unit_cube(3)),
        1 => ("simplex", Polytope::standard_simplex(3)),
        2 => ("octahedron", pts(&[[1, 0, 0], [-1, 0, 0], [0, 1, 0], [0, -1, 0], [0, 0, 1], [0, 0, -1]])),
        3 => ("long-box", pts(&[[0, 0, 0], [16, 0, 0], [0, 4, 0], [0, 0, 1], [16, 4, 0], [16, 0, 1], [0, 4, 1], [16, 4, 1]])),
        4 => ("prism", pts(&[[0, 0, 0], [3, 0, 0], [0, 2, 0], [0, 0, 5], [3, 0, 5], [0, 2, 5]])),
        _ => return None,
    })
}

/// Trial t of the corpus: a named body, or a random one whose vertex count
/// and box size vary with t.
fn corpus_body(ctx: &Ctx, t: usize, rng: &mut ChaCha8Rng) -> Result<(String, Polytope)> {
    if let Some((name, p)) = named_body(t) {
        return Ok((name.into(), p));
    }
    let k = 4 + (7 * t) % 13;
    let bound = &ctx.bound * rat(1 + (t % 3) as i64, 1);
    Ok(("random".into(), random_polytope_from(rng, k, &bound)?))
}

/// W_2(Φ_i K) / W_{3-i}(K), with the two-ball enclosure of W_2 checked
/// against the zonotope closed form.
pub(super) fn ratio(ctx: &Ctx, k: &Polytope, ball: &BallApprox) -> Result<(Real, Option<String>)> {
    let (zonotope, factor) = if ctx.cfg.i == 2 {
        (projection_body(k)?, Real::from_integer(1, ctx.prec))
    } else {
        let body = pi1(k, ctx.cfg.ball_level, ctx.prec)?;
        (body.base, body.factor)
    };
    let (lo, hi) = mixed_volume_two_balls(Body::Zonotope(&zonotope), ball)?;
    let w2 = Real::between(&lo, &hi, ctx.prec).mul(&factor);
    let closed = zonotope_w2(&zonotope, ctx.prec)?.mul(&factor);
    let problem = (!w2.intersects(&closed)).then(|| "two-ball enclosure misses the closed form".to_string());
    let denom = quermassintegral(k, 3 - ctx.cfg.i, ctx.prec)?.to_real(ctx.prec);
    Ok((w2.div(&denom).expect("positive quermassintegral"), problem))
}

fn ball_metadata(ctx: &Ctx, ball: &BallApprox, meta: &mut Metadata) {
    meta.insert("ball-level".into(), ctx.cfg.ball_level.into());
    meta.insert("ball-facets".into(), ball.facet_count().into());
    meta.insert("ball-gap".into(), decimal(&Real::from_rational(&ball.gap(), ctx.prec), 6));
    if ctx.cfg.i == 1 {
        meta.insert("pi1-constant".into(), decimal(&pi1_constant(ctx.prec), ctx.digits));
    }
}

fn common(ratios: &[Real]) -> Option<Real> {
    ratios.iter().skip(1).try_fold(ratios[0].clone(), |acc, r| acc.intersect(r))
}

pub(super) fn run_r_constant(ctx: &Ctx) -> Result<(Vec<TrialRecord>, Metadata)> {
    let ball = BallApprox::shared(ctx.cfg.ball_level)?;
    let mut bodies: Vec<(usize, String, Polytope)> = (0..ctx.cfg.trials)
        .map(|t| corpus_body(ctx, t, &mut ctx.rng(t as u64)).map(|(n, p)| (t, n, p)))
        .collect::<Result<_>>()?;
    if ctx.cfg.probes {
        // K -> tK leaves the ratio unchanged.
        let t = ctx.cfg.trials;
        let p = bodies.last().expect("trials >= 1").2.scale(&rat(3, 1));
        bodies.push((t, "scaled".into(), p));
    }
    let ratios: Vec<(Real, Option<String>)> =
        bodies.par_iter().map(|(_, _, p)| ratio(ctx, p, &ball)).collect::<Result<_>>()?;
    let values: Vec<Real> = ratios.iter().map(|(r, _)| r.clone()).collect();
    let all = common(&values);
    let records = bodies
        .iter()
        .zip(&ratios)
        .map(|((t, name, p), (r, problem))| {
            let kind = if name == "scaled" { "scaled" } else { "random" };
            let base = RecordBase::new(*t, kind, vec![BodyInput::polytope(name, p)]);
            let other = match &all {
                Some(c) => c.clone(),
                None => values.iter().find(|v| !v.intersects(r)).unwrap_or(r).clone(),
            };
            demote(ctx.enclosed_equality(base, r, &other), problem.clone())
        })
        .collect();
    let mut meta = Metadata::new();
    ball_metadata(ctx, &ball, &mut meta);
    if let Some(c) = &all {
        meta.insert("r-enclosure".into(), decimal(c, ctx.digits));
        if let Some(w) = c.relative_width() {
            meta.insert("r-relative-width".into(), format!("{:.3e}", Real::from_rational(&w, ctx.prec).to_f64()).into());
        }
    }
    Ok((records, meta))
}

/// r(Π) from the cube and the simplex at the configured level.
fn estimate_r(ctx: &Ctx, ball: &BallApprox) -> Result<Real> {
    let mut rs = Vec::new();
    for t in 0..2 {
        let (_, p) = named_body(t).expect("named");
        rs.push(ratio(ctx, &p, ball)?.0);
    }
    Ok(common(&rs).unwrap_or_else(|| rs[0].hull(&rs[1])))
}

pub(super) fn run_upbound(ctx: &Ctx) -> Result<(Vec<TrialRecord>, Metadata)> {
    let ball = BallApprox::shared(ctx.cfg.ball_level)?;
    let r = estimate_r(ctx, &ball)?;
    let k3 = kappa(3, ctx.prec);
    let coefficient = k3.mul(&k3).div(&r.pow(3)).expect("r > 0");
    let check = |base: RecordBase, k: &Polytope| -> Result<TrialRecord> {
        let w1 = quermassintegral(k, 1, ctx.prec)?.to_real(ctx.prec);
        let lhs = w1.pow(3);
        let rhs = coefficient.mul_rational(&projection_body(k)?.volume());
        let mut rec = ctx.inequality(base, &lhs, &rhs, false);
        let slack = lhs.sub(&rhs);
        let relative = slack.div(&lhs).map(|s| s.to_f64()).unwrap_or(f64::NAN);
        rec.note = Some(format!("relative slack {relative:.3e}, strict: {}", ctx.strict(&slack)));
        Ok(rec)
    };
    let mut records = ctx.random_trials(|t, rng| {
        let k = ctx.random_body(rng)?;
        check(RecordBase::new(t, "random", vec![BodyInput::polytope("K", &k)]), &k)
    })?;
    records.extend(ctx.probes(&["cube", "ball-level-1", "ball-level-2"], |t, name, _| {
        let k = match name {
            "cube" => Polytope::unit_cube(3),
            "ball-level-1" => BallApprox::shared(1)?.inner().clone(),
            _ => BallApprox::shared(2)?.inner().clone(),
        };
        let input = if name == "cube" {
            BodyInput::polytope("K", &k)
        } else {
            BodyInput::named(&format!("inner ball body, {name}"))
        };
        check(RecordBase::new(t, name, vec![input]), &k)
    })?);
    let mut meta = Metadata::new();
    ball_metadata(ctx, &ball, &mut meta);
    meta.insert("r-enclosure".into(), decimal(&r, ctx.digits));
    Ok((records, meta))
}
