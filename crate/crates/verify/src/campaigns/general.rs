//! W_i(K,L)^{3-i} >= W_i(K)^{2-i} W_i(L) for i ∈ {0, 1}, and
//! V_1(K+L, C)^{1/2} >= V_1(K, C)^{1/2} + V_1(L, C)^{1/2}.

use num_rational::BigRational;
use num_traits::Signed;
use valharm_geometry::{
    mixed_volume_facets, mixed_volume_of, mixed_volume_with_ball, mixed_volume_with_exact_ball, quermassintegral,
    BallApprox, BallSide, Body, Polytope, Real,
};

use super::{demote, pairs, Ctx, Metadata, RecordBase};
use crate::error::Result;
use crate::report::{BodyInput, TrialRecord, Verdict};

/// V(K, K, L) by the facet route, checked against polarization.
fn v_kkl(k: &Polytope, l: &Polytope) -> Result<(BigRational, Option<String>)> {
    let facets = mixed_volume_facets(k, Body::Polytope(l))?;
    let polar = mixed_volume_of(&[k, k, l])?;
    let problem = (facets != polar).then(|| format!("facet route {facets} and polarization {polar} disagree"));
    Ok((facets, problem))
}

pub(super) fn run_minkowski(ctx: &Ctx) -> Result<(Vec<TrialRecord>, Metadata)> {
    let i = ctx.cfg.i;
    let ball = BallApprox::shared(ctx.cfg.ball_level)?;
    let records = pairs(ctx, &[], |base, k, l, probe| {
        if i == 0 {
            let (v, problem) = v_kkl(k, l)?;
            let lhs = &v * &v * &v;
            let vk = k.volume();
            let rhs = &vk * &vk * l.volume();
            return Ok(demote(ctx.exact_inequality(base, &lhs, &rhs, probe), problem));
        }
        // W_1(K, L) = V(K, B, L) from h(B, v) = |v|, checked against the
        // ball-approximation enclosure.
        let w = mixed_volume_with_exact_ball(k, l, ctx.prec)?;
        let (lo, hi) = mixed_volume_with_ball(k, l, &ball)?;
        let problem = (!Real::between(&lo, &hi, ctx.prec).intersects(&w))
            .then(|| "closed form outside the ball-approximation enclosure".to_string());
        let w1 = |x: &Polytope| quermassintegral(x, 1, ctx.prec).map(|v| v.to_real(ctx.prec));
        let lhs = w.mul(&w);
        let rhs = w1(k)?.mul(&w1(l)?);
        Ok(demote(ctx.inequality(base, &lhs, &rhs, probe), problem))
    })?;
    let mut meta = Metadata::new();
    if i == 1 {
        meta.insert("ball-level".into(), ctx.cfg.ball_level.into());
    }
    Ok((records, meta))
}

pub(super) fn run_bm(ctx: &Ctx) -> Result<(Vec<TrialRecord>, Metadata)> {
    let c = ctx.shared_body()?;
    let mut records = ctx.random_trials(|t, rng| {
        let k = ctx.random_body(rng)?;
        let l = ctx.random_body(rng)?;
        bm_record(ctx, t, "random", &k, &l, &c, false)
    })?;
    records.extend(ctx.probes(&["equal-bodies", "ball-consistency"], |t, name, rng| {
        let k = ctx.random_body(rng)?;
        if name == "equal-bodies" {
            return bm_record(ctx, t, name, &k, &k, &c, true);
        }
        let l = ctx.random_body(rng)?;
        ball_record(ctx, t, name, &k, &l)
    })?);
    let mut meta = Metadata::new();
    meta.insert("C".into(), serde_json::to_value(valharm_geometry::json::PolytopeJson::from(&c)).expect("json"));
    Ok((records, meta))
}

/// a^{1/2} >= b^{1/2} + c^{1/2} for a = V_1(K+L, C), b = V_1(K, C), c = V_1(L, C)
/// is decided exactly: d = a - b - c >= 0 and d² >= 4bc.
fn bm_record(ctx: &Ctx, t: usize, kind: &str, k: &Polytope, l: &Polytope, c: &Polytope, probe: bool) -> Result<TrialRecord> {
    let sum = k.minkowski_sum(l)?;
    let (a, pa) = v_kkl(&sum, c)?;
    let (b, pb) = v_kkl(k, c)?;
    let (cc, pc) = v_kkl(l, c)?;
    let d = &a - &b - &cc;
    let four_bc = BigRational::from_integer(4.into()) * &b * &cc;
    let holds = !d.is_negative() && &d * &d >= four_bc;
    let equal = !d.is_negative() && &d * &d == four_bc;
    let sqrt = |q: &BigRational| Real::sqrt_rational(q, ctx.prec);
    let base = RecordBase::new(t, kind, vec![BodyInput::polytope("K", k), BodyInput::polytope("L", l)]);
    let mut rec = ctx.inequality(base, &sqrt(&a), &sqrt(&b).add(&sqrt(&cc)), probe);
    rec.verdict = if holds { Verdict::HoldsExact } else { Verdict::Violation };
    rec.equality = probe.then_some(equal);
    Ok(demote(rec, pa.or(pb).or(pc)))
}

/// C = B: V(X, X, B) through the inner ball body and through S(X)/3 must
/// agree, and the inequality is evaluated on the closed form.
fn ball_record(ctx: &Ctx, t: usize, kind: &str, k: &Polytope, l: &Polytope) -> Result<TrialRecord> {
    let ball = BallApprox::shared(ctx.cfg.ball_level)?;
    let sum = k.minkowski_sum(l)?;
    let mut mismatched = Vec::new();
    let mut closed = Vec::new();
    for (name, x) in [("K+L", &sum), ("K", k), ("L", l)] {
        let lo = mixed_volume_facets(x, Body::Ball(&ball, BallSide::Inner))?;
        let hi = &lo / ball.r_lo();
        let w1 = quermassintegral(x, 1, ctx.prec)?.to_real(ctx.prec);
        if !Real::between(&lo, &hi, ctx.prec).intersects(&w1) {
            mismatched.push(name);
        }
        closed.push(w1.sqrt());
    }
    let base = RecordBase::new(t, kind, vec![BodyInput::polytope("K", k), BodyInput::polytope("L", l), BodyInput::named("C = B")]);
    let rec = ctx.inequality(base, &closed[0], &closed[1].add(&closed[2]), false);
    let problem = (!mismatched.is_empty()).then(|| format!("ball routes disagree for {}", mismatched.join(", ")));
    Ok(demote(rec, problem))
}
