//! Brunn-Minkowski inequalities: V_3(Π(P+Q))^{1/6} >= V_3(ΠP)^{1/6} +
//! V_3(ΠQ)^{1/6}, and V_i(P+Q)^{1/i} >= V_i(P)^{1/i} + V_i(Q)^{1/i}.

use num_rational::BigRational;
use valharm_geometry::{intrinsic_volume, projection_body, Polytope, Real, Value};

use super::{pairs, Ctx, Metadata};
use crate::error::{ConfigError, Error, Result};
use crate::report::TrialRecord;

fn require_interior(p: &Polytope) -> Result<()> {
    if p.is_full_dimensional() {
        Ok(())
    } else {
        Err(Error::Config(ConfigError::Invalid("bodies must have non-empty interior".into())))
    }
}

pub(super) fn run_minkowski_valuation(ctx: &Ctx) -> Result<(Vec<TrialRecord>, Metadata)> {
    let sixth = |q: &BigRational| Real::root_rational(q, 6, ctx.prec);
    let records = pairs(ctx, &[], |base, p, q, probe| {
        require_interior(p)?;
        require_interior(q)?;
        let sum = p.minkowski_sum(q)?;
        let v_sum = projection_body(&sum)?.volume();
        let v_p = projection_body(p)?.volume();
        let v_q = projection_body(q)?.volume();
        let lhs = sixth(&v_sum);
        let rhs = sixth(&v_p).add(&sixth(&v_q));
        Ok(ctx.inequality(base, &lhs, &rhs, probe))
    })?;
    Ok((records, Metadata::new()))
}

fn root(v: &Value, i: u32, prec: u32) -> Real {
    match v {
        Value::Exact(q) => Real::root_rational(q, i, prec),
        Value::Enclosed(r) => r.nth_root(i),
    }
}

pub(super) fn run_intrinsic(ctx: &Ctx) -> Result<(Vec<TrialRecord>, Metadata)> {
    let i = ctx.cfg.i;
    let cube = Polytope::unit_cube(3);
    let extra = [("unit-cubes", cube.clone(), cube)];
    let records = pairs(ctx, &extra, |base, p, q, probe| {
        let sum = p.minkowski_sum(q)?;
        let v = |x: &Polytope| intrinsic_volume(x, i, ctx.prec).map(|v| root(&v, i as u32, ctx.prec));
        let lhs = v(&sum)?;
        let rhs = v(p)?.add(&v(q)?);
        Ok(ctx.inequality(base, &lhs, &rhs, probe))
    })?;
    Ok((records, Metadata::new()))
}
