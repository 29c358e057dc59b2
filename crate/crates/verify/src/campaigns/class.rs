//! W_0(ΠK)/W_0(K)² >= W_0(Π²K)/W_0(ΠK)², all in rational arithmetic.

use num_rational::BigRational;
use valharm_geometry::{projection_body, rat, Polytope};

use super::{demote, probe_shift, Ctx, Metadata, RecordBase};
use crate::error::Result;
use crate::report::{BodyInput, TrialRecord};

struct Ratios {
    lhs: BigRational,
    rhs: BigRational,
    problem: Option<String>,
}

fn ratios(k: &Polytope) -> Result<Ratios> {
    let pk = projection_body(k)?;
    let a = pk.volume();
    let a_hull = pk.to_polytope().volume();
    let problem = (a != a_hull).then(|| format!("vol(ΠK) by generators {a} and by hull {a_hull} disagree"));
    let v = k.volume();
    let c = pk.projection_body().volume();
    Ok(Ratios {
        lhs: &a / (&v * &v),
        rhs: c / (&a * &a),
        problem,
    })
}

pub(super) fn run(ctx: &Ctx) -> Result<(Vec<TrialRecord>, Metadata)> {
    let mut records = ctx.random_trials(|t, rng| {
        let k = ctx.random_body(rng)?;
        let r = ratios(&k)?;
        let base = RecordBase::new(t, "random", vec![BodyInput::polytope("K", &k)]);
        Ok(demote(ctx.exact_inequality(base, &r.lhs, &r.rhs, false), r.problem))
    })?;
    records.extend(ctx.probes(&["cube", "translate"], |t, name, rng| {
        if name == "cube" {
            // Π²K is a homothet of K = [-1,1]³.
            let k = Polytope::centered_cube(3, &rat(1, 1));
            let r = ratios(&k)?;
            let base = RecordBase::new(t, name, vec![BodyInput::polytope("K", &k)]);
            return Ok(demote(ctx.exact_inequality(base, &r.lhs, &r.rhs, true), r.problem));
        }
        let k = ctx.random_body(rng)?;
        let moved = k.translate(&probe_shift());
        let (r, m) = (ratios(&k)?, ratios(&moved)?);
        let changed = (r.lhs != m.lhs || r.rhs != m.rhs).then(|| "translation changed the ratios".to_string());
        let base = RecordBase::new(t, name, vec![BodyInput::polytope("K", &k), BodyInput::polytope("K + x", &moved)]);
        Ok(demote(ctx.exact_inequality(base, &m.lhs, &m.rhs, false), changed.or(m.problem)))
    })?);
    Ok((records, Metadata::new()))
}
