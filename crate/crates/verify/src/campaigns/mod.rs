use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::Signed;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use valharm_geometry::{bits_for_digits, default_digits, random_polytope_from, rat, Polytope, Real, RationalVector};

use crate::config::{Campaign, ExperimentConfig};
use crate::error::Result;
use crate::report::{BodyInput, Enclosure, TrialRecord, Verdict};

mod bm;
mod class;
mod general;
mod rconst;
mod symmetry;

pub(crate) type Metadata = BTreeMap<String, serde_json::Value>;

pub(crate) fn dispatch(ctx: &Ctx) -> Result<(Vec<TrialRecord>, Metadata)> {
    match ctx.cfg.theorem {
        Campaign::BivaluationSymmetry => symmetry::run(ctx),
        Campaign::BmMinkowskiValuation => bm::run_minkowski_valuation(ctx),
        Campaign::IntrinsicBm => bm::run_intrinsic(ctx),
        Campaign::GeneralMinkowski => general::run_minkowski(ctx),
        Campaign::GeneralBm => general::run_bm(ctx),
        Campaign::RConstant => rconst::run_r_constant(ctx),
        Campaign::Upbound => rconst::run_upbound(ctx),
        Campaign::ClassReduction => class::run(ctx),
    }
}

/// Stream index of the body shared by all trials of a campaign.
const SHARED_STREAM: u64 = u64::MAX;

/// Homothety factors used by the equality probes.
const HOMOTHETY_FACTORS: [(i64, i64); 3] = [(1, 2), (1, 1), (3, 1)];

pub(crate) struct Ctx<'a> {
    pub cfg: &'a ExperimentConfig,
    pub digits: u32,
    pub prec: u32,
    pub bound: BigRational,
    equality_tol: BigRational,
    slack_floor: BigRational,
}

impl<'a> Ctx<'a> {
    pub fn new(cfg: &'a ExperimentConfig) -> Ctx<'a> {
        let digits = cfg.digits.unwrap_or_else(default_digits);
        Ctx {
            cfg,
            digits,
            prec: bits_for_digits(digits),
            bound: cfg.box_rational(),
            equality_tol: BigRational::from_float(cfg.tolerances.equality).expect("finite"),
            slack_floor: BigRational::from_float(cfg.tolerances.slack_floor).expect("finite"),
        }
    }

    /// Generator for one trial: the campaign seed on stream `stream`.
    pub fn rng(&self, stream: u64) -> ChaCha8Rng {
        let mut rng = ChaCha8Rng::seed_from_u64(self.cfg.seed);
        rng.set_stream(stream);
        rng
    }

    pub fn random_body(&self, rng: &mut ChaCha8Rng) -> Result<Polytope> {
        Ok(random_polytope_from(rng, self.cfg.vertices, &self.bound)?)
    }

    pub fn shared_body(&self) -> Result<Polytope> {
        self.random_body(&mut self.rng(SHARED_STREAM))
    }

    /// Runs `f` for every random trial in parallel; records come back in
    /// trial order.
    pub fn random_trials<F>(&self, f: F) -> Result<Vec<TrialRecord>>
    where
        F: Fn(usize, &mut ChaCha8Rng) -> Result<TrialRecord> + Sync,
    {
        (0..self.cfg.trials)
            .into_par_iter()
            .map(|t| f(t, &mut self.rng(t as u64)))
            .collect()
    }

    /// Numbers the probes after the random trials and runs them if enabled.
    pub fn probes<F>(&self, names: &[&str], f: F) -> Result<Vec<TrialRecord>>
    where
        F: Fn(usize, &str, &mut ChaCha8Rng) -> Result<TrialRecord> + Sync,
    {
        if !self.cfg.probes {
            return Ok(Vec::new());
        }
        names
            .par_iter()
            .enumerate()
            .map(|(j, name)| {
                let t = self.cfg.trials + j;
                f(t, name, &mut self.rng(t as u64))
            })
            .collect()
    }

    pub fn real(&self, r: &Real) -> Enclosure {
        Enclosure::real(r, self.digits)
    }

    pub fn exact(&self, q: &BigRational) -> Enclosure {
        Enclosure::exact(q, self.digits)
    }

    fn within_equality(&self, slack: &Real) -> bool {
        slack.lo().abs() <= self.equality_tol && slack.hi().abs() <= self.equality_tol
    }

    /// Certified lhs >= rhs; `expect_equal` marks homothety probes.
    pub fn inequality(&self, base: RecordBase, lhs: &Real, rhs: &Real, expect_equal: bool) -> TrialRecord {
        let slack = lhs.sub(rhs);
        let equal = self.within_equality(&slack);
        let verdict = if slack.is_nonnegative() {
            Verdict::HoldsCertified
        } else if lhs.certainly_lt(rhs) {
            Verdict::Violation
        } else if expect_equal && equal {
            Verdict::HoldsCertified
        } else {
            Verdict::InconclusiveEnclosure
        };
        base.finish(self.real(lhs), self.real(rhs), self.real(&slack), verdict, expect_equal.then_some(equal))
    }

    /// Exact lhs >= rhs.
    pub fn exact_inequality(&self, base: RecordBase, lhs: &BigRational, rhs: &BigRational, expect_equal: bool) -> TrialRecord {
        let verdict = if lhs >= rhs { Verdict::HoldsExact } else { Verdict::Violation };
        base.finish(
            self.exact(lhs),
            self.exact(rhs),
            self.exact(&(lhs - rhs)),
            verdict,
            expect_equal.then_some(lhs == rhs),
        )
    }

    /// Exact lhs = rhs.
    pub fn exact_equality(&self, base: RecordBase, lhs: &BigRational, rhs: &BigRational) -> TrialRecord {
        let verdict = if lhs == rhs { Verdict::HoldsExact } else { Verdict::Violation };
        base.finish(self.exact(lhs), self.exact(rhs), self.exact(&(lhs - rhs)), verdict, Some(lhs == rhs))
    }

    /// lhs = rhs up to the enclosures: a violation needs them disjoint.
    pub fn enclosed_equality(&self, base: RecordBase, lhs: &Real, rhs: &Real) -> TrialRecord {
        let verdict = if lhs.intersects(rhs) {
            Verdict::HoldsCertified
        } else {
            Verdict::Violation
        };
        let slack = lhs.sub(rhs);
        base.finish(self.real(lhs), self.real(rhs), self.real(&slack), verdict, None)
    }

    /// Whether a certified slack clears the configured floor.
    pub fn strict(&self, slack: &Real) -> bool {
        slack.lo() > self.slack_floor
    }
}

/// The parts of a record known before the verdict.
pub(crate) struct RecordBase {
    trial: usize,
    kind: String,
    inputs: Vec<BodyInput>,
    note: Option<String>,
}

impl RecordBase {
    pub fn new(trial: usize, kind: &str, inputs: Vec<BodyInput>) -> RecordBase {
        RecordBase {
            trial,
            kind: kind.into(),
            inputs,
            note: None,
        }
    }

    pub fn note(mut self, note: impl Into<String>) -> RecordBase {
        self.note = Some(note.into());
        self
    }

    fn finish(self, lhs: Enclosure, rhs: Enclosure, slack: Enclosure, verdict: Verdict, equality: Option<bool>) -> TrialRecord {
        TrialRecord {
            trial: self.trial,
            kind: self.kind,
            inputs: self.inputs,
            lhs,
            rhs,
            slack,
            verdict,
            equality,
            note: self.note,
        }
    }
}

/// Turns a record into an inconclusive one when two exact routes to the
/// same number disagree.
pub(crate) fn demote(mut rec: TrialRecord, problem: Option<String>) -> TrialRecord {
    if let Some(p) = problem {
        rec.verdict = Verdict::InconclusiveEnclosure;
        rec.note = Some(match rec.note.take() {
            Some(n) => format!("{n}; {p}"),
            None => p,
        });
    }
    rec
}

fn inputs(p: &Polytope, q: &Polytope) -> Vec<BodyInput> {
    vec![BodyInput::polytope("P", p), BodyInput::polytope("Q", q)]
}

/// Runs the random pairs and the homothety probes Q = tP + x through `check`.
pub(crate) fn pairs<F>(ctx: &Ctx, extra: &[(&str, Polytope, Polytope)], check: F) -> Result<Vec<TrialRecord>>
where
    F: Fn(RecordBase, &Polytope, &Polytope, bool) -> Result<TrialRecord> + Sync,
{
    let mut records = ctx.random_trials(|t, rng| {
        let p = ctx.random_body(rng)?;
        let q = ctx.random_body(rng)?;
        check(RecordBase::new(t, "random", inputs(&p, &q)), &p, &q, false)
    })?;
    let homotheties = homothety_probes();
    let mut names: Vec<&str> = homotheties.iter().map(|(n, _)| n.as_str()).collect();
    names.extend(extra.iter().map(|(n, ..)| *n));
    records.extend(ctx.probes(&names, |t, name, rng| {
        if let Some((_, p, q)) = extra.iter().find(|(n, ..)| *n == name) {
            return check(RecordBase::new(t, name, inputs(p, q)), p, q, true);
        }
        let (_, s) = homotheties.iter().find(|(n, _)| n == name).expect("probe name");
        let p = ctx.random_body(rng)?;
        let q = homothet(&p, s);
        check(RecordBase::new(t, name, inputs(&p, &q)), &p, &q, true)
    })?);
    Ok(records)
}

/// Translation used by the probes.
pub(crate) fn probe_shift() -> RationalVector {
    RationalVector::new(vec![rat(1, 4), rat(-3, 8), rat(1, 2)])
}

/// The probe image tP + x.
pub(crate) fn homothet(p: &Polytope, t: &BigRational) -> Polytope {
    p.scale(t).translate(&probe_shift())
}

/// Probe names "homothety-1/2", "homothety-1", "homothety-3" and their
/// factors.
pub(crate) fn homothety_probes() -> Vec<(String, BigRational)> {
    HOMOTHETY_FACTORS
        .iter()
        .map(|&(p, q)| {
            let t = rat(p, q);
            (format!("homothety-{}", valharm_geometry::format_rational(&t)), t)
        })
        .collect()
}

pub(crate) fn decimal(r: &Real, digits: u32) -> serde_json::Value {
    serde_json::json!({ "lo": r.lo_decimal(digits), "hi": r.hi_decimal(digits) })
}

