//! Randomised verification campaigns for inequalities between mixed
//! volumes of Minkowski valuations in R³.
//!
//! A campaign is described by an [`ExperimentConfig`] and produces a
//! [`Report`]: one [`TrialRecord`] per random trial or fixed probe, each with
//! enclosures of both sides and a [`Verdict`]. Rational quantities are
//! compared exactly; everything else goes through certified intervals, so
//! a `VIOLATION` is only reported when the two sides are provably out of
//! order.
//!
//! ```
//! use valharm_verify::{run, Campaign, ExperimentConfig, Verdict};
//!
//! let cfg = ExperimentConfig::new(Campaign::ClassReduction, 2, 3, 7);
//! let report = run(&cfg)?;
//! assert_eq!(report.exit_code(), 0);
//! assert!(report.records.iter().all(|r| r.verdict == Verdict::HoldsExact));
//! # Ok::<(), valharm_verify::Error>(())
//! ```

mod campaigns;
mod config;
mod error;
mod report;

use std::time::Instant;

pub use config::{Campaign, ExperimentConfig, Tolerances, MAX_PI1_LEVEL};
pub use error::{ConfigError, Error, Result};
pub use report::{
    BodyInput, Enclosure, Report, Summary, TrialRecord, Verdict, EXIT_INCONCLUSIVE, EXIT_OK, EXIT_VIOLATION,
    REPORT_SCHEMA_VERSION,
};

/// Validates the config and runs its campaign.
pub fn run(cfg: &ExperimentConfig) -> Result<Report> {
    cfg.validate()?;
    let start = Instant::now();
    let ctx = campaigns::Ctx::new(cfg);
    let (records, metadata) = campaigns::dispatch(&ctx)?;
    let elapsed = start.elapsed().as_millis() as u64;
    Ok(Report::new(cfg, ctx.digits, records, metadata, elapsed))
}

macro_rules! campaign_fn {
    ($(#[$doc:meta] $name:ident => $campaign:ident;)*) => {$(
        #[$doc]
        pub fn $name(cfg: &ExperimentConfig) -> Result<Report> {
            if cfg.theorem != Campaign::$campaign {
                return Err(Error::Config(ConfigError::Invalid(format!(
                    "{} called with a {} config",
                    stringify!($name),
                    cfg.theorem
                ))));
            }
            run(cfg)
        }
    )*};
}

campaign_fn! {
    /// V(P,P,ΠQ) = V(Q,Q,ΠP) exactly (i = 2), or W_1(P,Π_1Q) = W_1(Q,Π_1P) up to enclosures (i = 1).
    verify_bivaluation_symmetry => BivaluationSymmetry;
    /// V_3(Π(P+Q))^{1/6} >= V_3(ΠP)^{1/6} + V_3(ΠQ)^{1/6}.
    verify_bm_minkowski_valuation => BmMinkowskiValuation;
    /// V_i(P+Q)^{1/i} >= V_i(P)^{1/i} + V_i(Q)^{1/i} for i ∈ {2, 3}.
    verify_intrinsic_bm => IntrinsicBm;
    /// W_i(K,L)^{3-i} >= W_i(K)^{2-i} W_i(L) for i ∈ {0, 1}.
    verify_general_minkowski => GeneralMinkowski;
    /// V_1(K+L,C)^{1/2} >= V_1(K,C)^{1/2} + V_1(L,C)^{1/2} for one fixed random C.
    verify_general_bm => GeneralBm;
    /// Constancy of W_2(Φ_i K) / W_{3-i}(K) over a corpus of bodies.
    estimate_r_constant => RConstant;
    /// W_1(K)^3 >= κ_3² / r(Π)³ · W_0(ΠK).
    verify_upbound => Upbound;
    /// W_0(ΠK)/W_0(K)² >= W_0(Π²K)/W_0(ΠK)².
    verify_class_reduction => ClassReduction;
}
