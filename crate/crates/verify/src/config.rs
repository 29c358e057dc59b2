use num_rational::BigRational;
use num_traits::Signed;
use serde::{Deserialize, Serialize};
use valharm_geometry::{parse_rational, MAX_LEVEL};

use crate::error::{ConfigError, Error, Result};

/// The inequality or identity a campaign exercises.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Campaign {
    /// W_{n-1-i}(K, Φ_i L) = W_{n-1-i}(L, Φ_i K).
    BivaluationSymmetry,
    /// Brunn-Minkowski for V_{i+1} ∘ Φ_i.
    BmMinkowskiValuation,
    /// Brunn-Minkowski for the intrinsic volume V_i.
    IntrinsicBm,
    /// W_i(K,L)^{n-i} >= W_i(K)^{n-i-1} W_i(L).
    GeneralMinkowski,
    /// V_1(K+L, C)^{1/2} >= V_1(K, C)^{1/2} + V_1(L, C)^{1/2}.
    GeneralBm,
    /// Constancy of W_2(Φ_i K) / W_{3-i}(K).
    RConstant,
    /// W_1(K)^3 >= κ_3² / r³ · W_0(ΠK).
    Upbound,
    /// W_0(ΠK)/W_0(K)² >= W_0(Π²K)/W_0(ΠK)².
    ClassReduction,
}

impl Campaign {
    pub const ALL: [Campaign; 8] = [
        Campaign::BivaluationSymmetry,
        Campaign::BmMinkowskiValuation,
        Campaign::IntrinsicBm,
        Campaign::GeneralMinkowski,
        Campaign::GeneralBm,
        Campaign::RConstant,
        Campaign::Upbound,
        Campaign::ClassReduction,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Campaign::BivaluationSymmetry => "bivaluation-symmetry",
            Campaign::BmMinkowskiValuation => "bm-minkowski-valuation",
            Campaign::IntrinsicBm => "intrinsic-bm",
            Campaign::GeneralMinkowski => "general-minkowski",
            Campaign::GeneralBm => "general-bm",
            Campaign::RConstant => "r-constant",
            Campaign::Upbound => "upbound",
            Campaign::ClassReduction => "class-reduction",
        }
    }

    /// Values of i the campaign accepts.
    pub fn allowed_i(self) -> &'static [usize] {
        match self {
            Campaign::BivaluationSymmetry | Campaign::RConstant => &[1, 2],
            Campaign::BmMinkowskiValuation | Campaign::Upbound | Campaign::ClassReduction => &[2],
            Campaign::IntrinsicBm => &[2, 3],
            Campaign::GeneralMinkowski => &[0, 1],
            Campaign::GeneralBm => &[1],
        }
    }

    /// Campaigns whose verdicts are decided in rational arithmetic and so
    /// may not end inconclusive.
    pub fn exactness_required(self, i: usize) -> bool {
        match self {
            Campaign::BivaluationSymmetry => i == 2,
            Campaign::GeneralMinkowski => i == 0,
            Campaign::ClassReduction => true,
            _ => false,
        }
    }
}

impl std::fmt::Display for Campaign {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, rename_all = "kebab-case")]
pub struct Tolerances {
    /// Largest |slack| accepted as equality in homothety probes.
    #[serde(default = "default_equality")]
    pub equality: f64,
    /// Slack above which a probe counts as strict.
    #[serde(default = "default_slack_floor")]
    pub slack_floor: f64,
}

fn default_equality() -> f64 {
    1e-25
}

fn default_slack_floor() -> f64 {
    1e-12
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances {
            equality: default_equality(),
            slack_floor: default_slack_floor(),
        }
    }
}

/// One campaign run. Parsed from JSON with kebab-case keys.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, rename_all = "kebab-case")]
pub struct ExperimentConfig {
    pub theorem: Campaign,
    #[serde(default = "default_n")]
    pub n: usize,
    pub i: usize,
    pub trials: usize,
    pub seed: u64,
    #[serde(default = "default_level")]
    pub ball_level: u32,
    #[serde(default)]
    pub tolerances: Tolerances,
    /// Points per random polytope.
    #[serde(default = "default_vertices")]
    pub vertices: usize,
    /// Half-width of the coordinate box, as a rational string.
    #[serde(default = "default_box", rename = "box")]
    pub box_bound: String,
    /// Decimal digits of the interval arithmetic; defaults to the
    /// VALHARM_PRECISION environment variable, else 50.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub digits: Option<u32>,
    /// Append the campaign's fixed probes after the random trials.
    #[serde(default = "default_true")]
    pub probes: bool,
}

fn default_n() -> usize {
    3
}

fn default_level() -> u32 {
    3
}

fn default_vertices() -> usize {
    10
}

fn default_box() -> String {
    "1".into()
}

fn default_true() -> bool {
    true
}

/// Highest ball level at which Π_1 is built; the Minkowski sum with the
/// inner ball body grows with its vertex count.
pub const MAX_PI1_LEVEL: u32 = 4;

impl ExperimentConfig {
    /// Defaults for everything but the campaign, i, trial count and seed.
    pub fn new(theorem: Campaign, i: usize, trials: usize, seed: u64) -> ExperimentConfig {
        ExperimentConfig {
            theorem,
            n: default_n(),
            i,
            trials,
            seed,
            ball_level: default_level(),
            tolerances: Tolerances::default(),
            vertices: default_vertices(),
            box_bound: default_box(),
            digits: None,
            probes: true,
        }
    }

    pub fn from_json(s: &str) -> Result<ExperimentConfig> {
        let cfg: ExperimentConfig =
            serde_json::from_str(s).map_err(|e| Error::Config(ConfigError::Schema(e.to_string())))?;
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::Config(ConfigError::Invalid(msg)));
        if self.n != 3 {
            return bad(format!("n must be 3, got {}", self.n));
        }
        if !self.theorem.allowed_i().contains(&self.i) {
            return bad(format!("{} accepts i in {:?}, got {}", self.theorem, self.theorem.allowed_i(), self.i));
        }
        if self.trials == 0 {
            return bad("trials must be at least 1".into());
        }
        for (name, t) in [("equality", self.tolerances.equality), ("slack-floor", self.tolerances.slack_floor)] {
            if !(t.is_finite() && t > 0.0) {
                return bad(format!("tolerance {name} must be positive, got {t}"));
            }
        }
        if self.ball_level > MAX_LEVEL {
            return bad(format!("ball-level must be at most {MAX_LEVEL}, got {}", self.ball_level));
        }
        if self.i == 1 && self.uses_pi1() && self.ball_level > MAX_PI1_LEVEL {
            return bad(format!("Π_1 campaigns need ball-level at most {MAX_PI1_LEVEL}, got {}", self.ball_level));
        }
        if !(4..=64).contains(&self.vertices) {
            return bad(format!("vertices must be in 4..=64, got {}", self.vertices));
        }
        match parse_rational(&self.box_bound) {
            Ok(b) if b.is_positive() => {}
            _ => return bad(format!("box must be a positive rational, got {:?}", self.box_bound)),
        }
        if self.digits == Some(0) {
            return bad("digits must be positive".into());
        }
        Ok(())
    }

    fn uses_pi1(&self) -> bool {
        matches!(self.theorem, Campaign::BivaluationSymmetry | Campaign::RConstant)
    }

    pub fn box_rational(&self) -> BigRational {
        parse_rational(&self.box_bound).expect("validated")
    }

    pub fn exactness_required(&self) -> bool {
        self.theorem.exactness_required(self.i)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_with_defaults() {
        let cfg = ExperimentConfig::from_json(r#"{"theorem": "bivaluation-symmetry", "i": 2, "trials": 5, "seed": 7}"#)
            .unwrap();
        assert_eq!(cfg, ExperimentConfig::new(Campaign::BivaluationSymmetry, 2, 5, 7));
    }

    #[test]
    fn rejects_bad_configs() {
        for s in [
            r#"{"theorem": "bivaluation-symmetry", "i": 0, "trials": 5, "seed": 7}"#,
            r#"{"theorem": "upbound", "i": 2, "trials": 0, "seed": 7}"#,
            r#"{"theorem": "upbound", "i": 2, "trials": 1, "seed": 7, "n": 4}"#,
            r#"{"theorem": "upbound", "i": 2, "trials": 1, "seed": 7, "tolerances": {"equality": 0}}"#,
            r#"{"theorem": "upbound", "i": 2, "trials": 1, "seed": 7, "colour": "red"}"#,
            r#"{"theorem": "no-such", "i": 2, "trials": 1, "seed": 7}"#,
            r#"{"theorem": "r-constant", "i": 1, "trials": 1, "seed": 7, "ball-level": 6}"#,
            r#"{"theorem": "upbound", "i": 2, "trials": 1, "seed": 7, "box": "-1"}"#,
        ] {
            assert!(matches!(ExperimentConfig::from_json(s), Err(Error::Config(_))), "{s}");
        }
    }
}
