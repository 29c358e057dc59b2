use std::collections::BTreeMap;
use std::io::Write;

use num_rational::BigRational;
use serde::{Deserialize, Serialize};
use valharm_geometry::json::PolytopeJson;
use valharm_geometry::{format_rational, Polytope, Real};

use crate::config::{Campaign, ExperimentConfig};
use crate::error::{Error, Result};

/// Version of the report JSON layout.
pub const REPORT_SCHEMA_VERSION: u32 = 1;

/// Exit status of a campaign run.
pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATION: i32 = 2;
pub const EXIT_INCONCLUSIVE: i32 = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Verdict {
    #[serde(rename = "holds-exact")]
    HoldsExact,
    #[serde(rename = "holds-certified")]
    HoldsCertified,
    #[serde(rename = "inconclusive-enclosure")]
    InconclusiveEnclosure,
    #[serde(rename = "VIOLATION")]
    Violation,
}

impl Verdict {
    pub fn name(self) -> &'static str {
        match self {
            Verdict::HoldsExact => "holds-exact",
            Verdict::HoldsCertified => "holds-certified",
            Verdict::InconclusiveEnclosure => "inconclusive-enclosure",
            Verdict::Violation => "VIOLATION",
        }
    }

    pub fn holds(self) -> bool {
        matches!(self, Verdict::HoldsExact | Verdict::HoldsCertified)
    }
}

/// A reported number: decimal endpoints rounded outward, plus the exact
/// rational when there is one.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Enclosure {
    pub lo: String,
    pub hi: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub exact: Option<String>,
}

impl Enclosure {
    pub fn real(r: &Real, digits: u32) -> Enclosure {
        Enclosure {
            lo: r.lo_decimal(digits),
            hi: r.hi_decimal(digits),
            exact: None,
        }
    }

    pub fn exact(q: &BigRational, digits: u32) -> Enclosure {
        let r = Real::from_rational(q, valharm_geometry::bits_for_digits(digits));
        Enclosure {
            exact: Some(format_rational(q)),
            ..Enclosure::real(&r, digits)
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BodyInput {
    pub name: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub polytope: Option<PolytopeJson>,
}

impl BodyInput {
    pub fn polytope(name: &str, p: &Polytope) -> BodyInput {
        BodyInput {
            name: name.into(),
            polytope: Some(PolytopeJson::from(p)),
        }
    }

    pub fn named(name: &str) -> BodyInput {
        BodyInput {
            name: name.into(),
            polytope: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TrialRecord {
    pub trial: usize,
    /// "random" or the name of a fixed probe.
    pub kind: String,
    pub inputs: Vec<BodyInput>,
    pub lhs: Enclosure,
    pub rhs: Enclosure,
    /// lhs - rhs.
    pub slack: Enclosure,
    pub verdict: Verdict,
    /// For probes with a known equality case: whether |slack| met the
    /// equality tolerance.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub equality: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl TrialRecord {
    pub fn is_random(&self) -> bool {
        self.kind == "random"
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub struct Summary {
    pub trials: usize,
    pub holds_exact: usize,
    pub holds_certified: usize,
    pub inconclusive: usize,
    pub violations: usize,
}

impl Summary {
    pub fn of(records: &[TrialRecord]) -> Summary {
        let mut s = Summary {
            trials: records.len(),
            ..Summary::default()
        };
        for r in records {
            match r.verdict {
                Verdict::HoldsExact => s.holds_exact += 1,
                Verdict::HoldsCertified => s.holds_certified += 1,
                Verdict::InconclusiveEnclosure => s.inconclusive += 1,
                Verdict::Violation => s.violations += 1,
            }
        }
        s
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub struct Report {
    pub schema_version: u32,
    pub campaign: Campaign,
    pub config: ExperimentConfig,
    pub exactness_required: bool,
    pub precision_digits: u32,
    pub records: Vec<TrialRecord>,
    pub summary: Summary,
    /// Campaign-level values such as the Π_1 constant or the r enclosure.
    pub metadata: BTreeMap<String, serde_json::Value>,
    pub libraries: BTreeMap<String, String>,
    /// The only field allowed to differ between identical runs.
    pub wall_time_ms: u64,
}

impl Report {
    pub fn new(
        config: &ExperimentConfig,
        digits: u32,
        mut records: Vec<TrialRecord>,
        metadata: BTreeMap<String, serde_json::Value>,
        wall_time_ms: u64,
    ) -> Report {
        records.sort_by_key(|r| r.trial);
        let libraries = [
            ("valharm-verify", env!("CARGO_PKG_VERSION")),
            ("valharm-geometry", valharm_geometry::VERSION),
        ]
        .into_iter()
        .map(|(k, v)| (k.to_string(), v.to_string()))
        .collect();
        Report {
            schema_version: REPORT_SCHEMA_VERSION,
            campaign: config.theorem,
            config: config.clone(),
            exactness_required: config.exactness_required(),
            precision_digits: digits,
            summary: Summary::of(&records),
            records,
            metadata,
            libraries,
            wall_time_ms,
        }
    }

    /// 2 on any violation, 3 on an inconclusive verdict in a campaign that
    /// requires exactness, else 0.
    pub fn exit_code(&self) -> i32 {
        if self.summary.violations > 0 {
            EXIT_VIOLATION
        } else if self.exactness_required && self.summary.inconclusive > 0 {
            EXIT_INCONCLUSIVE
        } else {
            EXIT_OK
        }
    }

    pub fn random_records(&self) -> impl Iterator<Item = &TrialRecord> {
        self.records.iter().filter(|r| r.is_random())
    }

    pub fn probe(&self, kind: &str) -> Option<&TrialRecord> {
        self.records.iter().find(|r| r.kind == kind)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serialisable")
    }

    /// JSON with the wall time zeroed, for comparing runs.
    pub fn canonical_json(&self) -> String {
        let mut copy = self.clone();
        copy.wall_time_ms = 0;
        copy.to_json()
    }

    pub fn from_json(s: &str) -> Result<Report> {
        serde_json::from_str(s).map_err(|e| Error::Output(e.to_string()))
    }

    /// One CSV row per trial record.
    pub fn write_csv<W: Write>(&self, w: W) -> Result<()> {
        let mut out = csv::Writer::from_writer(w);
        let err = |e: csv::Error| Error::Output(e.to_string());
        out.write_record([
            "trial", "kind", "verdict", "lhs_lo", "lhs_hi", "rhs_lo", "rhs_hi", "slack_lo", "slack_hi", "equality",
        ])
        .map_err(err)?;
        for r in &self.records {
            let eq = r.equality.map(|e| e.to_string()).unwrap_or_default();
            out.write_record([
                &r.trial.to_string(),
                &r.kind,
                r.verdict.name(),
                &r.lhs.lo,
                &r.lhs.hi,
                &r.rhs.lo,
                &r.rhs.hi,
                &r.slack.lo,
                &r.slack.hi,
                &eq,
            ])
            .map_err(err)?;
        }
        out.flush().map_err(|e| Error::Output(e.to_string()))
    }
}
