use std::io::Write;

use num_bigint::BigInt;
use serde::Serialize;
use valharm_core::json::WeightJson;
use valharm_core::{
    bivaluation_symmetry_verdict_for, branch_restriction, decompose_character, dimension, enumerate_val_weights,
    equivariant_dimension, fundamental_character, irreducible_character, on_lift_classification,
    reality_classification, symmetric_power_character, symmetry_verdict_from_weights, val_multiplicity_alternating,
    val_multiplicity_conditions, CharacterMap, GroupTag, HighestWeight, InvarianceGroup, OnLift, Reality,
    SymmetryVerdict,
};
use valharm_verify::{ExperimentConfig, Verdict};

use crate::args::{Format, Group, Method};
use crate::CliError;

type Out<'a> = &'a mut dyn Write;

fn io(e: std::io::Error) -> CliError {
    CliError::Io(e.to_string())
}

fn usage(e: impl std::fmt::Display) -> CliError {
    CliError::Usage(e.to_string())
}

fn check_range(n: usize, i: usize) -> Result<(), CliError> {
    if n < 3 {
        return Err(CliError::Usage(format!("n must be at least 3, got {n}")));
    }
    if i > n {
        return Err(CliError::Usage(format!("i must be in 0..={n}, got {i}")));
    }
    Ok(())
}

/// Parses "2,2,-2". A minus sign is accepted on the last entry only, and
/// the result must be a highest weight of SO(n).
pub fn parse_lambda(n: usize, s: &str) -> Result<HighestWeight, CliError> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    let mut entries = Vec::with_capacity(parts.len());
    for (k, p) in parts.iter().enumerate() {
        if p.starts_with('-') && k + 1 != parts.len() {
            return Err(CliError::Usage(format!("only the last entry of --lambda may be negative: {s:?}")));
        }
        entries.push(p.parse::<i64>().map_err(|_| CliError::Usage(format!("bad --lambda entry {p:?}")))?);
    }
    HighestWeight::new(n, entries).map_err(usage)
}

fn tuple(entries: &[i64]) -> String {
    let inner: Vec<String> = entries.iter().map(i64::to_string).collect();
    format!("({})", inner.join(","))
}

fn write_json<T: Serialize>(out: Out, value: &T) -> Result<(), CliError> {
    let text = serde_json::to_string_pretty(value).map_err(|e| CliError::Io(e.to_string()))?;
    writeln!(out, "{text}").map_err(io)
}

#[derive(Serialize)]
struct WeightRow {
    n: usize,
    lambda: Vec<i64>,
    dimension: String,
    reality: String,
    lift: String,
}

pub fn decompose(out: Out, n: usize, i: usize, cap: i64, format: Format) -> Result<i32, CliError> {
    check_range(n, i)?;
    if cap < 0 {
        return Err(CliError::Usage(format!("cap must be non-negative, got {cap}")));
    }
    let rows: Vec<WeightRow> = enumerate_val_weights(n, i, cap)
        .map_err(usage)?
        .iter()
        .map(|l| WeightRow {
            n,
            lambda: l.entries().to_vec(),
            dimension: dimension(n, l.entries()).map(|d| d.to_string()).unwrap_or_default(),
            reality: match reality_classification(l) {
                Reality::Real => "real".into(),
                Reality::DualPair { partner } => format!("dual to {}", tuple(partner.entries())),
            },
            lift: match on_lift_classification(l) {
                OnLift::TwoLifts => "two lifts".into(),
                OnLift::PairedLift { partner } => format!("paired with {}", tuple(partner.entries())),
            },
        })
        .collect();
    match format {
        Format::Json => write_json(out, &rows)?,
        Format::Csv => {
            writeln!(out, "n,lambda,dimension,reality,lift").map_err(io)?;
            for r in &rows {
                writeln!(out, "{},\"{}\",{},{},{}", r.n, tuple(&r.lambda), r.dimension, r.reality, r.lift).map_err(io)?;
            }
        }
        Format::Table => {
            writeln!(out, "Val_{i} for SO({n}), λ_1 <= {cap}: {} weights", rows.len()).map_err(io)?;
            writeln!(out, "{:<16} {:>12}  {:<16} lift", "lambda", "dimension", "reality").map_err(io)?;
            for r in &rows {
                writeln!(out, "{:<16} {:>12}  {:<16} {}", tuple(&r.lambda), r.dimension, r.reality, r.lift).map_err(io)?;
            }
        }
    }
    Ok(0)
}

#[derive(Serialize)]
struct MultiplicityOut {
    n: usize,
    i: usize,
    lambda: Vec<i64>,
    method: &'static str,
    multiplicity: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    mult_conditions: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    mult_alternating: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    agree: Option<bool>,
}

pub fn multiplicity(out: Out, n: usize, i: usize, lambda: &str, method: Method, format: Format) -> Result<i32, CliError> {
    check_range(n, i)?;
    let l = parse_lambda(n, lambda)?;
    let cond = matches!(method, Method::Conditions | Method::Both).then(|| val_multiplicity_conditions(n, i, &l));
    let alt = match method {
        Method::Alternating | Method::Both => Some(val_multiplicity_alternating(n, i, &l).map_err(usage)?),
        Method::Conditions => None,
    };
    let agree = cond.zip(alt).map(|(a, b)| a == b);
    let record = MultiplicityOut {
        n,
        i,
        lambda: l.entries().to_vec(),
        method: match method {
            Method::Conditions => "conditions",
            Method::Alternating => "alternating",
            Method::Both => "both",
        },
        multiplicity: cond.or(alt).expect("one method ran"),
        mult_conditions: cond,
        mult_alternating: alt,
        agree,
    };
    match format {
        Format::Json => write_json(out, &record)?,
        Format::Csv => {
            writeln!(out, "n,i,lambda,method,multiplicity,conditions,alternating").map_err(io)?;
            let opt = |x: Option<u32>| x.map(|v| v.to_string()).unwrap_or_default();
            writeln!(
                out,
                "{n},{i},\"{}\",{},{},{},{}",
                tuple(&record.lambda),
                record.method,
                record.multiplicity,
                opt(cond),
                opt(alt)
            )
            .map_err(io)?;
        }
        Format::Table => {
            write!(out, "multiplicity of {} in Val_{i} for SO({n}): {}", tuple(&record.lambda), record.multiplicity)
                .map_err(io)?;
            match (cond, alt) {
                (Some(c), Some(a)) => writeln!(
                    out,
                    " (conditions {c}, alternating sum {a}, {})",
                    if c == a { "agree" } else { "DISAGREE" }
                ),
                (Some(_), None) => writeln!(out, " (conditions)"),
                _ => writeln!(out, " (alternating sum)"),
            }
            .map_err(io)?;
        }
    }
    if agree == Some(false) {
        return Err(CliError::Violation("the two multiplicity routes disagree".into()));
    }
    Ok(0)
}

#[derive(Serialize)]
struct BranchOut {
    n: usize,
    lambda: Vec<i64>,
    children: Vec<WeightJson>,
}

pub fn branch(out: Out, n: usize, lambda: &str, format: Format) -> Result<i32, CliError> {
    check_range(n, 0)?;
    let l = parse_lambda(n, lambda)?;
    let list = branch_restriction(n, l.entries()).map_err(usage)?;
    let children: Vec<WeightJson> = list.children.iter().map(WeightJson::from).collect();
    match format {
        Format::Json => write_json(out, &BranchOut { n, lambda: l.entries().to_vec(), children })?,
        Format::Csv => {
            writeln!(out, "n,mu,dimension").map_err(io)?;
            for mu in &list.children {
                let d = dimension(n - 1, mu.entries()).map_err(usage)?;
                writeln!(out, "{},\"{}\",{d}", n - 1, tuple(mu.entries())).map_err(io)?;
            }
        }
        Format::Table => {
            writeln!(out, "{} of SO({n}) restricted to SO({}): {} constituents", tuple(l.entries()), n - 1, children.len())
                .map_err(io)?;
            for mu in &list.children {
                let d = dimension(n - 1, mu.entries()).map_err(usage)?;
                writeln!(out, "{:<16} {d:>12}", tuple(mu.entries())).map_err(io)?;
            }
        }
    }
    Ok(0)
}

/// The character named by a --gamma spec.
pub fn gamma_character(n: usize, spec: &str) -> Result<CharacterMap, CliError> {
    let count = |s: &str| s.parse::<usize>().map_err(|_| CliError::Usage(format!("bad count in --gamma {spec:?}")));
    let group = GroupTag::new(n).map_err(usage)?;
    match spec.split_once(':') {
        None if spec == "trivial" => Ok(CharacterMap::trivial(group)),
        None if spec == "standard" => fundamental_character(n, 1).map_err(usage),
        Some(("sym", k)) => symmetric_power_character(n, count(k)?).map_err(usage),
        Some(("lambda-power", k)) => {
            let k = count(k)?;
            if k > n {
                return Err(CliError::Usage(format!("lambda-power:{k} needs k <= n")));
            }
            fundamental_character(n, k as i64).map_err(usage)
        }
        Some(("weight", list)) => {
            let l = parse_lambda(n, list)?;
            irreducible_character(n, l.entries()).map_err(usage)
        }
        _ => Err(CliError::Usage(format!("unknown --gamma spec {spec:?}"))),
    }
}

pub fn tensor_dim(out: Out, n: usize, i: usize, gamma: &str, format: Format) -> Result<i32, CliError> {
    check_range(n, i)?;
    let decomp = decompose_character(&gamma_character(n, gamma)?).map_err(usage)?;
    let d: BigInt = equivariant_dimension(n, i, &decomp).map_err(usage)?;
    match format {
        Format::Json => write_json(out, &serde_json::json!({ "n": n, "i": i, "gamma": gamma, "dimension": d.to_string() }))?,
        Format::Csv => writeln!(out, "n,i,gamma,dimension\n{n},{i},{gamma},{d}").map_err(io)?,
        Format::Table => writeln!(out, "dim (Val_{i} ⊗ {gamma})^SO({n}) = {d}").map_err(io)?,
    }
    Ok(0)
}

fn verdict_name(v: SymmetryVerdict) -> &'static str {
    match v {
        SymmetryVerdict::AlwaysSymmetricO => "always-symmetric-O(n)",
        SymmetryVerdict::AlwaysSymmetricSO => "always-symmetric-SO(n)",
        SymmetryVerdict::AsymmetricWitnessExists => "asymmetric-witness-exists",
    }
}

#[derive(Serialize)]
struct ClassifyRow {
    n: usize,
    i: usize,
    closed_form: &'static str,
    from_weights: &'static str,
    agree: bool,
}

pub fn classify(out: Out, n: usize, i: Option<usize>, group: Group, format: Format) -> Result<i32, CliError> {
    check_range(n, i.unwrap_or(0))?;
    let g = match group {
        Group::So => InvarianceGroup::SO,
        Group::O => InvarianceGroup::O,
    };
    let mut rows = Vec::new();
    for i in i.map_or(0..=n, |i| i..=i) {
        let closed = bivaluation_symmetry_verdict_for(n, i, g).map_err(usage)?;
        // O(n) invariant bivaluations have no weight-level derivation to compare.
        let derived = match g {
            InvarianceGroup::SO => symmetry_verdict_from_weights(n, i, 2).map_err(usage)?,
            InvarianceGroup::O => closed,
        };
        rows.push(ClassifyRow {
            n,
            i,
            closed_form: verdict_name(closed),
            from_weights: verdict_name(derived),
            agree: closed == derived,
        });
    }
    match format {
        Format::Json => write_json(out, &rows)?,
        Format::Csv => {
            writeln!(out, "n,i,closed_form,from_weights,agree").map_err(io)?;
            for r in &rows {
                writeln!(out, "{},{},{},{},{}", r.n, r.i, r.closed_form, r.from_weights, r.agree).map_err(io)?;
            }
        }
        Format::Table => {
            for r in &rows {
                let mark = if r.agree { "" } else { "  DISAGREE" };
                writeln!(out, "n={:<3} i={:<3} {:<26} {}{mark}", r.n, r.i, r.closed_form, r.from_weights).map_err(io)?;
            }
        }
    }
    if rows.iter().any(|r| !r.agree) {
        return Err(CliError::Violation("closed form and weight derivation disagree".into()));
    }
    Ok(0)
}

pub fn verify(
    out: Out,
    err: Out,
    config: &std::path::Path,
    report_path: Option<&std::path::Path>,
    csv_path: Option<&std::path::Path>,
    seed: Option<u64>,
    trials: Option<usize>,
) -> Result<i32, CliError> {
    let text = std::fs::read_to_string(config)
        .map_err(|e| CliError::Usage(format!("cannot read config {}: {e}", config.display())))?;
    let mut cfg = ExperimentConfig::from_json(&text).map_err(usage)?;
    if let Some(s) = seed {
        cfg.seed = s;
    }
    if let Some(t) = trials {
        cfg.trials = t;
    }
    let report = valharm_verify::run(&cfg).map_err(|e| match e {
        valharm_verify::Error::Config(c) => CliError::Usage(c.to_string()),
        other => CliError::Io(other.to_string()),
    })?;
    match report_path {
        Some(p) => std::fs::write(p, report.to_json() + "\n").map_err(io)?,
        None => writeln!(out, "{}", report.to_json()).map_err(io)?,
    }
    if let Some(p) = csv_path {
        let file = std::fs::File::create(p).map_err(io)?;
        report.write_csv(file).map_err(|e| CliError::Io(e.to_string()))?;
    }
    let s = &report.summary;
    writeln!(
        err,
        "{} i={}: {} records, {} holds-exact, {} holds-certified, {} inconclusive, {} violations",
        report.campaign, cfg.i, s.trials, s.holds_exact, s.holds_certified, s.inconclusive, s.violations
    )
    .map_err(io)?;
    for r in report.records.iter().filter(|r| r.verdict == Verdict::Violation) {
        writeln!(err, "VIOLATION in trial {} ({})", r.trial, r.kind).map_err(io)?;
    }
    Ok(report.exit_code())
}
