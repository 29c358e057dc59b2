//! The ten acceptance criteria, shared by `valharm selftest` and the
//! `acceptance` test target.

use std::fmt;

use num_bigint::BigInt;
use valharm_core::{
    barred_character, bivaluation_symmetry_verdict, branch_restriction, decompose_character, dimension,
    equivariant_dimension, exterior_pair_identity, fundamental_character, hard_lefschetz_check,
    highest_weights_up_to, second_determinantal_character, symmetric_power_character, symmetry_verdict_from_weights,
    val_multiplicity_alternating, val_multiplicity_conditions, CharacterMap, Partition, SymmetryVerdict,
};
use valharm_verify::{Campaign, ExperimentConfig, Report, Verdict};

/// Parameters of the geometric criteria 6 to 9.
#[derive(Debug, Clone)]
pub struct Params {
    pub trials: usize,
    pub seed: u64,
    pub digits: u32,
    /// |slack| bound for the homothety probes.
    pub equality: f64,
    /// Corpus size and ball level for the r(Π) constancy check.
    pub r_bodies: usize,
    pub r_level: u32,
    pub min_facets: usize,
    pub max_relative_width: f64,
}

impl Default for Params {
    fn default() -> Params {
        Params {
            trials: 100,
            seed: 2024,
            digits: 50,
            equality: 1e-25,
            r_bodies: 20,
            r_level: 7,
            min_facets: 10_000,
            max_relative_width: 1e-4,
        }
    }
}

impl Params {
    /// Ten random trials per campaign; criterion 9 is unchanged.
    pub fn quick() -> Params {
        Params {
            trials: 10,
            ..Params::default()
        }
    }
}

#[derive(Debug, Clone)]
pub struct Outcome {
    pub id: u8,
    pub title: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mark = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "criterion {:>2} {mark}  {}: {}", self.id, self.title, self.detail)
    }
}

fn outcome(id: u8, title: &'static str, failures: Vec<String>, checked: usize) -> Outcome {
    let detail = match failures.first() {
        None => format!("{checked} cases"),
        Some(first) => format!("{} of {checked} cases failed, first {first}", failures.len()),
    };
    Outcome {
        id,
        title,
        passed: failures.is_empty(),
        detail,
    }
}

/// Runs all criteria in order. `tamper` perturbs one character in
/// criterion 2, which must then fail.
pub fn run_all(params: &Params, tamper: bool) -> Vec<Outcome> {
    vec![
        multiplicity_routes(),
        determinant_identity(tamper),
        exterior_pairs(),
        example_values(),
        branching_and_lefschetz(),
        geometric_symmetry(params),
        projection_brunn_minkowski(params),
        class_reduction(params),
        r_constancy(params),
        verdict_table(),
    ]
}

pub fn multiplicity_routes() -> Outcome {
    let mut failures = Vec::new();
    let mut checked = 0;
    for n in 3..=7 {
        for i in 0..=n {
            for l in highest_weights_up_to(n, 3).expect("n >= 3") {
                checked += 1;
                let cond = val_multiplicity_conditions(n, i, &l);
                match val_multiplicity_alternating(n, i, &l) {
                    Ok(alt) if alt == cond => {}
                    other => failures.push(format!("n={n} i={i} {l}: {cond} vs {other:?}")),
                }
            }
        }
    }
    outcome(1, "multiplicity routes agree", failures, checked)
}

pub fn determinant_identity(tamper: bool) -> Outcome {
    let mut failures = Vec::new();
    let mut checked = 0;
    for n in 3..=7 {
        for l in highest_weights_up_to(n, 3).expect("n >= 3") {
            let Ok(p) = Partition::try_from(&l) else { continue };
            checked += 1;
            let det = second_determinantal_character(n, &p);
            let mut barred = barred_character(n, &p);
            if tamper && checked == 1 {
                if let Ok(c) = barred.as_mut() {
                    let one = CharacterMap::trivial(c.group());
                    c.add_assign_scaled(&one, &BigInt::from(1)).expect("same group");
                }
            }
            match (det, barred) {
                (Ok(a), Ok(b)) if a == b => {}
                (a, b) => failures.push(format!(
                    "n={n} {l}: {}",
                    if a.is_ok() && b.is_ok() { "characters differ".into() } else { format!("{a:?} / {b:?}") }
                )),
            }
        }
    }
    outcome(2, "determinantal character identity", failures, checked)
}

pub fn exterior_pairs() -> Outcome {
    let mut failures = Vec::new();
    let mut checked = 0;
    for n in 4..=8usize {
        for i in n.div_ceil(2)..=n {
            for j in 0..=n - i {
                checked += 1;
                match exterior_pair_identity(n, i, j) {
                    Ok((lhs, rhs)) if lhs == rhs => {}
                    _ => failures.push(format!("n={n} i={i} j={j}")),
                }
            }
        }
    }
    outcome(3, "exterior pair identity", failures, checked)
}

pub fn example_values() -> Outcome {
    let mut failures = Vec::new();
    let mut checked = 0;
    let mut expect = |n: usize, i: usize, what: String, c: CharacterMap, want: usize| {
        checked += 1;
        let got = decompose_character(&c).and_then(|d| equivariant_dimension(n, i, &d));
        if got.as_ref().ok() != Some(&BigInt::from(want)) {
            failures.push(format!("n={n} i={i} {what}: {got:?}, expected {want}"));
        }
    };
    for n in 3..=7usize {
        for i in 0..=n {
            expect(n, i, "trivial".into(), fundamental_character(n, 0).expect("valid"), 1);
            expect(n, i, "standard".into(), fundamental_character(n, 1).expect("valid"), 0);
        }
        for i in 1..n {
            expect(n, i, "wedge 2".into(), fundamental_character(n, 2).expect("valid"), 0);
            for k in 0..=6usize {
                let want = if k % 2 == 0 { k / 2 + 1 } else { (k - 1) / 2 };
                expect(n, i, format!("sym {k}"), symmetric_power_character(n, k).expect("valid"), want);
            }
        }
    }
    outcome(4, "equivariant dimension examples", failures, checked)
}

pub fn branching_and_lefschetz() -> Outcome {
    let mut failures = Vec::new();
    let mut checked = 0;
    for n in 3..=7 {
        for l in highest_weights_up_to(n, 3).expect("n >= 3") {
            checked += 1;
            let total: Option<BigInt> = branch_restriction(n, l.entries()).ok().and_then(|b| {
                b.children.iter().map(|mu| dimension(n - 1, mu.entries()).ok()).sum()
            });
            if total != dimension(n, l.entries()).ok() {
                failures.push(format!("branching of {l} for n={n}"));
            }
        }
        for i in 0..=n {
            checked += 1;
            if !hard_lefschetz_check(n, i, 4).unwrap_or(false) {
                failures.push(format!("Lefschetz n={n} i={i}"));
            }
        }
    }
    outcome(5, "branching and Lefschetz symmetry", failures, checked)
}

fn campaign(params: &Params, theorem: Campaign, i: usize, trials: usize) -> Result<Report, String> {
    let mut cfg = ExperimentConfig::new(theorem, i, trials, params.seed);
    cfg.digits = Some(params.digits);
    cfg.tolerances.equality = params.equality;
    valharm_verify::run(&cfg).map_err(|e| e.to_string())
}

fn geometric(id: u8, title: &'static str, report: Result<Report, String>, check: impl Fn(&Report) -> Vec<String>) -> Outcome {
    match report {
        Ok(r) => {
            let mut failures = check(&r);
            for rec in r.records.iter().filter(|rec| !rec.verdict.holds()) {
                failures.push(format!("trial {} ({}) {}", rec.trial, rec.kind, rec.verdict.name()));
            }
            outcome(id, title, failures, r.records.len())
        }
        Err(e) => outcome(id, title, vec![e], 0),
    }
}

fn only_exact(r: &Report, trials: usize) -> Vec<String> {
    let exact = r.random_records().filter(|rec| rec.verdict == Verdict::HoldsExact).count();
    if exact == trials {
        vec![]
    } else {
        vec![format!("{exact} of {trials} random trials exact")]
    }
}

pub fn geometric_symmetry(params: &Params) -> Outcome {
    let report = campaign(params, Campaign::BivaluationSymmetry, 2, params.trials);
    geometric(6, "exact projection body symmetry", report, |r| only_exact(r, params.trials))
}

fn abs_bound(lo: &str, hi: &str) -> f64 {
    let parse = |s: &str| s.parse::<f64>().map(f64::abs).unwrap_or(f64::INFINITY);
    parse(lo).max(parse(hi))
}

pub fn projection_brunn_minkowski(params: &Params) -> Outcome {
    let report = campaign(params, Campaign::BmMinkowskiValuation, 2, params.trials);
    geometric(7, "Brunn-Minkowski for the projection body", report, |r| {
        let mut failures = Vec::new();
        for kind in ["homothety-1/2", "homothety-1", "homothety-3"] {
            match r.probe(kind) {
                Some(rec) if rec.equality == Some(true) && abs_bound(&rec.slack.lo, &rec.slack.hi) <= params.equality => {}
                Some(rec) => failures.push(format!("{kind} slack [{}, {}]", rec.slack.lo, rec.slack.hi)),
                None => failures.push(format!("{kind} probe missing")),
            }
        }
        failures
    })
}

pub fn class_reduction(params: &Params) -> Outcome {
    let report = campaign(params, Campaign::ClassReduction, 2, params.trials);
    geometric(8, "class reduction", report, |r| {
        let mut failures = only_exact(r, params.trials);
        match r.probe("cube") {
            Some(rec) if rec.equality == Some(true) && rec.lhs.exact.is_some() && rec.lhs.exact == rec.rhs.exact => {}
            _ => failures.push("cube probe is not an exact equality".into()),
        }
        failures
    })
}

pub fn r_constancy(params: &Params) -> Outcome {
    let mut cfg = ExperimentConfig::new(Campaign::RConstant, 2, params.r_bodies, params.seed);
    cfg.digits = Some(params.digits);
    cfg.ball_level = params.r_level;
    let report = valharm_verify::run(&cfg).map_err(|e| e.to_string());
    let mut out = geometric(9, "r(Π) constancy", report.clone(), |r| {
        let mut failures = Vec::new();
        let facets = r.metadata.get("ball-facets").and_then(|v| v.as_u64()).unwrap_or(0) as usize;
        if facets < params.min_facets {
            failures.push(format!("ball has {facets} facets"));
        }
        match enclosure(r) {
            None => failures.push("ratio enclosures have empty intersection".into()),
            Some((lo, hi)) if (hi - lo) / lo > params.max_relative_width => {
                failures.push(format!("relative width {:.3e}", (hi - lo) / lo))
            }
            Some(_) => {}
        }
        failures
    });
    if out.passed {
        if let Ok((lo, hi)) = report.map(|r| enclosure(&r).expect("checked")) {
            out.detail = format!("{}, r in [{lo:.9}, {hi:.9}]", out.detail);
        }
    }
    out
}

fn enclosure(r: &Report) -> Option<(f64, f64)> {
    let e = r.metadata.get("r-enclosure")?;
    let lo = e.get("lo")?.as_str()?.parse().ok()?;
    let hi = e.get("hi")?.as_str()?.parse().ok()?;
    Some((lo, hi))
}

pub fn verdict_table() -> Outcome {
    let mut failures = Vec::new();
    let mut checked = 0;
    for n in 3..=10 {
        for i in 0..=n {
            checked += 1;
            let closed = bivaluation_symmetry_verdict(n, i);
            let derived = symmetry_verdict_from_weights(n, i, 2);
            let asymmetric = matches!((i, n), (3, 6) | (5, 10));
            let agree = matches!((&closed, &derived), (Ok(a), Ok(b)) if a == b);
            let expected = closed.as_ref().is_ok_and(|v| (*v == SymmetryVerdict::AsymmetricWitnessExists) == asymmetric);
            if !agree || !expected {
                failures.push(format!("n={n} i={i}: {closed:?} vs {derived:?}"));
            }
        }
    }
    outcome(10, "bivaluation symmetry table", failures, checked)
}
