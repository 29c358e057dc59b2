use std::path::PathBuf;

use valharm_core::json::WeightJson;
use valharm_core::HighestWeight;
use valharm_verify::{Campaign, ExperimentConfig, Report};

fn valharm(args: &[&str]) -> (i32, String, String) {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = valharm_cli::run(std::iter::once("valharm").chain(args.iter().copied()), &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn json(args: &[&str]) -> serde_json::Value {
    let mut full = args.to_vec();
    full.extend(["--format", "json"]);
    let (code, out, err) = valharm(&full);
    assert_eq!(code, 0, "{err}");
    serde_json::from_str(&out).unwrap()
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("valharm-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn decompose_lists_the_weights() {
    let rows: Vec<WeightJson> = serde_json::from_value(json(&["decompose", "--n", "4", "--i", "2", "--cap", "2"])).unwrap();
    let lambdas: Vec<Vec<i64>> = rows.iter().map(|r| r.lambda.clone()).collect();
    assert_eq!(lambdas, [vec![0, 0], vec![2, -2], vec![2, 0], vec![2, 2]]);
    for row in rows {
        HighestWeight::try_from(row).unwrap();
    }
    for i in ["0", "5"] {
        let rows: Vec<WeightJson> = serde_json::from_value(json(&["decompose", "--n", "5", "--i", i])).unwrap();
        assert_eq!(rows, [WeightJson { n: 5, lambda: vec![0, 0] }]);
    }
}

#[test]
fn multiplicity_examples() {
    let cases = [("6", "3", "2,2,-2", 1), ("5", "2", "1,0", 0), ("5", "2", "0,0", 1)];
    for (n, i, lambda, want) in cases {
        let v = json(&["multiplicity", "--n", n, "--i", i, "--lambda", lambda, "--method", "both"]);
        assert_eq!(v["multiplicity"], want);
        assert_eq!(v["mult_conditions"], v["mult_alternating"]);
        assert_eq!(v["agree"], true);
    }
    let (code, out, _) = valharm(&["multiplicity", "--n", "6", "--i", "3", "--lambda", "2,2,-2"]);
    assert_eq!(code, 0);
    assert!(out.contains("agree"));
    let v = json(&["multiplicity", "--n", "5", "--i", "2", "--lambda", "2,0", "--method", "alternating"]);
    assert_eq!(v["multiplicity"], 1);
    assert!(v.get("mult_conditions").is_none());
}

#[test]
fn tensor_dim_examples() {
    for (gamma, want) in [("sym:2", "2"), ("lambda-power:2", "0"), ("standard", "0"), ("trivial", "1"), ("sym:4", "3")] {
        let v = json(&["tensor-dim", "--gamma", gamma, "--n", "5", "--i", "2"]);
        assert_eq!(v["dimension"], want, "{gamma}");
    }
    let v = json(&["tensor-dim", "--gamma", "weight:2,2,-2", "--n", "6", "--i", "3"]);
    assert_eq!(v["dimension"], "1");
}

#[test]
fn branch_children_round_trip() {
    let v = json(&["branch", "--n", "5", "--lambda", "2,1"]);
    let children: Vec<WeightJson> = serde_json::from_value(v["children"].clone()).unwrap();
    assert_eq!(children.len(), 6);
    for c in children {
        assert_eq!(c.n, 4);
        HighestWeight::try_from(c).unwrap();
    }
}

#[test]
fn classify_matches_the_closed_form() {
    let rows = json(&["classify", "--n", "10"]);
    let asym: Vec<u64> = rows
        .as_array()
        .unwrap()
        .iter()
        .filter(|r| r["closed_form"] == "asymmetric-witness-exists")
        .map(|r| r["i"].as_u64().unwrap())
        .collect();
    assert_eq!(asym, [5]);
    assert!(rows.as_array().unwrap().iter().all(|r| r["agree"] == true));
    let o = json(&["classify", "--n", "6", "--i", "3", "--group", "o"]);
    assert_eq!(o[0]["closed_form"], "always-symmetric-O(n)");
}

#[test]
fn usage_errors_exit_64() {
    let bad: &[&[&str]] = &[
        &["decompose", "--n", "2", "--i", "0"],
        &["decompose", "--n", "4", "--i", "5"],
        &["multiplicity", "--n", "5", "--i", "2", "--lambda", "-1,0"],
        &["multiplicity", "--n", "5", "--i", "2", "--lambda", "1,x"],
        &["multiplicity", "--n", "5", "--i", "2", "--lambda", "0,1"],
        &["multiplicity", "--n", "5", "--i", "2", "--lambda", "1,-1"],
        &["tensor-dim", "--gamma", "spin"],
        &["tensor-dim", "--gamma", "lambda-power:9"],
        &["decompose", "--n", "4"],
        &["frobnicate"],
        &["verify", "--config", "/nonexistent/config.json"],
    ];
    for args in bad {
        let (code, _, err) = valharm(args);
        assert_eq!(code, 64, "{args:?}");
        assert!(!err.is_empty());
    }
    assert_eq!(valharm(&["--help"]).0, 0);
    assert_eq!(valharm(&["--version"]).0, 0);
}

#[test]
fn csv_and_table_outputs() {
    let (code, out, _) = valharm(&["decompose", "--n", "4", "--i", "2", "--cap", "2", "--format", "csv"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().count(), 5);
    assert!(out.starts_with("n,lambda,dimension"));
    let (code, out, _) = valharm(&["branch", "--n", "4", "--lambda", "1,1"]);
    assert_eq!(code, 0);
    assert!(out.contains("(1)"));
}

#[test]
fn verify_writes_reports() {
    let config = scratch("class.json");
    std::fs::write(&config, r#"{"theorem": "class-reduction", "i": 2, "trials": 3, "seed": 5}"#).unwrap();
    let (a, b, csv) = (scratch("a.json"), scratch("b.json"), scratch("a.csv"));
    let path = |p: &PathBuf| p.to_str().unwrap().to_string();
    for target in [&a, &b] {
        let (code, _, err) = valharm(&["verify", "--config", &path(&config), "--out", &path(target), "--seed", "7", "--csv", &path(&csv)]);
        assert_eq!(code, 0, "{err}");
    }
    let ra = Report::from_json(&std::fs::read_to_string(&a).unwrap()).unwrap();
    let rb = Report::from_json(&std::fs::read_to_string(&b).unwrap()).unwrap();
    assert_eq!(ra.canonical_json(), rb.canonical_json());
    assert_eq!(ra.config.seed, 7);
    assert_eq!(ra.summary.holds_exact, ra.records.len());
    assert_eq!(std::fs::read_to_string(&csv).unwrap().lines().count(), ra.records.len() + 1);

    let (code, out, _) = valharm(&["verify", "--config", &path(&config), "--trials", "2"]);
    assert_eq!(code, 0);
    let rc = Report::from_json(&out).unwrap();
    assert_eq!(rc.random_records().count(), 2);
}

#[test]
fn bad_configs_exit_64_with_diagnostics() {
    for (name, text) in [
        ("schema.json", r#"{"theorem": "class-reduction", "i": 2, "trials": 3, "seed": 5, "colour": 1}"#),
        ("unknown.json", r#"{"theorem": "fermat", "i": 2, "trials": 3, "seed": 5}"#),
        ("range.json", r#"{"theorem": "class-reduction", "i": 1, "trials": 3, "seed": 5}"#),
        ("syntax.json", "{"),
    ] {
        let path = scratch(name);
        std::fs::write(&path, text).unwrap();
        let (code, out, err) = valharm(&["verify", "--config", path.to_str().unwrap()]);
        assert_eq!(code, 64, "{name}");
        assert!(out.is_empty());
        assert!(err.contains("config"), "{name}: {err}");
    }
}

#[test]
fn verify_config_matches_the_library() {
    let mut cfg = ExperimentConfig::new(Campaign::BivaluationSymmetry, 2, 2, 3);
    cfg.ball_level = 2;
    let path = scratch("symmetry.json");
    std::fs::write(&path, serde_json::to_string(&cfg).unwrap()).unwrap();
    let (code, out, _) = valharm(&["verify", "--config", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    let report = Report::from_json(&out).unwrap();
    let direct = valharm_verify::run(&cfg).unwrap();
    assert_eq!(report.canonical_json(), direct.canonical_json());
}

#[test]
fn selftest_quick_passes_and_tamper_fails() {
    let (code, out, _) = valharm(&["selftest", "--quick"]);
    assert_eq!(code, 0, "{out}");
    assert_eq!(out.lines().filter(|l| l.contains(" PASS ")).count(), 10);
    let (code, out, _) = valharm(&["selftest", "--quick", "--tamper"]);
    assert_eq!(code, 2);
    assert!(out.lines().nth(1).unwrap().contains("FAIL"));
}
