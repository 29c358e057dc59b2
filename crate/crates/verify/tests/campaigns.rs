use num_rational::BigRational;
use valharm_geometry::{parse_rational, Real};
use valharm_verify::*;

fn cfg(c: Campaign, i: usize, trials: usize) -> ExperimentConfig {
    let mut cfg = ExperimentConfig::new(c, i, trials, 11);
    cfg.ball_level = 2;
    cfg
}

fn enclosure(e: &Enclosure) -> Real {
    Real::between(&parse_rational(&e.lo).unwrap(), &parse_rational(&e.hi).unwrap(), 200)
}

fn all_configs() -> Vec<ExperimentConfig> {
    Campaign::ALL
        .iter()
        .flat_map(|&c| c.allowed_i().iter().map(move |&i| cfg(c, i, 4)))
        .collect()
}

#[test]
fn no_campaign_reports_a_violation() {
    for cfg in all_configs() {
        let report = run(&cfg).unwrap();
        assert_eq!(report.summary.violations, 0, "{} i={}", cfg.theorem, cfg.i);
        assert_ne!(report.exit_code(), EXIT_VIOLATION);
        assert_eq!(report.summary, Summary::of(&report.records));
        assert_eq!(report.random_records().count(), 4);
    }
}

#[test]
fn exact_campaigns_never_end_inconclusive() {
    for cfg in all_configs().into_iter().filter(|c| c.exactness_required()) {
        let report = run(&cfg).unwrap();
        assert!(report.records.iter().all(|r| r.verdict == Verdict::HoldsExact), "{}", cfg.theorem);
        assert!(report.records.iter().all(|r| r.lhs.exact.is_some() && r.rhs.exact.is_some()));
        assert_eq!(report.exit_code(), EXIT_OK);
    }
}

#[test]
fn identical_configs_give_identical_reports() {
    for (c, i) in [(Campaign::BivaluationSymmetry, 2), (Campaign::IntrinsicBm, 2), (Campaign::RConstant, 2)] {
        let cfg = cfg(c, i, 5);
        let a = run(&cfg).unwrap();
        let single = rayon::ThreadPoolBuilder::new().num_threads(1).build().unwrap();
        let b = single.install(|| run(&cfg).unwrap());
        assert_eq!(a.canonical_json(), b.canonical_json());
    }
    let mut other = cfg(Campaign::BivaluationSymmetry, 2, 5);
    other.seed += 1;
    assert_ne!(
        run(&other).unwrap().canonical_json(),
        run(&cfg(Campaign::BivaluationSymmetry, 2, 5)).unwrap().canonical_json()
    );
}

#[test]
fn report_round_trips_through_json_and_csv() {
    let report = run(&cfg(Campaign::GeneralMinkowski, 0, 3)).unwrap();
    let back = Report::from_json(&report.to_json()).unwrap();
    assert_eq!(back, report);
    assert_eq!(back.schema_version, REPORT_SCHEMA_VERSION);
    let mut csv = Vec::new();
    report.write_csv(&mut csv).unwrap();
    let text = String::from_utf8(csv).unwrap();
    assert_eq!(text.lines().count(), report.records.len() + 1);
    assert!(text.starts_with("trial,kind,verdict"));
    for r in &report.records {
        for body in &r.inputs {
            body.polytope.as_ref().unwrap().to_polytope().unwrap();
        }
    }
}

#[test]
fn exit_codes_follow_the_verdicts() {
    let mut report = run(&cfg(Campaign::ClassReduction, 2, 2)).unwrap();
    assert_eq!(report.exit_code(), EXIT_OK);
    report.records[0].verdict = Verdict::InconclusiveEnclosure;
    report.summary = Summary::of(&report.records);
    assert_eq!(report.exit_code(), EXIT_INCONCLUSIVE);
    report.records[1].verdict = Verdict::Violation;
    report.summary = Summary::of(&report.records);
    assert_eq!(report.exit_code(), EXIT_VIOLATION);
    // Inconclusive is tolerated where exactness is not required.
    let mut enclosed = run(&cfg(Campaign::Upbound, 2, 2)).unwrap();
    enclosed.records[0].verdict = Verdict::InconclusiveEnclosure;
    enclosed.summary = Summary::of(&enclosed.records);
    assert_eq!(enclosed.exit_code(), EXIT_OK);
}

#[test]
fn campaign_functions_check_the_theorem() {
    let c = cfg(Campaign::ClassReduction, 2, 1);
    assert!(verify_class_reduction(&c).is_ok());
    assert!(matches!(verify_upbound(&c), Err(Error::Config(_))));
}

#[test]
fn enclosures_do_not_widen_with_the_ball_level() {
    for (c, i) in [(Campaign::BivaluationSymmetry, 1), (Campaign::RConstant, 2), (Campaign::GeneralMinkowski, 1)] {
        let mut prev: Option<Vec<BigRational>> = None;
        for level in 1..=3 {
            let mut cfg = cfg(c, i, 3);
            cfg.ball_level = level;
            let report = run(&cfg).unwrap();
            let widths: Vec<BigRational> = report.records.iter().map(|r| enclosure(&r.lhs).width()).collect();
            if let Some(p) = &prev {
                for (w, pw) in widths.iter().zip(p) {
                    assert!(w <= pw, "{c} level {level}");
                }
            }
            prev = Some(widths);
        }
    }
}

#[test]
fn cube_probe_of_class_reduction_is_an_exact_equality() {
    // K = [-1,1]³: ΠK = [-4,4]³ and Π²K = [-64,64]³, so both sides are 512/8² = 2^21/512² = 8.
    let report = run(&cfg(Campaign::ClassReduction, 2, 1)).unwrap();
    let cube = report.probe("cube").unwrap();
    assert_eq!(cube.lhs.exact.as_deref(), Some("8"));
    assert_eq!(cube.rhs.exact.as_deref(), Some("8"));
    assert_eq!(cube.equality, Some(true));
}

#[test]
fn homothety_probes_meet_the_equality_tolerance() {
    for (c, i) in [(Campaign::BmMinkowskiValuation, 2), (Campaign::IntrinsicBm, 2), (Campaign::IntrinsicBm, 3), (Campaign::GeneralMinkowski, 1)] {
        let report = run(&cfg(c, i, 1)).unwrap();
        for name in ["homothety-1/2", "homothety-1", "homothety-3"] {
            let probe = report.probe(name).unwrap();
            assert_eq!(probe.equality, Some(true), "{c} {name}");
            assert_eq!(probe.verdict, Verdict::HoldsCertified);
        }
    }
    let cubes = run(&cfg(Campaign::IntrinsicBm, 3, 1)).unwrap();
    let p = cubes.probe("unit-cubes").unwrap();
    assert!(enclosure(&p.lhs).contains(&BigRational::from_integer(2.into())));
}

#[test]
fn r_of_the_projection_body_is_shared_by_cube_and_simplex() {
    let mut c = cfg(Campaign::RConstant, 2, 2);
    c.ball_level = 4;
    let report = run(&c).unwrap();
    let (cube, simplex) = (enclosure(&report.records[0].lhs), enclosure(&report.records[1].lhs));
    assert!(cube.intersects(&simplex));
    assert!(cube.intersects(&Real::pi(200)));
}

#[test]
fn upbound_cube_probe_is_strict() {
    let report = run(&cfg(Campaign::Upbound, 2, 1)).unwrap();
    let cube = report.probe("cube").unwrap();
    assert_eq!(cube.verdict, Verdict::HoldsCertified);
    assert!(parse_rational(&cube.slack.lo).unwrap() > BigRational::from_integer(1.into()));
}

#[test]
fn symmetry_lower_bounds_agree_exactly_for_pi1() {
    let report = run(&cfg(Campaign::BivaluationSymmetry, 1, 3)).unwrap();
    for r in &report.records {
        assert_eq!(r.verdict, Verdict::HoldsCertified);
        assert_eq!(r.note.as_deref(), Some("inner-ball lower bounds equal: true"));
    }
    assert!(report.metadata.contains_key("pi1-constant"));
}
