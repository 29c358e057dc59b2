//! Acceptance criteria 1 to 10, one line each. Exits nonzero on failure.

use std::process::ExitCode;
use std::time::Instant;

use valharm_cli::selftest::{self, Params};

fn main() -> ExitCode {
    let params = Params {
        trials: 100,
        seed: 2024,
        digits: 50,
        equality: 1e-25,
        r_bodies: 20,
        r_level: 7,
        min_facets: 10_000,
        max_relative_width: 1e-4,
    };
    let start = Instant::now();
    let outcomes = selftest::run_all(&params, false);
    for o in &outcomes {
        println!("{o}");
    }
    let failed = outcomes.iter().filter(|o| !o.passed).count();
    println!(
        "acceptance: {} passed, {failed} failed in {:.1} s",
        outcomes.len() - failed,
        start.elapsed().as_secs_f64()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
