//! One line per criterion. Law violations fail the run; a criterion whose
//! enumeration stopped short of its bound prints FAIL with the reason but
//! does not abort the remaining checks.

mod support;

use std::process::ExitCode;
use std::time::Instant;

use unbias_core::suites::{Suite, SuiteOutcome};

fn label(suite: Suite) -> &'static str {
    match suite {
        Suite::Coxeter => "coxeter relations, word round trips, exchange (n<=6 exhaustive, n<=8 random)",
        Suite::Faithfulness => "faithfulness of generator words (lengths <=8)",
        Suite::Coherence => "rewrites, axiom instances and the discriminating pair decide correctly",
        Suite::Braiding => "braiding agrees with recursive braiding (|x|+|y|<=8)",
        Suite::Span => "span bicategory: pentagon, triangle, interchange, adjunctions (<=3 exhaustive, <=5 random)",
        Suite::Kleisli => "kleisli composite multisets and duality multiplicities",
        Suite::Pbc => "pseudofunctor from spans to kleisli (<=3 exhaustive)",
        Suite::Main => "unbiased tensor: fibers and pseudofunctor cells (<=3 exhaustive)",
    }
}

fn summary(out: &SuiteOutcome) -> String {
    format!("{} instances, {} violations", out.report.checked, out.report.violations.len())
}

fn main() -> ExitCode {
    let seed = std::env::var("UNBIAS_SEED").ok().and_then(|s| s.parse().ok()).unwrap_or(0);
    let mut violated = false;
    for suite in Suite::ALL {
        let start = Instant::now();
        let out = suite.run(&suite.default_config(seed));
        let secs = start.elapsed().as_secs_f64();
        let verdict = if out.is_ok() && out.is_complete() { "PASS" } else { "FAIL" };
        println!("{verdict} {}: {} ({}, {secs:.1}s)", suite, label(suite), summary(&out));
        for s in &out.shortfalls {
            println!("    short of bound: {s}");
        }
        for v in out.report.violations.iter().take(5) {
            println!("    violation: {v}");
        }
        violated |= !out.is_ok();
    }

    let golden = support::golden_mismatches();
    let cases = support::golden_cases().len();
    let trip = support::round_trip(1000, seed);
    let cli_ok = golden.is_empty() && trip.is_ok();
    println!(
        "{} cli: golden transcripts ({} cases, {} mismatched) and render/parse round trip on 1000 terms{}",
        if cli_ok { "PASS" } else { "FAIL" },
        cases,
        golden.len(),
        trip.as_ref().err().map(|e| format!(" ({e})")).unwrap_or_default()
    );
    for g in &golden {
        println!("    {g}");
    }
    violated |= !cli_ok;

    if violated {
        ExitCode::FAILURE
    } else {
        ExitCode::SUCCESS
    }
}
