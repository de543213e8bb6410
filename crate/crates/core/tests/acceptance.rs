//! Acceptance suite: ten criteria, one PASS/FAIL line each.
//!
//! Runs without the libtest harness so the summary is always printed;
//! the process exits non-zero if any criterion fails.

use std::time::{Duration, Instant};

use epiverify::cli::run_with;
use epiverify::highest_weight::{
    feasible_pairs, verify_bruhat, verify_characters, verify_construction, verify_probe,
    verify_z_bounds, z_lower, StarPattern,
};
use epiverify::invariants::verify_invariants;
use epiverify::irreducibility::{verify_case_analysis, verify_image_dim_table};
use epiverify::repdim::verify_reductive_exclusion;
use epiverify::report::Report;

const SEED: u64 = 7;

struct Outcome {
    ok: bool,
    note: String,
}

fn from_reports(reports: &[Report]) -> Outcome {
    let failures: Vec<String> = reports
        .iter()
        .flat_map(|r| {
            r.failures()
                .map(move |d| format!("{}: {}", r.check_name, d.claim))
        })
        .collect();
    Outcome {
        ok: failures.is_empty(),
        note: if failures.is_empty() {
            format!(
                "{} checks",
                reports.iter().map(|r| r.details.len()).sum::<usize>()
            )
        } else {
            failures.join("; ")
        },
    }
}

fn table() -> Outcome {
    let r = verify_image_dim_table(SEED);
    let mut o = from_reports(std::slice::from_ref(&r));
    let values: Vec<&str> = r.details.iter().map(|d| d.computed.as_str()).collect();
    let expected = "0 11 4 5 5 12 12 12 8 8 9 12 12 12 12 12";
    if values.join(" ") != expected {
        o.ok = false;
        o.note = format!("values {}", values.join(" "));
    }
    o
}

fn z_bounds() -> Outcome {
    let pattern = StarPattern::printed();
    let z: Vec<usize> = (1..=4).map(|n| z_lower(n, &pattern).unwrap()).collect();
    let mut o = from_reports(&[verify_z_bounds()]);
    if z != [4, 8, 12, 15] {
        o.ok = false;
        o.note = format!("Z = {z:?}");
    }
    o
}

fn weights() -> Outcome {
    let pairs = feasible_pairs();
    let mut o = from_reports(&[verify_characters(SEED, 100)]);
    if pairs.len() != 78 || pairs.iter().any(|p| p.b == 0) {
        o.ok = false;
        o.note = format!("{} feasible pairs", pairs.len());
    }
    o
}

fn invariant_grading() -> Outcome {
    from_reports(&[verify_invariants(
        3,
        &[SEED, SEED + 1, SEED + 2, SEED + 3, SEED + 4],
        SEED,
    )])
}

fn strip_elapsed(v: &mut serde_json::Value) {
    match v {
        serde_json::Value::Object(map) => {
            map.remove("elapsed");
            map.values_mut().for_each(strip_elapsed);
        }
        serde_json::Value::Array(items) => items.iter_mut().for_each(strip_elapsed),
        _ => {}
    }
}

fn determinism() -> Outcome {
    let once = || {
        let mut out = Vec::new();
        let code = run_with(
            ["epiverify", "verify-all", "--seed", "7", "--json"],
            &mut out,
            &mut Vec::new(),
        );
        let mut v: serde_json::Value = serde_json::from_slice(&out).expect("JSON report");
        strip_elapsed(&mut v);
        (code, v)
    };
    let (c1, a) = once();
    let (c2, b) = once();
    Outcome {
        ok: c1 == 0 && c2 == 0 && a == b,
        note: format!(
            "exit codes {c1}, {c2}; outputs {}",
            if a == b { "identical" } else { "differ" }
        ),
    }
}

type Criterion = (&'static str, Option<Duration>, Box<dyn Fn() -> Outcome>);

fn main() {
    let criteria: Vec<Criterion> = vec![
        (
            "1 image dimension table",
            Some(Duration::from_secs(1)),
            Box::new(table),
        ),
        (
            "2 star-pattern bounds",
            Some(Duration::from_secs(1)),
            Box::new(z_bounds),
        ),
        (
            "3 torus weight arithmetic",
            Some(Duration::from_secs(5)),
            Box::new(weights),
        ),
        (
            "4 Bruhat round trips",
            None,
            Box::new(|| from_reports(&[verify_bruhat(SEED, 100)])),
        ),
        (
            "5 construction of h0",
            None,
            Box::new(|| from_reports(&[verify_construction(SEED, 100)])),
        ),
        (
            "6 phi_w case analysis",
            None,
            Box::new(|| from_reports(&[verify_case_analysis(SEED)])),
        ),
        (
            "7 fixed-line probe",
            Some(Duration::from_secs(60)),
            Box::new(|| from_reports(&[verify_probe(SEED, 50, 200)])),
        ),
        (
            "8 representation dimensions",
            Some(Duration::from_secs(120)),
            Box::new(|| from_reports(&[verify_reductive_exclusion()])),
        ),
        (
            "9 invariant grading",
            Some(Duration::from_secs(600)),
            Box::new(invariant_grading),
        ),
        ("10 determinism of verify-all", None, Box::new(determinism)),
    ];
    let mut failed = 0;
    for (name, limit, check) in criteria {
        let start = Instant::now();
        let outcome = check();
        let elapsed = start.elapsed();
        let in_time = limit.is_none_or(|l| elapsed < l);
        let ok = outcome.ok && in_time;
        failed += usize::from(!ok);
        let budget = limit.map_or(String::new(), |l| format!(" (limit {}s)", l.as_secs()));
        println!(
            "criterion {name}: {} in {:.2}s{budget}: {}",
            if ok { "PASS" } else { "FAIL" },
            elapsed.as_secs_f64(),
            outcome.note
        );
    }
    println!("acceptance: {} of 10 criteria passed", 10 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
