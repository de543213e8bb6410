//! Command-line front end.
//!
//! Every subcommand produces one [`Report`], printed as text or, with
//! `--json`, as a versioned JSON object. Exit codes: 0 when nothing failed,
//! 1 when some check failed, 2 for usage and input errors.

use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand};

use crate::error::{Error, Result};
use crate::highest_weight::{
    enumerate_nonzero_b, probe_fixed_line, probe_report, verify_bruhat, verify_characters,
    verify_construction, verify_probe, verify_z_bounds,
};
use crate::invariants::{
    invariant_dimension_sampled, invariant_space, verify_invariants, DEFAULT_DEGREE_BUDGET,
    MIN_ORACLE_TRIALS,
};
use crate::irreducibility::{verify_case_analysis, verify_image_dim_table};
use crate::linalg::text::parse_matrix;
use crate::repdim::{
    build_root_system, verify_reductive_exclusion, weyl_dim, DominantWeight, RootType,
};
use crate::report::{Report, Source};

pub const DEFAULT_SEED: u64 = 7;
pub const DEFAULT_TRIALS: usize = 100;
pub const DEFAULT_PROBE_TRIALS: usize = 200;
pub const PROBE_PERMUTATIONS: usize = 50;
pub const ORACLE_SEEDS: usize = 5;

#[derive(Parser, Debug)]
#[command(
    name = "epiverify",
    version,
    about = "Exact checks for the subgroup H = S.H0 of SL(19)"
)]
struct Cli {
    /// Emit the report as JSON.
    #[arg(long, global = true)]
    json: bool,

    /// Seed for every sampled quantity.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,

    /// Number of random samples where a check samples.
    #[arg(long, global = true)]
    trials: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Generic dim Im phi_w for all 16 support patterns.
    VerifyTable1,
    /// Rank-nullity, gap inequalities and spanning facts for phi_w.
    VerifyLemma2,
    /// Torus exponents, star-pattern bounds, Bruhat round trips and the
    /// construction of h0.
    VerifyLemma1,
    /// Search for an H-fixed highest-weight line.
    Probe {
        /// Probe a single g0 read from a matrix file instead of sampling.
        #[arg(long)]
        g0: Option<PathBuf>,
    },
    /// Exclusion of proper reductive overgroups.
    VerifyRepdim,
    /// Dimension of one simple module.
    WeylDim {
        #[arg(long = "type")]
        root_type: String,
        #[arg(long)]
        rank: usize,
        /// Fundamental-weight coordinates, comma separated.
        #[arg(long)]
        weight: String,
    },
    /// Degree-d invariants of H0.
    Invariants {
        #[arg(long, default_value_t = 2)]
        degree: u32,
        /// Cross-check against the sampled oracle.
        #[arg(long)]
        oracle: bool,
        /// Largest degree accepted.
        #[arg(long, default_value_t = DEFAULT_DEGREE_BUDGET)]
        budget: u32,
        /// List a basis of the invariants.
        #[arg(long)]
        basis: bool,
    },
    /// Everything above with default sizes.
    VerifyAll,
}

/// Parses `argv` (including the program name), runs the subcommand and
/// writes to the given streams.
pub fn run_with<I, S>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 {
                out.write_all(text.as_bytes())
            } else {
                err.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match execute(&cli) {
        Ok(report) => {
            let text = if cli.json {
                report.to_json()
            } else {
                report.to_string()
            };
            let _ = writeln!(out, "{text}");
            i32::from(!report.passed())
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

pub fn run<I, S>(argv: I) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    run_with(
        argv,
        &mut std::io::stdout().lock(),
        &mut std::io::stderr().lock(),
    )
}

fn positive(trials: Option<usize>, default: usize) -> Result<usize> {
    match trials {
        Some(0) => Err(Error::InvalidInput("--trials must be at least 1".into())),
        Some(n) => Ok(n),
        None => Ok(default),
    }
}

fn lemma1(seed: u64, trials: usize) -> Report {
    Report::combine(
        "lemma1",
        Some(seed),
        &[
            enumerate_nonzero_b(),
            verify_z_bounds(),
            verify_characters(seed, trials),
            verify_bruhat(seed, trials),
            verify_construction(seed, trials),
        ],
    )
}

fn oracle_seeds(seed: u64) -> Vec<u64> {
    (0..ORACLE_SEEDS as u64)
        .map(|i| seed.wrapping_add(i))
        .collect()
}

fn execute(cli: &Cli) -> Result<Report> {
    let seed = cli.seed;
    Ok(match &cli.command {
        Command::VerifyTable1 => verify_image_dim_table(seed),
        Command::VerifyLemma2 => verify_case_analysis(seed),
        Command::VerifyLemma1 => lemma1(seed, positive(cli.trials, DEFAULT_TRIALS)?),
        Command::Probe { g0: Some(path) } => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Error::InvalidInput(format!("{}: {e}", path.display())))?;
            let g0 = parse_matrix(&text)?;
            probe_fixed_line(&g0)?;
            probe_report(&g0)
        }
        Command::Probe { g0: None } => {
            let trials = positive(cli.trials, DEFAULT_PROBE_TRIALS)?;
            verify_probe(seed, PROBE_PERMUTATIONS, trials)
        }
        Command::VerifyRepdim => verify_reductive_exclusion(),
        Command::WeylDim {
            root_type,
            rank,
            weight,
        } => {
            let rs = build_root_system(root_type.parse::<RootType>()?, *rank)?;
            let lambda: DominantWeight = weight.parse()?;
            let dim = weyl_dim(&rs, &lambda)?;
            let mut r = Report::new("weyl-dim");
            r.info(format!("dim V({lambda}) for {rs}"), dim);
            r.info("group dimension", rs.group_dimension());
            r.finish()
        }
        Command::Invariants {
            degree,
            oracle,
            budget,
            basis,
        } => {
            let space = invariant_space(*degree, *budget)?;
            let mut r = Report::new("invariants").seed(seed);
            r.info("degree", degree);
            r.info("monomials", space.basis.len());
            r.info("dimension (kernel method)", space.dimension());
            if *oracle {
                let trials = positive(cli.trials, MIN_ORACLE_TRIALS)?;
                let sampled = invariant_dimension_sampled(*degree, trials, seed)?;
                r.check(
                    format!("sampled oracle with {trials} trials"),
                    space.dimension(),
                    sampled,
                    Source::Derived,
                );
            }
            if *basis {
                for (i, p) in space.polynomials().iter().enumerate() {
                    r.info(format!("f{}", i + 1), p);
                }
            }
            r.finish()
        }
        Command::VerifyAll => {
            let trials = positive(cli.trials, DEFAULT_TRIALS)?;
            Report::combine(
                "verify-all",
                Some(seed),
                &[
                    verify_image_dim_table(seed),
                    verify_case_analysis(seed),
                    lemma1(seed, trials),
                    verify_probe(seed, PROBE_PERMUTATIONS, DEFAULT_PROBE_TRIALS),
                    verify_reductive_exclusion(),
                    verify_invariants(3, &oracle_seeds(seed), seed),
                ],
            )
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("epiverify").chain(args.iter().copied());
        let code = run_with(argv, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn usage_errors_exit_two() {
        assert_eq!(call(&[]).0, 2);
        let (code, _, err) = call(&["frobnicate"]);
        assert_eq!(code, 2);
        assert!(err.contains("Usage"));
        assert_eq!(call(&["verify-table1", "--bogus"]).0, 2);
        assert_eq!(call(&["probe", "--trials", "0"]).0, 2);
        assert_eq!(call(&["invariants", "--degree", "5"]).0, 2);
        assert_eq!(
            call(&["weyl-dim", "--type", "D", "--rank", "3", "--weight", "1,0,0"]).0,
            2
        );
        assert_eq!(
            call(&["weyl-dim", "--type", "A", "--rank", "2", "--weight", "1,x"]).0,
            2
        );
        assert_eq!(call(&["probe", "--g0", "/nonexistent/g0.txt"]).0, 2);
    }

    #[test]
    fn help_exits_zero() {
        let (code, out, _) = call(&["--help"]);
        assert_eq!(code, 0);
        assert!(out.contains("verify-all"));
    }

    #[test]
    fn table_as_json() {
        let (code, out, _) = call(&["verify-table1", "--json"]);
        assert_eq!(code, 0);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["schema"], 1);
        assert_eq!(v["status"], "PASS");
        assert_eq!(v["details"].as_array().unwrap().len(), 16);
        let keys: Vec<&String> = v.as_object().unwrap().keys().collect();
        assert_eq!(
            keys,
            [
                "schema",
                "check_name",
                "status",
                "details",
                "seed",
                "elapsed"
            ]
        );
    }

    #[test]
    fn weyl_dim_and_invariants() {
        let (code, out, _) = call(&[
            "weyl-dim",
            "--type",
            "E",
            "--rank",
            "6",
            "--weight",
            "1,0,0,0,0,0",
        ]);
        assert_eq!(code, 0);
        assert!(out.contains("E6: 27"), "{out}");
        let (code, out, _) = call(&["invariants", "--degree", "1", "--oracle", "--basis"]);
        assert_eq!(code, 0);
        assert!(out.contains("f4: x4"), "{out}");
    }
}
