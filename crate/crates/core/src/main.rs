use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use qw22_core::algebra::{classical_limit, Algebra, DeformationProfile};
use qw22_core::expr::parse_element;
use qw22_core::format::{format_output, Mode, Output};
use qw22_core::hopf::Hopf;
use qw22_core::suites::{self, Bounds, Suite};
use qw22_core::{Error, Rational, Result, Vars};

#[derive(Parser)]
#[command(
    name = "qw22",
    version,
    about = "Exact computations in the q-deformed W(2,2) algebra"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    /// Expression over q, p, T, L[n], W[n]
    expr: String,
    /// Print JSON instead of text
    #[arg(long)]
    json: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Normal form in the PBW basis
    Normalize {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value = "standard")]
        profile: DeformationProfile,
    },
    /// Coproduct, as an element of the tensor square
    Coproduct {
        #[command(flatten)]
        common: Common,
    },
    /// Antipode
    Antipode {
        #[command(flatten)]
        common: Common,
    },
    /// Counit, a Laurent polynomial
    Counit {
        #[command(flatten)]
        common: Common,
    },
    /// Normal form with coefficients evaluated at rational q (and p)
    Eval {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        q: Rational,
        #[arg(long)]
        p: Option<Rational>,
        #[arg(long, default_value = "standard")]
        profile: DeformationProfile,
    },
    /// Normal form at q = 1
    Limit {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value = "standard")]
        profile: DeformationProfile,
    },
    /// Run a verification suite
    Check {
        /// q-identities, rewrite-assoc, basis-stability, hopf-axioms, closed-forms,
        /// relation-preservation, rep-oracle, osc-relations, classical-limit or all
        suite: Suite,
        #[arg(long, default_value_t = 4)]
        max_index: i64,
        #[arg(long, default_value_t = 3)]
        max_len: usize,
        /// Fock grades, written A..B
        #[arg(long, default_value = "-8..8", allow_hyphen_values = true, value_parser = parse_range)]
        k_range: (i64, i64),
        /// Overridden by QW22_SEED when set
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 200)]
        cases: usize,
        #[arg(long)]
        json: bool,
    },
}

fn parse_range(s: &str) -> std::result::Result<(i64, i64), String> {
    let (a, b) = s
        .split_once("..")
        .ok_or_else(|| format!("expected A..B, got `{s}`"))?;
    let lo = a.trim().parse().map_err(|e| format!("{a}: {e}"))?;
    let hi = b.trim().parse().map_err(|e| format!("{b}: {e}"))?;
    Ok((lo, hi))
}

fn mode(json: bool) -> Mode {
    if json {
        Mode::Json
    } else {
        Mode::Text
    }
}

fn print(out: &Output, json: bool, profile: DeformationProfile) {
    println!("{}", format_output(out, mode(json), profile.vars()));
}

fn seed_override(seed: u64) -> Result<u64> {
    match std::env::var("QW22_SEED") {
        Ok(s) => s
            .trim()
            .parse()
            .map_err(|_| Error::Usage(format!("QW22_SEED must be an unsigned integer, got `{s}`"))),
        Err(_) => Ok(seed),
    }
}

/// Returns whether every check passed.
fn run(cli: Cli) -> Result<bool> {
    let std = DeformationProfile::Standard;
    match cli.command {
        Command::Normalize { common, profile } => {
            let x = parse_element(&common.expr, &Algebra::new(profile))?;
            print(&Output::Element(x), common.json, profile);
        }
        Command::Coproduct { common } => {
            let h = Hopf::new();
            let x = parse_element(&common.expr, h.algebra())?;
            print(&Output::Tensor(h.coproduct(&x)?), common.json, std);
        }
        Command::Antipode { common } => {
            let h = Hopf::new();
            let x = parse_element(&common.expr, h.algebra())?;
            print(&Output::Element(h.antipode(&x)?), common.json, std);
        }
        Command::Counit { common } => {
            let h = Hopf::new();
            let x = parse_element(&common.expr, h.algebra())?;
            print(&Output::Scalar(h.counit(&x)), common.json, std);
        }
        Command::Eval {
            common,
            q,
            p,
            profile,
        } => {
            let x = parse_element(&common.expr, &Algebra::new(profile))?;
            if profile.vars() == Vars::Two && p.is_none() && x.uses_p() {
                return Err(Error::Usage(
                    "--p is required when the result involves p".into(),
                ));
            }
            print(
                &Output::Numeric(x.eval(&q, p.as_ref())?),
                common.json,
                profile,
            );
        }
        Command::Limit { common, profile } => {
            let x = parse_element(&common.expr, &Algebra::new(profile))?;
            print(&Output::Numeric(classical_limit(&x)), common.json, profile);
        }
        Command::Check {
            suite,
            max_index,
            max_len,
            k_range,
            seed,
            cases,
            json,
        } => {
            let bounds = Bounds {
                max_index,
                max_len,
                k_min: k_range.0,
                k_max: k_range.1,
                cases,
            };
            let reports = suites::run(suite, &bounds, seed_override(seed)?)?;
            for r in &reports {
                eprintln!("{}: {:.3?}", r.suite, r.wall_time);
            }
            if json {
                println!(
                    "{}",
                    serde_json::to_string(&reports).expect("reports serialize")
                );
            } else {
                let text: Vec<String> = reports.iter().map(|r| r.to_string()).collect();
                println!("{}", text.join("\n\n"));
            }
            return Ok(reports.iter().all(|r| r.passed()));
        }
    }
    Ok(true)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
