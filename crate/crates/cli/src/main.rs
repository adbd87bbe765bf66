//! `hecketwist`: batch analysis of Hecke eigenvalue tables.
//!
//! Every command prints one report `{command, inputs, seed, result, warnings}`.
//! Exit codes: 0 on success, 2 when input fails validation, 1 when the
//! requested operation fails.

mod commands;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use hecketwist::gsp4::WitnessBudget;

use report::{CliError, Outcome, Report};

/// Default seed of randomized commands.
const DEFAULT_SEED: u64 = 0;

#[derive(Parser)]
#[command(name = "hecketwist", version, about = "Relation tests and twist search for Siegel eigenvalue data")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Report format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
    /// Write the report here instead of standard output.
    #[arg(long, short, global = true)]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
pub enum SatakeBuiltin {
    /// Pairwise distinctness of the eight Satake parameters.
    PairwiseDistinct,
    /// `λ_{p²} = λ'_{p²}` in Satake coordinates.
    LambdaP2,
}

#[derive(clap::Args)]
struct Pair {
    #[arg(long)]
    form: PathBuf,
    #[arg(long)]
    form2: PathBuf,
    /// Restrict to these primes (repeatable); default is every shared prime.
    #[arg(long = "prime")]
    primes: Vec<u64>,
}

#[derive(Subcommand)]
enum Command {
    /// b_p at each table prime.
    Bp {
        #[arg(long)]
        form: PathBuf,
        #[arg(long = "prime")]
        primes: Vec<u64>,
    },
    /// Local Euler factor coefficients in X = p^{-s}.
    Euler {
        #[arg(long)]
        form: PathBuf,
        #[arg(long = "prime")]
        primes: Vec<u64>,
    },
    /// Numeric Satake parameters.
    Satake {
        #[arg(long)]
        form: PathBuf,
        #[arg(long = "prime")]
        primes: Vec<u64>,
        /// Pairing tolerance.
        #[arg(long, env = "SIEGEL_TOL")]
        tol: Option<f64>,
    },
    /// The similitude-compatibility pair (κ, κ').
    Kappa {
        #[arg(long)]
        form: PathBuf,
        #[arg(long)]
        form2: PathBuf,
    },
    /// Exact vanishing count of P(s, s', a, b, a', b').
    TestRelation {
        #[arg(long)]
        poly: String,
        #[command(flatten)]
        pair: Pair,
        /// Only a and a' may occur; no coprimality warning.
        #[arg(long)]
        trace: bool,
    },
    /// Vanishing count of a relation in s, s', x1, x2, x1', x2'.
    TestSatakeRelation {
        /// Relation, or one factor of it (repeatable).
        #[arg(long, required_unless_present = "builtin")]
        poly: Vec<String>,
        #[arg(long, value_enum, conflicts_with = "poly")]
        builtin: Option<SatakeBuiltin>,
        #[command(flatten)]
        pair: Pair,
    },
    /// Counts primes with |mθ_p + nθ'_p − α| ≤ tol.
    AngleTest {
        #[arg(long, allow_negative_numbers = true)]
        m: i64,
        #[arg(long, allow_negative_numbers = true)]
        n: i64,
        /// Real number, or a multiple of pi such as `pi`, `-pi/2`, `2*pi/3`.
        #[arg(long, allow_hyphen_values = true, value_parser = parse_angle)]
        alpha: f64,
        #[command(flatten)]
        pair: Pair,
        #[arg(long, env = "SIEGEL_TOL")]
        tol: Option<f64>,
    },
    /// Characters χ with a_p = χ(p)a'_p on the shared primes.
    TwistSearch {
        #[arg(long)]
        form: PathBuf,
        #[arg(long)]
        form2: PathBuf,
        #[arg(long, default_value_t = 8)]
        modulus_bound: u64,
        #[arg(long, default_value_t = 2)]
        order_bound: u64,
    },
    /// μ_d-norm of a polynomial in one variable.
    MuNorm {
        #[arg(long)]
        poly: String,
        #[arg(long)]
        var: String,
        #[arg(long)]
        d: u64,
        /// Comma-separated variable names; default is the canonical alphabet.
        #[arg(long)]
        vars: Option<String>,
    },
    /// Rewrites an invariant function in trace coordinates.
    RewriteInvariant {
        #[arg(long)]
        poly: String,
    },
    /// Factors s^{κ/d} − ζs'^{κ'/d} dividing a polynomial.
    CoprimeCheck {
        #[arg(long)]
        poly: String,
        #[arg(long)]
        kappa: u64,
        #[arg(long)]
        kappa2: u64,
    },
    /// A companion-matrix pair where the invariant function is nonzero.
    Witness {
        #[arg(long)]
        poly: String,
        #[arg(long)]
        kappa: u64,
        #[arg(long)]
        kappa2: u64,
        /// Component ζ_d^k with d = gcd(κ, κ').
        #[arg(long, default_value_t = 0, allow_negative_numbers = true)]
        zeta_k: i64,
        #[arg(long, default_value_t = WitnessBudget::default().max_w)]
        max_w: u64,
        #[arg(long, default_value_t = WitnessBudget::default().max_radius)]
        max_radius: i64,
    },
    /// Vanishing frequency of the invariant function on random F_q points.
    ComponentSample {
        #[arg(long)]
        poly: String,
        #[arg(long)]
        q: u64,
        #[arg(long)]
        kappa: u64,
        #[arg(long)]
        kappa2: u64,
        #[arg(long, default_value_t = 0, allow_negative_numbers = true)]
        zeta_k: i64,
        #[arg(long, default_value_t = 1000)]
        trials: u64,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Bp { .. } => "bp",
            Command::Euler { .. } => "euler",
            Command::Satake { .. } => "satake",
            Command::Kappa { .. } => "kappa",
            Command::TestRelation { .. } => "test-relation",
            Command::TestSatakeRelation { .. } => "test-satake-relation",
            Command::AngleTest { .. } => "angle-test",
            Command::TwistSearch { .. } => "twist-search",
            Command::MuNorm { .. } => "mu-norm",
            Command::RewriteInvariant { .. } => "rewrite-invariant",
            Command::CoprimeCheck { .. } => "coprime-check",
            Command::Witness { .. } => "witness",
            Command::ComponentSample { .. } => "component-sample",
        }
    }

    fn run(&self) -> Result<Outcome, CliError> {
        use commands as c;
        match self {
            Command::Bp { form, primes } => c::bp(form, primes),
            Command::Euler { form, primes } => c::euler(form, primes),
            Command::Satake { form, primes, tol } => c::satake(form, primes, *tol),
            Command::Kappa { form, form2 } => c::kappa(form, form2),
            Command::TestRelation { poly, pair, trace } => {
                c::test_relation_cmd(poly, &pair.form, &pair.form2, &pair.primes, *trace)
            }
            Command::TestSatakeRelation { poly, builtin, pair } => {
                c::test_satake_relation(poly, *builtin, &pair.form, &pair.form2, &pair.primes)
            }
            Command::AngleTest { m, n, alpha, pair, tol } => {
                c::angle_test(*m, *n, *alpha, &pair.form, &pair.form2, &pair.primes, *tol)
            }
            Command::TwistSearch { form, form2, modulus_bound, order_bound } => {
                c::twist_search_cmd(form, form2, *modulus_bound, *order_bound)
            }
            Command::MuNorm { poly, var, d, vars } => c::mu_norm_cmd(poly, var, *d, vars.as_deref()),
            Command::RewriteInvariant { poly } => c::rewrite_invariant(poly),
            Command::CoprimeCheck { poly, kappa, kappa2 } => c::coprime_check(poly, *kappa, *kappa2),
            Command::Witness { poly, kappa, kappa2, zeta_k, max_w, max_radius } => {
                let budget = WitnessBudget { max_w: *max_w, max_radius: *max_radius };
                c::witness(poly, *kappa, *kappa2, *zeta_k, budget)
            }
            Command::ComponentSample { poly, q, kappa, kappa2, zeta_k, trials, seed } => {
                c::component_sample(poly, *q, *kappa, *kappa2, *zeta_k, *trials, *seed)
            }
        }
    }
}

/// Parses `x`, `pi`, `-pi/2`, `2*pi/3`, `0.5*pi`.
fn parse_angle(src: &str) -> Result<f64, String> {
    let s = src.trim();
    if let Ok(x) = s.parse::<f64>() {
        return Ok(x);
    }
    let bad = || format!("not a number or multiple of pi: {src:?}");
    let (sign, body) = match s.strip_prefix('-') {
        Some(rest) => (-1.0, rest.trim()),
        None => (1.0, s),
    };
    let (num, den) = match body.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim().parse::<f64>().map_err(|_| bad())?),
        None => (body, 1.0),
    };
    let coef = match num.strip_suffix("pi") {
        Some("") => 1.0,
        Some(c) => c.trim().trim_end_matches('*').trim().parse::<f64>().map_err(|_| bad())?,
        None => return Err(bad()),
    };
    Ok(sign * coef * std::f64::consts::PI / den)
}

fn emit(text: &str, output: Option<&PathBuf>) -> Result<(), CliError> {
    match output {
        Some(path) => std::fs::write(path, text).map_err(|e| report::failed(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let name = cli.command.name();
    let result = cli.command.run().and_then(|o| {
        let rep = Report { command: name, inputs: &o.inputs, seed: o.seed, result: &o.result, warnings: &o.warnings };
        let text = match cli.format {
            Format::Json => rep.json(),
            Format::Text => rep.text(),
        };
        emit(&text, cli.output.as_ref())
    });
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            match cli.format {
                Format::Json => eprintln!("{}", e.to_json(name)),
                Format::Text => eprintln!("{e}"),
            }
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn angles() {
        assert_eq!(parse_angle("0").unwrap(), 0.0);
        assert_eq!(parse_angle("-1.5").unwrap(), -1.5);
        assert_eq!(parse_angle("pi").unwrap(), PI);
        assert_eq!(parse_angle("-pi/2").unwrap(), -PI / 2.0);
        assert!((parse_angle("2*pi/3").unwrap() - 2.0 * PI / 3.0).abs() < 1e-15);
        assert!(parse_angle("tau").is_err());
    }

    #[test]
    fn cli_is_well_formed() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }
}
