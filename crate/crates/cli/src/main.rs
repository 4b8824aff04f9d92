use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use k3inv::exact::bigcomplex::{DEFAULT_PRECISION, MAX_PRECISION};
use k3inv::exact::{parse_rational, BigComplex, Rational};
use k3inv::lattice::{discriminant_form, named_lattice, roots};
use k3inv::reconcile::reconciliation_report;
use k3inv::suite::{run_suite, SuiteOptions};
use k3inv::{wire, Error};

#[derive(Parser, Debug)]
#[command(name = "k3tool", version, about = "Invariants, fibrations and lattices of Inose and Kummer K3 surfaces")]
struct Cli {
    /// output format
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Fibration {
    Theta2,
    Psi2,
    Upsilon2,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Show {
    Gram,
    Disc,
    Roots,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// σ, π and the J-pair of the Inose surface with parameters (a, b)
    Invariants {
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        #[arg(long, allow_hyphen_values = true)]
        b: String,
    },
    /// Singular fibers of Θ₂ or Ψ₂ (needs --a, --b) or of Υ₂ (needs --alpha, --beta)
    Fibers {
        fibration: Fibration,
        #[arg(long, allow_hyphen_values = true)]
        a: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        b: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        alpha: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        beta: Option<String>,
    },
    /// Match Ψ₂ on the Inose side with Υ₂ on the Kummer side
    Match {
        #[arg(long, allow_hyphen_values = true)]
        alpha: String,
        #[arg(long, allow_hyphen_values = true)]
        beta: String,
        /// also check the second sign choice and the multiplicity profiles
        #[arg(long)]
        verify_all: bool,
    },
    /// Gram matrix, discriminant form or roots of a named lattice
    Lattice {
        #[arg(long)]
        name: String,
        #[arg(long, value_enum, default_value_t = Show::Gram)]
        show: Show,
    },
    /// Klein's J (normalized so J(i) = 1) at τ given as "re,im"
    Modj {
        #[arg(long, allow_hyphen_values = true)]
        tau: String,
        #[arg(long)]
        prec: Option<usize>,
    },
    /// (σ, π) = (J(τ) + J(u), J(τ)J(u)) with the period-vector checks
    Periods {
        #[arg(long, allow_hyphen_values = true)]
        tau: String,
        #[arg(long, allow_hyphen_values = true)]
        u: String,
        #[arg(long)]
        prec: Option<usize>,
    },
    /// Run the acceptance battery
    VerifySuite {
        #[arg(long)]
        seed: Option<u64>,
        /// small sample counts, for smoke runs
        #[arg(long)]
        quick: bool,
    },
    /// Derived closed forms against the printed ones
    Reconcile,
}

/// Error with the exit code it maps to.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::PrecisionExhausted { .. } => 3,
            _ => 2,
        };
        Failure { code, message: e.to_string() }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure { code: 2, message: message.into() }
}

fn rational_arg(flag: &str, s: &str) -> Result<Rational, Failure> {
    parse_rational(s).map_err(|e| usage(format!("--{flag}: {e}")))
}

fn required<'a>(flag: &str, v: &'a Option<String>) -> Result<&'a str, Failure> {
    v.as_deref().ok_or_else(|| usage(format!("--{flag} is required for this fibration")))
}

fn default_precision() -> Result<usize, Failure> {
    match std::env::var("K3TOOL_PREC") {
        Ok(s) => s.trim().parse().map_err(|_| usage(format!("K3TOOL_PREC: not a bit count: {s:?}"))),
        Err(_) => Ok(DEFAULT_PRECISION),
    }
}

fn precision(flag: Option<usize>) -> Result<usize, Failure> {
    let p = match flag {
        Some(p) => p,
        None => default_precision()?,
    };
    if p < 16 {
        return Err(usage(format!("precision {p} is below 16 bits")));
    }
    if p > MAX_PRECISION {
        return Err(Failure { code: 3, message: Error::PrecisionExhausted { bits: p }.to_string() });
    }
    Ok(p)
}

fn complex_arg(flag: &str, s: &str, prec: usize) -> Result<BigComplex, Failure> {
    BigComplex::parse(s, prec).ok_or_else(|| usage(format!("--{flag}: expected \"re,im\", got {s:?}")))
}

/// Output value and whether every certificate in it held.
fn run(cmd: &Command) -> Result<(Value, bool), Failure> {
    Ok(match cmd {
        Command::Invariants { a, b } => (wire::invariants(&rational_arg("a", a)?, &rational_arg("b", b)?), true),
        Command::Fibers { fibration, a, b, alpha, beta } => {
            let v = match fibration {
                Fibration::Theta2 | Fibration::Psi2 => {
                    let which = if *fibration == Fibration::Theta2 { "theta2" } else { "psi2" };
                    let a = rational_arg("a", required("a", a)?)?;
                    let b = rational_arg("b", required("b", b)?)?;
                    wire::inose_fibers(which, &a, &b)?
                }
                Fibration::Upsilon2 => {
                    let al = rational_arg("alpha", required("alpha", alpha)?)?;
                    let be = rational_arg("beta", required("beta", beta)?)?;
                    wire::upsilon_fibers(&al, &be)?
                }
            };
            let ok = v["euler_sum"] == 24 && v.get("consistent").is_none_or(|c| *c == true);
            (v, ok)
        }
        Command::Match { alpha, beta, verify_all } => {
            wire::match_report(&rational_arg("alpha", alpha)?, &rational_arg("beta", beta)?, *verify_all)?
        }
        Command::Lattice { name, show } => {
            let lat = named_lattice(name)?;
            let v = match show {
                Show::Gram => lat.to_json(),
                Show::Disc => {
                    let mut v = discriminant_form(&lat)?.to_json();
                    v["name"] = Value::String(lat.name.clone());
                    v
                }
                Show::Roots => {
                    let r = roots(&lat)?;
                    json!({ "count": r.len(), "name": lat.name, "roots": r })
                }
            };
            (v, true)
        }
        Command::Modj { tau, prec } => {
            let p = precision(*prec)?;
            (wire::modj(&complex_arg("tau", tau, p + 32)?, p)?, true)
        }
        Command::Periods { tau, u, prec } => {
            let p = precision(*prec)?;
            wire::periods(&complex_arg("tau", tau, p + 32)?, &complex_arg("u", u, p + 32)?, p)?
        }
        Command::VerifySuite { seed, quick } => {
            let mut opts = SuiteOptions::default();
            if let Some(s) = seed {
                opts.seed = *s;
            }
            if *quick {
                opts.invariant_samples = 20;
                opts.discriminant_samples = 5;
                opts.match_samples = 3;
                opts.match_height = 12;
                opts.upsilon_samples = 4;
                opts.upsilon_height = 50;
            }
            let r = run_suite(&opts);
            (r.to_json(), r.passed())
        }
        Command::Reconcile => {
            let r = reconciliation_report()?;
            (r.to_json(), r.passed())
        }
    })
}

/// One "path = value" line per leaf.
fn flatten(prefix: &str, v: &Value, out: &mut Vec<String>) {
    let key = |k: &str| if prefix.is_empty() { k.to_string() } else { format!("{prefix}.{k}") };
    match v {
        Value::Object(m) => m.iter().for_each(|(k, x)| flatten(&key(k), x, out)),
        Value::Array(a) if a.iter().any(|x| x.is_object()) => {
            a.iter().enumerate().for_each(|(i, x)| flatten(&key(&i.to_string()), x, out))
        }
        Value::String(s) => out.push(format!("{prefix} = {s}")),
        other => out.push(format!("{prefix} = {other}")),
    }
}

fn render(v: &Value, format: Format) -> String {
    match format {
        Format::Json => v.to_string(),
        Format::Text => {
            let mut lines = Vec::new();
            flatten("", v, &mut lines);
            lines.join("\n")
        }
    }
}

/// A closed pipe on stdout is not an error worth a panic.
fn emit(s: &str) {
    let mut out = std::io::stdout().lock();
    let _ = writeln!(out, "{s}");
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli.command) {
        Ok((v, ok)) => {
            emit(&render(&v, cli.format));
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(f) => {
            eprintln!("k3tool: {}", f.message);
            emit(&json!({ "error": f.message, "exit_code": f.code }).to_string());
            ExitCode::from(f.code)
        }
    }
}
