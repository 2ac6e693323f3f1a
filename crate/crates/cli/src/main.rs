//! `ncdiv`: division with remainder over finite-dimensional algebras.
//!
//! Exit status is 0 when the answer is "true"/"solvable", 1 when it is
//! "false"/"unsolvable" and 2 on usage or input errors.

use std::fmt::Display;
use std::path::Path;
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use ncdiv_core::euclid::{euclidean_gcd, DivisionPolynomials, EuclideanSetting, HurwitzQuaternions, Integers};
use ncdiv_core::parse::{parse_element, parse_poly};
use ncdiv_core::poly::{poly_divmod, verify_prime_degree1, PrimeVerdict};
use ncdiv_core::remainder::{divide, same_coset};
use ncdiv_core::solver::{find_quotient, solve_quotient};
use ncdiv_core::{builtin, Algebra, Element, Error, QuotientAlgebra, RemainderStrategy};

#[derive(Parser)]
#[command(name = "ncdiv", version, about = "Division with remainder in noncommutative algebras")]
struct Cli {
    /// Builtin algebra (quaternions, matrix2, dual, complex, ground, integers) or a JSON file.
    #[arg(long, global = true, default_value = "quaternions")]
    algebra: String,

    /// Remainder strategy: echelon, least-nonneg, min-norm or degree.
    #[arg(long, global = true)]
    strategy: Option<String>,

    /// Print machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// All tensors c with c ∘ A = B.
    Quotient {
        #[arg(allow_hyphen_values = true)]
        divisor: String,
        #[arg(allow_hyphen_values = true)]
        dividend: String,
    },
    /// Annihilator of A: tensors c with c ∘ A = 0.
    Kernel {
        #[arg(allow_hyphen_values = true)]
        element: String,
    },
    /// Whether A divides B.
    Divides {
        #[arg(allow_hyphen_values = true)]
        divisor: String,
        #[arg(allow_hyphen_values = true)]
        dividend: String,
    },
    /// Canonical quotient and remainder of B by A.
    Remainder {
        #[arg(allow_hyphen_values = true)]
        divisor: String,
        #[arg(allow_hyphen_values = true)]
        dividend: String,
    },
    /// Whether B and C lie in the same coset modulo A.
    Coset {
        #[arg(allow_hyphen_values = true)]
        divisor: String,
        #[arg(allow_hyphen_values = true)]
        first: String,
        #[arg(allow_hyphen_values = true)]
        second: String,
    },
    /// The quotient algebra modulo the ideal generated by A.
    Modalg {
        #[arg(allow_hyphen_values = true)]
        element: String,
    },
    /// Long division of the polynomial P by Q.
    Polydiv {
        #[arg(allow_hyphen_values = true)]
        dividend: String,
        #[arg(allow_hyphen_values = true)]
        divisor: String,
    },
    /// Checks a candidate divisor Q of the degree-one polynomial P.
    PrimeCheck {
        #[arg(allow_hyphen_values = true)]
        polynomial: String,
        #[arg(allow_hyphen_values = true)]
        divisor: String,
    },
    /// Euclidean algorithm with its full trace.
    Gcd {
        #[arg(allow_hyphen_values = true)]
        first: String,
        #[arg(allow_hyphen_values = true)]
        second: String,
    },
}

struct Report {
    truth: bool,
    text: String,
    json: Value,
}

impl Report {
    fn new(truth: bool, text: impl Into<String>, json: Value) -> Self {
        Report { truth, text: text.into(), json }
    }
}

fn load_algebra(source: &str) -> Result<Arc<Algebra>, Error> {
    let name = if source == "integers" { "ground" } else { source };
    if !Path::new(source).is_file() {
        return builtin(name);
    }
    let text = std::fs::read_to_string(source)
        .map_err(|io| Error::Precondition(format!("cannot read `{source}`: {io}")))?;
    Algebra::from_json(&text)
}

fn strategy(cli: &Cli, default: RemainderStrategy) -> Result<RemainderStrategy, Error> {
    cli.strategy.as_deref().map_or(Ok(default), str::parse)
}

fn strings<T: Display>(items: &[T]) -> Vec<String> {
    items.iter().map(ToString::to_string).collect()
}

fn run(cli: &Cli) -> Result<Report, Error> {
    let a = load_algebra(&cli.algebra)?;
    let el = |text: &str| parse_element(&a, text);
    match &cli.command {
        Command::Quotient { divisor, dividend } => {
            let set = solve_quotient(&el(divisor)?, &el(dividend)?)?;
            let particular = set.particular.as_ref().map(ToString::to_string);
            let text = match &particular {
                Some(p) => format!("solvable\nparticular: {p}\nkernel dimension: {}", set.kernel_dim()),
                None => format!("unsolvable\nkernel dimension: {}", set.kernel_dim()),
            };
            let json = json!({
                "solvable": set.solvable(),
                "particular": particular,
                "kernel_dim": set.kernel_dim(),
                "kernel_basis": strings(&set.kernel_basis),
            });
            Ok(Report::new(set.solvable(), text, json))
        }
        Command::Kernel { element } => {
            let set = solve_quotient(&el(element)?, &Element::zero(&a))?;
            let mut text = format!("kernel dimension: {}", set.kernel_dim());
            for k in &set.kernel_basis {
                text.push_str(&format!("\n  {k}"));
            }
            let json = json!({ "kernel_dim": set.kernel_dim(), "kernel_basis": strings(&set.kernel_basis) });
            Ok(Report::new(true, text, json))
        }
        Command::Divides { divisor, dividend } => {
            let quotient = find_quotient(&el(divisor)?, &el(dividend)?)?;
            let solvable = quotient.is_some();
            let quotient = quotient.map(|q| q.to_string());
            let text = match &quotient {
                Some(q) => format!("true\nquotient: {q}"),
                None => "false".to_string(),
            };
            Ok(Report::new(solvable, text, json!({ "solvable": solvable, "quotient": quotient })))
        }
        Command::Remainder { divisor, dividend } => {
            let strategy = strategy(cli, RemainderStrategy::Echelon)?;
            let (quotient, remainder) = divide(&el(dividend)?, &el(divisor)?, strategy)?;
            let text = format!("quotient: {quotient}\nremainder: {remainder}");
            let json = json!({ "quotient": quotient.to_string(), "remainder": remainder.to_string() });
            Ok(Report::new(true, text, json))
        }
        Command::Coset { divisor, first, second } => {
            let (a, b, c) = (el(divisor)?, el(first)?, el(second)?);
            let same = same_coset(&b, &c, &a)?;
            let strategy = strategy(cli, RemainderStrategy::Echelon)?;
            let rb = divide(&b, &a, strategy)?.1;
            let rc = divide(&c, &a, strategy)?.1;
            let text = format!("{same}\nremainders: {rb}, {rc}");
            let json = json!({ "solvable": same, "remainder": [rb.to_string(), rc.to_string()] });
            Ok(Report::new(same, text, json))
        }
        Command::Modalg { element } => {
            let quotient = QuotientAlgebra::new(&el(element)?)?;
            quotient.check_structure()?;
            modalg_report(&quotient)
        }
        Command::Polydiv { dividend, divisor } => {
            let (p, q) = (parse_poly(&a, dividend)?, parse_poly(&a, divisor)?);
            match poly_divmod(&p, &q) {
                Ok((quotient, remainder)) => {
                    let text = format!("quotient: {quotient}\nremainder: {remainder}");
                    let json = json!({
                        "solvable": true,
                        "quotient": quotient.to_string(),
                        "remainder": remainder.to_string(),
                    });
                    Ok(Report::new(true, text, json))
                }
                Err(e @ Error::NotReducible { .. }) => {
                    let json = json!({ "solvable": false, "quotient": null, "remainder": null });
                    Ok(Report::new(false, format!("unsolvable: {e}"), json))
                }
                Err(e) => Err(e),
            }
        }
        Command::PrimeCheck { polynomial, divisor } => {
            let verdict = verify_prime_degree1(&parse_poly(&a, polynomial)?, &parse_poly(&a, divisor)?)?;
            let (truth, text, json) = match verdict {
                PrimeVerdict::UnitDivisor => (true, "unit divisor".to_string(), json!({ "verdict": "unit-divisor" })),
                PrimeVerdict::UnitQuotient { quotient, inverse } => (
                    true,
                    format!("unit quotient\nquotient: {quotient}\ninverse: {inverse}"),
                    json!({
                        "verdict": "unit-quotient",
                        "quotient": quotient.to_string(),
                        "inverse": inverse.to_string(),
                    }),
                ),
                PrimeVerdict::NotADivisor => (false, "not a divisor".to_string(), json!({ "verdict": "not-a-divisor" })),
                PrimeVerdict::Violation => (false, "violation".to_string(), json!({ "verdict": "violation" })),
            };
            Ok(Report::new(truth, text, json))
        }
        Command::Gcd { first, second } => {
            let default = if a.dim() == 1 {
                RemainderStrategy::LeastNonnegative
            } else {
                RemainderStrategy::MinNorm
            };
            match strategy(cli, default)? {
                RemainderStrategy::LeastNonnegative => {
                    gcd_report(&Integers::new(&a)?, el(first)?, el(second)?)
                }
                RemainderStrategy::MinNorm => {
                    gcd_report(&HurwitzQuaternions::new(&a)?, el(first)?, el(second)?)
                }
                RemainderStrategy::DegreeReduction => gcd_report(
                    &DivisionPolynomials::new(&a),
                    parse_poly(&a, first)?,
                    parse_poly(&a, second)?,
                ),
                RemainderStrategy::Echelon => Err(Error::InapplicableStrategy {
                    strategy: "echelon",
                    reason: "echelon remainders do not descend, so they cannot drive a gcd".into(),
                }),
            }
        }
    }
}

fn gcd_report<S: EuclideanSetting>(setting: &S, a: S::Value, b: S::Value) -> Result<Report, Error> {
    let trace = euclidean_gcd(setting, &a, &b)?;
    let mut text = String::new();
    for step in &trace.steps {
        text.push_str(&format!(
            "{} = ({}) ∘ ({}) + ({})\n",
            step.dividend, step.quotient, step.divisor, step.remainder
        ));
    }
    text.push_str(&format!("gcd: {}", trace.result));
    Ok(Report::new(true, text, trace.to_json()))
}

fn modalg_report(quotient: &QuotientAlgebra) -> Result<Report, Error> {
    let labels: Vec<String> = quotient
        .complement()
        .iter()
        .map(|&c| quotient.source().labels()[c].clone())
        .collect();
    let m = quotient.dim();
    let json = json!({
        "dim": m,
        "labels": labels,
        "unit": strings(quotient.unit()),
        "constants": (0..m)
            .map(|i| (0..m).map(|j| (0..m).map(|k| quotient.constant(i, j, k).to_string()).collect::<Vec<_>>()).collect::<Vec<_>>())
            .collect::<Vec<_>>(),
    });
    if m == 0 {
        return Ok(Report::new(true, "dimension 0: the ideal is the whole algebra", json));
    }
    let induced = quotient.to_algebra()?;
    let mut text = format!("dimension {m}, basis {}", labels.join(", "));
    for i in 0..m {
        for j in 0..m {
            let product = Element::basis(&induced, i).mul(&Element::basis(&induced, j))?;
            text.push_str(&format!("\n  {} * {} = {}", labels[i], labels[j], product));
        }
    }
    Ok(Report::new(true, text, json))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(report) => {
            if cli.json {
                println!("{}", serde_json::to_string_pretty(&report.json).expect("json"));
            } else {
                println!("{}", report.text);
            }
            ExitCode::from(if report.truth { 0 } else { 1 })
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
