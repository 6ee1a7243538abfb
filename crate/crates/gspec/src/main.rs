//! gspec: counting sequences, cycle-index coefficients, and Polya
//! expansions for species and group-equivariant species.
//!
//! Exit codes: 0 success, 1 usage or parse error, 2 computation error,
//! 3 verification mismatch. The environment variable GSPEC_MAX_DEGREE caps
//! dense computation (default 30); closed-form point queries are exempt.

mod examples;
mod expr;
mod output;

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use gamma_species::expand::expand_symmetric;
use gamma_species::gamma::GroupCycleIndexSeries;
use gamma_species::oracle;
use gamma_species::perm::GroupElement;
use gamma_species::series::{integral_count, CycleIndexSeries};

use expr::EvalError;
use output::{render, Format, OutputRecord};

#[derive(Parser)]
#[command(
    name = "gspec",
    version,
    about = "Cycle index series for species and group-equivariant species",
    after_help = "Species expressions: named built-ins (E, X, L, C, P, E_<k>, L_<k>, L_rev, \
C_rev, graph, digraph, L_k_interchange:S<k>), integer literals, + - *, plethystic \
composition F(G), functorial composition F box G, restrict(F,lo,hi|inf), quotient(F), \
and recursion via `let R = <expr in R> in R`."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CountKind {
    Labeled,
    Isotype,
}

#[derive(Subcommand)]
enum Command {
    /// Counting sequences of a species expression.
    Counts {
        /// Species expression, e.g. "quotient(digraph)" or "let B = 1 + X*B in B".
        expr: String,
        /// Which structures to count.
        #[arg(long, value_enum)]
        kind: CountKind,
        /// Largest degree to report.
        #[arg(long)]
        max: u32,
        /// Count the quotient species (orbits under the group action).
        #[arg(long)]
        quotient: bool,
        /// Count structures fixed by this group element (cycle notation).
        #[arg(long)]
        element: Option<String>,
        #[arg(long, value_enum, default_value = "plain")]
        format: Format,
    },
    /// Cycle-index coefficients of a species expression, per degree.
    Coeffs {
        expr: String,
        #[arg(long)]
        max: u32,
        /// Report the component at this group element (default: identity).
        #[arg(long)]
        element: Option<String>,
        #[arg(long, value_enum, default_value = "plain")]
        format: Format,
    },
    /// Expansion in k color variables: partially-labeled structure counts
    /// by sorted profile.
    Expand {
        expr: String,
        /// Number of color variables.
        #[arg(long)]
        vars: u32,
        #[arg(long)]
        max: u32,
        /// Expand the component at this group element (default: identity).
        #[arg(long)]
        element: Option<String>,
        /// Expand the quotient instead of a component.
        #[arg(long)]
        quotient: bool,
        #[arg(long, value_enum, default_value = "plain")]
        format: Format,
    },
    /// Reproduce a standard computation (rblt, digraph-conversity,
    /// binary-tree-reversal, paths-polygons, self-complementary-graphs,
    /// kary-interchange).
    Example {
        name: String,
        #[arg(long, value_enum, default_value = "plain")]
        format: Format,
    },
    /// Cross-check the series library against brute-force enumeration.
    Verify {
        /// Largest label count per family (clamped by enumeration limits).
        #[arg(long, default_value_t = 4)]
        max_n: u32,
    },
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl ToString) -> Self {
        Failure {
            code: 1,
            message: message.to_string(),
        }
    }

    fn computation(message: impl ToString) -> Self {
        Failure {
            code: 2,
            message: message.to_string(),
        }
    }
}

impl From<gamma_species::Error> for Failure {
    fn from(e: gamma_species::Error) -> Self {
        Failure::computation(e)
    }
}

impl From<EvalError> for Failure {
    fn from(e: EvalError) -> Self {
        match e {
            EvalError::Usage(m) => Failure::usage(m),
            EvalError::Computation(e) => Failure::computation(e),
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(1),
            };
        }
    };
    match run(cli.command) {
        Ok(code) => code,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn parse_and_eval(text: &str) -> Result<GroupCycleIndexSeries, Failure> {
    let ast = expr::parse(text).map_err(Failure::usage)?;
    Ok(expr::evaluate(&ast)?)
}

fn parse_element(value: &GroupCycleIndexSeries, text: &str) -> Result<GroupElement, Failure> {
    let gamma = GroupElement::parse(text, value.group().degree()).map_err(Failure::usage)?;
    if !value.group().contains(&gamma) {
        return Err(Failure::usage(format!(
            "element {gamma} is not in the acting group (order {})",
            value.group().order()
        )));
    }
    Ok(gamma)
}

/// The single series a subcommand operates on, after resolving the
/// quotient/element flags.
fn select_series(
    value: &GroupCycleIndexSeries,
    quotient: bool,
    element: &Option<String>,
) -> Result<CycleIndexSeries, Failure> {
    if quotient && element.is_some() {
        return Err(Failure::usage(
            "--quotient and --element are mutually exclusive",
        ));
    }
    if quotient {
        return Ok(value.quotient());
    }
    match element {
        Some(text) => {
            let gamma = parse_element(value, text)?;
            Ok(value.component(&gamma)?.clone())
        }
        None => Ok(value.identity_component().clone()),
    }
}

fn run(command: Command) -> Result<ExitCode, Failure> {
    match command {
        Command::Counts {
            expr,
            kind,
            max,
            quotient,
            element,
            format,
        } => {
            let value = parse_and_eval(&expr)?;
            let series = select_series(&value, quotient, &element)?;
            let mut records = Vec::new();
            for n in 0..=max {
                let (kind_name, count) = match kind {
                    CountKind::Labeled => ("labeled", series.labeled_count(n)?),
                    CountKind::Isotype => ("isotype", series.isotype_count(n)?),
                };
                let count = integral_count(&count, &format!("{kind_name} count at degree {n}"))?;
                records.push(OutputRecord::new(n, kind_name, "-", count));
            }
            print!("{}", render(&records, format));
            Ok(ExitCode::SUCCESS)
        }
        Command::Coeffs {
            expr,
            max,
            element,
            format,
        } => {
            let value = parse_and_eval(&expr)?;
            let series = select_series(&value, false, &element)?;
            let mut records = Vec::new();
            for n in 0..=max {
                let stratum = series.stratum(n)?;
                for (lam, c) in stratum.iter_revlex() {
                    records.push(OutputRecord::new(n, "coefficient", &lam.to_string(), c));
                }
            }
            print!("{}", render(&records, format));
            Ok(ExitCode::SUCCESS)
        }
        Command::Expand {
            expr,
            vars,
            max,
            element,
            quotient,
            format,
        } => {
            if vars == 0 {
                return Err(Failure::usage("--vars must be at least 1"));
            }
            let value = parse_and_eval(&expr)?;
            let series = select_series(&value, quotient, &element)?;
            let expansion = expand_symmetric(&series, vars, max)?;
            let mut records = Vec::new();
            for n in 0..=max {
                for (profile, c) in expansion.profiles(n) {
                    records.push(OutputRecord::new(n, "profile", &profile.to_string(), c));
                }
            }
            print!("{}", render(&records, format));
            Ok(ExitCode::SUCCESS)
        }
        Command::Example { name, format } => {
            let records = examples::run_example(&name).ok_or_else(|| {
                Failure::usage(format!(
                    "unknown example `{name}`; choose one of: {}",
                    examples::EXAMPLE_NAMES.join(", ")
                ))
            })??;
            print!("{}", render(&records, format));
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { max_n } => {
            let reports = oracle::run_equivalence_suite(max_n)?;
            let mut failed = false;
            for report in &reports {
                if report.passed() {
                    println!(
                        "ok {} (n <= {}, {} checks)",
                        report.family, report.max_n, report.checks
                    );
                } else {
                    failed = true;
                    println!(
                        "FAIL {} (n <= {}, {} checks, {} mismatches)",
                        report.family,
                        report.max_n,
                        report.checks,
                        report.mismatches.len()
                    );
                    for m in &report.mismatches {
                        println!("  {m}");
                    }
                }
            }
            if failed {
                Ok(ExitCode::from(3))
            } else {
                Ok(ExitCode::SUCCESS)
            }
        }
    }
}
