use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use ellsurf::exactalg::{parse_rational, qi, Rational};
use ellsurf::qseries::BinaryQF;
use ellsurf::report::{self, QSeriesOptions, Report};
use num_complex::Complex64;
use serde_json::json;

#[derive(Parser)]
#[command(name = "ellsurf", version, about = "Reports for elliptic surfaces with p_g = q = 1")]
struct Cli {
    /// Machine-readable JSON instead of a table.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Singular fibers and j-map of the Hesse pencil.
    Hesse,
    /// The quotient surface X' and the j-invariant of E_a.
    Quotient,
    /// The trisection curve and its genus bookkeeping.
    Trisection(AArg),
    /// The full Y_a chain for a rational parameter.
    Surface {
        #[arg(long, value_parser = parse_param)]
        a: Rational,
    },
    /// Symbolic and combinatorial base change.
    Basechange,
    /// Shioda-Tate, discriminant groups and the primitivity search.
    Lattice,
    /// Semistable reduction of IV* on dual graphs.
    Reduction,
    /// Theta series, eta quotient and Atkin-Lehner check.
    Qseries(QArgs),
    /// Monodromy tuples and braid moves.
    Hurwitz,
    /// Every acceptance criterion.
    All,
}

#[derive(Args)]
struct AArg {
    #[arg(long, value_parser = parse_param, default_value = "4")]
    a: Rational,
}

#[derive(Args)]
struct QArgs {
    #[arg(long, default_value_t = 80)]
    terms: i64,
    #[arg(long, default_value_t = 1e-6)]
    tolerance: f64,
    /// Also evaluate at this point, given as "re,im".
    #[arg(long, value_parser = parse_tau)]
    tau: Option<Complex64>,
    /// Theta coefficients of another form, given as "a,b,c".
    #[arg(long, value_parser = parse_form)]
    form: Option<BinaryQF>,
    /// Include the claim that theta vanishes at i/sqrt(11).
    #[arg(long)]
    check_zero: bool,
}

fn parse_param(s: &str) -> Result<Rational, String> {
    parse_rational(s).ok_or_else(|| format!("not a rational number: {s:?}"))
}

fn parse_tau(s: &str) -> Result<Complex64, String> {
    let parts: Vec<f64> = s.split(',').map(|p| p.trim().parse::<f64>().map_err(|e| e.to_string())).collect::<Result<_, _>>()?;
    match parts[..] {
        [re, im] if im > 0.0 => Ok(Complex64::new(re, im)),
        [_, _] => Err("tau must lie in the upper half plane".into()),
        _ => Err("expected \"re,im\"".into()),
    }
}

fn parse_form(s: &str) -> Result<BinaryQF, String> {
    let parts: Vec<i64> = s.split(',').map(|p| p.trim().parse::<i64>().map_err(|e| e.to_string())).collect::<Result<_, _>>()?;
    match parts[..] {
        [a, b, c] => BinaryQF::new(a, b, c).map_err(|e| e.to_string()),
        _ => Err("expected \"a,b,c\"".into()),
    }
}

/// Write to stdout, ignoring a closed pipe.
fn out(s: &str) {
    let _ = std::io::stdout().write_all(s.as_bytes());
}

fn emit(reports: &[Report], json: bool) -> bool {
    if json {
        let v = if reports.len() == 1 { serde_json::to_value(&reports[0]) } else { serde_json::to_value(reports) };
        out(&(serde_json::to_string_pretty(&v.unwrap()).unwrap() + "\n"));
    } else {
        for r in reports {
            out(&r.render());
        }
    }
    reports.iter().all(Report::passed)
}

fn run_all(json: bool) -> bool {
    let criteria = report::acceptance_criteria();
    let ok = criteria.iter().all(|c| c.passed());
    if json {
        let v = json!({ "tool": "ellsurf", "version": env!("CARGO_PKG_VERSION"), "criteria": criteria });
        out(&(serde_json::to_string_pretty(&v).unwrap() + "\n"));
    } else {
        for c in &criteria {
            out(&c.report.render());
        }
        out("\n");
        for c in &criteria {
            out(&format!("{} criterion {:>2}: {}\n", if c.passed() { "PASS" } else { "FAIL" }, c.id, c.name));
        }
    }
    ok
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let ok = match cli.command {
        Command::Hesse => emit(&[report::hesse_report()], cli.json),
        Command::Quotient => emit(&[report::quotient_report(), report::ea_j_report()], cli.json),
        Command::Trisection(AArg { a }) => {
            if a == qi(0) {
                eprintln!("error: --a must be nonzero");
                return ExitCode::from(2);
            }
            emit(&[report::trisection_report(&a)], cli.json)
        }
        Command::Surface { a } => emit(&[report::surface_report(&a)], cli.json),
        Command::Basechange => emit(&[report::basechange_report()], cli.json),
        Command::Lattice => emit(&[report::lattice_report()], cli.json),
        Command::Reduction => emit(&[report::reduction_report()], cli.json),
        Command::Qseries(q) => {
            if q.terms < 4 {
                eprintln!("error: --terms must be at least 4");
                return ExitCode::from(2);
            }
            let opts = QSeriesOptions { terms: q.terms, tolerance: q.tolerance, check_zero: q.check_zero, tau: q.tau, form: q.form };
            emit(&[report::qseries_report(&opts)], cli.json)
        }
        Command::Hurwitz => emit(&[report::hurwitz_report()], cli.json),
        Command::All => run_all(cli.json),
    };
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
