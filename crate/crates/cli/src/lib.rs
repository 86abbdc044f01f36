//! Command-line front end for `sylvester-core`: text formats, SVG output and
//! the `sylvester` binary's command dispatch.
//!
//! Exit status is 0 on success, 1 when the computation itself fails
//! (collinear input, rejected certificate, undecided at the precision cap)
//! and 2 for usage errors, including unreadable or malformed input files.
//! Output files are written only after everything else has succeeded.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use sylvester_core::counterexample::{
    adversary_run, demo_goldbach_point, demo_min_not_attained, demo_subset_min, goldbach_exceptions,
    strategy_by_name, CounterexampleError,
};
use sylvester_core::geometry::RealPoint;
use sylvester_core::numeric::{sign, Mode, OracleReal, Rational, SignKind};
use sylvester_core::oracle::{enumerate_ordinary_lines, verify_certificate, Verdict};
use sylvester_core::sylvester::{find_ordinary_line, find_ordinary_line_robust, SylvesterError};
use thiserror::Error;

pub mod formats;
pub mod svg;

pub use formats::{parse_certificate, parse_points, render_certificate, render_points, FormatError};
pub use svg::plot_svg;

#[derive(Debug, Parser)]
#[command(
    name = "sylvester",
    version,
    about = "Certified ordinary lines and finite-precision counterexamples"
)]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Exact,
    Robust,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Find an ordinary line and write its certificate.
    Find {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = ModeArg::Exact)]
        mode: ModeArg,
        /// Precision cap for robust mode.
        #[arg(long, default_value_t = 32, value_parser = clap::value_parser!(u32).range(1..))]
        cap: u32,
        #[arg(long)]
        out: PathBuf,
    },
    /// List every ordinary line by brute force.
    Oracle {
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Check a certificate against a point set.
    Verify {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        cert: PathBuf,
    },
    /// Play a strategy against the five-point gadget and refute its answer.
    DemoGallai {
        /// A pair such as PQ or RS, or one of random, dichotomy, finder.
        #[arg(long, default_value = "random")]
        strategy: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Enclose the Goldbach point using even numbers up to 2N.
    DemoGoldbach {
        #[arg(long, value_parser = clap::value_parser!(u64).range(2..))]
        n: u64,
    },
    /// Turn claimed minimizers into sign decisions about alpha.
    DemoMin {
        #[arg(long, allow_hyphen_values = true)]
        alpha: String,
    },
    /// Draw a point set, and optionally a certificate, as SVG.
    Plot {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        cert: Option<PathBuf>,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Read { path: PathBuf, source: std::io::Error },
    #[error("{path}: {source}")]
    Write { path: PathBuf, source: std::io::Error },
    #[error("{path}: {source}")]
    Format { path: PathBuf, source: FormatError },
    #[error("find failed: {0}")]
    Find(SylvesterError),
    #[error("certificate rejected: {0}")]
    Rejected(String),
    #[error("{0}")]
    Demo(CounterexampleError),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Read { .. } | CliError::Format { .. } => 2,
            _ => 1,
        }
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|source| CliError::Read {
        path: path.into(),
        source,
    })
}

fn write(path: &Path, contents: &str) -> Result<(), CliError> {
    fs::write(path, contents).map_err(|source| CliError::Write {
        path: path.into(),
        source,
    })
}

fn load_points(path: &Path) -> Result<sylvester_core::sylvester::PointSet, CliError> {
    parse_points(&read(path)?).map_err(|source| CliError::Format {
        path: path.into(),
        source,
    })
}

fn load_certificate(path: &Path) -> Result<sylvester_core::sylvester::OrdinaryLineCertificate, CliError> {
    parse_certificate(&read(path)?).map_err(|source| CliError::Format {
        path: path.into(),
        source,
    })
}

fn describe_rejection(verdict: &Verdict) -> String {
    match verdict {
        Verdict::Accept => "accept".into(),
        Verdict::Reject {
            index: Some(i),
            reason,
        } => format!("{reason} (point {i})"),
        Verdict::Reject { index: None, reason } => reason.to_string(),
    }
}

// Output lines go to `out`; the caller decides where that is.
fn execute(config: RunConfig, out: &mut dyn Write) -> Result<(), CliError> {
    let io = |e: std::io::Error| CliError::Write {
        path: "<stdout>".into(),
        source: e,
    };
    match config.command {
        Command::Find {
            input,
            mode,
            cap,
            out: cert_path,
        } => {
            let s = load_points(&input)?;
            let cert = match mode {
                ModeArg::Exact => find_ordinary_line(&s).map_err(CliError::Find)?,
                ModeArg::Robust => {
                    let reals: Vec<RealPoint> = s.points().iter().map(|p| p.to_real()).collect();
                    find_ordinary_line_robust(&reals, cap)
                        .map_err(CliError::Find)?
                        .certificate
                }
            };
            let verdict = verify_certificate(&s, &cert);
            if !verdict.is_accept() {
                return Err(CliError::Rejected(describe_rejection(&verdict)));
            }
            write(&cert_path, &render_certificate(&cert))?;
            let (a, b) = (&s.points()[cert.a_idx], &s.points()[cert.b_idx]);
            writeln!(
                out,
                "ordinary line through point {} {a} and point {} {b}",
                cert.a_idx, cert.b_idx
            )
            .map_err(io)?;
            writeln!(out, "verify: accept").map_err(io)?;
        }
        Command::Oracle { input } => {
            let s = load_points(&input)?;
            let lines = enumerate_ordinary_lines(&s);
            writeln!(out, "{} ordinary lines", lines.len()).map_err(io)?;
            for report in lines {
                let (i, j) = report.pair;
                writeln!(out, "{i} {j} {} {}", s.points()[i], s.points()[j]).map_err(io)?;
            }
        }
        Command::Verify { input, cert } => {
            let s = load_points(&input)?;
            let c = load_certificate(&cert)?;
            let verdict = verify_certificate(&s, &c);
            if !verdict.is_accept() {
                return Err(CliError::Rejected(describe_rejection(&verdict)));
            }
            writeln!(out, "accept").map_err(io)?;
        }
        Command::DemoGallai { strategy, seed } => {
            let mut strategy =
                strategy_by_name(&strategy, seed).map_err(|e| CliError::Usage(e.to_string()))?;
            let name = strategy.name();
            let refutation = adversary_run(strategy.as_mut()).map_err(CliError::Demo)?;
            let t = &refutation.transcript;
            writeln!(out, "strategy: {name}").map_err(io)?;
            let queries: Vec<String> = t.queries.iter().map(u32::to_string).collect();
            if queries.is_empty() {
                writeln!(out, "queries: none").map_err(io)?;
            } else {
                writeln!(out, "queries: {}", queries.join(" ")).map_err(io)?;
            }
            writeln!(out, "answer: {}", t.answer).map_err(io)?;
            writeln!(out, "commit: alpha = {} (m = {})", refutation.alpha, refutation.m).map_err(io)?;
            for (label, p) in "PQRST".chars().zip(refutation.points.points()) {
                writeln!(out, "  {label} = {p}").map_err(io)?;
            }
            let on_line: Vec<String> = refutation
                .report
                .distinct_incident
                .iter()
                .map(|p| p.to_string())
                .collect();
            writeln!(
                out,
                "line {} carries {} distinct points: {}",
                t.answer,
                refutation.distinct_count(),
                on_line.join(" ")
            )
            .map_err(io)?;
            writeln!(out, "refuted: {} is not an ordinary line", t.answer).map_err(io)?;
        }
        Command::DemoGoldbach { n } => {
            let interval = demo_goldbach_point(n).map_err(CliError::Demo)?;
            let exceptions = goldbach_exceptions(n);
            writeln!(
                out,
                "even numbers 4..={} that are not a sum of two primes: {}",
                2 * n,
                exceptions.len()
            )
            .map_err(io)?;
            writeln!(
                out,
                "y-coordinate of the point lies in [{}, {}]",
                interval.lo(),
                interval.hi()
            )
            .map_err(io)?;
            writeln!(
                out,
                "this interval contains 0, so it does not decide whether the point is on the x-axis"
            )
            .map_err(io)?;
        }
        Command::DemoMin { alpha } => {
            let value: Rational = alpha
                .parse()
                .map_err(|_| CliError::Usage(format!("malformed rational {alpha:?}")))?;
            demo_min(&value, out).map_err(io)?;
        }
        Command::Plot {
            input,
            cert,
            out: svg_path,
        } => {
            let s = load_points(&input)?;
            let c = cert.as_deref().map(load_certificate).transpose()?;
            if let Some(c) = &c {
                let verdict = verify_certificate(&s, c);
                if !verdict.is_accept() {
                    return Err(CliError::Rejected(describe_rejection(&verdict)));
                }
            }
            write(&svg_path, &plot_svg(&s, c.as_ref()))?;
            writeln!(out, "wrote {}", svg_path.display()).map_err(io)?;
        }
    }
    Ok(())
}

const DEMO_CAP: u32 = 16;

// A selector that only sees intervals: compares a+ and a- by robust sign
// of their difference at DEMO_CAP and guesses a+ when that is undecided.
fn interval_selector(plus: &OracleReal, minus: &OracleReal) -> usize {
    match sign(&(minus - plus), Mode::Robust { cap: DEMO_CAP }) {
        Ok(Ok(w)) if w.kind() == SignKind::Negative => 1,
        _ => 0,
    }
}

fn demo_min(value: &Rational, out: &mut dyn Write) -> std::io::Result<()> {
    let alpha = OracleReal::exact(value.clone());
    writeln!(out, "alpha = {value}")?;
    let honest = |_: &OracleReal, _: &OracleReal| usize::from(value.is_positive());
    report(
        out,
        "min {a+, a-}, exact selector",
        demo_min_not_attained(&alpha, honest),
    )?;
    report(
        out,
        &format!("min {{a+, a-}}, selector at precision {DEMO_CAP}"),
        demo_min_not_attained(&alpha, interval_selector),
    )?;
    let half = Rational::new(1, 2).expect("nonzero denominator");
    if value.is_negative() || value >= &half {
        writeln!(
            out,
            "min {{x in {{a, 1}} : x > 0}}: skipped, needs 0 <= alpha < 1/2"
        )?;
        return Ok(());
    }
    let honest_min = |a: &OracleReal| {
        if value.is_zero() {
            OracleReal::from_integer(1)
        } else {
            a.clone()
        }
    };
    report(
        out,
        "min {x in {a, 1} : x > 0}, exact claim",
        demo_subset_min(&alpha, honest_min),
    )?;
    // reads a at precision DEMO_CAP and takes anything that might be 0 for 0
    let guessed_min = |a: &OracleReal| {
        if a.query(DEMO_CAP).contains(&Rational::zero()) {
            OracleReal::from_integer(1)
        } else {
            a.clone()
        }
    };
    report(
        out,
        &format!("min {{x in {{a, 1}} : x > 0}}, claim at precision {DEMO_CAP}"),
        demo_subset_min(&alpha, guessed_min),
    )
}

fn report<C: std::fmt::Debug>(
    out: &mut dyn Write,
    label: &str,
    result: Result<sylvester_core::counterexample::Verified<C>, CounterexampleError>,
) -> std::io::Result<()> {
    match result {
        Ok(v) => writeln!(
            out,
            "{label}: concludes {:?} (checked: {})",
            v.conclusion, v.verified
        ),
        Err(e) => writeln!(out, "{label}: {e}"),
    }
}

/// Parses `args` (program name first) and runs the command. Returns the
/// process exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let config = match RunConfig::try_parse_from(args) {
        Ok(config) => config,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    match execute(config, out) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}
