//! Argument parsing and dispatch for the `hyperfib` binary.
//!
//! Exit codes: 0 on success, 1 when a verification fails, 2 on usage or
//! input errors.

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use crate::bench::bench;
use crate::cassini::build_window;
use crate::error::Error;
use crate::linalg::DetMethod;
use crate::output::{paint, render_matrix, render_sequence, render_term, use_color, OutputFormat};
use crate::qmatrix::{build_q, q_closed_tail};
use crate::sequences::{hyperfib, HyperfibSequence, Strategy};
use crate::verify::{verify_all, Suite, VerifyConfig, DEFAULT_SEED};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "hyperfib", version, about = "Exact hyperfibonacci numbers and Cassini determinants")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print a single term F_n^(r)
    Term(TermArgs),
    /// Print the terms F_from^(r) ..= F_to^(r)
    Seq(SeqArgs),
    /// Print the companion matrix Q_{r+2}
    Qmatrix(QmatrixArgs),
    /// Print the Hankel window M^(m,n,r)
    Hankel(WindowArgs),
    /// Print det M^(m,n,r)
    Det(DetArgs),
    /// Run the identity sweeps
    Verify(VerifyArgs),
    /// Time the evaluation strategies against each other
    Bench(BenchArgs),
}

#[derive(Debug, Args)]
#[command(allow_negative_numbers = true)]
struct TermArgs {
    #[arg(long)]
    r: u32,
    #[arg(long)]
    n: i64,
    #[arg(long, default_value = "recurrence")]
    strategy: Strategy,
    #[arg(long, default_value = "plain")]
    format: OutputFormat,
}

#[derive(Debug, Args)]
#[command(allow_negative_numbers = true)]
struct SeqArgs {
    #[arg(long)]
    r: u32,
    #[arg(long)]
    from: i64,
    #[arg(long)]
    to: i64,
    #[arg(long, default_value = "plain")]
    format: OutputFormat,
}

#[derive(Debug, Args)]
struct QmatrixArgs {
    #[arg(long)]
    r: u32,
    #[arg(long, default_value = "plain")]
    format: OutputFormat,
    /// Also print the closed-form (q_r, q_{r+1}, q_{r+2})
    #[arg(long)]
    verbose: bool,
}

#[derive(Debug, Args)]
#[command(allow_negative_numbers = true)]
struct WindowArgs {
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    m: u32,
    #[arg(long)]
    n: i64,
    #[arg(long)]
    r: u32,
    #[arg(long, default_value = "plain")]
    format: OutputFormat,
}

#[derive(Debug, Args)]
#[command(allow_negative_numbers = true)]
struct DetArgs {
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    m: u32,
    #[arg(long)]
    n: i64,
    #[arg(long)]
    r: u32,
    #[arg(long, default_value = "bareiss", value_parser = parse_method)]
    method: DetMethod,
}

#[derive(Debug, Args)]
#[command(allow_negative_numbers = true)]
struct VerifyArgs {
    #[arg(long = "r-max")]
    r_max: u32,
    #[arg(long = "n-min")]
    n_min: i64,
    #[arg(long = "n-max")]
    n_max: i64,
    /// Comma-separated suites, or `all`
    #[arg(long, default_value = "all", value_delimiter = ',', num_args = 0..)]
    suite: Vec<String>,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
}

#[derive(Debug, Args)]
#[command(allow_negative_numbers = true)]
struct BenchArgs {
    #[arg(long)]
    r: u32,
    #[arg(long)]
    n: i64,
    /// Comma-separated strategies (prefix, recurrence, matpow) or `all`
    #[arg(long, value_delimiter = ',', required = true)]
    strategy: Vec<String>,
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    repeat: u32,
}

fn parse_method(s: &str) -> Result<DetMethod, String> {
    match s {
        "bareiss" => Ok(DetMethod::Bareiss),
        "cofactor" => Ok(DetMethod::Cofactor),
        other => Err(format!("unknown method `{other}` (expected bareiss or cofactor)")),
    }
}

fn parse_suites(raw: &[String]) -> Result<Vec<Suite>, Error> {
    let mut suites = Vec::new();
    for s in raw.iter().map(|s| s.trim()).filter(|s| !s.is_empty()) {
        if s == "all" {
            suites.extend(Suite::ALL);
        } else {
            suites.push(s.parse()?);
        }
    }
    Ok(suites)
}

fn parse_strategies(raw: &[String]) -> Result<Vec<Strategy>, Error> {
    let mut out = Vec::new();
    for s in raw.iter().map(|s| s.trim()).filter(|s| !s.is_empty()) {
        if s == "all" {
            out.extend(Strategy::ALL);
        } else {
            let parsed: Strategy = s.parse()?;
            if !out.contains(&parsed) {
                out.push(parsed);
            }
        }
    }
    Ok(out)
}

/// Parses `args` (including the program name) and runs the subcommand.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(args, &mut stdout.lock(), &mut stderr.lock())
}

pub fn run_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = sink.write_all(text.as_bytes());
            return code;
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let code = match e {
                Error::StrategyMismatch { .. } => EXIT_FAILED,
                _ => EXIT_USAGE,
            };
            let _ = writeln!(err, "error: {e}");
            code
        }
    }
}

fn emit(out: &mut dyn Write, text: &str) -> Result<(), Error> {
    writeln!(out, "{text}").map_err(|e| Error::InvalidArgument(format!("write failed: {e}")))
}

fn dispatch(cmd: Command, out: &mut dyn Write) -> Result<i32, Error> {
    match cmd {
        Command::Term(a) => {
            let v = hyperfib(a.r, a.n, a.strategy)?;
            emit(out, &render_term(a.r, a.n, &v, a.format))?;
        }
        Command::Seq(a) => {
            if a.from > a.to {
                return Err(Error::InvalidArgument(format!(
                    "--from {} exceeds --to {}",
                    a.from, a.to
                )));
            }
            let values = HyperfibSequence::new(a.r).range(a.from, a.to);
            emit(out, &render_sequence(a.r, a.from, &values, a.format))?;
        }
        Command::Qmatrix(a) => {
            let q = build_q(a.r);
            let q_row: Vec<String> = q.q.iter().map(ToString::to_string).collect();
            let mut meta = json!({"r": a.r, "q": q_row});
            let tail = if a.verbose && a.r >= 1 {
                Some(q_closed_tail(a.r)?)
            } else {
                None
            };
            if let Some((q_r, q_r1, q_r2)) = &tail {
                meta["closed_tail"] = json!([q_r.to_string(), q_r1.to_string(), q_r2.to_string()]);
            }
            emit(out, &render_matrix(meta, &q.matrix, a.format))?;
            if let (Some((q_r, q_r1, q_r2)), OutputFormat::Plain) = (&tail, a.format) {
                emit(out, &format!("closed form (q_r, q_r+1, q_r+2) = ({q_r}, {q_r1}, {q_r2})"))?;
            }
        }
        Command::Hankel(a) => {
            let w = build_window(a.m as usize, a.n, a.r);
            let meta = json!({"m": a.m, "n": a.n, "r": a.r});
            emit(out, &render_matrix(meta, &w.matrix, a.format))?;
        }
        Command::Det(a) => {
            let w = build_window(a.m as usize, a.n, a.r);
            emit(out, &w.matrix.det(a.method)?.to_string())?;
        }
        Command::Verify(a) => {
            let suites = parse_suites(&a.suite)?;
            let cfg = VerifyConfig {
                r_max: a.r_max,
                n_min: a.n_min,
                n_max: a.n_max,
                suites,
                seed: a.seed,
            };
            let report = verify_all(&cfg)?;
            let color = use_color();
            emit(out, &format!("{:<12}{:>8}{:>10}{:>12}", "suite", "cases", "failures", "elapsed"))?;
            for s in &report.suites {
                let status = if s.failures.is_empty() {
                    paint("ok", "32", color)
                } else {
                    paint("FAIL", "31", color)
                };
                emit(
                    out,
                    &format!(
                        "{:<12}{:>8}{:>10}{:>12}  {status}",
                        s.suite.name(),
                        s.cases,
                        s.failures.len(),
                        format!("{:.1?}", s.elapsed)
                    ),
                )?;
            }
            for (suite, f) in report.failures() {
                emit(
                    out,
                    &format!("{suite} {}: computed {}, expected {}", f.case, f.computed, f.expected),
                )?;
            }
            let failures = report.failures().count();
            emit(out, &format!("total: {} cases, {failures} failures", report.cases()))?;
            return Ok(if report.passed() { EXIT_OK } else { EXIT_FAILED });
        }
        Command::Bench(a) => {
            let strategies = parse_strategies(&a.strategy)?;
            let rep = bench(a.r, a.n, &strategies, a.repeat as usize)?;
            emit(out, &format!("F_{}^({}) = {}", rep.n, rep.r, rep.value))?;
            emit(out, &format!("{:<12}{:>8}{:>14}{:>14}", "strategy", "repeat", "total", "mean"))?;
            for row in &rep.rows {
                emit(
                    out,
                    &format!(
                        "{:<12}{:>8}{:>14}{:>14}",
                        row.strategy.name(),
                        row.repeat,
                        format!("{:.2?}", row.total),
                        format!("{:.2?}", row.mean())
                    ),
                )?;
            }
        }
    }
    Ok(EXIT_OK)
}
