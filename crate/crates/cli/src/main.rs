//! `frechet`: compare closed polygonal curves from the command line.
//!
//! Exit codes are uniform across subcommands: 0 for success (YES for
//! `decide`), 1 for a NO verdict, 2 for any usage or input error.

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Result};
use clap::{Args, Parser, Subcommand};
use frechet_core::decision::{compute_distance, decide};

mod bench;
mod curve_file;
mod rank;
mod render;

#[derive(Parser)]
#[command(
    name = "frechet",
    version,
    about = "Frechet distance between closed polygonal curves",
    after_help = "Curve files are JSON {\"dim\": k, \"points\": [[...], ...]} or plain text \
                  with one whitespace separated point per line. The closing edge back to \
                  the first vertex is implied; do not repeat it."
)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Test whether the distance between two curves is at most a threshold.
    Decide(DecideArgs),
    /// Compute the distance itself by bisection on the threshold.
    Distance(DistanceArgs),
    /// Search a directory of curves against a query curve.
    Rank(rank::RankArgs),
    /// Time the decision across instance sizes and fit a scaling exponent.
    Bench(bench::BenchArgs),
    /// Render the free-space diagram of a pair to an SVG file.
    Dump(render::DumpArgs),
}

#[derive(Args)]
struct DecideArgs {
    /// Distance threshold, finite and >= 0.
    #[arg(long, allow_hyphen_values = true)]
    eps: f64,
    /// First curve file.
    a: PathBuf,
    /// Second curve file.
    b: PathBuf,
    /// Print a one-line JSON report instead of YES/NO.
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct DistanceArgs {
    /// Stop bisecting once the bracket is this tight, > 0.
    #[arg(long, allow_hyphen_values = true)]
    tol: f64,
    /// First curve file.
    a: PathBuf,
    /// Second curve file.
    b: PathBuf,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let code = if err.use_stderr() { 2 } else { 0 };
            let _ = err.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<u8> {
    match cli.command {
        Cmd::Decide(args) => cmd_decide(args),
        Cmd::Distance(args) => cmd_distance(args),
        Cmd::Rank(args) => rank::run(args),
        Cmd::Bench(args) => bench::run(args),
        Cmd::Dump(args) => render::run(args),
    }
}

fn cmd_decide(args: DecideArgs) -> Result<u8> {
    check_eps(args.eps)?;
    let x = curve_file::parse_curve(&args.a)?;
    let y = curve_file::parse_curve(&args.b)?;
    let report = decide(&x, &y, args.eps)?;
    if args.json {
        let witness = report
            .witness
            .as_ref()
            .map(|w| serde_json::json!({ "column": w.column, "interval": w.interval, "u": w.u }));
        let doc = serde_json::json!({
            "answer": report.answer,
            "eps": args.eps,
            "m": x.vertex_count(),
            "n": y.vertex_count(),
            "witness": witness,
        });
        println!("{doc}");
    } else {
        println!("{}", if report.answer { "YES" } else { "NO" });
    }
    Ok(if report.answer { 0 } else { 1 })
}

fn cmd_distance(args: DistanceArgs) -> Result<u8> {
    check_tol(args.tol)?;
    let x = curve_file::parse_curve(&args.a)?;
    let y = curve_file::parse_curve(&args.b)?;
    let d = compute_distance(&x, &y, args.tol)?;
    println!("{:.*}", decimals_for(args.tol), d);
    Ok(0)
}

fn check_eps(eps: f64) -> Result<()> {
    if !eps.is_finite() || eps < 0.0 {
        bail!("--eps must be finite and >= 0, got {eps}");
    }
    Ok(())
}

fn check_tol(tol: f64) -> Result<()> {
    if !tol.is_finite() || tol <= 0.0 {
        bail!("--tol must be finite and > 0, got {tol}");
    }
    Ok(())
}

/// Print enough fraction digits that two values a tolerance apart differ.
fn decimals_for(tol: f64) -> usize {
    (-tol.log10()).ceil().clamp(1.0, 17.0) as usize
}
