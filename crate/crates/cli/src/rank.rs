//! Corpus search: filter a directory of curves by threshold, or rank the
//! nearest ones by bisected distance. Candidates are evaluated in parallel;
//! output order is fixed by the lexicographic file order, so runs are
//! deterministic.

use std::fs;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use clap::Args;
use frechet_core::decision::{compute_distance, decide};
use rayon::prelude::*;

use crate::curve_file::parse_curve;
use crate::{check_eps, check_tol, decimals_for};

#[derive(Args)]
pub struct RankArgs {
    /// Query curve file.
    pub query: PathBuf,
    /// Directory holding one curve per file.
    pub dir: PathBuf,
    /// Print every candidate within this threshold of the query.
    #[arg(long, allow_hyphen_values = true, conflicts_with = "top")]
    pub eps: Option<f64>,
    /// Print the K nearest candidates with their distances.
    #[arg(long)]
    pub top: Option<usize>,
    /// Bisection tolerance used with --top.
    #[arg(long, default_value_t = 1e-6, allow_hyphen_values = true)]
    pub tol: f64,
}

pub fn run(args: RankArgs) -> Result<u8> {
    let query = parse_curve(&args.query)?;
    let files = corpus_files(&args.dir)?;
    match (args.eps, args.top) {
        (Some(eps), None) => {
            check_eps(eps)?;
            let verdicts: Vec<(PathBuf, bool)> = files
                .par_iter()
                .map(|p| Ok((p.clone(), decide(&query, &parse_curve(p)?, eps)?.answer)))
                .collect::<Result<_>>()?;
            for (path, within) in verdicts {
                if within {
                    println!("{}", path.display());
                }
            }
        }
        (None, Some(k)) => {
            check_tol(args.tol)?;
            let mut dists: Vec<(f64, PathBuf)> = files
                .par_iter()
                .map(|p| {
                    Ok((
                        compute_distance(&query, &parse_curve(p)?, args.tol)?,
                        p.clone(),
                    ))
                })
                .collect::<Result<_>>()?;
            dists.sort_by(|a, b| a.0.total_cmp(&b.0).then_with(|| a.1.cmp(&b.1)));
            for (d, path) in dists.into_iter().take(k) {
                println!("{:.*} {}", decimals_for(args.tol), d, path.display());
            }
        }
        _ => bail!("pass exactly one of --eps or --top"),
    }
    Ok(0)
}

fn corpus_files(dir: &Path) -> Result<Vec<PathBuf>> {
    let entries = fs::read_dir(dir).with_context(|| format!("reading {}", dir.display()))?;
    let mut files: Vec<PathBuf> = entries
        .map(|e| e.map(|e| e.path()))
        .collect::<std::io::Result<_>>()
        .with_context(|| format!("reading {}", dir.display()))?;
    files.retain(|p| p.is_file());
    if files.is_empty() {
        bail!("no curve files in {}", dir.display());
    }
    files.sort();
    Ok(files)
}
