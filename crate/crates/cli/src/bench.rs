//! Scaling harness. Generates random wavy closed curves from a fixed seed,
//! times the decision on each pair strictly sequentially, prints one CSV row
//! per run, and fits the log-log slope of wall time against the cell count
//! m*n. Near-linear scaling shows up as a slope close to 1.

use std::time::Instant;

use anyhow::{bail, Result};
use clap::Args;
use frechet_core::decision::decide;
use frechet_core::synthetic::{seeded_rng, smooth_closed_curve};

use crate::check_eps;

#[derive(Args)]
pub struct BenchArgs {
    /// Comma separated vertex counts; size k runs pairs with m = n = k.
    #[arg(long, value_delimiter = ',', required = true)]
    pub sizes: Vec<usize>,
    /// Timed runs per size, each on a freshly drawn pair.
    #[arg(long, default_value_t = 3)]
    pub repeats: u32,
    /// Generator seed.
    #[arg(long, default_value_t = 1717)]
    pub seed: u64,
    /// Threshold handed to every decision.
    #[arg(long, default_value_t = 0.3, allow_hyphen_values = true)]
    pub eps: f64,
    /// Refuse sizes where the grid m*n would exceed this many cells.
    #[arg(long, default_value_t = 4_000_000)]
    pub max_cells: u64,
}

struct BenchRecord {
    m: usize,
    n: usize,
    wall_time: f64,
    deque_insertions: u64,
}

impl BenchRecord {
    /// Each sweep inserts at most twice per step over the 2m by n grid, plus
    /// the seeded boundary spans.
    fn within_bound(&self) -> bool {
        let (m, n) = (self.m as u64, self.n as u64);
        self.wall_time > 0.0 && self.deque_insertions <= 2 * (2 * m) * n + 2 * m
    }
}

pub fn run(args: BenchArgs) -> Result<u8> {
    check_eps(args.eps)?;
    if args.repeats == 0 {
        bail!("--repeats must be at least 1");
    }
    for &k in &args.sizes {
        if k < 3 {
            bail!("size {k} is too small, need at least 3 vertices");
        }
        if (k as u64).saturating_mul(k as u64) > args.max_cells {
            bail!(
                "size {k} refused: {k}*{k} cells exceeds the cap {}",
                args.max_cells
            );
        }
    }

    let mut rng = seeded_rng(args.seed);
    let mut records = Vec::new();
    for &k in &args.sizes {
        for _ in 0..args.repeats {
            let x = smooth_closed_curve(&mut rng, k);
            let y = smooth_closed_curve(&mut rng, k);
            let t0 = Instant::now();
            let report = decide(&x, &y, args.eps)?;
            let wall_time = t0.elapsed().as_secs_f64();
            std::hint::black_box(&report.answer);
            records.push(BenchRecord {
                m: k,
                n: k,
                wall_time,
                deque_insertions: report.profile.stats.max_insertions(),
            });
        }
    }

    println!("m,n,wall_time_s,deque_insertions");
    for r in &records {
        if !r.within_bound() {
            bail!(
                "record m={} n={} breaks the work bound with {} insertions",
                r.m,
                r.n,
                r.deque_insertions
            );
        }
        println!("{},{},{:.9},{}", r.m, r.n, r.wall_time, r.deque_insertions);
    }
    match fitted_slope(&records) {
        Some(slope) => println!("# log-log slope of wall_time_s against m*n: {slope:.3}"),
        None => println!("# log-log slope needs at least two distinct sizes"),
    }
    Ok(0)
}

/// Least squares slope of ln(wall_time) against ln(m*n) over all records.
fn fitted_slope(records: &[BenchRecord]) -> Option<f64> {
    let count = records.len() as f64;
    let (mut sx, mut sy, mut sxx, mut sxy) = (0.0, 0.0, 0.0, 0.0);
    for r in records {
        let x = ((r.m * r.n) as f64).ln();
        let y = r.wall_time.max(1e-9).ln();
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    let denom = count * sxx - sx * sx;
    if denom.abs() < 1e-9 {
        return None;
    }
    Some((count * sxy - sx * sy) / denom)
}
