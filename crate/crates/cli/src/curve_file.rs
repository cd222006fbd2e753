//! Curve file ingestion.
//!
//! Two formats share one loader: a JSON object {"dim": k, "points": [[..],
//! ..]} and plain text with one whitespace separated point per line (the
//! dimension is inferred from the first line). Files describe closed curves,
//! so the closing edge is implied; a file whose last point repeats the first
//! is rejected rather than silently deduplicated.

use std::fs;
use std::path::Path;

use anyhow::{bail, Context, Result};
use frechet_core::geometry::Curve;
use serde::Deserialize;

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CurveFile {
    pub dim: usize,
    pub points: Vec<Vec<f64>>,
}

pub fn parse_curve(path: &Path) -> Result<Curve> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse_curve_text(&text).with_context(|| format!("parsing {}", path.display()))
}

pub fn parse_curve_text(text: &str) -> Result<Curve> {
    let rows = if text.trim_start().starts_with('{') {
        rows_from_json(text)?
    } else {
        rows_from_text(text)?
    };
    if rows.is_empty() {
        bail!("curve file has no points");
    }
    let dim = rows[0].len();
    for (k, row) in rows.iter().enumerate() {
        if row.len() != dim {
            bail!("point {k} has {} coordinates, expected {dim}", row.len());
        }
        if let Some(c) = row.iter().find(|c| !c.is_finite()) {
            bail!("point {k} has a non-finite coordinate {c}");
        }
    }
    if rows.len() >= 2 && rows.first() == rows.last() {
        bail!(
            "last point repeats the first: closed curves list each vertex once, \
             the closing edge is implied"
        );
    }
    Ok(Curve::from_rows(rows)?)
}

fn rows_from_json(text: &str) -> Result<Vec<Vec<f64>>> {
    let file: CurveFile = serde_json::from_str(text).context("curve JSON")?;
    if file.dim == 0 {
        bail!("dim must be at least 1");
    }
    for (k, row) in file.points.iter().enumerate() {
        if row.len() != file.dim {
            bail!(
                "point {k} has {} coordinates but dim is {}",
                row.len(),
                file.dim
            );
        }
    }
    Ok(file.points)
}

fn rows_from_text(text: &str) -> Result<Vec<Vec<f64>>> {
    let mut rows = Vec::new();
    for (idx, line) in text.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let row = line
            .split_whitespace()
            .map(|w| {
                w.parse::<f64>()
                    .with_context(|| format!("line {}: bad number {w:?}", idx + 1))
            })
            .collect::<Result<Vec<f64>>>()?;
        rows.push(row);
    }
    Ok(rows)
}
