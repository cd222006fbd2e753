//! Free-space diagram renderer.
//!
//! The picture is the doubled parameter rectangle [0, 2m] x [0, n]: blocked
//! space dark, free space light, the vertical seam at u = m marked, and the
//! two boundary reachability summaries overlaid as tick-labeled segments
//! (bottom row: spans reachable from the top boundary with their matching
//! top coordinate; top row: spans reachable from the bottom boundary with
//! their takeoff values).
//!
//! Cells are drawn from vertical sample slices. The free set within a cell is
//! convex, so each slice is one interval and the sampled outline is faithful
//! up to the slice spacing. Hairline regions (a zero threshold gives
//! one-dimensional free sets) are stroked instead of filled so they stay
//! visible.

use std::fmt::Write as _;
use std::fs;
use std::path::PathBuf;

use anyhow::{bail, Context, Result};
use clap::Args;
use frechet_core::free_space::clip_segment_by_ball;
use frechet_core::geometry::{cyclic_shift_param, Curve};
use frechet_core::reach_pass::assemble_profile;

use crate::{check_eps, curve_file};

#[derive(Args)]
pub struct DumpArgs {
    /// Distance threshold, finite and >= 0.
    #[arg(long, allow_hyphen_values = true)]
    pub eps: f64,
    /// First curve file (doubled along the horizontal axis).
    pub a: PathBuf,
    /// Second curve file (vertical axis).
    pub b: PathBuf,
    /// Output SVG file.
    #[arg(short, long)]
    pub out: PathBuf,
    /// Pixels per parameter unit.
    #[arg(long, default_value_t = 40.0, allow_hyphen_values = true)]
    pub scale: f64,
}

pub fn run(args: DumpArgs) -> Result<u8> {
    check_eps(args.eps)?;
    if !args.scale.is_finite() || args.scale <= 0.0 {
        bail!("--scale must be finite and > 0, got {}", args.scale);
    }
    let x = curve_file::parse_curve(&args.a)?;
    let y = curve_file::parse_curve(&args.b)?;
    let svg = render_svg(&x, &y, args.eps, args.scale)?;
    fs::write(&args.out, svg).with_context(|| format!("writing {}", args.out.display()))?;
    Ok(0)
}

/// Sample lines per cell, counting both cell borders.
const SLICES: usize = 12;

pub fn render_svg(x: &Curve, y: &Curve, eps: f64, scale: f64) -> Result<String> {
    let profile = assemble_profile(x, y, eps)?;
    let (m, n) = (profile.m, profile.n);
    let (w, h) = (2 * m, n);
    let nf = n as f64;

    let mut svg = String::new();
    writeln!(
        svg,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{:.0}\" height=\"{:.0}\" \
         viewBox=\"0 0 {w} {h}\">",
        w as f64 * scale,
        h as f64 * scale
    )?;
    writeln!(
        svg,
        "<rect class=\"blocked\" x=\"0\" y=\"0\" width=\"{w}\" height=\"{h}\" fill=\"#3b3b52\"/>"
    )?;

    writeln!(svg, "<g fill=\"#f2f0e6\" stroke=\"none\">")?;
    for i in 1..=w {
        for j in 1..=n {
            draw_cell(&mut svg, x, y, eps, i, j, nf)?;
        }
    }
    writeln!(svg, "</g>")?;

    writeln!(svg, "<g stroke=\"#00000026\" stroke-width=\"0.015\">")?;
    for i in 0..=w {
        writeln!(svg, "<line x1=\"{i}\" y1=\"0\" x2=\"{i}\" y2=\"{h}\"/>")?;
    }
    for j in 0..=h {
        writeln!(svg, "<line x1=\"0\" y1=\"{j}\" x2=\"{w}\" y2=\"{j}\"/>")?;
    }
    writeln!(svg, "</g>")?;
    writeln!(
        svg,
        "<line class=\"seam\" x1=\"{m}\" y1=\"0\" x2=\"{m}\" y2=\"{h}\" \
         stroke=\"#00000059\" stroke-width=\"0.04\"/>"
    )?;

    writeln!(
        svg,
        "<g class=\"bottom-reach\" stroke=\"#1b9e50\" fill=\"#1b9e50\" \
         font-size=\"0.28\" text-anchor=\"middle\">"
    )?;
    for span in profile.bottom.iter().flatten() {
        let y_line = nf - 0.045;
        writeln!(
            svg,
            "<line x1=\"{:.4}\" y1=\"{y_line:.4}\" x2=\"{:.4}\" y2=\"{y_line:.4}\" \
             stroke-width=\"0.09\"/>",
            span.lo, span.hi
        )?;
        for u in [span.lo, span.hi] {
            writeln!(
                svg,
                "<line x1=\"{u:.4}\" y1=\"{:.4}\" x2=\"{u:.4}\" y2=\"{nf}\" \
                 stroke-width=\"0.03\"/>",
                nf - 0.18
            )?;
        }
        writeln!(
            svg,
            "<text x=\"{:.4}\" y=\"{:.4}\" stroke=\"none\">{:.2}</text>",
            0.5 * (span.lo + span.hi),
            nf - 0.26,
            span.top_value
        )?;
    }
    writeln!(svg, "</g>")?;

    writeln!(
        svg,
        "<g class=\"top-reach\" stroke=\"#d9662a\" fill=\"#d9662a\" \
         font-size=\"0.28\" text-anchor=\"middle\">"
    )?;
    for spans in &profile.top {
        for sp in spans {
            writeln!(
                svg,
                "<line x1=\"{:.4}\" y1=\"0.045\" x2=\"{:.4}\" y2=\"0.045\" \
                 stroke-width=\"0.09\"/>",
                sp.beg, sp.end
            )?;
            for u in [sp.beg, sp.end] {
                writeln!(
                    svg,
                    "<line x1=\"{u:.4}\" y1=\"0\" x2=\"{u:.4}\" y2=\"0.18\" \
                     stroke-width=\"0.03\"/>"
                )?;
            }
            if sp.is_identity() && sp.beg != sp.end {
                for u in [sp.beg, sp.end] {
                    writeln!(
                        svg,
                        "<text x=\"{u:.4}\" y=\"0.5\" stroke=\"none\">{u:.2}</text>"
                    )?;
                }
            } else {
                writeln!(
                    svg,
                    "<text x=\"{:.4}\" y=\"0.5\" stroke=\"none\">{:.2}</text>",
                    0.5 * (sp.beg + sp.end),
                    sp.left_value()
                )?;
            }
        }
    }
    writeln!(svg, "</g>")?;

    writeln!(svg, "</svg>")?;
    Ok(svg)
}

/// One vertical sample slice of a cell: the free v interval, or None.
type Slice = Option<(f64, f64)>;

fn draw_cell(
    svg: &mut String,
    x: &Curve,
    y: &Curve,
    eps: f64,
    i: usize,
    j: usize,
    nf: f64,
) -> Result<()> {
    let m = x.vertex_count();
    let (a, b) = y.segment(j - 1);
    let mut slices: Vec<Slice> = Vec::with_capacity(SLICES + 1);
    let mut all_full = true;
    for s in 0..=SLICES {
        let u = (i - 1) as f64 + s as f64 / SLICES as f64;
        let center = x.point_at(cyclic_shift_param(u, 0.0, m))?;
        let t = clip_segment_by_ball(a, b, &center, eps);
        all_full &= t.is_some_and(|t| t.lo == 0.0 && t.hi == 1.0);
        slices.push(t.map(|t| ((j - 1) as f64 + t.lo, (j - 1) as f64 + t.hi)));
    }

    if all_full {
        writeln!(
            svg,
            "<rect class=\"cell\" x=\"{}\" y=\"{:.4}\" width=\"1\" height=\"1\"/>",
            i - 1,
            nf - j as f64
        )?;
        return Ok(());
    }

    let sample_u = |s: usize| (i - 1) as f64 + s as f64 / SLICES as f64;
    let mut s = 0;
    while s <= SLICES {
        if slices[s].is_none() {
            s += 1;
            continue;
        }
        let s0 = s;
        while s < SLICES && slices[s + 1].is_some() {
            s += 1;
        }
        let s1 = s;
        s += 1;

        let run: Vec<(f64, f64, f64)> = (s0..=s1)
            .map(|k| {
                let (lo, hi) = slices[k].unwrap();
                (sample_u(k), lo, hi)
            })
            .collect();
        let thickness = run.iter().map(|r| r.2 - r.1).fold(0.0, f64::max);

        if s0 == s1 {
            let (u, lo, hi) = run[0];
            writeln!(
                svg,
                "<circle class=\"cell\" cx=\"{u:.4}\" cy=\"{:.4}\" r=\"0.045\"/>",
                nf - 0.5 * (lo + hi)
            )?;
        } else if thickness < 0.02 {
            let pts: Vec<String> = run
                .iter()
                .map(|(u, lo, hi)| format!("{u:.4},{:.4}", nf - 0.5 * (lo + hi)))
                .collect();
            writeln!(
                svg,
                "<polyline class=\"cell\" points=\"{}\" fill=\"none\" \
                 stroke=\"#f2f0e6\" stroke-width=\"0.035\"/>",
                pts.join(" ")
            )?;
        } else {
            let mut pts = Vec::with_capacity(2 * run.len());
            for (u, lo, _) in &run {
                pts.push(format!("{u:.4},{:.4}", nf - lo));
            }
            for (u, _, hi) in run.iter().rev() {
                pts.push(format!("{u:.4},{:.4}", nf - hi));
            }
            writeln!(
                svg,
                "<polygon class=\"cell\" points=\"{}\"/>",
                pts.join(" ")
            )?;
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use frechet_core::synthetic::{translated, unit_square};

    use super::render_svg;

    #[test]
    fn huge_threshold_frees_every_cell() {
        let s = unit_square();
        let svg = render_svg(&s, &s, 2.0, 40.0).unwrap();
        assert!(svg.contains("viewBox=\"0 0 8 4\""), "{svg}");
        assert!(svg.contains("width=\"320\" height=\"160\""));
        assert_eq!(svg.matches("<rect class=\"cell\"").count(), 8 * 4);
        assert!(svg.contains("class=\"bottom-reach\""));
        assert!(svg.contains("class=\"top-reach\""));
    }

    #[test]
    fn zero_threshold_self_match_draws_hairlines() {
        let s = unit_square();
        let svg = render_svg(&s, &s, 0.0, 40.0).unwrap();
        assert_eq!(svg.matches("<rect class=\"cell\"").count(), 0);
        assert!(svg.contains("<polyline class=\"cell\""), "{svg}");
    }

    #[test]
    fn partial_threshold_draws_polygons() {
        let s = unit_square();
        let t = translated(&s, &[0.3, 0.0]);
        let svg = render_svg(&s, &t, 0.45, 40.0).unwrap();
        assert!(svg.contains("<polygon class=\"cell\""), "{svg}");
    }
}
