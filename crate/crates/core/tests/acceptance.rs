//! End-to-end acceptance gate. Each criterion prints exactly one verdict
//! line; the test fails if any criterion fails. Run with --nocapture to see
//! the lines on success.

use std::time::Instant;

use frechet_core::decision::{compute_distance, decide, decide_with, witness_holds};
use frechet_core::geometry::{max_vertex_pair_distance, Curve, Point};
use frechet_core::oracle::{cyclic_discrete_frechet_bracket, sampled_shift_decide};
use frechet_core::reach_pass::{assemble_profile, assemble_profile_with, Init};
use frechet_core::synthetic::{
    centered_square, cyclic_relabeled, random_curve, rotated_quarter_turns, seeded_rng,
    smooth_closed_curve, subdivided_edge, translated, unit_square,
};
use rand::Rng;

struct Outcome {
    name: &'static str,
    pass: bool,
    detail: String,
}

fn ok(name: &'static str, detail: String) -> Outcome {
    Outcome {
        name,
        pass: true,
        detail,
    }
}

fn fail(name: &'static str, detail: String) -> Outcome {
    Outcome {
        name,
        pass: false,
        detail,
    }
}

fn draw<R: Rng>(rng: &mut R, lo: usize, hi: usize) -> Curve {
    let m = rng.gen_range(lo..=hi);
    random_curve(rng, m)
}

/// Shifted unit squares have distance exactly equal to the shift; the square
/// with corners (+-1,+-1) is at distance sqrt(2) from its center point.
fn square_shift_thresholds() -> Outcome {
    let name = "square shift thresholds and distances";
    let start = Instant::now();
    let s = unit_square();
    let mut max_err = 0.0f64;
    for k in 1..=9 {
        let shift = k as f64 / 10.0;
        let moved = translated(&s, &[shift, 0.0]);
        let below = decide(&s, &moved, shift - 0.01).unwrap();
        let above = decide(&s, &moved, shift + 0.01).unwrap();
        if below.answer || !above.answer {
            return fail(
                name,
                format!(
                    "verdicts wrong at shift {shift}: {} {}",
                    below.answer, above.answer
                ),
            );
        }
        let d = compute_distance(&s, &moved, 1e-6).unwrap();
        max_err = max_err.max((d - shift).abs());
    }
    let sq = centered_square();
    let center = Curve::new(vec![Point::new(vec![0.0, 0.0])]).unwrap();
    let d = compute_distance(&sq, &center, 1e-6).unwrap();
    max_err = max_err.max((d - 2f64.sqrt()).abs());
    let secs = start.elapsed().as_secs_f64();
    if max_err > 1.001e-6 {
        return fail(name, format!("distance error {max_err:.3e}"));
    }
    if secs > 5.0 {
        return fail(name, format!("took {secs:.2}s, budget 5s"));
    }
    ok(
        name,
        format!("9 shifts, max distance error {max_err:.2e}, {secs:.2}s"),
    )
}

/// Random instances against the brute-force bracket: outside the bracket the
/// fast decision must match it; inside, the answer is unconstrained.
fn random_vs_bracket() -> Outcome {
    let name = "500 random instances vs brute-force bracket";
    let start = Instant::now();
    let mut rng = seeded_rng(0xACCE_0002);
    let (mut outside, mut inside, mut wrong) = (0u32, 0u32, 0u32);
    for _ in 0..500 {
        let x = draw(&mut rng, 3, 12);
        let y = draw(&mut rng, 3, 12);
        let br = cyclic_discrete_frechet_bracket(&x, &y, 0.02).unwrap();
        let eps = rng.gen_range(0.0..(1.3 * br.hi.max(0.2)));
        let got = decide(&x, &y, eps).unwrap().answer;
        if eps < br.lo {
            outside += 1;
            if got {
                wrong += 1;
            }
        } else if eps > br.hi {
            outside += 1;
            if !got {
                wrong += 1;
            }
        } else {
            inside += 1;
        }
    }
    let secs = start.elapsed().as_secs_f64();
    if wrong > 0 {
        return fail(
            name,
            format!("{wrong}/{outside} disagreements outside bracket"),
        );
    }
    ok(
        name,
        format!("{outside} checked outside bracket, {inside} inside (unchecked), {secs:.2}s"),
    )
}

/// The sampled-start decider is one-sided: a positive answer must always be
/// confirmed by the full decision.
fn sampled_implies_full() -> Outcome {
    let name = "sampled-start positives confirmed by full decision";
    let start = Instant::now();
    let mut rng = seeded_rng(0xACCE_0003);
    let mut positives = 0u32;
    for _ in 0..500 {
        let x = draw(&mut rng, 3, 10);
        let y = draw(&mut rng, 3, 10);
        let eps = rng.gen_range(0.05..0.9);
        if sampled_shift_decide(&x, &y, eps, 32).unwrap() {
            positives += 1;
            if !decide(&x, &y, eps).unwrap().answer {
                return fail(name, format!("contradiction at eps={eps}"));
            }
        }
    }
    let secs = start.elapsed().as_secs_f64();
    ok(
        name,
        format!("{positives}/500 positives all confirmed, {secs:.2}s"),
    )
}

/// Threshold monotonicity plus invariance under argument swap, exact rigid
/// motions, cyclic vertex relabeling, and collinear midpoint subdivision.
fn invariances() -> Outcome {
    let name = "monotonicity, symmetry, and exact invariances";
    let start = Instant::now();
    let mut rng = seeded_rng(0xACCE_0004);
    let mut checked = 0u64;
    for round in 0..200 {
        let x = draw(&mut rng, 3, 10);
        let y = draw(&mut rng, 3, 10);
        let turns = rng.gen_range(1..4u32);
        let off = [
            rng.gen_range(-64..=64i32) as f64 / 64.0,
            rng.gen_range(-64..=64i32) as f64 / 64.0,
        ];
        let shift = rng.gen_range(0..x.vertex_count());
        let edge = rng.gen_range(0..x.vertex_count());
        let hi = max_vertex_pair_distance(&x, &y).unwrap();
        let mut prev = false;
        for k in 1..=20 {
            let eps = hi * k as f64 / 20.0;
            let base = decide(&x, &y, eps).unwrap().answer;
            if prev && !base {
                return fail(
                    name,
                    format!("round {round}: answer not monotone at eps={eps}"),
                );
            }
            prev = base;
            let swapped = decide(&y, &x, eps).unwrap().answer;
            let rotated = decide(
                &rotated_quarter_turns(&x, turns),
                &rotated_quarter_turns(&y, turns),
                eps,
            )
            .unwrap()
            .answer;
            let moved = decide(&translated(&x, &off), &translated(&y, &off), eps)
                .unwrap()
                .answer;
            let relabeled = decide(&cyclic_relabeled(&x, shift), &y, eps)
                .unwrap()
                .answer;
            let split = decide(&subdivided_edge(&x, edge, 2), &y, eps)
                .unwrap()
                .answer;
            for (what, got) in [
                ("swap", swapped),
                ("rotation", rotated),
                ("translation", moved),
                ("relabeling", relabeled),
                ("subdivision", split),
            ] {
                if got != base {
                    return fail(
                        name,
                        format!("round {round}: {what} changed the verdict at eps={eps}"),
                    );
                }
                checked += 1;
            }
        }
    }
    let secs = start.elapsed().as_secs_f64();
    ok(name, format!("{checked} invariance checks, {secs:.2}s"))
}

/// Work counters stay within their stated bounds and both initialization
/// modes of the forward sweep decide identically.
fn summary_stats_and_init_modes() -> Outcome {
    let name = "work bounds, monotone summaries, init-mode equality";
    let start = Instant::now();
    let mut rng = seeded_rng(0xACCE_0005);
    let mut max_ratio = 0.0f64;
    for round in 0..200 {
        let x = draw(&mut rng, 3, 12);
        let y = draw(&mut rng, 3, 12);
        let eps = rng.gen_range(0.02..1.2);
        let p = assemble_profile(&x, &y, eps).unwrap();
        if !p.stats.within_bounds() {
            return fail(name, format!("round {round}: work bound exceeded"));
        }
        if !p.stats.top_values_monotone {
            return fail(name, format!("round {round}: takeoff summary not monotone"));
        }
        max_ratio = max_ratio.max(p.stats.max_insertions() as f64 / p.stats.insertion_bound as f64);
        let ident = assemble_profile_with(&x, &y, eps, Init::Identity).unwrap();
        let a = decide_with(&x, &y, eps, Init::Seeded).unwrap();
        let b = decide_with(&x, &y, eps, Init::Identity).unwrap();
        if a.answer != b.answer {
            return fail(
                name,
                format!("round {round}: init modes disagree at eps={eps}"),
            );
        }
        if a.answer && !witness_holds(&a.profile, &a.witness.unwrap()) {
            return fail(name, format!("round {round}: invalid witness"));
        }
        let _ = ident;
    }
    let secs = start.elapsed().as_secs_f64();
    ok(
        name,
        format!("200 instances, peak insertion ratio {max_ratio:.2}, {secs:.2}s"),
    )
}

/// Wall-clock growth across m = n in {50..800} must stay near linear in the
/// cell count m*n: slope of log time against log(m*n) at most 1.15.
fn scaling() -> Outcome {
    let name = "near-linear scaling in grid cells";
    let start = Instant::now();
    let mut rng = seeded_rng(0xACCE_0006);
    let sizes = [50usize, 100, 200, 400, 800];
    let mut pts = Vec::new();
    let mut note = String::new();
    for &m in &sizes {
        let x = smooth_closed_curve(&mut rng, m);
        let y = smooth_closed_curve(&mut rng, m);
        let mut best = f64::INFINITY;
        for _ in 0..3 {
            let t0 = Instant::now();
            let rep = decide(&x, &y, 0.3).unwrap();
            best = best.min(t0.elapsed().as_secs_f64());
            std::hint::black_box(rep.answer);
        }
        pts.push(((m * m) as f64).ln());
        note.push_str(&format!("{m}:{best:.3}s "));
        pts.push(best.max(1e-6).ln());
    }
    // Least-squares slope over (log cells, log seconds) pairs.
    let n = sizes.len() as f64;
    let (mut sx, mut sy, mut sxx, mut sxy) = (0.0, 0.0, 0.0, 0.0);
    for pair in pts.chunks(2) {
        let (x, y) = (pair[0], pair[1]);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    let slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    let secs = start.elapsed().as_secs_f64();
    if slope > 1.15 {
        return fail(name, format!("slope {slope:.3} > 1.15 ({note})"));
    }
    if secs > 60.0 {
        return fail(name, format!("took {secs:.1}s, budget 60s"));
    }
    ok(name, format!("slope {slope:.3}, {note}total {secs:.1}s"))
}

/// Hand-checkable zero-threshold instance: a square against itself leaves
/// exactly the two diagonal matchings, and the decision pins the start u=0.
fn pinpoint_trace() -> Outcome {
    let name = "zero-threshold square trace";
    let s = unit_square();
    let p = assemble_profile(&s, &s, 0.0).unwrap();
    let b1 = match p.bottom[0] {
        Some(b) => b,
        None => return fail(name, "bottom edge 1 missing".into()),
    };
    if (b1.lo, b1.hi, b1.top_value) != (0.0, 0.0, 4.0) {
        return fail(name, format!("bottom edge 1 wrong: {b1:?}"));
    }
    let col5: Vec<_> = p.top[0].iter().map(|t| t.as_tuple()).collect();
    let col8: Vec<_> = p.top[3].iter().map(|t| t.as_tuple()).collect();
    if col5 != vec![(4.0, 0.0, 4.0)] {
        return fail(name, format!("column 5 wrong: {col5:?}"));
    }
    if col8 != vec![(8.0, 4.0, 8.0)] {
        return fail(name, format!("column 8 wrong: {col8:?}"));
    }
    let rep = decide(&s, &s, 0.0).unwrap();
    let w = match (rep.answer, rep.witness) {
        (true, Some(w)) => w,
        _ => return fail(name, "verdict should be true with a witness".into()),
    };
    if w.u != 0.0 || !witness_holds(&rep.profile, &w) {
        return fail(name, format!("witness wrong: {w:?}"));
    }
    ok(name, "profile and witness match the hand trace".into())
}

#[test]
fn acceptance_criteria() {
    let results = [
        square_shift_thresholds(),
        random_vs_bracket(),
        sampled_implies_full(),
        invariances(),
        summary_stats_and_init_modes(),
        scaling(),
        pinpoint_trace(),
    ];
    let mut failed = Vec::new();
    for (k, r) in results.iter().enumerate() {
        let verdict = if r.pass { "PASS" } else { "FAIL" };
        println!(
            "criterion {}: {} - {} ({})",
            k + 1,
            verdict,
            r.name,
            r.detail
        );
        if !r.pass {
            failed.push(format!("[{}] {}: {}", k + 1, r.name, r.detail));
        }
    }
    assert!(failed.is_empty(), "failed criteria:\n{}", failed.join("\n"));
}
