//! Independent reference implementations used to validate the main decision
//! procedure: an open-curve decider, discrete Frechet distances, a bracketing
//! estimate for the closed-curve distance, a sampled-start decider, and a
//! brute-force lattice reachability model of the doubled diagram.

use crate::error::{Error, Result};
use crate::free_space::{build_free_space, clip_segment_by_ball, glued_intervals, BoundaryRow};
use crate::geometry::{hausdorff_distance, Curve, Point};

/// Decide whether two open polylines (endpoints pinned) match within eps.
/// Classic cell-boundary interval propagation, quadratic time and memory.
#[allow(clippy::needless_range_loop)] // loop indices are grid coordinates
pub fn open_curve_decide(xs: &[Point], ys: &[Point], eps: f64) -> Result<bool> {
    if xs.is_empty() || ys.is_empty() {
        return Err(Error::EmptyCurve);
    }
    if xs[0].dim() != ys[0].dim() {
        return Err(Error::DimensionMismatch {
            left: xs[0].dim(),
            right: ys[0].dim(),
        });
    }
    if eps.is_nan() || eps < 0.0 {
        return Err(Error::NegativeEpsilon(eps));
    }
    // A single point matches a polyline iff every point of the polyline is
    // near it; the per-segment maximum sits at a segment endpoint.
    if xs.len() == 1 {
        return Ok(ys.iter().all(|q| xs[0].distance(q) <= eps));
    }
    if ys.len() == 1 {
        return Ok(xs.iter().all(|p| ys[0].distance(p) <= eps));
    }

    let p = xs.len() - 1;
    let q = ys.len() - 1;
    let lf = |i: usize, j: usize| clip_segment_by_ball(&ys[j], &ys[j + 1], &xs[i], eps);
    let bf = |i: usize, j: usize| clip_segment_by_ball(&xs[i], &xs[i + 1], &ys[j], eps);

    // left[i][j]: reachable part of the vertical edge at x-vertex i crossing
    // y-segment j. bottom[i][j]: reachable part of x-segment i at y-vertex j.
    let mut left = vec![vec![None; q]; p + 1];
    let mut bottom = vec![vec![None; q + 1]; p];

    let mut connected = true;
    for j in 0..q {
        left[0][j] = match lf(0, j) {
            Some(f) if connected && f.lo == 0.0 => {
                connected = f.hi == 1.0;
                Some(f)
            }
            _ => {
                connected = false;
                None
            }
        };
    }
    connected = true;
    for i in 0..p {
        bottom[i][0] = match bf(i, 0) {
            Some(f) if connected && f.lo == 0.0 => {
                connected = f.hi == 1.0;
                Some(f)
            }
            _ => {
                connected = false;
                None
            }
        };
    }

    for j in 0..q {
        for i in 0..p {
            let l = left[i][j];
            let b = bottom[i][j];
            // Right edge: any bottom entry reaches all of it; a left entry
            // reaches the part at or above its lowest point.
            left[i + 1][j] = lf(i + 1, j).and_then(|f| {
                if b.is_some() {
                    Some(f)
                } else {
                    l.and_then(|li| {
                        let lo = f.lo.max(li.lo);
                        (lo <= f.hi).then(|| crate::free_space::FreeInterval::new(lo, f.hi))
                    })
                }
            });
            bottom[i][j + 1] = bf(i, j + 1).and_then(|f| {
                if l.is_some() {
                    Some(f)
                } else {
                    b.and_then(|bi| {
                        let lo = f.lo.max(bi.lo);
                        (lo <= f.hi).then(|| crate::free_space::FreeInterval::new(lo, f.hi))
                    })
                }
            });
        }
    }

    let top_hit = bottom[p - 1][q].is_some_and(|f| f.hi == 1.0);
    let right_hit = left[p][q - 1].is_some_and(|f| f.hi == 1.0);
    Ok(top_hit || right_hit)
}

/// Discrete Frechet distance between two point sequences, rolling-row DP.
pub fn discrete_frechet(xs: &[Point], ys: &[Point]) -> Result<f64> {
    discrete_frechet_impl(xs, ys, f64::INFINITY)
}

/// Discrete Frechet with an abort cap: returns infinity as soon as a DP row
/// minimum exceeds `cap`. Sound because any coupling visits every row, so the
/// final value dominates each row's minimum.
pub fn discrete_frechet_pruned(xs: &[Point], ys: &[Point], cap: f64) -> Result<f64> {
    discrete_frechet_impl(xs, ys, cap)
}

fn discrete_frechet_impl(xs: &[Point], ys: &[Point], cap: f64) -> Result<f64> {
    if xs.is_empty() || ys.is_empty() {
        return Err(Error::EmptyCurve);
    }
    if xs[0].dim() != ys[0].dim() {
        return Err(Error::DimensionMismatch {
            left: xs[0].dim(),
            right: ys[0].dim(),
        });
    }
    let mut row = vec![0.0f64; ys.len()];
    for (i, xp) in xs.iter().enumerate() {
        let mut diag_prev = row[0];
        row[0] = if i == 0 {
            xp.distance(&ys[0])
        } else {
            row[0].max(xp.distance(&ys[0]))
        };
        let mut row_min = row[0];
        for j in 1..ys.len() {
            let cost = xp.distance(&ys[j]);
            let best_prev = if i == 0 {
                row[j - 1]
            } else {
                diag_prev.min(row[j]).min(row[j - 1])
            };
            diag_prev = row[j];
            row[j] = cost.max(best_prev);
            row_min = row_min.min(row[j]);
        }
        if row_min > cap {
            return Ok(f64::INFINITY);
        }
    }
    Ok(row[ys.len() - 1])
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Bracket {
    pub lo: f64,
    pub hi: f64,
}

impl Bracket {
    pub fn contains(&self, v: f64) -> bool {
        self.lo <= v && v <= self.hi
    }

    pub fn width(&self) -> f64 {
        self.hi - self.lo
    }
}

/// Closed walk of a curve: all vertices then the first again.
pub fn closed_walk(c: &Curve) -> Vec<Point> {
    let mut pts: Vec<Point> = c.vertices().to_vec();
    pts.push(c.vertex(0).clone());
    pts
}

/// Closed walk of `x` started at parameter `u`: the start point, then every
/// original vertex strictly inside one full loop, then the start point again.
pub fn rerooted_closed_walk(x: &Curve, u: f64) -> Result<Vec<Point>> {
    let m = x.vertex_count();
    let start = x.point_at(u)?;
    let mut pts = vec![start.clone()];
    let k0 = u.floor() as usize;
    for t in 1..=m {
        let param = (k0 + t) as f64;
        if param > u && param < u + m as f64 {
            pts.push(x.vertex(k0 + t).clone());
        }
    }
    pts.push(start);
    Ok(pts)
}

fn refine_closed(c: &Curve, h: f64) -> Result<Vec<Point>> {
    let m = c.vertex_count();
    let mut pts = Vec::new();
    for i in 0..m {
        let (a, b) = c.segment(i);
        let len = a.distance(b);
        let parts = ((len / h).ceil() as usize).max(1);
        for p in 0..parts {
            pts.push(c.point_at(i as f64 + p as f64 / parts as f64)?);
        }
    }
    Ok(pts)
}

/// Bracket the closed-curve Frechet distance by brute force: refine both
/// curves to vertex spacing at most h, take the best discrete distance over
/// all integer start shifts of the second curve, and floor the lower end with
/// the exact Hausdorff distance. Shifts are tried in order of start-pair
/// distance so most are pruned.
pub fn cyclic_discrete_frechet_bracket(x: &Curve, y: &Curve, h: f64) -> Result<Bracket> {
    if h.is_nan() || h <= 0.0 {
        return Err(Error::NonPositiveStep(h));
    }
    let xr = refine_closed(x, h)?;
    let yr = refine_closed(y, h)?;
    let mut xs = xr.clone();
    xs.push(xr[0].clone());

    let mut order: Vec<usize> = (0..yr.len()).collect();
    let key = |s: usize| xs[0].distance(&yr[s]);
    order.sort_by(|&a, &b| key(a).total_cmp(&key(b)));

    let mut best = f64::INFINITY;
    for &s in &order {
        // Start pair distance lower-bounds the whole coupling.
        if key(s) >= best {
            break;
        }
        let mut ys: Vec<Point> = Vec::with_capacity(yr.len() + 1);
        ys.extend_from_slice(&yr[s..]);
        ys.extend_from_slice(&yr[..s]);
        ys.push(yr[s].clone());
        let dd = discrete_frechet_pruned(&xs, &ys, best)?;
        if dd < best {
            best = dd;
        }
    }

    let haus = hausdorff_distance(x, y)?;
    let lo = (best - h).max(haus).max(0.0).min(best);
    Ok(Bracket { lo, hi: best })
}

/// One-sided closed-curve decider: try finitely many start parameters on the
/// first curve and decide each fixed-start problem exactly. A true answer is
/// always correct; false may miss the optimal start.
pub fn sampled_shift_decide(x: &Curve, y: &Curve, eps: f64, k: usize) -> Result<bool> {
    if k < 1 {
        return Err(Error::ParamOutOfRange {
            t: k as f64,
            limit: 1.0,
        });
    }
    let grid = build_free_space(x, y, eps)?;
    let mf = grid.m() as f64;
    let mut starts: Vec<f64> = Vec::new();
    for g in glued_intervals(&grid, BoundaryRow::Bottom) {
        for e in [g.lo, g.hi] {
            if e <= mf {
                starts.push(e);
            }
        }
    }
    for kk in 0..k {
        starts.push((kk as f64 + 0.5) * mf / k as f64);
    }
    let yw = closed_walk(y);
    for u in starts {
        if open_curve_decide(&rerooted_closed_walk(x, u)?, &yw, eps)? {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Pointwise free/blocked samples of the doubled diagram on a regular
/// lattice with `per_edge` subdivisions per unit square.
#[derive(Debug)]
pub struct LatticeFree {
    pub nu: usize,
    pub nv: usize,
    pub cells: Vec<bool>,
}

impl LatticeFree {
    pub fn idx(&self, iu: usize, iv: usize) -> usize {
        iv * (self.nu + 1) + iu
    }

    pub fn free(&self, iu: usize, iv: usize) -> bool {
        self.cells[self.idx(iu, iv)]
    }
}

pub fn lattice_free(x: &Curve, y: &Curve, eps: f64, per_edge: usize) -> Result<LatticeFree> {
    if per_edge < 1 {
        return Err(Error::ParamOutOfRange {
            t: per_edge as f64,
            limit: 1.0,
        });
    }
    if x.dim() != y.dim() {
        return Err(Error::DimensionMismatch {
            left: x.dim(),
            right: y.dim(),
        });
    }
    if eps.is_nan() || eps < 0.0 {
        return Err(Error::NegativeEpsilon(eps));
    }
    let (m, n) = (x.vertex_count(), y.vertex_count());
    let kf = per_edge as f64;
    let nu = 2 * m * per_edge;
    let nv = n * per_edge;
    let mf = m as f64;
    let xs: Vec<Point> = (0..=nu)
        .map(|iu| {
            let u = iu as f64 / kf;
            x.point_at(if u > mf { u - mf } else { u })
        })
        .collect::<Result<_>>()?;
    let ys: Vec<Point> = (0..=nv)
        .map(|iv| y.point_at(iv as f64 / kf))
        .collect::<Result<_>>()?;
    let mut cells = vec![false; (nu + 1) * (nv + 1)];
    for iv in 0..=nv {
        for iu in 0..=nu {
            cells[iv * (nu + 1) + iu] = xs[iu].distance(&ys[iv]) <= eps;
        }
    }
    Ok(LatticeFree { nu, nv, cells })
}

/// Lattice points reachable from the bottom row by monotone steps
/// (up, right, or diagonal) through free points.
#[allow(clippy::needless_range_loop)] // loop indices are grid coordinates
pub fn lattice_reach_from_bottom(lf: &LatticeFree) -> Vec<bool> {
    let (nu, nv) = (lf.nu, lf.nv);
    let mut r = vec![false; (nu + 1) * (nv + 1)];
    for iu in 0..=nu {
        r[iu] = lf.free(iu, 0);
    }
    for iv in 1..=nv {
        for iu in 0..=nu {
            if !lf.free(iu, iv) {
                continue;
            }
            let below = r[lf.idx(iu, iv - 1)];
            let diag = iu > 0 && r[lf.idx(iu - 1, iv - 1)];
            let left = iu > 0 && r[lf.idx(iu - 1, iv)];
            r[lf.idx(iu, iv)] = below || diag || left;
        }
    }
    r
}

/// One-sided closed-curve decider on the lattice: for every lattice start
/// iu0 on the bottom row, flood-fill monotone reachability from (iu0, 0)
/// alone and test whether (iu0 + m*per_edge, nv) is reached. Integer cell
/// boundaries are lattice points, so each lattice step stays inside one
/// convex cell and a positive answer certifies a continuous monotone path;
/// a negative answer may be a resolution artifact.
pub fn closed_lattice_decide(x: &Curve, y: &Curve, eps: f64, per_edge: usize) -> Result<bool> {
    let lf = lattice_free(x, y, eps, per_edge)?;
    let mk = x.vertex_count() * per_edge;
    let (nu, nv) = (lf.nu, lf.nv);
    for iu0 in 0..=nu - mk {
        if !lf.free(iu0, 0) {
            continue;
        }
        let mut r = vec![false; (nu + 1) * (nv + 1)];
        r[lf.idx(iu0, 0)] = true;
        for iu in iu0 + 1..=nu {
            r[lf.idx(iu, 0)] = lf.free(iu, 0) && r[lf.idx(iu - 1, 0)];
        }
        for iv in 1..=nv {
            for iu in iu0..=nu {
                if !lf.free(iu, iv) {
                    continue;
                }
                let below = r[lf.idx(iu, iv - 1)];
                let diag = iu > 0 && r[lf.idx(iu - 1, iv - 1)];
                let left = iu > 0 && r[lf.idx(iu - 1, iv)];
                r[lf.idx(iu, iv)] = below || diag || left;
            }
        }
        if r[lf.idx(iu0 + mk, nv)] {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Lattice points from which the top row is reachable by monotone steps.
pub fn lattice_reach_from_top(lf: &LatticeFree) -> Vec<bool> {
    let (nu, nv) = (lf.nu, lf.nv);
    let mut r = vec![false; (nu + 1) * (nv + 1)];
    for iu in 0..=nu {
        r[lf.idx(iu, nv)] = lf.free(iu, nv);
    }
    for iv in (0..nv).rev() {
        for iu in (0..=nu).rev() {
            if !lf.free(iu, iv) {
                continue;
            }
            let above = r[lf.idx(iu, iv + 1)];
            let diag = iu < nu && r[lf.idx(iu + 1, iv + 1)];
            let right = iu < nu && r[lf.idx(iu + 1, iv)];
            r[lf.idx(iu, iv)] = above || diag || right;
        }
    }
    r
}
