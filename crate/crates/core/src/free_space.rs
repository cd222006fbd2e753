//! Free-space grid over the doubled parameter domain [0, 2m] x [0, n].
//!
//! Cell (i, j) covers [i-1, i] x [j-1, j]. Only edge intersections are stored:
//! the free part of any grid edge is a single closed interval because the free
//! set within a cell is convex.

use crate::error::{Error, Result};
use crate::geometry::{Curve, Point};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FreeInterval {
    pub lo: f64,
    pub hi: f64,
}

impl FreeInterval {
    pub fn new(lo: f64, hi: f64) -> FreeInterval {
        debug_assert!(lo <= hi);
        FreeInterval { lo, hi }
    }

    pub fn contains(&self, u: f64) -> bool {
        self.lo <= u && u <= self.hi
    }
}

/// Parameters t in [0,1] with |p + t(q-p) - center| <= eps, or None if the
/// segment misses the ball. Solved as a quadratic in t with the stable root
/// pairing (larger-magnitude root first, companion via the product).
pub fn clip_segment_by_ball(
    p: &Point,
    q: &Point,
    center: &Point,
    eps: f64,
) -> Option<FreeInterval> {
    let k = p.dim();
    debug_assert_eq!(q.dim(), k);
    debug_assert_eq!(center.dim(), k);
    let mut a = 0.0;
    let mut b = 0.0;
    let mut c = -eps * eps;
    for d in 0..k {
        let dp = q.coords[d] - p.coords[d];
        let pc = p.coords[d] - center.coords[d];
        a += dp * dp;
        b += 2.0 * pc * dp;
        c += pc * pc;
    }
    if a == 0.0 {
        // Degenerate edge: the whole parameter range is one point.
        return if c <= 0.0 {
            Some(FreeInterval::new(0.0, 1.0))
        } else {
            None
        };
    }
    let disc = b * b - 4.0 * a * c;
    let tol = 1e-12 * (b * b).max((4.0 * a * c).abs());
    if disc < -tol {
        return None;
    }
    let s = disc.max(0.0).sqrt();
    let sgn = if b >= 0.0 { 1.0 } else { -1.0 };
    let qv = -0.5 * (b + sgn * s);
    let (r1, r2) = if qv != 0.0 {
        (qv / a, c / qv)
    } else {
        (0.0, 0.0)
    };
    let lo = r1.min(r2).max(0.0);
    let hi = r1.max(r2).min(1.0);
    if lo > hi {
        None
    } else {
        Some(FreeInterval::new(lo, hi))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundaryRow {
    Bottom,
    Top,
}

#[derive(Debug, Clone)]
pub struct FreeSpaceGrid {
    m: usize,
    n: usize,
    epsilon: f64,
    // top[j * 2m + (i-1)] for 1 <= i <= 2m, 0 <= j <= n, absolute u coords
    top: Vec<Option<FreeInterval>>,
    // right[(j-1) * (2m+1) + i] for 0 <= i <= 2m, 1 <= j <= n, absolute v coords
    right: Vec<Option<FreeInterval>>,
}

impl FreeSpaceGrid {
    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn epsilon(&self) -> f64 {
        self.epsilon
    }

    /// Free part of the horizontal edge [i-1, i] x {j}, in u coordinates.
    pub fn top_edge(&self, i: usize, j: usize) -> Option<FreeInterval> {
        assert!(i >= 1 && i <= 2 * self.m && j <= self.n);
        self.top[j * 2 * self.m + (i - 1)]
    }

    /// Free part of the vertical edge {i} x [j-1, j], in v coordinates.
    pub fn right_edge(&self, i: usize, j: usize) -> Option<FreeInterval> {
        assert!(i <= 2 * self.m && j >= 1 && j <= self.n);
        self.right[(j - 1) * (2 * self.m + 1) + i]
    }
}

/// Distance-at-most-eps set of x's edges against y's vertices (horizontal
/// edges) and y's edges against x's vertices (vertical edges), over the
/// doubled domain. Columns m+1..2m repeat columns 1..m shifted by m, and are
/// copied rather than recomputed so the repetition is exact.
pub fn build_free_space(x: &Curve, y: &Curve, eps: f64) -> Result<FreeSpaceGrid> {
    if x.dim() != y.dim() {
        return Err(Error::DimensionMismatch {
            left: x.dim(),
            right: y.dim(),
        });
    }
    if eps.is_nan() || eps < 0.0 {
        return Err(Error::NegativeEpsilon(eps));
    }
    let m = x.vertex_count();
    let n = y.vertex_count();
    let mf = m as f64;

    let mut top = vec![None; (n + 1) * 2 * m];
    for j in 0..=n {
        let center = y.vertex(j);
        for i in 1..=m {
            let (p, q) = x.segment(i - 1);
            let iv = clip_segment_by_ball(p, q, center, eps)
                .map(|t| FreeInterval::new((i - 1) as f64 + t.lo, (i - 1) as f64 + t.hi));
            top[j * 2 * m + (i - 1)] = iv;
            top[j * 2 * m + (i + m - 1)] = iv.map(|t| FreeInterval::new(t.lo + mf, t.hi + mf));
        }
    }

    let mut right = vec![None; n * (2 * m + 1)];
    for j in 1..=n {
        let (r, s) = y.segment(j - 1);
        for i in 0..=m {
            let center = x.vertex(i);
            let iv = clip_segment_by_ball(r, s, center, eps)
                .map(|t| FreeInterval::new((j - 1) as f64 + t.lo, (j - 1) as f64 + t.hi));
            right[(j - 1) * (2 * m + 1) + i] = iv;
            if i >= 1 {
                right[(j - 1) * (2 * m + 1) + i + m] = iv;
            }
        }
    }

    Ok(FreeSpaceGrid {
        m,
        n,
        epsilon: eps,
        top,
        right,
    })
}

/// Free intervals along the bottom or top boundary row, with intervals that
/// share an endpoint merged. Result is sorted, disjoint, and maximal.
pub fn glued_intervals(grid: &FreeSpaceGrid, row: BoundaryRow) -> Vec<FreeInterval> {
    let j = match row {
        BoundaryRow::Bottom => 0,
        BoundaryRow::Top => grid.n,
    };
    let mut out: Vec<FreeInterval> = Vec::new();
    for i in 1..=2 * grid.m {
        if let Some(iv) = grid.top_edge(i, j) {
            match out.last_mut() {
                Some(last) if last.hi == iv.lo => last.hi = iv.hi,
                _ => out.push(iv),
            }
        }
    }
    out
}

/// Point reflection of the diagram about its center: u -> 2m - u, v -> n - v.
/// Bottom-reachability on the reflected grid corresponds to top-reachability
/// on the original.
pub fn reflect_grid(grid: &FreeSpaceGrid) -> FreeSpaceGrid {
    let (m, n) = (grid.m, grid.n);
    let (mf2, nf) = ((2 * m) as f64, n as f64);

    let mut top = vec![None; (n + 1) * 2 * m];
    for j in 0..=n {
        for i in 1..=2 * m {
            top[j * 2 * m + (i - 1)] = grid
                .top_edge(2 * m - i + 1, n - j)
                .map(|t| FreeInterval::new(mf2 - t.hi, mf2 - t.lo));
        }
    }

    let mut right = vec![None; n * (2 * m + 1)];
    for j in 1..=n {
        for i in 0..=2 * m {
            right[(j - 1) * (2 * m + 1) + i] = grid
                .right_edge(2 * m - i, n - j + 1)
                .map(|t| FreeInterval::new(nf - t.hi, nf - t.lo));
        }
    }

    FreeSpaceGrid {
        m,
        n,
        epsilon: grid.epsilon,
        top,
        right,
    }
}
