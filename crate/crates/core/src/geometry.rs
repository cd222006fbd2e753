//! Points, closed polygonal curves, and exact distance helpers.

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
pub struct Point {
    pub coords: Vec<f64>,
}

impl Point {
    pub fn new(coords: Vec<f64>) -> Point {
        Point { coords }
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn distance(&self, other: &Point) -> f64 {
        debug_assert_eq!(self.dim(), other.dim());
        self.coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| (a - b) * (a - b))
            .sum::<f64>()
            .sqrt()
    }
}

fn lerp(a: &Point, b: &Point, t: f64) -> Point {
    let coords = a
        .coords
        .iter()
        .zip(&b.coords)
        .map(|(x, y)| x + t * (y - x))
        .collect();
    Point { coords }
}

/// Closed polygonal curve. Vertex i and vertex i+1 (cyclically) bound edge i,
/// so a curve with m vertices has m edges and is parameterized over [0, m].
#[derive(Debug, Clone)]
pub struct Curve {
    vertices: Vec<Point>,
    dim: usize,
}

impl Curve {
    pub fn new(vertices: Vec<Point>) -> Result<Curve> {
        let first = vertices.first().ok_or(Error::EmptyCurve)?;
        let dim = first.dim();
        if dim == 0 {
            return Err(Error::EmptyCurve);
        }
        for v in &vertices {
            if v.dim() != dim {
                return Err(Error::DimensionMismatch {
                    left: dim,
                    right: v.dim(),
                });
            }
            if !v.coords.iter().all(|c| c.is_finite()) {
                return Err(Error::NonFinite);
            }
        }
        Ok(Curve { vertices, dim })
    }

    pub fn from_rows(rows: Vec<Vec<f64>>) -> Result<Curve> {
        Curve::new(rows.into_iter().map(Point::new).collect())
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    /// Vertex by cyclic index.
    pub fn vertex(&self, i: usize) -> &Point {
        &self.vertices[i % self.vertices.len()]
    }

    /// Edge i runs from vertex i to vertex i+1 (cyclically).
    pub fn segment(&self, i: usize) -> (&Point, &Point) {
        let m = self.vertices.len();
        (&self.vertices[i % m], &self.vertices[(i + 1) % m])
    }

    /// Point at parameter t in [0, m]; integer parameters hit vertices.
    pub fn point_at(&self, t: f64) -> Result<Point> {
        let m = self.vertices.len() as f64;
        if !(0.0..=m).contains(&t) {
            return Err(Error::ParamOutOfRange { t, limit: m });
        }
        let i = t.floor();
        if i >= m {
            return Ok(self.vertices[0].clone());
        }
        let (a, b) = self.segment(i as usize);
        Ok(lerp(a, b, t - i))
    }
}

/// Shift parameter t by tau around a curve with m edges, wrapping into [0, m).
pub fn cyclic_shift_param(t: f64, tau: f64, m: usize) -> f64 {
    let period = m as f64;
    let s = (t + tau) % period;
    if s < 0.0 {
        s + period
    } else {
        s
    }
}

/// Largest distance between a vertex of x and a vertex of y. Upper bound for
/// the matching distance, so it seeds the bisection range.
pub fn max_vertex_pair_distance(x: &Curve, y: &Curve) -> Result<f64> {
    if x.dim() != y.dim() {
        return Err(Error::DimensionMismatch {
            left: x.dim(),
            right: y.dim(),
        });
    }
    let mut best: f64 = 0.0;
    for a in x.vertices() {
        for b in y.vertices() {
            best = best.max(a.distance(b));
        }
    }
    Ok(best)
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn sub(a: &[f64], b: &[f64]) -> Vec<f64> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

/// Distance from a point to the closed segment [a, b].
pub fn dist_point_segment(p: &Point, a: &Point, b: &Point) -> f64 {
    let ab = sub(&b.coords, &a.coords);
    let ap = sub(&p.coords, &a.coords);
    let l2 = dot(&ab, &ab);
    if l2 == 0.0 {
        return p.distance(a);
    }
    let t = (dot(&ap, &ab) / l2).clamp(0.0, 1.0);
    let foot: Vec<f64> = a.coords.iter().zip(&ab).map(|(c, d)| c + t * d).collect();
    p.distance(&Point::new(foot))
}

// Quadratic u -> qa*u^2 + qb*u + qc.
type Quad = (f64, f64, f64);

fn eval(q: Quad, u: f64) -> f64 {
    (q.0 * u + q.1) * u + q.2
}

// Roots of qa*u^2 + qb*u + qc = 0 inside the open interval (lo, hi).
fn roots_in(q: Quad, lo: f64, hi: f64, out: &mut Vec<f64>) {
    let (qa, qb, qc) = q;
    if qa.abs() < 1e-300 {
        if qb != 0.0 {
            let u = -qc / qb;
            if u > lo && u < hi {
                out.push(u);
            }
        }
        return;
    }
    let disc = qb * qb - 4.0 * qa * qc;
    if disc < 0.0 {
        return;
    }
    let s = disc.sqrt();
    for u in [(-qb - s) / (2.0 * qa), (-qb + s) / (2.0 * qa)] {
        if u > lo && u < hi {
            out.push(u);
        }
    }
}

// Squared distance from e(u) = p + u*(q - p) to segment [r, s], valid on a
// parameter range where the closest feature of [r, s] does not change.
// `region` is -1 (endpoint r), 1 (endpoint s), or 0 (interior foot).
fn region_quad(p: &Point, q: &Point, r: &Point, s: &Point, region: i32) -> Quad {
    let dp = sub(&q.coords, &p.coords);
    let anchor = if region == 1 { s } else { r };
    let a0 = sub(&p.coords, &anchor.coords);
    let qa = dot(&dp, &dp);
    let qb = 2.0 * dot(&a0, &dp);
    let qc = dot(&a0, &a0);
    if region != 0 {
        return (qa, qb, qc);
    }
    let sr = sub(&s.coords, &r.coords);
    let l2 = dot(&sr, &sr);
    let c0 = dot(&a0, &sr); // here anchor == r
    let c1 = dot(&dp, &sr);
    (
        qa - c1 * c1 / l2,
        qb - 2.0 * c0 * c1 / l2,
        qc - c0 * c0 / l2,
    )
}

fn directed_hausdorff(x: &Curve, y: &Curve) -> f64 {
    let mut best_sq: f64 = 0.0;
    let ny = y.vertex_count();
    for e in 0..x.vertex_count() {
        let (p, q) = x.segment(e);

        // Split [0,1] where some y-edge changes its closest feature. The foot
        // parameter of e(u) on a y-edge is linear in u, so each edge adds at
        // most two cuts.
        let mut cuts = vec![0.0, 1.0];
        for f in 0..ny {
            let (r, s) = y.segment(f);
            let sr = sub(&s.coords, &r.coords);
            let l2 = dot(&sr, &sr);
            if l2 == 0.0 {
                continue;
            }
            let a0 = dot(&sub(&p.coords, &r.coords), &sr);
            let b0 = dot(&sub(&q.coords, &p.coords), &sr);
            if b0 != 0.0 {
                for w in [0.0, l2] {
                    let u = (w - a0) / b0;
                    if u > 0.0 && u < 1.0 {
                        cuts.push(u);
                    }
                }
            }
        }
        cuts.sort_by(|a, b| a.partial_cmp(b).unwrap());
        cuts.dedup();

        for w in cuts.windows(2) {
            let (lo, hi) = (w[0], w[1]);
            if hi <= lo {
                continue;
            }
            let mid = 0.5 * (lo + hi);

            // On this window each y-edge contributes one convex piece, so the
            // pointwise min is maximized at window ends or where two pieces
            // swap order.
            let quads: Vec<Quad> = (0..ny)
                .map(|f| {
                    let (r, s) = y.segment(f);
                    let sr = sub(&s.coords, &r.coords);
                    let l2 = dot(&sr, &sr);
                    let region = if l2 == 0.0 {
                        -1
                    } else {
                        let w0 = dot(&sub(&p.coords, &r.coords), &sr)
                            + mid * dot(&sub(&q.coords, &p.coords), &sr);
                        if w0 <= 0.0 {
                            -1
                        } else if w0 >= l2 {
                            1
                        } else {
                            0
                        }
                    };
                    region_quad(p, q, r, s, region)
                })
                .collect();

            let mut cand = vec![lo, hi];
            for i in 0..quads.len() {
                for j in i + 1..quads.len() {
                    let d = (
                        quads[i].0 - quads[j].0,
                        quads[i].1 - quads[j].1,
                        quads[i].2 - quads[j].2,
                    );
                    roots_in(d, lo, hi, &mut cand);
                }
            }
            for u in cand {
                let d2 = quads
                    .iter()
                    .map(|q| eval(*q, u).max(0.0))
                    .fold(f64::INFINITY, f64::min);
                best_sq = best_sq.max(d2);
            }
        }
    }
    best_sq.sqrt()
}

/// Symmetric Hausdorff distance between the two curve images. Always a lower
/// bound for the matching distance between closed curves.
pub fn hausdorff_distance(x: &Curve, y: &Curve) -> Result<f64> {
    if x.dim() != y.dim() {
        return Err(Error::DimensionMismatch {
            left: x.dim(),
            right: y.dim(),
        });
    }
    Ok(directed_hausdorff(x, y).max(directed_hausdorff(y, x)))
}
