//! Deterministic instance generators shared by tests and benches.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::geometry::{Curve, Point};

pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn unit_square() -> Curve {
    Curve::from_rows(vec![
        vec![0.0, 0.0],
        vec![1.0, 0.0],
        vec![1.0, 1.0],
        vec![0.0, 1.0],
    ])
    .unwrap()
}

/// Square with corners (+-1, +-1).
pub fn centered_square() -> Curve {
    Curve::from_rows(vec![
        vec![-1.0, -1.0],
        vec![1.0, -1.0],
        vec![1.0, 1.0],
        vec![-1.0, 1.0],
    ])
    .unwrap()
}

pub fn translated(c: &Curve, offset: &[f64]) -> Curve {
    assert_eq!(c.dim(), offset.len());
    Curve::new(
        c.vertices()
            .iter()
            .map(|p| Point::new(p.coords.iter().zip(offset).map(|(a, b)| a + b).collect()))
            .collect(),
    )
    .unwrap()
}

/// Rotate a planar curve by `turns` quarter turns about the origin. The map
/// (x, y) -> (-y, x) is exact in floating point, so verdicts are preserved
/// bit for bit.
pub fn rotated_quarter_turns(c: &Curve, turns: u32) -> Curve {
    assert_eq!(c.dim(), 2);
    let mut vs: Vec<Point> = c.vertices().to_vec();
    for _ in 0..turns % 4 {
        for p in &mut vs {
            let (x, y) = (p.coords[0], p.coords[1]);
            p.coords[0] = -y;
            p.coords[1] = x;
        }
    }
    Curve::new(vs).unwrap()
}

/// Same cycle of vertices, started `s` positions later.
pub fn cyclic_relabeled(c: &Curve, s: usize) -> Curve {
    let m = c.vertex_count();
    Curve::new((0..m).map(|i| c.vertex(i + s % m).clone()).collect()).unwrap()
}

/// Replace edge `edge` with `parts` collinear pieces. With parts a power of
/// two and dyadic coordinates the inserted points lie exactly on the segment.
pub fn subdivided_edge(c: &Curve, edge: usize, parts: usize) -> Curve {
    assert!(parts >= 1);
    let m = c.vertex_count();
    let edge = edge % m;
    let mut vs = Vec::with_capacity(m + parts - 1);
    for i in 0..m {
        vs.push(c.vertex(i).clone());
        if i == edge {
            let (a, b) = c.segment(i);
            for p in 1..parts {
                let t = p as f64 / parts as f64;
                vs.push(Point::new(
                    a.coords
                        .iter()
                        .zip(&b.coords)
                        .map(|(u, v)| (1.0 - t) * u + t * v)
                        .collect(),
                ));
            }
        }
    }
    Curve::new(vs).unwrap()
}

/// Random planar curve with coordinates on the 1/1024 grid in [0, 1).
/// Dyadic coordinates keep translations by dyadic offsets and midpoint
/// subdivisions exact.
pub fn random_curve<R: Rng>(rng: &mut R, m: usize) -> Curve {
    Curve::from_rows(
        (0..m)
            .map(|_| {
                vec![
                    rng.gen_range(0..1024) as f64 / 1024.0,
                    rng.gen_range(0..1024) as f64 / 1024.0,
                ]
            })
            .collect(),
    )
    .unwrap()
}

/// Closed curve with a wavy radius, useful for larger benchmark instances.
pub fn smooth_closed_curve<R: Rng>(rng: &mut R, m: usize) -> Curve {
    let phase: f64 = rng.gen_range(0.0..std::f64::consts::TAU);
    let amp: f64 = rng.gen_range(0.05..0.25);
    Curve::from_rows(
        (0..m)
            .map(|i| {
                let th = std::f64::consts::TAU * i as f64 / m as f64;
                let r = 1.0 + amp * (3.0 * th + phase).sin();
                vec![r * th.cos(), r * th.sin()]
            })
            .collect(),
    )
    .unwrap()
}
