//! Instance construction shared by the benchmarks.

use frechet_core::geometry::Curve;
use frechet_core::synthetic::{seeded_rng, smooth_closed_curve};

/// Deterministic wavy closed pair with m = n vertices.
pub fn wavy_pair(seed: u64, m: usize) -> (Curve, Curve) {
    let mut rng = seeded_rng(seed);
    let x = smooth_closed_curve(&mut rng, m);
    let y = smooth_closed_curve(&mut rng, m);
    (x, y)
}

#[cfg(test)]
mod tests {
    use super::wavy_pair;

    #[test]
    fn pairs_are_deterministic() {
        let (x1, y1) = wavy_pair(7, 64);
        let (x2, y2) = wavy_pair(7, 64);
        assert_eq!(x1.vertices(), x2.vertices());
        assert_eq!(y1.vertices(), y2.vertices());
        assert_ne!(x1.vertices(), y1.vertices());
    }
}
