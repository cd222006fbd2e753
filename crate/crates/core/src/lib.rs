//! Frechet distance for closed polygonal curves.
//!
//! The continuous Frechet distance compares two curves traversed monotonically
//! from start to end. For closed curves the start is not fixed: the distance
//! minimizes over all rotations of one traversal against the other. This crate
//! decides whether that distance is at most a threshold in O(mn) time for
//! curves with m and n vertices, computes the distance itself by bisection on
//! the threshold, and ships independent brute-force references used to
//! validate the fast path.
//!
//! The decision works on a doubled free-space diagram: the first curve is
//! unrolled twice so every rotation appears as a monotone path from some
//! bottom point u to the top point u + m. Two sweeps summarize boundary
//! reachability (one per direction), and the summaries are intersected
//! column by column to find a feasible start.

pub mod decision;
pub mod error;
pub mod free_space;
pub mod geometry;
pub mod oracle;
pub mod reach_pass;
pub mod synthetic;

pub use decision::{compute_distance, decide, decide_from_profile, DecisionReport, Witness};
pub use error::{Error, Result};
pub use free_space::{build_free_space, FreeInterval, FreeSpaceGrid};
pub use geometry::{hausdorff_distance, max_vertex_pair_distance, Curve, Point};
pub use reach_pass::{assemble_profile, ReachProfile};
