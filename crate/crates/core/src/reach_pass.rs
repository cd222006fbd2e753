//! Reachability propagation across the free-space grid.
//!
//! Two sweep orientations share one step engine. The forward pass tracks,
//! for every reachable point, the largest bottom-boundary takeoff; that
//! function is constant along vertical edges and piecewise along horizontal
//! edges, so the sweep walks row by row with a deque of spans per column
//! (living on its current horizontal edge) and a one-value register carried
//! across each vertical edge. The backward pass runs on the point-reflected
//! grid and tracks the smallest takeoff; for it the roles are transposed
//! (constant along horizontal edges, piecewise along vertical ones), so the
//! sweep walks column by column with a deque per row living on vertical
//! edges and one-value registers carried across horizontal edges.
//!
//! The step rules are the same in both orientations. Values along a deque
//! always improve toward its back (they grow when tracking the largest
//! takeoff, shrink when tracking the smallest), and an entering register
//! value never beats the deque's back entry, so one case analysis serves
//! both passes; only the sweep axes and the initialization differ.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::free_space::{
    build_free_space, glued_intervals, reflect_grid, BoundaryRow, FreeInterval, FreeSpaceGrid,
};
use crate::geometry::Curve;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SpanValue {
    /// Takeoff equals the position itself: f(u) = u on the span.
    Identity,
    /// Constant takeoff for every point of the span.
    Const(f64),
}

/// One maximal piece of a column's takeoff function.
///
/// The flat tuple form (beg, val, end) encodes identity as val == end, which
/// cannot represent a constant equal to the span's right end and cannot
/// represent constants above it. Internally the kind is kept explicit;
/// `as_tuple` emits the flat form.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpanTriple {
    pub beg: f64,
    pub end: f64,
    pub value: SpanValue,
}

impl SpanTriple {
    pub fn identity(beg: f64, end: f64) -> SpanTriple {
        debug_assert!(beg <= end);
        SpanTriple {
            beg,
            end,
            value: SpanValue::Identity,
        }
    }

    pub fn constant(beg: f64, val: f64, end: f64) -> SpanTriple {
        debug_assert!(beg <= end);
        SpanTriple {
            beg,
            end,
            value: SpanValue::Const(val),
        }
    }

    /// Parse the flat encoding: val == end denotes the identity span.
    pub fn from_tuple(beg: f64, val: f64, end: f64) -> SpanTriple {
        if val == end {
            SpanTriple::identity(beg, end)
        } else {
            SpanTriple::constant(beg, val, end)
        }
    }

    pub fn as_tuple(&self) -> (f64, f64, f64) {
        match self.value {
            SpanValue::Identity => (self.beg, self.end, self.end),
            SpanValue::Const(v) => (self.beg, v, self.end),
        }
    }

    pub fn is_identity(&self) -> bool {
        matches!(self.value, SpanValue::Identity)
    }

    pub fn value_at(&self, u: f64) -> f64 {
        debug_assert!(self.beg <= u && u <= self.end);
        match self.value {
            SpanValue::Identity => u,
            SpanValue::Const(v) => v,
        }
    }

    pub fn left_value(&self) -> f64 {
        self.value_at(self.beg)
    }

    pub fn right_value(&self) -> f64 {
        self.value_at(self.end)
    }
}

/// Deque of disjoint, sorted spans over one grid edge.
#[derive(Debug, Clone, Default)]
pub struct ReachDeque {
    items: VecDeque<SpanTriple>,
}

impl ReachDeque {
    pub fn new() -> ReachDeque {
        ReachDeque::default()
    }

    pub fn from_triples(tuples: &[(f64, f64, f64)]) -> ReachDeque {
        ReachDeque {
            items: tuples
                .iter()
                .map(|&(b, v, e)| SpanTriple::from_tuple(b, v, e))
                .collect(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = &SpanTriple> {
        self.items.iter()
    }

    pub fn spans(&self) -> Vec<SpanTriple> {
        self.items.iter().copied().collect()
    }

    pub fn into_spans(self) -> Vec<SpanTriple> {
        self.items.into_iter().collect()
    }

    /// Covered range (front begin, back end).
    pub fn span(&self) -> Option<(f64, f64)> {
        match (self.items.front(), self.items.back()) {
            (Some(f), Some(b)) => Some((f.beg, b.end)),
            _ => None,
        }
    }

    /// Takeoff at the left end of the covered range.
    pub fn first_value(&self) -> f64 {
        let f = self.items.front().expect("empty deque has no value");
        f.value_at(f.beg)
    }

    /// Takeoff at the right end of the covered range.
    pub fn last_value(&self) -> f64 {
        let b = self.items.back().expect("empty deque has no value");
        b.value_at(b.end)
    }

    pub fn clear(&mut self) {
        self.items.clear();
    }

    /// Restrict to [x, +inf): spans ending before x are dropped, a span
    /// straddling x starts at x afterwards. Identity spans stay identity.
    pub fn cut_left(&mut self, x: f64) {
        while matches!(self.items.front(), Some(f) if f.end < x) {
            self.items.pop_front();
        }
        if let Some(f) = self.items.front_mut() {
            if f.beg < x {
                f.beg = x;
            }
        }
    }

    /// Restrict to (-inf, x]: spans beginning after x are dropped, a span
    /// straddling x ends at x afterwards. An identity span trimmed this way
    /// keeps identity semantics, so its right-end value drops to x.
    pub fn cut_right(&mut self, x: f64) {
        while matches!(self.items.back(), Some(b) if b.beg > x) {
            self.items.pop_back();
        }
        if let Some(b) = self.items.back_mut() {
            if b.end > x {
                b.end = x;
            }
        }
    }

    fn push_front(&mut self, t: SpanTriple) {
        debug_assert!(self.items.front().is_none_or(|f| t.end <= f.beg));
        self.items.push_front(t);
    }

    fn push_back(&mut self, t: SpanTriple) {
        debug_assert!(self.items.back().is_none_or(|b| b.end <= t.beg));
        self.items.push_back(t);
    }
}

/// Reachable part of a register edge with its constant takeoff value. The
/// forward sweep carries these across vertical edges, the backward sweep
/// across horizontal edges.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EdgeReach {
    pub interval: FreeInterval,
    pub value: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    /// Track the largest takeoff (forward pass).
    Rightmost,
    /// Track the smallest takeoff (backward pass on the reflected grid).
    Leftmost,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Init {
    /// Bottom spans start with the extremal endpoint of their glued free
    /// interval, crediting horizontal slides along the bottom boundary.
    Seeded,
    /// Bottom spans start with their own coordinate (no slide credit).
    Identity,
}

#[derive(Debug, Clone, Copy)]
pub struct PassConfig {
    pub side: Side,
    pub init: Init,
}

impl PassConfig {
    pub fn new(side: Side, init: Init) -> Result<PassConfig> {
        if side == Side::Leftmost && init == Init::Identity {
            return Err(Error::ProfileShape(
                "leftmost tracking requires seeded initialization".into(),
            ));
        }
        Ok(PassConfig { side, init })
    }

    pub fn forward_seeded() -> PassConfig {
        PassConfig {
            side: Side::Rightmost,
            init: Init::Seeded,
        }
    }

    pub fn forward_identity() -> PassConfig {
        PassConfig {
            side: Side::Rightmost,
            init: Init::Identity,
        }
    }

    pub fn backward() -> PassConfig {
        PassConfig {
            side: Side::Leftmost,
            init: Init::Seeded,
        }
    }
}

#[derive(Debug, Clone, Copy)]
pub struct PassStats {
    pub steps: u64,
    pub insertions: u64,
    pub size_bound_ok: bool,
}

/// Deque ordering and value-direction invariants, checked in debug builds.
fn debug_check_order(q: &ReachDeque, side: Side) {
    if !cfg!(debug_assertions) {
        return;
    }
    let mut prev: Option<&SpanTriple> = None;
    for t in q.iter() {
        assert!(t.beg <= t.end, "span reversed");
        if let Some(p) = prev {
            assert!(p.end <= t.beg, "spans out of order");
            let ok = match side {
                Side::Rightmost => p.right_value() <= t.left_value(),
                Side::Leftmost => p.right_value() >= t.left_value(),
            };
            assert!(ok, "takeoff values drift the wrong way along the deque");
        }
        prev = Some(t);
    }
}

/// Advance a deque across one cell onto its next edge.
///
/// `carry_in` is the reachability of the cell's register edge behind the
/// step, `free_next` the free part of the edge the deque moves onto. With
/// [a,b] = free_next and [c,d] = the deque's covered range, the pieces of
/// [a,b] split three ways: left of c only the carry feeds it (through the
/// convex cell interior), inside [c,d] every point keeps the value it had on
/// the previous edge, and right of d everything is fed through the deque's
/// back entry, whose value also dominates the carry in both tracking modes.
pub fn column_step(
    q: &mut ReachDeque,
    carry_in: Option<&EdgeReach>,
    free_next: Option<FreeInterval>,
    side: Side,
    stats: &mut PassStats,
) {
    let Some(next) = free_next else {
        q.clear();
        return;
    };
    let (a, b) = (next.lo, next.hi);
    let carry_val = carry_in.map(|l| l.value);
    let span = q.span();
    let Some((c, d)) = span else {
        if let Some(rv) = carry_val {
            q.push_back(SpanTriple::constant(a, rv, b));
            stats.insertions += 1;
        }
        return;
    };
    let vald = q.last_value();
    if b < c {
        // The new edge lies entirely before the deque; only the carry can
        // feed it.
        q.clear();
        if let Some(rv) = carry_val {
            q.push_back(SpanTriple::constant(a, rv, b));
            stats.insertions += 1;
        }
    } else if d < a {
        // The new edge lies entirely past the deque: every point is reached
        // through the back entry, which also dominates the carry.
        q.clear();
        q.push_back(SpanTriple::constant(a, vald, b));
        stats.insertions += 1;
    } else if a < c {
        // The part of [a,b] before c is fed by the carry alone.
        if b <= d {
            q.cut_right(b);
        } else {
            q.push_back(SpanTriple::constant(d, vald, b));
            stats.insertions += 1;
        }
        if let Some(rv) = carry_val {
            q.push_front(SpanTriple::constant(a, rv, c));
            stats.insertions += 1;
        }
    } else {
        // c <= a <= d: the middle keeps its values; a tail past d inherits
        // the value at d. The carry never beats existing entries here.
        q.cut_left(a);
        if b <= d {
            q.cut_right(b);
        } else {
            q.push_back(SpanTriple::constant(d, vald, b));
            stats.insertions += 1;
        }
    }
    debug_check_order(q, side);
}

/// Reachability of the register edge crossed at this step, computed from the
/// deque and carry state before `column_step` consumes the cell.
pub fn right_edge_step(
    q: &ReachDeque,
    carry_in: Option<&EdgeReach>,
    free_out: Option<FreeInterval>,
    side: Side,
) -> Option<EdgeReach> {
    let free = free_out?;
    if !q.is_empty() {
        // Every free point of the outgoing edge is reachable through the
        // convex cell from the deque's back entry, whose value dominates both
        // the rest of the deque and the carry in either tracking mode.
        debug_check_order(q, side);
        return Some(EdgeReach {
            interval: free,
            value: q.last_value(),
        });
    }
    let l = carry_in?;
    // Only the carry feeds the cell: monotone paths never back up, so the
    // outgoing edge is reachable from the carry's lower end onward.
    let lo = free.lo.max(l.interval.lo);
    if lo <= free.hi {
        Some(EdgeReach {
            interval: FreeInterval::new(lo, free.hi),
            value: l.value,
        })
    } else {
        None
    }
}

#[derive(Debug)]
pub struct InitState {
    /// One deque per column, index i-1 for 1 <= i <= 2m.
    pub deques: Vec<ReachDeque>,
    /// Left-boundary entry per row, index j for 1 <= j <= n.
    pub row_seeds: Vec<Option<EdgeReach>>,
    pub insertions: u64,
}

/// Bottom-row deques plus left-column seeds.
#[allow(clippy::needless_range_loop)] // loop index is the row coordinate
pub fn initialize(grid: &FreeSpaceGrid, cfg: PassConfig) -> InitState {
    let (m, n) = (grid.m(), grid.n());
    let glued = glued_intervals(grid, BoundaryRow::Bottom);
    let mut deques = vec![ReachDeque::new(); 2 * m];
    let mut insertions = 0u64;
    let mut cursor = 0usize;
    for i in 1..=2 * m {
        let Some(edge) = grid.top_edge(i, 0) else {
            continue;
        };
        while cursor < glued.len() && glued[cursor].hi < edge.lo {
            cursor += 1;
        }
        debug_assert!(
            cursor < glued.len() && glued[cursor].lo <= edge.lo && edge.hi <= glued[cursor].hi
        );
        let triple = match cfg.init {
            Init::Identity => SpanTriple::identity(edge.lo, edge.hi),
            Init::Seeded => {
                let v = match cfg.side {
                    Side::Rightmost => glued[cursor].hi,
                    Side::Leftmost => glued[cursor].lo,
                };
                SpanTriple::constant(edge.lo, v, edge.hi)
            }
        };
        deques[i - 1].push_back(triple);
        insertions += 1;
    }

    // The left boundary of row j is enterable only while the vertical column
    // {0} x [0, j-1] stays free all the way down to the corner.
    let corner_seed = match (cfg.side, cfg.init) {
        (Side::Rightmost, Init::Seeded) => glued
            .first()
            .filter(|g| g.lo == 0.0)
            .map(|g| g.hi)
            .unwrap_or(0.0),
        _ => 0.0,
    };
    let mut row_seeds = vec![None; n + 1];
    let mut connected = true;
    for j in 1..=n {
        let edge = grid.right_edge(0, j);
        match edge {
            Some(e) if connected && e.lo == (j - 1) as f64 => {
                row_seeds[j] = Some(EdgeReach {
                    interval: e,
                    value: corner_seed,
                });
                connected = e.hi == j as f64;
            }
            _ => connected = false,
        }
    }
    InitState {
        deques,
        row_seeds,
        insertions,
    }
}

#[derive(Debug)]
pub struct PassResult {
    /// Top-row data per column (index i-1): the reachable spans of the edge
    /// at the top boundary with their takeoff values.
    pub top: Vec<Vec<SpanTriple>>,
    pub stats: PassStats,
}

/// Full sweep over the grid. The largest-takeoff side walks row by row, the
/// smallest-takeoff side column by column; both visit each cell once with
/// its predecessors already done.
pub fn run_pass(grid: &FreeSpaceGrid, cfg: PassConfig) -> PassResult {
    match cfg.side {
        Side::Rightmost => run_row_sweep(grid, cfg),
        Side::Leftmost => run_column_sweep(grid, cfg),
    }
}

/// Deques live on horizontal edges (one per column), registers cross
/// vertical edges. After the step in row j a deque holds at most 2j+1 spans.
fn run_row_sweep(grid: &FreeSpaceGrid, cfg: PassConfig) -> PassResult {
    let (m, n) = (grid.m(), grid.n());
    let mut st = initialize(grid, cfg);
    let mut stats = PassStats {
        steps: 0,
        insertions: st.insertions,
        size_bound_ok: true,
    };
    for j in 1..=n {
        let mut carry: Option<EdgeReach> = st.row_seeds[j];
        for i in 1..=2 * m {
            let q = &mut st.deques[i - 1];
            let next = right_edge_step(q, carry.as_ref(), grid.right_edge(i, j), cfg.side);
            column_step(q, carry.as_ref(), grid.top_edge(i, j), cfg.side, &mut stats);
            carry = next;
            stats.steps += 1;
            if q.len() > 2 * j + 1 {
                stats.size_bound_ok = false;
            }
            debug_assert!(q.len() <= 2 * j + 1, "deque bound broken at ({i},{j})");
        }
    }
    PassResult {
        top: st.deques.into_iter().map(|d| d.into_spans()).collect(),
        stats,
    }
}

/// Transposed orientation: deques live on vertical edges (one per row, spans
/// in the vertical coordinate), registers cross horizontal edges. The bottom
/// spans from `initialize` become the entry registers of their columns, the
/// left-boundary seeds become the initial row deques, and each column's last
/// register is its top-edge result. After the step in column i a deque holds
/// at most 2i+1 spans.
fn run_column_sweep(grid: &FreeSpaceGrid, cfg: PassConfig) -> PassResult {
    let (m, n) = (grid.m(), grid.n());
    let st = initialize(grid, cfg);
    let mut entries: Vec<Option<EdgeReach>> = Vec::with_capacity(2 * m);
    for d in &st.deques {
        debug_assert!(d.len() <= 1, "bottom edges seed at most one span");
        entries.push(d.iter().next().map(|sp| EdgeReach {
            interval: FreeInterval::new(sp.beg, sp.end),
            value: sp.left_value(),
        }));
    }
    let mut stats = PassStats {
        steps: 0,
        insertions: 0,
        size_bound_ok: true,
    };
    let mut rows: Vec<ReachDeque> = vec![ReachDeque::new(); n];
    for j in 1..=n {
        if let Some(e) = st.row_seeds[j] {
            rows[j - 1].push_back(SpanTriple::constant(e.interval.lo, e.value, e.interval.hi));
            stats.insertions += 1;
        }
    }
    let mut top = Vec::with_capacity(2 * m);
    for i in 1..=2 * m {
        let mut carry = entries[i - 1];
        for j in 1..=n {
            let q = &mut rows[j - 1];
            let next = right_edge_step(q, carry.as_ref(), grid.top_edge(i, j), cfg.side);
            column_step(
                q,
                carry.as_ref(),
                grid.right_edge(i, j),
                cfg.side,
                &mut stats,
            );
            carry = next;
            stats.steps += 1;
            if q.len() > 2 * i + 1 {
                stats.size_bound_ok = false;
            }
            debug_assert!(q.len() <= 2 * i + 1, "deque bound broken at ({i},{j})");
        }
        top.push(match carry {
            Some(e) => vec![SpanTriple::constant(e.interval.lo, e.value, e.interval.hi)],
            None => Vec::new(),
        });
    }
    PassResult { top, stats }
}

/// Reachable span of one bottom edge from the top boundary.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BottomSpan {
    pub lo: f64,
    pub hi: f64,
    /// Largest top-boundary coordinate from which the span is reachable.
    pub top_value: f64,
}

#[derive(Debug, Clone, Copy)]
pub struct ProfileStats {
    pub forward: PassStats,
    pub backward: PassStats,
    /// Two insertions per step plus the spans seeded along the takeoff and
    /// entry boundaries at setup.
    pub insertion_bound: u64,
    /// Forward takeoff values read left to right never decrease.
    pub top_values_monotone: bool,
}

impl ProfileStats {
    pub fn within_bounds(&self) -> bool {
        self.forward.size_bound_ok
            && self.backward.size_bound_ok
            && self.forward.insertions <= self.insertion_bound
            && self.backward.insertions <= self.insertion_bound
    }

    pub fn max_insertions(&self) -> u64 {
        self.forward.insertions.max(self.backward.insertions)
    }
}

/// Both boundary reachability summaries of the doubled diagram: which top-row
/// points are reachable from the bottom boundary (with largest takeoff), and
/// which bottom-row points are reachable from the top boundary (with largest
/// top takeoff).
#[derive(Debug, Clone)]
pub struct ReachProfile {
    pub m: usize,
    pub n: usize,
    /// bottom[i-1] for 1 <= i <= m.
    pub bottom: Vec<Option<BottomSpan>>,
    /// top[i-m-1] for m+1 <= i <= 2m.
    pub top: Vec<Vec<SpanTriple>>,
    pub stats: ProfileStats,
}

pub fn assemble_profile(x: &Curve, y: &Curve, eps: f64) -> Result<ReachProfile> {
    assemble_profile_with(x, y, eps, Init::Identity)
}

/// Like `assemble_profile` but choosing the forward initialization mode.
/// Identity is the default: above the bottom row the largest takeoff equals
/// the coordinate where the witness path leaves the bottom boundary, so
/// seeding a span with its glued interval's right end can overstate values
/// higher up. The seeded mode is kept for cross-checks.
pub fn assemble_profile_with(
    x: &Curve,
    y: &Curve,
    eps: f64,
    forward_init: Init,
) -> Result<ReachProfile> {
    let grid = build_free_space(x, y, eps)?;
    let (m, n) = (grid.m(), grid.n());
    let forward = run_pass(
        &grid,
        PassConfig {
            side: Side::Rightmost,
            init: forward_init,
        },
    );
    let backward = run_pass(&reflect_grid(&grid), PassConfig::backward());
    let two_m = (2 * m) as f64;

    let mut bottom: Vec<Option<BottomSpan>> = vec![None; m];
    for col in m + 1..=2 * m {
        let spans = &backward.top[col - 1];
        if spans.is_empty() {
            continue;
        }
        if spans.len() > 1 {
            return Err(Error::Internal(format!(
                "bottom edge {} split into {} spans",
                2 * m - col + 1,
                spans.len()
            )));
        }
        let sp = spans[0];
        let val = match sp.value {
            SpanValue::Const(v) => v,
            SpanValue::Identity if sp.beg == sp.end => sp.beg,
            SpanValue::Identity => {
                return Err(Error::Internal(
                    "bottom edge carries a non-constant value".into(),
                ))
            }
        };
        bottom[2 * m - col] = Some(BottomSpan {
            lo: two_m - sp.end,
            hi: two_m - sp.beg,
            top_value: two_m - val,
        });
    }

    let mut monotone = true;
    let mut last = f64::NEG_INFINITY;
    for col in &forward.top {
        for sp in col {
            if sp.left_value() < last {
                monotone = false;
            }
            last = last.max(sp.right_value());
        }
    }

    let insertion_bound = (4 * m * n + 2 * m + n) as u64;
    Ok(ReachProfile {
        m,
        n,
        bottom,
        top: forward.top[m..].to_vec(),
        stats: ProfileStats {
            forward: forward.stats,
            backward: backward.stats,
            insertion_bound,
            top_values_monotone: monotone,
        },
    })
}
