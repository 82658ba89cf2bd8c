//! Short-rainbow-cycle finders.
//!
//! Each finder reduces to the same last step: pick a rainbow edge set (at most
//! one edge per color) whose edge count exceeds the number of vertices it
//! spans by at least two, then take a shortest cycle of that set with
//! [`find_short_cycle`](crate::sparse_cycle::find_short_cycle). The cycle is
//! rainbow because the set is, and its length is bounded by
//! [`bs_bound`](crate::sparse_cycle::bs_bound) at the set's span and excess.
//!
//! - [`find_matching_edge_sampled`]: matchings + singles, sampled vertex set
//!   that always keeps heavy vertices, accepted under the concentration conditions.
//! - [`find_simplified`]: matchings + singles, plain vertex sampling accepted on
//!   the expected surplus.
//! - [`find_triangle_edge`]: triangles + singles, deterministic selection and
//!   triangle-swap repair.
//! - [`find_matchings_appendix`]: matchings only, one random edge per matching.
//! - [`find_mixed`]: matchings + triangles, dispatching to one of the above.

mod appendix;
mod mixed;
mod sampled;
mod triangle;

pub use appendix::{appendix_trial, find_matchings_appendix};
pub use mixed::{find_mixed, find_mixed_with, mixed_route, MixedConfig, MixedRoute};
pub use sampled::{
    find_matching_edge_sampled, find_simplified, heavy_vertices, sampled_trial, simplified_trial,
    SampledBounds,
};
pub use triangle::{find_triangle_edge, repair_swap, repair_swap_traced};

use crate::error::Result;
use crate::graph::{ColorId, ColoredGraph, CycleResult, Edge};
use crate::sparse_cycle::{bs_bound, find_short_cycle};

pub const DEFAULT_MAX_RETRIES: usize = 64;

/// A condition a sampled trial failed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TrialCondition {
    /// `|S| <= np + n^(2/3)`
    SizeS,
    /// `X >= (1 - eps) |F_M| (2p^2 - p^4)`
    MatchingsKept,
    /// `Y >= (1 - eps) |F_E| p^2`
    SinglesKept,
    /// `r_S - |S| >= c n`
    Surplus,
    /// `|Z| >= n 2^(-4 gamma)`
    Untouched,
    /// rainbow edges minus spanned vertices `>= 2`
    Excess,
}

/// Measurements of one randomized trial.
#[derive(Debug, Clone, PartialEq)]
pub struct TrialRecord {
    pub seed: u64,
    /// `|S|`, the sampled vertex set (sampling finders).
    pub size_s: Option<usize>,
    /// `|D|`, vertices always kept (heavy-vertex sampler).
    pub heavy_count: Option<usize>,
    /// Matching classes with an edge inside `S`.
    pub x: Option<usize>,
    /// Single-edge classes inside `S`.
    pub y: Option<usize>,
    /// Largest rainbow edge set inside `S`: `x + y`.
    pub r_s: Option<usize>,
    /// `|Z|`, vertices touched by no chosen edge (matching-only finder).
    pub size_z: Option<usize>,
    pub accepted: bool,
    pub reasons: Vec<TrialCondition>,
}

impl TrialRecord {
    pub(crate) fn new(seed: u64) -> Self {
        TrialRecord {
            seed,
            size_s: None,
            heavy_count: None,
            x: None,
            y: None,
            r_s: None,
            size_z: None,
            accepted: false,
            reasons: Vec::new(),
        }
    }

    pub(crate) fn require(&mut self, ok: bool, cond: TrialCondition) {
        if !ok {
            self.reasons.push(cond);
        }
    }

    pub(crate) fn settle(mut self) -> Self {
        self.accepted = self.reasons.is_empty();
        self
    }

    pub fn failed(&self, cond: TrialCondition) -> bool {
        self.reasons.contains(&cond)
    }
}

/// Rainbow edge set handed to the short-cycle step, with its span and bound.
#[derive(Debug, Clone, PartialEq)]
pub struct Certificate {
    /// Vertices the selected edge set lives on (the `N` of the girth bound).
    pub span: usize,
    pub selected_edges: usize,
    /// `bs_bound(span, selected_edges - span)` when defined.
    pub bound: Option<f64>,
}

impl Certificate {
    pub(crate) fn new(span: usize, selected_edges: usize) -> Self {
        let bound = selected_edges
            .checked_sub(span)
            .and_then(|k| bs_bound(span, k).ok());
        Certificate { span, selected_edges, bound }
    }

    pub fn excess(&self) -> isize {
        self.selected_edges as isize - self.span as isize
    }
}

/// What a finder returns.
#[derive(Debug, Clone)]
pub struct FinderRun {
    pub cycle: CycleResult,
    pub certificate: Certificate,
    /// Every trial made, the accepted one last. Empty for deterministic finders.
    pub trials: Vec<TrialRecord>,
    /// Length of the shortest cycle of the selection before any repair.
    pub pre_repair_length: usize,
    /// Cycle length after each repair step.
    pub repair_lengths: Vec<usize>,
}

impl FinderRun {
    pub fn within_bound(&self) -> Option<bool> {
        self.certificate.bound.map(|b| self.cycle.length as f64 <= b)
    }
}

/// Shortest cycle of a rainbow selection, certified against `span`.
pub(crate) fn certify(g: &ColoredGraph, selection: &[(Edge, ColorId)], span: usize) -> Result<(CycleResult, Certificate)> {
    let cycle = find_short_cycle(g.n(), selection)?;
    Ok((cycle, Certificate::new(span, selection.len())))
}
