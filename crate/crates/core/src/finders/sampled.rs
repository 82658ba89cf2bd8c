use rand::Rng as _;

use super::{certify, FinderRun, TrialCondition, TrialRecord};
use crate::bounds::{matching_survival, ParameterSet};
use crate::error::{Error, Result};
use crate::graph::{ClassKind, ColorId, ColoredGraph, Edge};
use crate::rng::{next_seed, rng_from_seed};

/// Vertices with at least `threshold` incident edges, ascending.
pub fn heavy_vertices(g: &ColoredGraph, threshold: usize) -> Vec<usize> {
    (0..g.n()).filter(|&v| g.degree(v) >= threshold).collect()
}

/// Acceptance thresholds of the sampling finders for one instance.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SampledBounds {
    /// `np + n^(2/3)`
    pub size_s: f64,
    /// `(1 - eps) |F_M| (2p^2 - p^4)`
    pub matchings: f64,
    /// `(1 - eps) |F_E| p^2`
    pub singles: f64,
    /// `c n`
    pub surplus: f64,
}

impl SampledBounds {
    pub fn new(g: &ColoredGraph, params: &ParameterSet) -> Self {
        let n = g.n() as f64;
        let p = params.p;
        let fm = g.count_kind(ClassKind::Matching2) as f64;
        let fe = g.count_kind(ClassKind::Single) as f64;
        SampledBounds {
            size_s: n * p + n.powf(2.0 / 3.0),
            matchings: (1.0 - params.epsilon) * fm * matching_survival(p),
            singles: (1.0 - params.epsilon) * fe * p * p,
            surplus: params.c * n,
        }
    }
}

fn check_hypotheses(g: &ColoredGraph, params: &ParameterSet) -> Result<()> {
    g.require_kinds(&[ClassKind::Matching2, ClassKind::Single])?;
    let n = g.n() as f64;
    let fm = g.count_kind(ClassKind::Matching2);
    let fe = g.count_kind(ClassKind::Single);
    if (fm as f64) < (params.alpha - params.xi) * n {
        return Err(Error::Precondition(format!(
            "{fm} matchings < (alpha - xi) n = {}",
            (params.alpha - params.xi) * n
        )));
    }
    if (fe as f64) < (1.0 - params.alpha - params.xi) * n {
        return Err(Error::Precondition(format!(
            "{fe} singles < (1 - alpha - xi) n = {}",
            (1.0 - params.alpha - params.xi) * n
        )));
    }
    Ok(())
}

/// Draws one uniform per vertex in order; keeps the vertex if it is forced or
/// the draw is below `p`.
fn sample_set(n: usize, forced: Option<&[bool]>, p: f64, seed: u64) -> Vec<bool> {
    let mut rng = rng_from_seed(seed);
    (0..n)
        .map(|v| {
            let draw: f64 = rng.gen();
            forced.is_some_and(|f| f[v]) || draw < p
        })
        .collect()
}

/// Counts `(|S|, X, Y)` and collects the rainbow selection inside `S`.
fn measure(g: &ColoredGraph, in_s: &[bool]) -> (usize, usize, usize, Vec<(Edge, ColorId)>) {
    let inside = |e: &Edge| in_s[e.u()] && in_s[e.v()];
    let size_s = in_s.iter().filter(|&&b| b).count();
    let (mut x, mut y) = (0, 0);
    let mut selection = Vec::new();
    for class in g.classes() {
        // edges are sorted, so this is the canonical choice when both fit
        if let Some(&e) = class.edges.iter().find(|e| inside(e)) {
            match class.kind {
                ClassKind::Matching2 => x += 1,
                _ => y += 1,
            }
            selection.push((e, class.id));
        }
    }
    (size_s, x, y, selection)
}

fn heavy_mask(g: &ColoredGraph, params: &ParameterSet) -> (Vec<bool>, usize) {
    let mut mask = vec![false; g.n()];
    let heavy = heavy_vertices(g, params.heavy_threshold_for(g.n()));
    for &v in &heavy {
        mask[v] = true;
    }
    (mask, heavy.len())
}

fn run_sampled_trial(
    g: &ColoredGraph,
    params: &ParameterSet,
    bounds: &SampledBounds,
    heavy: &[bool],
    heavy_count: usize,
    seed: u64,
) -> (TrialRecord, Vec<(Edge, ColorId)>) {
    let in_s = sample_set(g.n(), Some(heavy), params.p, seed);
    let (size_s, x, y, selection) = measure(g, &in_s);
    let mut rec = TrialRecord::new(seed);
    rec.size_s = Some(size_s);
    rec.heavy_count = Some(heavy_count);
    rec.x = Some(x);
    rec.y = Some(y);
    rec.r_s = Some(x + y);
    rec.require(size_s as f64 <= bounds.size_s, TrialCondition::SizeS);
    rec.require(x as f64 >= bounds.matchings, TrialCondition::MatchingsKept);
    rec.require(y as f64 >= bounds.singles, TrialCondition::SinglesKept);
    rec.require(x + y >= size_s + 2, TrialCondition::Excess);
    (rec.settle(), selection)
}

/// One trial of the heavy-vertex sampler, without the cycle step.
pub fn sampled_trial(g: &ColoredGraph, params: &ParameterSet, seed: u64) -> Result<TrialRecord> {
    check_hypotheses(g, params)?;
    let bounds = SampledBounds::new(g, params);
    let (heavy, heavy_count) = heavy_mask(g, params);
    Ok(run_sampled_trial(g, params, &bounds, &heavy, heavy_count, seed).0)
}

/// Heavy-vertex sampler for matchings and single edges.
///
/// Each trial keeps all vertices of degree at least the heavy threshold plus
/// every other vertex independently with probability `p`, and accepts when
/// `|S| <= np + n^(2/3)`, `X >= (1-eps)|F_M|(2p^2-p^4)`, `Y >= (1-eps)|F_E|p^2`
/// and `X + Y >= |S| + 2`. Trial seeds chain from `seed` through
/// [`next_seed`].
pub fn find_matching_edge_sampled(
    g: &ColoredGraph,
    params: &ParameterSet,
    seed: u64,
    max_retries: usize,
) -> Result<FinderRun> {
    check_hypotheses(g, params)?;
    let bounds = SampledBounds::new(g, params);
    let (heavy, heavy_count) = heavy_mask(g, params);
    let mut trials = Vec::new();
    let mut trial_seed = seed;
    for _ in 0..max_retries {
        let (rec, selection) = run_sampled_trial(g, params, &bounds, &heavy, heavy_count, trial_seed);
        let accepted = rec.accepted;
        let size_s = rec.size_s.unwrap_or_default();
        trials.push(rec);
        if accepted {
            let (cycle, certificate) = certify(g, &selection, size_s)?;
            let pre_repair_length = cycle.length;
            return Ok(FinderRun { cycle, certificate, trials, pre_repair_length, repair_lengths: vec![] });
        }
        trial_seed = next_seed(trial_seed);
    }
    Err(Error::RetriesExhausted { trials })
}

fn run_simplified_trial(
    g: &ColoredGraph,
    params: &ParameterSet,
    bounds: &SampledBounds,
    seed: u64,
) -> (TrialRecord, Vec<(Edge, ColorId)>) {
    let in_s = sample_set(g.n(), None, params.p, seed);
    let (size_s, x, y, selection) = measure(g, &in_s);
    let mut rec = TrialRecord::new(seed);
    rec.size_s = Some(size_s);
    rec.x = Some(x);
    rec.y = Some(y);
    rec.r_s = Some(x + y);
    let surplus = (x + y) as f64 - size_s as f64;
    rec.require(surplus >= bounds.surplus, TrialCondition::Surplus);
    rec.require(x + y >= size_s + 2, TrialCondition::Excess);
    (rec.settle(), selection)
}

/// One trial of the plain sampler, without the cycle step.
pub fn simplified_trial(g: &ColoredGraph, params: &ParameterSet, seed: u64) -> Result<TrialRecord> {
    check_hypotheses(g, params)?;
    let bounds = SampledBounds::new(g, params);
    Ok(run_simplified_trial(g, params, &bounds, seed).0)
}

/// Plain sampler: every vertex kept with probability `p`, accepted when
/// `r_S - |S| >= cn` and `r_S >= |S| + 2`.
pub fn find_simplified(
    g: &ColoredGraph,
    params: &ParameterSet,
    seed: u64,
    max_retries: usize,
) -> Result<FinderRun> {
    check_hypotheses(g, params)?;
    let bounds = SampledBounds::new(g, params);
    let mut trials = Vec::new();
    let mut trial_seed = seed;
    for _ in 0..max_retries {
        let (rec, selection) = run_simplified_trial(g, params, &bounds, trial_seed);
        let accepted = rec.accepted;
        let size_s = rec.size_s.unwrap_or_default();
        trials.push(rec);
        if accepted {
            let (cycle, certificate) = certify(g, &selection, size_s)?;
            let pre_repair_length = cycle.length;
            return Ok(FinderRun { cycle, certificate, trials, pre_repair_length, repair_lengths: vec![] });
        }
        trial_seed = next_seed(trial_seed);
    }
    Err(Error::RetriesExhausted { trials })
}
