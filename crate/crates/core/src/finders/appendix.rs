use rand::Rng as _;

use super::{certify, FinderRun, TrialCondition, TrialRecord};
use crate::bounds::GammaParams;
use crate::error::{Error, Result};
use crate::graph::{ClassKind, ColorId, ColoredGraph, Edge};
use crate::rng::{next_seed, rng_from_seed};

fn check_hypotheses(g: &ColoredGraph, gp: &GammaParams) -> Result<()> {
    g.require_kinds(&[ClassKind::Matching2])?;
    if !gp.admissible() {
        return Err(Error::Precondition(format!(
            "gamma={} not admissible: 1 - 2^(-4 gamma) = {} >= gamma",
            gp.gamma, gp.gamma_prime
        )));
    }
    let n = g.n() as f64;
    if (g.m() as f64) < gp.gamma * n {
        return Err(Error::Precondition(format!(
            "{} matchings < gamma n = {}",
            g.m(),
            gp.gamma * n
        )));
    }
    if (gp.gamma - gp.gamma_prime) * n < 2.0 {
        return Err(Error::Precondition(format!(
            "(gamma - gamma') n = {} < 2",
            (gp.gamma - gp.gamma_prime) * n
        )));
    }
    Ok(())
}

fn run_trial(g: &ColoredGraph, gp: &GammaParams, seed: u64) -> (TrialRecord, Vec<(Edge, ColorId)>) {
    let mut rng = rng_from_seed(seed);
    let mut touched = vec![false; g.n()];
    let chosen: Vec<(Edge, ColorId)> = g
        .classes()
        .iter()
        .map(|c| {
            let e = c.edges[rng.gen_range(0..2)];
            touched[e.u()] = true;
            touched[e.v()] = true;
            (e, c.id)
        })
        .collect();
    let size_z = touched.iter().filter(|&&t| !t).count();
    let span = g.n() - size_z;
    let mut rec = TrialRecord::new(seed);
    rec.size_z = Some(size_z);
    rec.require(
        size_z as f64 >= g.n() as f64 * 0.5f64.powf(4.0 * gp.gamma),
        TrialCondition::Untouched,
    );
    rec.require(chosen.len() >= span + 2, TrialCondition::Excess);
    (rec.settle(), chosen)
}

/// One trial of the matching-only finder, without the cycle step.
pub fn appendix_trial(g: &ColoredGraph, gamma: f64, seed: u64) -> Result<TrialRecord> {
    let gp = GammaParams::new(gamma)?;
    check_hypotheses(g, &gp)?;
    Ok(run_trial(g, &gp, seed).0)
}

/// Matchings only: pick one edge of every matching uniformly at random.
///
/// With `Z` the vertices no chosen edge touches, a trial is accepted when
/// `|Z| >= n 2^(-4 gamma)` (the expectation bound) and the chosen edges
/// outnumber the touched vertices by at least two. The chosen set has one
/// edge per color, so its shortest cycle is rainbow.
pub fn find_matchings_appendix(
    g: &ColoredGraph,
    gamma: f64,
    seed: u64,
    max_retries: usize,
) -> Result<FinderRun> {
    let gp = GammaParams::new(gamma)?;
    check_hypotheses(g, &gp)?;
    let mut trials = Vec::new();
    let mut trial_seed = seed;
    for _ in 0..max_retries {
        let (rec, chosen) = run_trial(g, &gp, trial_seed);
        let accepted = rec.accepted;
        let span = g.n() - rec.size_z.unwrap_or_default();
        trials.push(rec);
        if accepted {
            let (cycle, certificate) = certify(g, &chosen, span)?;
            let pre_repair_length = cycle.length;
            return Ok(FinderRun { cycle, certificate, trials, pre_repair_length, repair_lengths: vec![] });
        }
        trial_seed = next_seed(trial_seed);
    }
    Err(Error::RetriesExhausted { trials })
}
