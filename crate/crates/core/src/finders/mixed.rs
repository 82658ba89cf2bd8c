use super::{find_matching_edge_sampled, find_triangle_edge, heavy_vertices, FinderRun, DEFAULT_MAX_RETRIES};
use crate::bounds::{feasible_params, feasible_params_above, ParameterSet};
use crate::error::{Error, Result};
use crate::graph::{is_rainbow_cycle, ClassKind, ColoredGraph, Edge};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MixedConfig {
    /// Triangle fraction at or above which the triangle route is taken.
    pub alpha0: f64,
    pub max_retries: usize,
}

impl Default for MixedConfig {
    fn default() -> Self {
        MixedConfig { alpha0: 0.05, max_retries: DEFAULT_MAX_RETRIES }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MixedRoute {
    /// Matchings demoted to one edge, then the triangle/single finder.
    Triangles,
    /// Triangles demoted to one edge, then the heavy-vertex sampler.
    Sampler,
}

pub fn mixed_route(g: &ColoredGraph, alpha0: f64) -> MixedRoute {
    let triangles = g.count_kind(ClassKind::Triangle) as f64;
    if triangles >= alpha0 * g.n() as f64 {
        MixedRoute::Triangles
    } else {
        MixedRoute::Sampler
    }
}

/// Same colors, with every class of kind `demote` cut down to its smallest edge.
fn demoted(g: &ColoredGraph, demote: ClassKind) -> Result<ColoredGraph> {
    let classes: Vec<Vec<Edge>> = g
        .classes()
        .iter()
        .map(|c| {
            if c.kind == demote {
                vec![c.edges[0]]
            } else {
                c.edges.clone()
            }
        })
        .collect();
    ColoredGraph::from_edge_classes(g.n(), &classes)
}

/// Parameters at `alpha` with `p` high enough that the always-kept heavy set
/// leaves room for the `|S| <= np + n^(2/3)` check: `(1 - p)|D| <= n^(2/3) / 2`.
fn sampler_params(g: &ColoredGraph, alpha: f64) -> Result<ParameterSet> {
    let none = || Error::Precondition(format!("no feasible sampling parameters at alpha={alpha}"));
    let base = feasible_params(alpha, None)?.ok_or_else(none)?;
    let n = g.n() as f64;
    let heavy = heavy_vertices(g, base.heavy_threshold_for(g.n())).len() as f64;
    let min_p = if heavy > 0.0 { 1.0 - n.powf(2.0 / 3.0) / (2.0 * heavy) } else { 0.5 };
    if base.p >= min_p {
        return Ok(base);
    }
    feasible_params_above(alpha, None, min_p)?.ok_or_else(none)
}

pub fn find_mixed(g: &ColoredGraph, seed: u64) -> Result<FinderRun> {
    find_mixed_with(g, seed, &MixedConfig::default())
}

/// Matchings of size two and triangles, one class per vertex.
///
/// With at least `alpha0 * n` triangles, each matching keeps only its
/// smallest edge and the triangle/single finder runs. Otherwise each triangle
/// keeps only its smallest edge and the heavy-vertex sampler runs at the
/// measured matching fraction. Demoting keeps color ids, so the cycle found
/// on the reduced graph is a rainbow cycle of `g`.
pub fn find_mixed_with(g: &ColoredGraph, seed: u64, config: &MixedConfig) -> Result<FinderRun> {
    g.require_kinds(&[ClassKind::Matching2, ClassKind::Triangle])?;
    if g.m() != g.n() {
        return Err(Error::Precondition(format!(
            "expected one class per vertex, got m={} for n={}",
            g.m(),
            g.n()
        )));
    }
    let mut run = match mixed_route(g, config.alpha0) {
        MixedRoute::Triangles => find_triangle_edge(&demoted(g, ClassKind::Matching2)?, seed)?,
        MixedRoute::Sampler => {
            let alpha = g.count_kind(ClassKind::Matching2) as f64 / g.n() as f64;
            let reduced = demoted(g, ClassKind::Triangle)?;
            let params = sampler_params(&reduced, alpha)?;
            find_matching_edge_sampled(&reduced, &params, seed, config.max_retries)?
        }
    };
    run.cycle = is_rainbow_cycle(g, &run.cycle.vertices)?;
    Ok(run)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{gen_random_mixed, InstanceSpec};

    fn inst(n: usize, matchings: usize, triangles: usize, seed: u64) -> ColoredGraph {
        gen_random_mixed(&InstanceSpec { n, matchings, triangles, singles: 0, seed }).unwrap()
    }

    #[test]
    fn triangle_route() {
        let g = inst(100, 50, 50, 1);
        assert_eq!(mixed_route(&g, 0.05), MixedRoute::Triangles);
        let run = find_mixed(&g, 1).unwrap();
        assert!(run.cycle.rainbow);
    }

    #[test]
    fn sampler_route() {
        let g = inst(1000, 990, 10, 2);
        assert_eq!(mixed_route(&g, 0.05), MixedRoute::Sampler);
        let run = find_mixed(&g, 2).unwrap();
        assert!(run.cycle.rainbow);
        assert!(!run.trials.is_empty());
        assert_eq!(run.within_bound(), Some(true));
    }

    #[test]
    fn rejects_singles_and_wrong_count() {
        let g = gen_random_mixed(&InstanceSpec { n: 100, matchings: 50, triangles: 49, singles: 1, seed: 1 }).unwrap();
        assert!(matches!(find_mixed(&g, 1), Err(Error::WrongKind { .. })));
        let g = inst(100, 50, 40, 1);
        assert!(matches!(find_mixed(&g, 1), Err(Error::Precondition(_))));
    }
}
