//! Exact girth and exact rainbow girth on small instances.

use crate::graph::{ColorId, ColoredGraph, CycleResult};
use crate::sparse_cycle::shortest_cycle;

/// Length of a shortest cycle ignoring colors, or `None` if `g` is a forest.
pub fn girth_bfs(g: &ColoredGraph) -> Option<usize> {
    shortest_cycle(g.adjacency()).map(|c| c.len())
}

/// A minimum-length rainbow cycle of `g`, or `None` if there is none of
/// length at most `cutoff` (unbounded when `cutoff` is `None`).
///
/// Depth-first branch and bound over simple paths. A cycle is enumerated
/// once, from its minimum vertex `s` toward the smaller of its two neighbors,
/// through vertices greater than `s`. Extensions are tried in ascending
/// vertex order and a branch is cut as soon as it cannot beat the best
/// length, so the result is the lexicographically smallest canonical
/// sequence among the shortest rainbow cycles. Exponential in general; meant
/// for graphs with a few dozen edges.
pub fn rainbow_girth_exact(g: &ColoredGraph, cutoff: Option<usize>) -> Option<CycleResult> {
    let n = g.n();
    let mut search = Search {
        g,
        used_color: vec![false; g.m()],
        on_path: vec![false; n],
        path: Vec::with_capacity(n),
        best: cutoff.map_or(usize::MAX, |c| c.saturating_add(1)).min(n + 1),
        best_path: None,
    };
    for s in 0..n {
        // a cycle through s needs at least two neighbors above s
        if g.neighbors(s).iter().filter(|&&w| w > s).count() < 2 {
            continue;
        }
        search.path.push(s);
        search.on_path[s] = true;
        search.extend(s);
        search.on_path[s] = false;
        search.path.pop();
    }
    let best = search.best_path?;
    let cycle = CycleResult::resolve(best, |e| g.color_of(e))
        .expect("search only follows edges of g");
    debug_assert!(cycle.rainbow);
    Some(cycle)
}

struct Search<'a> {
    g: &'a ColoredGraph,
    used_color: Vec<bool>,
    on_path: Vec<bool>,
    path: Vec<usize>,
    best: usize,
    best_path: Option<Vec<usize>>,
}

impl Search<'_> {
    fn color(&self, a: usize, b: usize) -> ColorId {
        self.g
            .color_of(crate::graph::Edge::new(a, b))
            .expect("adjacent vertices share an edge")
    }

    fn extend(&mut self, last: usize) {
        let s = self.path[0];
        let edges_so_far = self.path.len() - 1;

        let closes = edges_so_far >= 2
            && edges_so_far + 1 < self.best
            && self.path[1] < last
            && self.g.has_edge(last, s);
        if closes && !self.used_color[self.color(last, s)] {
            self.best = edges_so_far + 1;
            self.best_path = Some(self.path.clone());
        }
        // any cycle through one more vertex has at least edges_so_far + 2 edges
        if edges_so_far + 2 >= self.best {
            return;
        }
        for &w in self.g.neighbors(last) {
            if w <= s || self.on_path[w] {
                continue;
            }
            let c = self.color(last, w);
            if self.used_color[c] {
                continue;
            }
            self.used_color[c] = true;
            self.on_path[w] = true;
            self.path.push(w);
            self.extend(w);
            self.path.pop();
            self.on_path[w] = false;
            self.used_color[c] = false;
            if edges_so_far + 2 >= self.best {
                return;
            }
        }
    }
}
