//! Girth bound for sparse graphs and an exact shortest-cycle finder.
//!
//! Every graph on `N >= 4` vertices with `N + k` edges, `k >= 2`, has girth at
//! most `2(N + k) / (3k) * (log2 k + log2 log2 k + 4)`. [`find_short_cycle`]
//! returns an actual shortest cycle, so its length certifies the bound.

use std::collections::{HashMap, VecDeque};

use crate::error::{Error, Result};
use crate::graph::{ColorId, CycleResult, Edge};

/// Upper bound on the girth of an `n_vertices`-vertex graph with `n_vertices + excess` edges.
pub fn bs_bound(n_vertices: usize, excess: usize) -> Result<f64> {
    if n_vertices < 4 || excess < 2 {
        return Err(Error::Domain(format!(
            "girth bound needs N >= 4 and k >= 2, got N={n_vertices}, k={excess}"
        )));
    }
    let n = n_vertices as f64;
    let k = excess as f64;
    Ok(2.0 * (n + k) / (3.0 * k) * (k.log2() + k.log2().log2() + 4.0))
}

/// Shortest cycle of the graph given by sorted adjacency lists, or `None` if acyclic.
///
/// Runs a breadth-first search from every vertex. A non-tree edge `u-w` met
/// from root `r` closes a cycle through the lowest common ancestor of `u` and
/// `w`; the minimum over all roots is the girth. A search stops once the
/// frontier depth `d` satisfies `2d + 1 >= best`. Ties resolve to the first
/// cycle met (roots ascending, neighbors ascending).
pub(crate) fn shortest_cycle(adj: &[Vec<usize>]) -> Option<Vec<usize>> {
    let n = adj.len();
    let mut best = usize::MAX;
    let mut best_cycle = None;
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    let mut touched = Vec::new();
    let mut queue = VecDeque::new();

    for root in 0..n {
        if adj[root].len() < 2 {
            continue;
        }
        for &t in &touched {
            dist[t] = usize::MAX;
            parent[t] = usize::MAX;
        }
        touched.clear();
        queue.clear();
        dist[root] = 0;
        touched.push(root);
        queue.push_back(root);

        while let Some(u) = queue.pop_front() {
            if 2 * dist[u] + 1 >= best {
                break;
            }
            for &w in &adj[u] {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    touched.push(w);
                    queue.push_back(w);
                } else if w != parent[u] && dist[u] + dist[w] + 1 < best {
                    let cycle = close_cycle(u, w, &dist, &parent);
                    if cycle.len() < best {
                        best = cycle.len();
                        best_cycle = Some(cycle);
                    }
                }
            }
        }
    }
    best_cycle
}

/// Cycle formed by tree paths from `u` and `w` up to their common ancestor plus edge `u-w`.
fn close_cycle(u: usize, w: usize, dist: &[usize], parent: &[usize]) -> Vec<usize> {
    let mut left = vec![u];
    let mut right = vec![w];
    let (mut a, mut b) = (u, w);
    while dist[a] > dist[b] {
        a = parent[a];
        left.push(a);
    }
    while dist[b] > dist[a] {
        b = parent[b];
        right.push(b);
    }
    while a != b {
        a = parent[a];
        b = parent[b];
        left.push(a);
        right.push(b);
    }
    // both lists now end at the common ancestor
    right.pop();
    left.reverse();
    left.extend(right);
    left
}

/// Removes vertices of degree at most one until none remain. Cycles are unaffected.
pub fn prune_leaves(adj: &mut [Vec<usize>]) {
    let mut deg: Vec<usize> = adj.iter().map(Vec::len).collect();
    let mut removed = vec![false; adj.len()];
    let mut stack: Vec<usize> = (0..adj.len()).filter(|&v| deg[v] <= 1).collect();
    while let Some(v) = stack.pop() {
        if removed[v] {
            continue;
        }
        removed[v] = true;
        for &w in &adj[v] {
            if !removed[w] {
                deg[w] -= 1;
                if deg[w] == 1 {
                    stack.push(w);
                }
            }
        }
    }
    for (v, nb) in adj.iter_mut().enumerate() {
        if removed[v] {
            nb.clear();
        } else {
            nb.retain(|&w| !removed[w]);
        }
    }
}

/// Shortest cycle of a labeled edge list on vertices `0..n`.
///
/// Labels are carried through to the certificate; pass color ids to get a
/// rainbow flag, or any distinct labels when colors do not matter.
pub fn find_short_cycle(n: usize, edges: &[(Edge, ColorId)]) -> Result<CycleResult> {
    let mut label = HashMap::with_capacity(edges.len());
    let mut adj = vec![Vec::new(); n];
    for &(e, c) in edges {
        let (a, b) = e.endpoints();
        if e.is_loop() {
            return Err(Error::InvalidEdgeList(format!("self-loop at {a}")));
        }
        if b >= n {
            return Err(Error::InvalidEdgeList(format!("vertex {b} out of range for n={n}")));
        }
        if label.insert(e, c).is_some() {
            return Err(Error::InvalidEdgeList(format!("edge {e} listed twice")));
        }
        adj[a].push(b);
        adj[b].push(a);
    }
    for nb in &mut adj {
        nb.sort_unstable();
    }
    prune_leaves(&mut adj);
    let cycle = shortest_cycle(&adj).ok_or(Error::Acyclic)?;
    Ok(CycleResult::resolve(cycle, |e| label.get(&e).copied())?.canonical())
}

/// Colorless convenience wrapper: each edge is labeled by its index.
pub fn find_short_cycle_plain(n: usize, edges: &[Edge]) -> Result<CycleResult> {
    let labeled: Vec<(Edge, ColorId)> = edges.iter().copied().zip(0..).collect();
    find_short_cycle(n, &labeled)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn edges(pairs: &[(usize, usize)]) -> Vec<Edge> {
        pairs.iter().map(|&(a, b)| Edge::new(a, b)).collect()
    }

    #[test]
    fn bound_values() {
        assert_eq!(bs_bound(4, 2).unwrap(), 10.0);
        assert!((bs_bound(100, 50).unwrap() - 24.2814).abs() < 1e-3);
        assert!((bs_bound(8, 2).unwrap() - 50.0 / 3.0).abs() < 1e-12);
        assert!(bs_bound(4, 1).is_err());
        assert!(bs_bound(3, 5).is_err());
    }

    #[test]
    fn chord_closes_triangle() {
        let es = edges(&[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2)]);
        let c = find_short_cycle_plain(5, &es).unwrap();
        assert_eq!(c.length, 3);
        assert_eq!(c.vertices, vec![0, 1, 2]);
    }

    #[test]
    fn tree_is_acyclic() {
        let es = edges(&[(0, 1), (1, 2), (1, 3), (3, 4)]);
        assert!(matches!(find_short_cycle_plain(5, &es), Err(Error::Acyclic)));
        assert!(matches!(find_short_cycle_plain(3, &[]), Err(Error::Acyclic)));
    }

    #[test]
    fn rejects_bad_edge_lists() {
        assert!(find_short_cycle_plain(3, &edges(&[(0, 1), (1, 0)])).is_err());
        assert!(find_short_cycle_plain(3, &edges(&[(0, 3)])).is_err());
        assert!(find_short_cycle_plain(3, &edges(&[(1, 1)])).is_err());
    }

    #[test]
    fn even_girth_with_pendant_trees() {
        // 6-cycle with hanging paths and a disjoint 8-cycle
        let mut pairs: Vec<(usize, usize)> = (0..6).map(|i| (i, (i + 1) % 6)).collect();
        pairs.extend([(0, 6), (6, 7), (3, 8)]);
        pairs.extend((0..8).map(|i| (9 + i, 9 + (i + 1) % 8)));
        let c = find_short_cycle_plain(17, &edges(&pairs)).unwrap();
        assert_eq!(c.length, 6);
        assert_eq!(c.vertices, vec![0, 1, 2, 3, 4, 5]);
    }

    #[test]
    fn pruning_keeps_cycles_only() {
        let mut adj = vec![vec![1], vec![0, 2, 4], vec![1, 3, 4], vec![2], vec![1, 2]];
        prune_leaves(&mut adj);
        assert_eq!(adj, vec![vec![], vec![2, 4], vec![1, 4], vec![], vec![1, 2]]);
    }

    #[test]
    fn labels_flow_into_certificate() {
        let es = [(Edge::new(0, 1), 7), (Edge::new(1, 2), 7), (Edge::new(0, 2), 3)];
        let c = find_short_cycle(3, &es).unwrap();
        assert!(!c.rainbow);
        assert_eq!(c.colors().collect::<Vec<_>>(), vec![7, 7, 3]);
    }
}
