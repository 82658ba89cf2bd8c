use std::collections::{BTreeMap, HashSet, VecDeque};

use proptest::prelude::*;

use rgirth::generators::{gen_half_matchings_gadget, gen_random_mixed, InstanceSpec};
use rgirth::graph::{classify_class, is_rainbow_cycle};
use rgirth::instance::{parse_instance, serialize_instance};
use rgirth::oracle::{girth_bfs, rainbow_girth_exact};
use rgirth::sparse_cycle::{find_short_cycle_plain, prune_leaves};
use rgirth::{ClassKind, ColoredGraph, Edge};

/// Random simple graph on `3..=max_n` vertices, edges split into up to six classes.
fn small_graph(max_n: usize, max_edges: usize) -> impl Strategy<Value = ColoredGraph> {
    (3..=max_n).prop_flat_map(move |n| {
        prop::collection::vec((0..n, 0..n, 0..6usize), 0..=max_edges).prop_map(move |raw| {
            let mut seen = HashSet::new();
            let mut by_tag: BTreeMap<usize, Vec<Edge>> = BTreeMap::new();
            for (a, b, tag) in raw {
                if a != b && seen.insert(Edge::new(a, b)) {
                    by_tag.entry(tag).or_default().push(Edge::new(a, b));
                }
            }
            let classes: Vec<Vec<Edge>> = by_tag.into_values().collect();
            ColoredGraph::from_edge_classes(n, &classes).unwrap()
        })
    })
}

/// Same edges, every edge its own color.
fn all_singles(g: &ColoredGraph) -> ColoredGraph {
    let classes: Vec<Vec<Edge>> = g.colored_edges().map(|(e, _)| vec![e]).collect();
    ColoredGraph::from_edge_classes(g.n(), &classes).unwrap()
}

/// Minimum rainbow cycle length by enumerating every simple cycle.
fn brute_rainbow_girth(g: &ColoredGraph) -> Option<usize> {
    fn walk(g: &ColoredGraph, s: usize, path: &mut Vec<usize>, best: &mut Option<usize>) {
        let last = *path.last().unwrap();
        for &w in g.neighbors(last) {
            if w == s && path.len() >= 3 {
                let mut colors = HashSet::new();
                let rainbow = (0..path.len()).all(|i| {
                    let e = Edge::new(path[i], path[(i + 1) % path.len()]);
                    colors.insert(g.color_of(e).unwrap())
                });
                if rainbow {
                    *best = Some(best.map_or(path.len(), |b| b.min(path.len())));
                }
            } else if w > s && !path.contains(&w) {
                path.push(w);
                walk(g, s, path, best);
                path.pop();
            }
        }
    }
    let mut best = None;
    for s in 0..g.n() {
        walk(g, s, &mut vec![s], &mut best);
    }
    best
}

/// Girth as the minimum over edges `uv` of `dist(u, v)` without `uv`, plus one.
fn bfs_girth(adj: &[Vec<usize>]) -> Option<usize> {
    let n = adj.len();
    (0..n)
        .flat_map(|u| adj[u].iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
        .filter_map(|(u, v)| {
            let mut dist = vec![usize::MAX; n];
            dist[u] = 0;
            let mut queue = VecDeque::from([u]);
            while let Some(x) = queue.pop_front() {
                for &y in &adj[x] {
                    if Edge::new(x, y) != Edge::new(u, v) && dist[y] == usize::MAX {
                        dist[y] = dist[x] + 1;
                        queue.push_back(y);
                    }
                }
            }
            (dist[v] != usize::MAX).then(|| dist[v] + 1)
        })
        .min()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn edges_map_to_exactly_one_color(g in small_graph(10, 30)) {
        let total: usize = g.classes().iter().map(|c| c.edges.len()).sum();
        prop_assert_eq!(total, g.edge_count());
        prop_assert_eq!(g.colored_edges().count(), total);
        for class in g.classes() {
            for &e in &class.edges {
                prop_assert_eq!(g.color_of(e), Some(class.id));
            }
        }
    }

    #[test]
    fn classify_ignores_labels(g in small_graph(8, 20), shift in 1..8usize) {
        for class in g.classes() {
            let relabeled: Vec<Edge> = class
                .edges
                .iter()
                .map(|e| Edge::new((e.u() + shift) % 8 + 10, (e.v() + shift) % 8 + 10))
                .collect();
            let reversed: Vec<Edge> = relabeled.iter().rev().copied().collect();
            prop_assert_eq!(classify_class(&relabeled), class.kind);
            prop_assert_eq!(classify_class(&reversed), class.kind);
        }
    }

    #[test]
    fn rainbow_flag_ignores_rotation_and_reversal(g in small_graph(9, 24), rot in 0..9usize) {
        if let Ok(c) = find_short_cycle_plain(g.n(), &g.colored_edges().map(|(e, _)| e).collect::<Vec<_>>()) {
            let base = is_rainbow_cycle(&g, &c.vertices).unwrap();
            let mut rotated = c.vertices.clone();
            let len = rotated.len();
            rotated.rotate_left(rot % len);
            let mut reversed = rotated.clone();
            reversed.reverse();
            prop_assert_eq!(is_rainbow_cycle(&g, &rotated).unwrap().rainbow, base.rainbow);
            prop_assert_eq!(is_rainbow_cycle(&g, &reversed).unwrap().rainbow, base.rainbow);
        }
    }

    #[test]
    fn exact_oracle_matches_enumeration(g in small_graph(9, 18)) {
        let exact = rainbow_girth_exact(&g, None);
        prop_assert_eq!(exact.as_ref().map(|c| c.length), brute_rainbow_girth(&g));
        if let Some(c) = exact {
            prop_assert!(is_rainbow_cycle(&g, &c.vertices).unwrap().rainbow);
        }
    }

    #[test]
    fn rainbow_girth_at_least_girth(g in small_graph(12, 24)) {
        if let Some(c) = rainbow_girth_exact(&g, None) {
            prop_assert!(c.length >= girth_bfs(&g).unwrap());
        }
    }

    #[test]
    fn singles_rainbow_girth_is_girth(g in small_graph(12, 24)) {
        let s = all_singles(&g);
        prop_assert_eq!(rainbow_girth_exact(&s, None).map(|c| c.length), girth_bfs(&g));
        prop_assert_eq!(girth_bfs(&g), bfs_girth(g.adjacency()));
    }

    #[test]
    fn pruning_keeps_girth_and_leaves_no_leaves(g in small_graph(14, 24)) {
        let mut adj = g.adjacency().to_vec();
        prune_leaves(&mut adj);
        prop_assert!(adj.iter().all(|nb| nb.is_empty() || nb.len() >= 2));
        prop_assert_eq!(bfs_girth(&adj), girth_bfs(&g));
    }

    #[test]
    fn instance_text_round_trips(
        n in 8..40usize,
        matchings in 0..8usize,
        triangles in 0..6usize,
        singles in 0..8usize,
        seed in any::<u64>(),
    ) {
        let spec = InstanceSpec { n, matchings, triangles, singles, seed };
        if let Ok(g) = gen_random_mixed(&spec) {
            let text = serialize_instance(&g);
            let back = parse_instance(&text).unwrap();
            prop_assert_eq!(&back, &g);
            prop_assert_eq!(serialize_instance(&back), text);
            prop_assert_eq!(g.count_kind(ClassKind::Triangle), triangles);
        }
    }
}

#[test]
fn gadget_file_round_trip() {
    let text = include_str!("data/gadget8.txt");
    let g = parse_instance(text).unwrap();
    assert_eq!(g, gen_half_matchings_gadget(8).unwrap());
    let canonical = "n 8 m 8\n\
        matching2 2 0 1 2 3\n\
        single 1 1 2\n\
        single 1 0 3\n\
        matching2 2 2 5 3 4\n\
        matching2 2 4 5 6 7\n\
        single 1 5 6\n\
        single 1 4 7\n\
        matching2 2 0 7 1 6\n";
    assert_eq!(serialize_instance(&g), canonical);
}
