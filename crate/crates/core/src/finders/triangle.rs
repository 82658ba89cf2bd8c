use std::collections::{HashMap, HashSet};

use super::{certify, FinderRun};
use crate::error::{Error, Result};
use crate::graph::{is_rainbow_cycle, ClassKind, ColorId, ColoredGraph, CycleResult, Edge};

/// Triangles and single edges.
///
/// Takes every single edge and the two canonically smallest edges of every
/// triangle, finds a shortest cycle of that selection and repairs it with
/// [`repair_swap`]. Needs `2 * triangles + singles >= n + 2`. `_seed` is
/// reserved for a randomized choice of the two triangle edges.
pub fn find_triangle_edge(g: &ColoredGraph, _seed: u64) -> Result<FinderRun> {
    g.require_kinds(&[ClassKind::Triangle, ClassKind::Single])?;
    let triangles = g.count_kind(ClassKind::Triangle);
    let singles = g.count_kind(ClassKind::Single);
    if 2 * triangles + singles < g.n() + 2 {
        return Err(Error::Precondition(format!(
            "2*{triangles} + {singles} selected edges < n + 2 = {}",
            g.n() + 2
        )));
    }
    let selection: Vec<(Edge, ColorId)> = g
        .classes()
        .iter()
        .flat_map(|c| c.edges.iter().take(2).map(move |&e| (e, c.id)))
        .collect();
    let span = selection
        .iter()
        .flat_map(|(e, _)| [e.u(), e.v()])
        .collect::<HashSet<_>>()
        .len();
    let (pre, certificate) = certify(g, &selection, span)?;
    let pre_repair_length = pre.length;
    let (cycle, repair_lengths) = repair_swap_traced(g, &pre)?;
    Ok(FinderRun { cycle, certificate, trials: vec![], pre_repair_length, repair_lengths })
}

/// Splices out repeated triangle colors until the cycle is rainbow.
pub fn repair_swap(g: &ColoredGraph, cycle: &CycleResult) -> Result<CycleResult> {
    repair_swap_traced(g, cycle).map(|(c, _)| c)
}

/// [`repair_swap`] plus the cycle length after every splice.
///
/// A repeated color must be a triangle contributing two consecutive edges
/// `u-v, v-w`; they are replaced by the third edge `u-w`, which shortens the
/// cycle by one. The earliest repeated color along the cycle is handled first.
pub fn repair_swap_traced(g: &ColoredGraph, cycle: &CycleResult) -> Result<(CycleResult, Vec<usize>)> {
    let mut cur = is_rainbow_cycle(g, &cycle.vertices)?;
    let mut lengths = Vec::new();
    while !cur.rainbow {
        let len = cur.length;
        let mut positions: HashMap<ColorId, Vec<usize>> = HashMap::new();
        for (i, c) in cur.colors().enumerate() {
            positions.entry(c).or_default().push(i);
        }
        let (color, pos) = positions
            .into_iter()
            .filter(|(_, p)| p.len() > 1)
            .min_by_key(|(_, p)| p[0])
            .expect("non-rainbow cycle repeats a color");
        let kind = g.class(color).kind;
        if kind != ClassKind::Triangle || pos.len() != 2 {
            return Err(Error::Repair(format!(
                "color {color} ({kind}) appears {} times",
                pos.len()
            )));
        }
        // index of the vertex shared by the two edges
        let shared = match (pos[0], pos[1]) {
            (i, j) if j == i + 1 => j,
            (0, j) if j == len - 1 => 0,
            (i, j) => {
                return Err(Error::Repair(format!(
                    "edges {i} and {j} of color {color} are not consecutive"
                )))
            }
        };
        let u = cur.vertices[(shared + len - 1) % len];
        let w = cur.vertices[(shared + 1) % len];
        if len <= 3 || g.color_of(Edge::new(u, w)) != Some(color) {
            return Err(Error::Repair(format!(
                "no third edge {u}-{w} of triangle {color} to splice in"
            )));
        }
        let mut vertices = cur.vertices.clone();
        vertices.remove(shared);
        cur = is_rainbow_cycle(g, &vertices)?;
        lengths.push(cur.length);
    }
    Ok((cur.canonical(), lengths))
}
