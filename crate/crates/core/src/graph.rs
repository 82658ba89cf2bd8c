//! Colored-graph data model and rainbow certificates.

use std::collections::{HashMap, HashSet};
use std::fmt;

use crate::error::{Error, Result};

/// Index of a color class; equal to its 0-based position in the graph.
pub type ColorId = usize;

/// Undirected edge stored with the smaller endpoint first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge {
    u: usize,
    v: usize,
}

impl Edge {
    pub fn new(a: usize, b: usize) -> Self {
        if a <= b {
            Edge { u: a, v: b }
        } else {
            Edge { u: b, v: a }
        }
    }

    pub fn u(&self) -> usize {
        self.u
    }

    pub fn v(&self) -> usize {
        self.v
    }

    pub fn endpoints(&self) -> (usize, usize) {
        (self.u, self.v)
    }

    pub fn is_loop(&self) -> bool {
        self.u == self.v
    }

    pub fn touches(&self, x: usize) -> bool {
        self.u == x || self.v == x
    }

    pub fn shares_vertex(&self, other: &Edge) -> bool {
        self.touches(other.u) || self.touches(other.v)
    }

    /// The endpoint that is not `x`. `x` must be an endpoint.
    pub fn other(&self, x: usize) -> usize {
        if self.u == x {
            self.v
        } else {
            self.u
        }
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.u, self.v)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ClassKind {
    Single,
    Matching2,
    Triangle,
    Other,
}

impl ClassKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            ClassKind::Single => "single",
            ClassKind::Matching2 => "matching2",
            ClassKind::Triangle => "triangle",
            ClassKind::Other => "other",
        }
    }

    /// Edge count a class of this kind must have, if fixed.
    pub fn edge_count(&self) -> Option<usize> {
        match self {
            ClassKind::Single => Some(1),
            ClassKind::Matching2 => Some(2),
            ClassKind::Triangle => Some(3),
            ClassKind::Other => None,
        }
    }
}

impl fmt::Display for ClassKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for ClassKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "single" => Ok(ClassKind::Single),
            "matching2" => Ok(ClassKind::Matching2),
            "triangle" => Ok(ClassKind::Triangle),
            "other" => Ok(ClassKind::Other),
            _ => Err(format!("unknown class kind {s:?}")),
        }
    }
}

/// Classifies a nonempty edge set without duplicates.
pub fn classify_class(edges: &[Edge]) -> ClassKind {
    match edges {
        [_] => ClassKind::Single,
        [a, b] if !a.shares_vertex(b) => ClassKind::Matching2,
        [a, b, c] => {
            let vs: HashSet<usize> = [a, b, c]
                .iter()
                .flat_map(|e| [e.u, e.v])
                .collect();
            // three distinct edges on three vertices are exactly a triangle
            if vs.len() == 3 {
                ClassKind::Triangle
            } else {
                ClassKind::Other
            }
        }
        _ => ClassKind::Other,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColorClass {
    pub id: ColorId,
    /// Sorted canonical edges.
    pub edges: Vec<Edge>,
    pub kind: ClassKind,
}

/// A graph on vertices `0..n` together with an edge coloring by disjoint classes.
///
/// Immutable once built.
#[derive(Debug, Clone)]
pub struct ColoredGraph {
    n: usize,
    classes: Vec<ColorClass>,
    color_of: HashMap<Edge, ColorId>,
    adj: Vec<Vec<usize>>,
}

impl PartialEq for ColoredGraph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.classes == other.classes
    }
}

impl Eq for ColoredGraph {}

impl ColoredGraph {
    /// Validates and builds a colored graph. Class ids are positions in `classes`.
    pub fn new<I, C>(n: usize, classes: I) -> Result<Self>
    where
        I: IntoIterator<Item = C>,
        C: IntoIterator<Item = (usize, usize)>,
    {
        if n == 0 {
            return Err(Error::NoVertices);
        }
        let mut color_of = HashMap::new();
        let mut adj = vec![Vec::new(); n];
        let mut out = Vec::new();
        for (id, class) in classes.into_iter().enumerate() {
            let mut edges = Vec::new();
            for (a, b) in class {
                if a == b {
                    return Err(Error::SelfLoop { class: id, vertex: a });
                }
                if let Some(&x) = [a, b].iter().find(|&&x| x >= n) {
                    return Err(Error::VertexOutOfRange { class: id, vertex: x, n });
                }
                let e = Edge::new(a, b);
                match color_of.insert(e, id) {
                    None => {}
                    Some(other) if other == id => {
                        return Err(Error::DuplicateEdge { class: id, edge: e })
                    }
                    Some(other) => return Err(Error::ClassOverlap { class: id, other, edge: e }),
                }
                adj[a].push(b);
                adj[b].push(a);
                edges.push(e);
            }
            if edges.is_empty() {
                return Err(Error::EmptyClass { class: id });
            }
            edges.sort_unstable();
            let kind = classify_class(&edges);
            out.push(ColorClass { id, edges, kind });
        }
        for nb in &mut adj {
            nb.sort_unstable();
        }
        Ok(ColoredGraph { n, classes: out, color_of, adj })
    }

    /// Builds from already-canonical `Edge` lists.
    pub fn from_edge_classes(n: usize, classes: &[Vec<Edge>]) -> Result<Self> {
        Self::new(n, classes.iter().map(|c| c.iter().map(Edge::endpoints)))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of color classes.
    pub fn m(&self) -> usize {
        self.classes.len()
    }

    pub fn classes(&self) -> &[ColorClass] {
        &self.classes
    }

    pub fn class(&self, id: ColorId) -> &ColorClass {
        &self.classes[id]
    }

    pub fn edge_count(&self) -> usize {
        self.color_of.len()
    }

    pub fn color_of(&self, e: Edge) -> Option<ColorId> {
        self.color_of.get(&e).copied()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a != b && self.color_of.contains_key(&Edge::new(a, b))
    }

    /// Sorted neighbor list.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn adjacency(&self) -> &[Vec<usize>] {
        &self.adj
    }

    /// All edges with their colors, in class order.
    pub fn colored_edges(&self) -> impl Iterator<Item = (Edge, ColorId)> + '_ {
        self.classes
            .iter()
            .flat_map(|c| c.edges.iter().map(move |&e| (e, c.id)))
    }

    pub fn count_kind(&self, kind: ClassKind) -> usize {
        self.classes.iter().filter(|c| c.kind == kind).count()
    }

    /// Fails with [`Error::WrongKind`] on the first class whose kind is not allowed.
    pub fn require_kinds(&self, allowed: &[ClassKind]) -> Result<()> {
        match self.classes.iter().find(|c| !allowed.contains(&c.kind)) {
            None => Ok(()),
            Some(c) => Err(Error::WrongKind {
                class: c.id,
                found: c.kind,
                expected: allowed
                    .iter()
                    .map(ClassKind::as_str)
                    .collect::<Vec<_>>()
                    .join("/"),
            }),
        }
    }
}

/// A cycle with its edge-color certificate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleResult {
    /// Cyclic vertex sequence; the closing edge joins the last vertex to the first.
    pub vertices: Vec<usize>,
    /// `edges[i]` joins `vertices[i]` and `vertices[i + 1]` (cyclically).
    pub edges: Vec<(Edge, ColorId)>,
    pub length: usize,
    pub rainbow: bool,
}

impl CycleResult {
    /// Resolves consecutive pairs through `color` and builds the certificate.
    pub(crate) fn resolve<F>(vertices: Vec<usize>, mut color: F) -> Result<Self>
    where
        F: FnMut(Edge) -> Option<ColorId>,
    {
        let len = vertices.len();
        if len < 3 {
            return Err(Error::CycleTooShort(len));
        }
        let mut seen = HashSet::with_capacity(len);
        for &v in &vertices {
            if !seen.insert(v) {
                return Err(Error::RepeatedVertex(v));
            }
        }
        let mut edges = Vec::with_capacity(len);
        for i in 0..len {
            let e = Edge::new(vertices[i], vertices[(i + 1) % len]);
            let c = color(e).ok_or(Error::MissingEdge(e))?;
            edges.push((e, c));
        }
        let mut colors = HashSet::with_capacity(len);
        let rainbow = edges.iter().all(|&(_, c)| colors.insert(c));
        Ok(CycleResult { vertices, edges, length: len, rainbow })
    }

    /// Rotation starting at the minimum vertex, oriented toward its smaller neighbor.
    pub fn canonical(&self) -> CycleResult {
        let len = self.vertices.len();
        let start = (0..len).min_by_key(|&i| self.vertices[i]).unwrap_or(0);
        let next = self.vertices[(start + 1) % len];
        let prev = self.vertices[(start + len - 1) % len];
        let order: Vec<usize> = if next <= prev {
            (0..len).map(|k| (start + k) % len).collect()
        } else {
            (0..len).map(|k| (start + len - k) % len).collect()
        };
        let vertices: Vec<usize> = order.iter().map(|&i| self.vertices[i]).collect();
        let colors: HashMap<Edge, ColorId> = self.edges.iter().copied().collect();
        let edges = (0..len)
            .map(|i| {
                let e = Edge::new(vertices[i], vertices[(i + 1) % len]);
                (e, colors[&e])
            })
            .collect();
        CycleResult { vertices, edges, length: len, rainbow: self.rainbow }
    }

    pub fn colors(&self) -> impl Iterator<Item = ColorId> + '_ {
        self.edges.iter().map(|&(_, c)| c)
    }
}

/// Checks a cyclic vertex sequence against `g` and reports whether it is rainbow.
pub fn is_rainbow_cycle(g: &ColoredGraph, vertices: &[usize]) -> Result<CycleResult> {
    CycleResult::resolve(vertices.to_vec(), |e| g.color_of(e))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(a: usize, b: usize) -> Edge {
        Edge::new(a, b)
    }

    #[test]
    fn builds_triangle_and_matching() {
        let g = ColoredGraph::new(3, [vec![(0, 1), (1, 2), (2, 0)]]).unwrap();
        assert_eq!(g.m(), 1);
        assert_eq!(g.class(0).kind, ClassKind::Triangle);

        let g = ColoredGraph::new(4, [vec![(0, 1), (2, 3)]]).unwrap();
        assert_eq!(g.class(0).kind, ClassKind::Matching2);
        assert_eq!(g.edge_count(), 2);
    }

    #[test]
    fn build_errors_name_the_class() {
        let err = ColoredGraph::new(3, [vec![(0, 1)], vec![(1, 0)]]).unwrap_err();
        assert!(matches!(err, Error::ClassOverlap { class: 1, other: 0, .. }), "{err}");

        let err = ColoredGraph::new(3, [vec![(0, 1)], vec![(2, 3)]]).unwrap_err();
        assert!(matches!(err, Error::VertexOutOfRange { class: 1, vertex: 3, n: 3 }));

        let err = ColoredGraph::new(3, [vec![(1, 1)]]).unwrap_err();
        assert!(matches!(err, Error::SelfLoop { class: 0, vertex: 1 }));

        let err = ColoredGraph::new(3, [vec![(0, 1)], vec![]]).unwrap_err();
        assert!(matches!(err, Error::EmptyClass { class: 1 }));

        let err = ColoredGraph::new(3, [vec![(0, 1), (1, 0)]]).unwrap_err();
        assert!(matches!(err, Error::DuplicateEdge { class: 0, .. }));

        assert!(matches!(
            ColoredGraph::new(0, Vec::<Vec<(usize, usize)>>::new()),
            Err(Error::NoVertices)
        ));
    }

    #[test]
    fn classify_examples() {
        assert_eq!(classify_class(&[e(0, 1)]), ClassKind::Single);
        assert_eq!(classify_class(&[e(0, 1), e(0, 2)]), ClassKind::Other);
        assert_eq!(classify_class(&[e(0, 1), e(1, 2), e(0, 2)]), ClassKind::Triangle);
        assert_eq!(classify_class(&[e(0, 1), e(1, 2), e(2, 3)]), ClassKind::Other);
        assert_eq!(classify_class(&[e(0, 1), e(2, 3), e(4, 5)]), ClassKind::Other);
        assert_eq!(classify_class(&[e(0, 1), e(0, 2), e(0, 3), e(0, 4)]), ClassKind::Other);
    }

    #[test]
    fn rainbow_cycle_checks() {
        let tri = ColoredGraph::new(3, [vec![(0, 1), (1, 2), (2, 0)]]).unwrap();
        let c = is_rainbow_cycle(&tri, &[0, 1, 2]).unwrap();
        assert!(!c.rainbow);
        assert_eq!(c.length, 3);

        let singles = ColoredGraph::new(3, [vec![(0, 1)], vec![(1, 2)], vec![(2, 0)]]).unwrap();
        assert!(is_rainbow_cycle(&singles, &[0, 1, 2]).unwrap().rainbow);

        let path = ColoredGraph::new(3, [vec![(0, 1)], vec![(1, 2)]]).unwrap();
        let err = is_rainbow_cycle(&path, &[0, 1, 2]).unwrap_err();
        assert!(matches!(err, Error::MissingEdge(x) if x == e(0, 2)));

        assert!(matches!(
            is_rainbow_cycle(&singles, &[0, 1, 0]),
            Err(Error::RepeatedVertex(0))
        ));
        assert!(matches!(is_rainbow_cycle(&singles, &[0, 1]), Err(Error::CycleTooShort(2))));
    }

    #[test]
    fn canonical_rotation() {
        let g = ColoredGraph::new(5, (0..5).map(|i| vec![(i, (i + 1) % 5)])).unwrap();
        let c = is_rainbow_cycle(&g, &[3, 2, 1, 0, 4]).unwrap().canonical();
        assert_eq!(c.vertices, vec![0, 1, 2, 3, 4]);
        assert_eq!(c.edges[0], (e(0, 1), 0));
        assert_eq!(c.edges[4], (e(0, 4), 4));
    }
}
