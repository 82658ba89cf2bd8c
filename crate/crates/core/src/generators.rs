//! Extremal constructions and seeded random mixed instances.

use std::collections::HashSet;

use rand::Rng as _;

use crate::error::{Error, Result};
use crate::graph::{ClassKind, ColoredGraph, Edge};
use crate::rng::{rng_from_seed, Rng};

/// Chain of `n/4` four-cycles at matching fraction exactly 1/2 whose rainbow
/// girth is `n/2`.
///
/// Vertex `v_{i,j}` (1-based `i ≤ n/4`, `j ≤ 4`) is `4(i-1) + (j-1)`. Gadget `i`
/// contributes the matching `{v_{i,1}v_{i,2}, v_{i,3}v_{i,4}}`, the singles
/// `v_{i,2}v_{i,3}` and `v_{i,4}v_{i,1}`, and the cross matching
/// `{v_{i,3}v_{i+1,2}, v_{i,4}v_{i+1,1}}` with `i+1` taken modulo `n/4`.
pub fn gen_half_matchings_gadget(n: usize) -> Result<ColoredGraph> {
    if n < 8 || !n.is_multiple_of(4) {
        return Err(Error::Generator(format!(
            "gadget needs n >= 8 divisible by 4, got {n}"
        )));
    }
    let q = n / 4;
    let v = |i: usize, j: usize| 4 * (i % q) + (j - 1);
    let mut classes = Vec::with_capacity(n);
    for i in 0..q {
        classes.push(vec![(v(i, 1), v(i, 2)), (v(i, 3), v(i, 4))]);
        classes.push(vec![(v(i, 2), v(i, 3))]);
        classes.push(vec![(v(i, 4), v(i, 1))]);
        classes.push(vec![(v(i, 3), v(i + 1, 2)), (v(i, 4), v(i + 1, 1))]);
    }
    ColoredGraph::new(n, classes)
}

/// The cycle `0-1-...-(n-1)-0` with every edge its own color.
pub fn gen_rainbow_ncycle(n: usize) -> Result<ColoredGraph> {
    if n < 3 {
        return Err(Error::Generator(format!("cycle needs n >= 3, got {n}")));
    }
    ColoredGraph::new(n, (0..n).map(|i| vec![(i, (i + 1) % n)]))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct InstanceSpec {
    pub n: usize,
    pub matchings: usize,
    pub triangles: usize,
    pub singles: usize,
    pub seed: u64,
}

impl InstanceSpec {
    pub fn classes(&self) -> usize {
        self.matchings + self.triangles + self.singles
    }

    pub fn edges(&self) -> usize {
        2 * self.matchings + 3 * self.triangles + self.singles
    }
}

struct Placer {
    n: usize,
    used: HashSet<Edge>,
    rng: Rng,
    budget: usize,
}

impl Placer {
    fn random_edge(&mut self) -> Edge {
        let a = self.rng.gen_range(0..self.n);
        let mut b = self.rng.gen_range(0..self.n - 1);
        if b >= a {
            b += 1;
        }
        Edge::new(a, b)
    }

    fn attempt(&mut self, kind: ClassKind) -> Option<Vec<Edge>> {
        match kind {
            ClassKind::Triangle => {
                let a = self.rng.gen_range(0..self.n);
                let b = self.rng.gen_range(0..self.n);
                let c = self.rng.gen_range(0..self.n);
                if a == b || b == c || a == c {
                    return None;
                }
                let es = vec![Edge::new(a, b), Edge::new(b, c), Edge::new(a, c)];
                es.iter().all(|e| !self.used.contains(e)).then_some(es)
            }
            ClassKind::Matching2 => {
                let e1 = self.random_edge();
                let e2 = self.random_edge();
                (!self.used.contains(&e1) && !self.used.contains(&e2) && !e1.shares_vertex(&e2))
                    .then(|| vec![e1, e2])
            }
            ClassKind::Single => {
                let e = self.random_edge();
                (!self.used.contains(&e)).then(|| vec![e])
            }
            ClassKind::Other => unreachable!("generator never places `other` classes"),
        }
    }

    fn place(&mut self, kind: ClassKind, count: usize, out: &mut Vec<Vec<Edge>>) -> Result<()> {
        let mut placed = 0;
        while placed < count {
            if self.budget == 0 {
                return Err(Error::GenerationFailed { kind, placed, requested: count });
            }
            self.budget -= 1;
            if let Some(es) = self.attempt(kind) {
                self.used.extend(es.iter().copied());
                out.push(es);
                placed += 1;
            }
        }
        Ok(())
    }
}

/// Random instance with the requested class counts, all classes pairwise disjoint.
///
/// Classes are placed by rejection sampling in the order triangles, matchings,
/// singles, and appear in the graph in that order. A triangle is a uniform
/// vertex triple whose three edges are all unused; matchings and singles draw
/// uniform unused vertex pairs. At most `1000 * classes` attempts are made in
/// total; running out reports the kind being placed.
pub fn gen_random_mixed(spec: &InstanceSpec) -> Result<ColoredGraph> {
    let n = spec.n;
    if n < 2 {
        return Err(Error::Generator(format!("need n >= 2, got {n}")));
    }
    if spec.triangles > 0 && n < 3 || spec.matchings > 0 && n < 4 {
        return Err(Error::Generator(format!("n={n} too small for the requested kinds")));
    }
    let budget_edges = n * (n - 1) / 2;
    if spec.edges() > budget_edges {
        return Err(Error::Generator(format!(
            "{} edges requested, K_{n} has {budget_edges}",
            spec.edges()
        )));
    }
    let mut placer = Placer {
        n,
        used: HashSet::with_capacity(spec.edges()),
        rng: rng_from_seed(spec.seed),
        budget: 1000 * spec.classes(),
    };
    let mut classes = Vec::with_capacity(spec.classes());
    placer.place(ClassKind::Triangle, spec.triangles, &mut classes)?;
    placer.place(ClassKind::Matching2, spec.matchings, &mut classes)?;
    placer.place(ClassKind::Single, spec.singles, &mut classes)?;
    ColoredGraph::from_edge_classes(n, &classes)
}
