//! Acyclic orientations with unique source 0 and their correspondence with
//! maximal parking functions.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{RootedWeightedGraph, Vertex, VertexSet, Weight};
use crate::parking::ParkingVector;

/// A head for every edge of the ambient graph, aligned with `graph.edges()`.
#[derive(Clone)]
pub struct Orientation<'g> {
    graph: &'g RootedWeightedGraph,
    heads: Vec<Vertex>,
}

impl<'g> Orientation<'g> {
    pub fn from_heads(graph: &'g RootedWeightedGraph, heads: Vec<Vertex>) -> Result<Self> {
        if heads.len() != graph.edge_count() || graph.edges().iter().zip(&heads).any(|(e, &h)| h != e.u && h != e.v) {
            return Err(Error::OrientationMismatch);
        }
        Ok(Orientation { graph, heads })
    }

    /// Orientation from `(tail, head)` arcs, one per edge.
    pub fn from_arcs(graph: &'g RootedWeightedGraph, arcs: &[(Vertex, Vertex)]) -> Result<Self> {
        let mut heads = vec![usize::MAX; graph.edge_count()];
        for &(t, h) in arcs {
            let k = graph.edge_index(t, h).ok_or(Error::OrientationMismatch)?;
            if heads[k] != usize::MAX {
                return Err(Error::OrientationMismatch);
            }
            heads[k] = h;
        }
        Self::from_heads(graph, heads)
    }

    /// Every edge points from the lower-ranked endpoint to the higher one.
    pub fn from_ranks(graph: &'g RootedWeightedGraph, rank: &[u32]) -> Self {
        let heads = graph.edges().iter().map(|e| if rank[e.u] < rank[e.v] { e.v } else { e.u }).collect();
        Orientation { graph, heads }
    }

    pub fn graph(&self) -> &'g RootedWeightedGraph {
        self.graph
    }

    pub fn heads(&self) -> &[Vertex] {
        &self.heads
    }

    /// `(tail, head, weight)` per edge.
    pub fn arcs(&self) -> impl Iterator<Item = (Vertex, Vertex, Weight)> + '_ {
        self.graph.edges().iter().zip(&self.heads).map(|(e, &h)| {
            let t = if h == e.u { e.v } else { e.u };
            (t, h, e.weight)
        })
    }

    pub fn indegree(&self, v: Vertex) -> u64 {
        self.arcs().filter(|&(_, h, _)| h == v).map(|(_, _, w)| w as u64).sum()
    }

    pub fn outdegree(&self, v: Vertex) -> u64 {
        self.arcs().filter(|&(t, _, _)| t == v).map(|(_, _, w)| w as u64).sum()
    }

    pub fn in_neighbors(&self, v: Vertex) -> VertexSet {
        self.arcs().filter(|&(_, h, _)| h == v).map(|(t, _, _)| t).collect()
    }

    /// Vertices with no incoming arc.
    pub fn sources(&self) -> VertexSet {
        let mut s = self.graph.vertices();
        for (_, h, _) in self.arcs() {
            s.remove(h);
        }
        s
    }

    pub fn sinks(&self) -> VertexSet {
        let mut s = self.graph.vertices();
        for (t, _, _) in self.arcs() {
            s.remove(t);
        }
        s
    }

    /// Kahn's algorithm.
    pub fn is_acyclic(&self) -> bool {
        let size = self.graph.vertex_count();
        let mut indeg = vec![0usize; size];
        let mut out: Vec<Vec<Vertex>> = vec![Vec::new(); size];
        for (t, h, _) in self.arcs() {
            indeg[h] += 1;
            out[t].push(h);
        }
        let mut ready: Vec<Vertex> = (0..size).filter(|&v| indeg[v] == 0).collect();
        let mut done = 0;
        while let Some(v) = ready.pop() {
            done += 1;
            for &w in &out[v] {
                indeg[w] -= 1;
                if indeg[w] == 0 {
                    ready.push(w);
                }
            }
        }
        done == size
    }

    /// Membership in A(G): acyclic with 0 as the only source.
    pub fn is_in_a(&self) -> bool {
        self.sources() == VertexSet::single(0) && self.is_acyclic()
    }

    /// `i->j` tokens in edge order.
    pub fn tokens(&self) -> Vec<String> {
        self.arcs().map(|(t, h, _)| format!("{t}->{h}")).collect()
    }
}

impl PartialEq for Orientation<'_> {
    fn eq(&self, other: &Self) -> bool {
        self.heads == other.heads
    }
}

impl Eq for Orientation<'_> {}

impl PartialOrd for Orientation<'_> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Orientation<'_> {
    fn cmp(&self, other: &Self) -> Ordering {
        self.heads.cmp(&other.heads)
    }
}

impl std::hash::Hash for Orientation<'_> {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.heads.hash(state);
    }
}

impl fmt::Debug for Orientation<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.tokens()).finish()
    }
}

/// Calls `visit` with a level per vertex for every member of A(G).
///
/// An orientation in A(G) is recovered from the layers obtained by removing
/// all current sources at once: each layer is independent, each member has a
/// neighbor in the previous layer, and arcs run from lower to higher layers.
/// Choosing the layers one at a time enumerates A(G) without repeats.
pub fn for_each_layering(g: &RootedWeightedGraph, mut visit: impl FnMut(&[u32])) {
    let mut level = vec![0u32; g.vertex_count()];
    let root = VertexSet::single(0);
    layer(g, root, root, 1, &mut level, &mut visit);
}

fn layer(
    g: &RootedWeightedGraph,
    placed: VertexSet,
    prev: VertexSet,
    depth: u32,
    level: &mut [u32],
    visit: &mut impl FnMut(&[u32]),
) {
    let remaining = g.vertices() - placed;
    if remaining.is_empty() {
        visit(level);
        return;
    }
    let mut touched = VertexSet::EMPTY;
    for v in prev.iter() {
        touched = touched | g.neighbors(v);
    }
    for t in (remaining & touched).subsets() {
        if t.iter().any(|v| !(g.neighbors(v) & t).is_empty()) {
            continue;
        }
        // Every later vertex must still be reachable through unplaced ones.
        if g.reach(t, remaining) != remaining {
            continue;
        }
        for v in t.iter() {
            level[v] = depth;
        }
        layer(g, placed | t, t, depth + 1, level, visit);
    }
}

fn mpf_of_levels(g: &RootedWeightedGraph, level: &[u32]) -> ParkingVector {
    (1..g.vertex_count())
        .map(|v| {
            let indeg: u32 = g.neighbors(v).iter().filter(|&w| level[w] < level[v]).map(|w| g.weight(v, w)).sum();
            indeg - 1
        })
        .collect()
}

/// A(G) in canonical order.
pub fn enumerate_orientations(g: &RootedWeightedGraph) -> Vec<Orientation<'_>> {
    let mut out = Vec::new();
    for_each_layering(g, |level| out.push(Orientation::from_ranks(g, level)));
    out.sort();
    out
}

pub fn count_orientations(g: &RootedWeightedGraph) -> usize {
    let mut count = 0;
    for_each_layering(g, |_| count += 1);
    count
}

/// MPF(G) images of A(G), unsorted.
pub(crate) fn maximal_vectors(g: &RootedWeightedGraph) -> Vec<ParkingVector> {
    let mut out = Vec::new();
    for_each_layering(g, |level| out.push(mpf_of_levels(g, level)));
    out
}

/// `(indeg(1) − 1, …, indeg(n) − 1)`.
pub fn orientation_to_mpf(o: &Orientation<'_>) -> Result<ParkingVector> {
    if !o.is_in_a() {
        return Err(Error::NotInA);
    }
    let n = o.graph.n_nonroot();
    let mut indeg = vec![0u64; n + 1];
    for (_, h, w) in o.arcs() {
        indeg[h] += w as u64;
    }
    Ok(indeg[1..].iter().map(|&d| (d - 1) as u32).collect())
}

/// Rebuilds the orientation with indegrees `b + 1` by repeatedly removing
/// the lowest-index vertex whose remaining degree equals its target.
pub fn mpf_to_orientation<'g>(g: &'g RootedWeightedGraph, b: &ParkingVector) -> Result<Orientation<'g>> {
    let n = g.n_nonroot();
    if b.len() != n {
        return Err(Error::LengthMismatch { expected: n, got: b.len() });
    }
    if b.sum() + n as u64 != g.total_weight() {
        return Err(Error::NotMaximal);
    }
    let mut alive = g.vertices();
    let mut heads = vec![usize::MAX; g.edge_count()];
    for step in 0..n {
        let sink = (alive.without(0))
            .iter()
            .find(|&v| g.weight_into(v, alive) == b[v - 1] as u64 + 1)
            .ok_or(Error::InconsistentIndegrees(step))?;
        alive.remove(sink);
        for w in (g.neighbors(sink) & alive).iter() {
            heads[g.edge_index(sink, w).unwrap()] = sink;
        }
    }
    Orientation::from_heads(g, heads)
}
