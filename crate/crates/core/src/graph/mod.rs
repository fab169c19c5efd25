//! Rooted edge-weighted graphs on vertices `0..=n` with root `0`.
//!
//! Parallel edges are folded into a single weighted edge. An optional
//! bipartition splits the non-root vertices into `A = 1..=p` and
//! `B = p+1..=p+q`.

mod family;
mod format;
mod set;
mod shapes;
mod structure;

pub use family::{one_dim_families, recognize_family, FamilyTag, OneDimFamily};
pub use format::{parse_graph, to_canonical_text};
pub use set::VertexSet;
pub use shapes::{as_block_tree, match_shapes, InvariantShape};
pub use structure::{component_graph, ComponentGraph, NodeKind};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Vertex = usize;
pub type Weight = u32;

/// Bitmask vertex sets cap the vertex count.
pub const MAX_VERTICES: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Bipartition {
    pub p: usize,
    pub q: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Block {
    Root,
    A,
    B,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Edge {
    pub u: Vertex,
    pub v: Vertex,
    pub weight: Weight,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RootedWeightedGraph {
    n: usize,
    weights: Vec<Weight>,
    adjacency: Vec<u64>,
    edges: Vec<Edge>,
    bipartition: Option<Bipartition>,
}

#[derive(Debug, Clone)]
pub struct GraphBuilder {
    n: usize,
    edges: Vec<(Vertex, Vertex, Weight)>,
    bipartition: Option<Bipartition>,
    require_connected: bool,
}

impl GraphBuilder {
    pub fn new(n: usize) -> Self {
        GraphBuilder { n, edges: Vec::new(), bipartition: None, require_connected: true }
    }

    pub fn edge(mut self, u: Vertex, v: Vertex, weight: Weight) -> Self {
        self.edges.push((u, v, weight));
        self
    }

    pub fn edges(mut self, edges: &[(Vertex, Vertex, Weight)]) -> Self {
        self.edges.extend_from_slice(edges);
        self
    }

    pub fn bipartition(mut self, p: usize, q: usize) -> Self {
        self.bipartition = Some(Bipartition { p, q });
        self
    }

    pub fn require_connected(mut self, yes: bool) -> Self {
        self.require_connected = yes;
        self
    }

    pub fn build(self) -> Result<RootedWeightedGraph> {
        let n = self.n;
        if n + 1 > MAX_VERTICES {
            return Err(Error::TooManyVertices(MAX_VERTICES));
        }
        let size = n + 1;
        let mut weights = vec![0; size * size];
        let mut adjacency = vec![0u64; size];
        let mut edges = Vec::with_capacity(self.edges.len());
        for &(a, b, w) in &self.edges {
            for x in [a, b] {
                if x > n {
                    return Err(Error::VertexOutOfRange { vertex: x, max: n });
                }
            }
            if a == b {
                return Err(Error::LoopEdge(a));
            }
            let (u, v) = if a < b { (a, b) } else { (b, a) };
            if w == 0 {
                return Err(Error::NonPositiveWeight(u, v));
            }
            if weights[u * size + v] != 0 {
                return Err(Error::DuplicateEdge(u, v));
            }
            weights[u * size + v] = w;
            weights[v * size + u] = w;
            adjacency[u] |= 1 << v;
            adjacency[v] |= 1 << u;
            edges.push(Edge { u, v, weight: w });
        }
        edges.sort();
        if let Some(Bipartition { p, q }) = self.bipartition {
            if p + q != n {
                return Err(Error::BadBipartition { p, q, n });
            }
        }
        let g = RootedWeightedGraph { n, weights, adjacency, edges, bipartition: self.bipartition };
        if self.require_connected && !g.is_connected() {
            return Err(Error::Disconnected);
        }
        Ok(g)
    }
}

/// Validated connected graph on `0..=n`.
pub fn build_graph(n: usize, edges: &[(Vertex, Vertex, Weight)]) -> Result<RootedWeightedGraph> {
    GraphBuilder::new(n).edges(edges).build()
}

impl RootedWeightedGraph {
    pub fn n_nonroot(&self) -> usize {
        self.n
    }

    pub fn vertex_count(&self) -> usize {
        self.n + 1
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::range(0, self.n)
    }

    pub fn nonroot(&self) -> VertexSet {
        VertexSet::range(1, self.n)
    }

    pub fn weight(&self, u: Vertex, v: Vertex) -> Weight {
        self.weights[u * (self.n + 1) + v]
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edge_index(&self, u: Vertex, v: Vertex) -> Option<usize> {
        let (u, v) = if u < v { (u, v) } else { (v, u) };
        self.edges.binary_search_by(|e| (e.u, e.v).cmp(&(u, v))).ok()
    }

    pub fn neighbors(&self, v: Vertex) -> VertexSet {
        VertexSet(self.adjacency[v])
    }

    /// Total weight W(G).
    pub fn total_weight(&self) -> u64 {
        self.edges.iter().map(|e| e.weight as u64).sum()
    }

    /// Weighted degree.
    pub fn degree(&self, v: Vertex) -> u64 {
        self.neighbors(v).iter().map(|w| self.weight(v, w) as u64).sum()
    }

    /// Weight from `v` into the set `s`.
    pub fn weight_into(&self, v: Vertex, s: VertexSet) -> u64 {
        (self.neighbors(v) & s).iter().map(|w| self.weight(v, w) as u64).sum()
    }

    /// Weight from `i` to vertices outside `u`, root included.
    pub fn d_u(&self, u: VertexSet, i: Vertex) -> Result<u64> {
        if !u.contains(i) {
            return Err(Error::VertexNotInU(i));
        }
        Ok(self.weight_into(i, self.vertices() - u))
    }

    pub fn bipartition(&self) -> Option<Bipartition> {
        self.bipartition
    }

    pub fn require_bipartition(&self) -> Result<Bipartition> {
        self.bipartition.ok_or(Error::BipartitionMissing)
    }

    pub fn block_a(&self) -> VertexSet {
        match self.bipartition {
            Some(b) => VertexSet::range(1, b.p),
            None => VertexSet::EMPTY,
        }
    }

    pub fn block_b(&self) -> VertexSet {
        match self.bipartition {
            Some(b) => VertexSet::range(b.p + 1, b.p + b.q),
            None => VertexSet::EMPTY,
        }
    }

    pub fn block_of(&self, v: Vertex) -> Option<Block> {
        let b = self.bipartition?;
        Some(if v == 0 {
            Block::Root
        } else if v <= b.p {
            Block::A
        } else {
            Block::B
        })
    }

    pub fn with_bipartition(&self, p: usize, q: usize) -> Result<RootedWeightedGraph> {
        if p + q != self.n {
            return Err(Error::BadBipartition { p, q, n: self.n });
        }
        let mut g = self.clone();
        g.bipartition = Some(Bipartition { p, q });
        Ok(g)
    }

    pub fn without_bipartition(&self) -> RootedWeightedGraph {
        let mut g = self.clone();
        g.bipartition = None;
        g
    }

    /// Relabels vertices by `perm[old] = new`; `perm[0]` must be 0.
    pub fn relabel(&self, perm: &[Vertex], bipartition: Option<Bipartition>) -> RootedWeightedGraph {
        assert_eq!(perm.len(), self.n + 1);
        assert_eq!(perm[0], 0);
        let edges: Vec<_> = self.edges.iter().map(|e| (perm[e.u], perm[e.v], e.weight)).collect();
        let mut b = GraphBuilder::new(self.n).edges(&edges).require_connected(false);
        b.bipartition = bipartition;
        b.build().expect("relabeling preserves validity")
    }

    /// Exchanges the roles of the two blocks: old B becomes `1..=q`, old A
    /// becomes `q+1..=q+p`, each keeping its internal order.
    pub fn swap_blocks(&self) -> Result<RootedWeightedGraph> {
        let Bipartition { p, q } = self.require_bipartition()?;
        let perm: Vec<Vertex> = (0..=self.n)
            .map(|v| match v {
                0 => 0,
                v if v <= p => q + v,
                v => v - p,
            })
            .collect();
        Ok(self.relabel(&perm, Some(Bipartition { p: q, q: p })))
    }

    /// Vertices reachable from `start` inside `within`.
    pub fn reach(&self, start: VertexSet, within: VertexSet) -> VertexSet {
        let mut seen = start & within;
        let mut frontier = seen;
        while !frontier.is_empty() {
            let mut next = VertexSet::EMPTY;
            for v in frontier.iter() {
                next = next | self.neighbors(v);
            }
            frontier = next & (within - seen);
            seen = seen | frontier;
        }
        seen
    }

    pub fn is_connected(&self) -> bool {
        self.reach(VertexSet::single(0), self.vertices()) == self.vertices()
    }

    /// Connected components of the subgraph induced by `within`, ordered by
    /// smallest member.
    pub fn components(&self, within: VertexSet) -> Vec<VertexSet> {
        let mut left = within;
        let mut out = Vec::new();
        while let Some(v) = left.first() {
            let c = self.reach(VertexSet::single(v), within);
            left = left - c;
            out.push(c);
        }
        out
    }

    /// Number of edges with both ends in `s`.
    pub fn edges_within(&self, s: VertexSet) -> usize {
        self.edges.iter().filter(|e| s.contains(e.u) && s.contains(e.v)).count()
    }
}
