use serde::Serialize;

use super::{Bipartition, GraphBuilder, RootedWeightedGraph, Vertex, VertexSet};
use crate::error::{Error, Result};

struct LowLink<'a> {
    g: &'a RootedWeightedGraph,
    order: Vec<usize>,
    low: Vec<usize>,
    clock: usize,
    cut: VertexSet,
    bridges: Vec<(Vertex, Vertex)>,
}

impl LowLink<'_> {
    fn visit(&mut self, v: Vertex, parent: Option<Vertex>) {
        self.clock += 1;
        self.order[v] = self.clock;
        self.low[v] = self.clock;
        let mut children = 0;
        for w in self.g.neighbors(v).iter() {
            if Some(w) == parent {
                continue;
            }
            if self.order[w] != 0 {
                self.low[v] = self.low[v].min(self.order[w]);
                continue;
            }
            children += 1;
            self.visit(w, Some(v));
            self.low[v] = self.low[v].min(self.low[w]);
            if parent.is_some() && self.low[w] >= self.order[v] {
                self.cut.insert(v);
            }
            if self.low[w] > self.order[v] {
                self.bridges.push((v.min(w), v.max(w)));
            }
        }
        if parent.is_none() && children > 1 {
            self.cut.insert(v);
        }
    }
}

fn low_link(g: &RootedWeightedGraph) -> LowLink<'_> {
    let size = g.vertex_count();
    let mut ll =
        LowLink { g, order: vec![0; size], low: vec![0; size], clock: 0, cut: VertexSet::EMPTY, bridges: Vec::new() };
    for v in 0..size {
        if ll.order[v] == 0 {
            ll.visit(v, None);
        }
    }
    ll.bridges.sort();
    ll
}

impl RootedWeightedGraph {
    /// Articulation points over all vertices, the root included.
    pub fn articulation_points(&self) -> VertexSet {
        low_link(self).cut
    }

    /// Non-root vertices whose removal disconnects the graph.
    pub fn cut_vertices(&self) -> VertexSet {
        self.articulation_points().without(0)
    }

    pub fn bridges(&self) -> Vec<(Vertex, Vertex)> {
        low_link(self).bridges
    }

    /// Vertices lying on some cycle.
    pub fn cycle_vertices(&self) -> VertexSet {
        let bridges = self.bridges();
        let mut s = VertexSet::EMPTY;
        for e in &self.edges {
            if bridges.binary_search(&(e.u, e.v)).is_err() {
                s.insert(e.u);
                s.insert(e.v);
            }
        }
        s
    }

    /// `G[S]` with `0 ∈ S`; the map sends new labels to old ones.
    pub fn induced_subgraph(&self, s: VertexSet) -> Result<(RootedWeightedGraph, Vec<Vertex>)> {
        if !s.contains(0) {
            return Err(Error::RootMissing);
        }
        Ok(self.rooted_subgraph(0, s))
    }

    /// `G[S]` re-rooted at `root ∈ S`; other members keep their relative
    /// order. Connectivity is not required.
    pub fn rooted_subgraph(&self, root: Vertex, s: VertexSet) -> (RootedWeightedGraph, Vec<Vertex>) {
        assert!(s.contains(root));
        let mut map = vec![root];
        map.extend(s.without(root).iter());
        let mut new_of = vec![usize::MAX; self.vertex_count()];
        for (new, &old) in map.iter().enumerate() {
            new_of[old] = new;
        }
        let edges: Vec<_> = self
            .edges
            .iter()
            .filter(|e| s.contains(e.u) && s.contains(e.v))
            .map(|e| (new_of[e.u], new_of[e.v], e.weight))
            .collect();
        let mut b = GraphBuilder::new(map.len() - 1).edges(&edges).require_connected(false);
        // Keep an induced bipartition when the relabeling preserves A-before-B.
        if self.bipartition.is_some() && root == 0 {
            let a = (s & self.block_a()).len();
            b.bipartition = Some(Bipartition { p: a, q: map.len() - 1 - a });
        }
        (b.build().expect("induced subgraph is valid"), map)
    }

    /// Contracts each block to a vertex, summing crossing weights. The block
    /// holding 0 becomes the root; the others follow by smallest member.
    /// Returns the quotient and, for each old vertex, its new label.
    pub fn quotient_graph(&self, blocks: &[VertexSet]) -> Result<(RootedWeightedGraph, Vec<Vertex>)> {
        let mut seen = VertexSet::EMPTY;
        for &b in blocks {
            if b.is_empty() || !(b & seen).is_empty() {
                return Err(Error::NotAPartition);
            }
            seen = seen | b;
        }
        if seen != self.vertices() {
            return Err(Error::NotAPartition);
        }
        let mut ordered: Vec<VertexSet> = blocks.to_vec();
        ordered.sort_by_key(|b| if b.contains(0) { 0 } else { b.first().unwrap() });
        let mut label = vec![0; self.vertex_count()];
        for (k, b) in ordered.iter().enumerate() {
            for v in b.iter() {
                label[v] = k;
            }
        }
        let m = ordered.len();
        let mut w = vec![0u32; m * m];
        for e in &self.edges {
            let (x, y) = (label[e.u], label[e.v]);
            if x != y {
                let (x, y) = (x.min(y), x.max(y));
                w[x * m + y] += e.weight;
            }
        }
        let mut edges = Vec::new();
        for x in 0..m {
            for y in x + 1..m {
                if w[x * m + y] > 0 {
                    edges.push((x, y, w[x * m + y]));
                }
            }
        }
        let g = GraphBuilder::new(m - 1).edges(&edges).require_connected(false).build()?;
        Ok((g, label))
    }

    /// `G / (S ∪ {0})` with every other vertex kept as a singleton.
    pub fn quotient_onto_root(&self, s: VertexSet) -> (RootedWeightedGraph, Vec<Vertex>) {
        let root = s.with(0);
        let mut blocks = vec![root];
        blocks.extend((self.vertices() - root).iter().map(VertexSet::single));
        self.quotient_graph(&blocks).expect("blocks form a partition")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum NodeKind {
    Root,
    A,
    B,
}

#[derive(Debug, Clone)]
pub struct ComponentGraph {
    pub graph: RootedWeightedGraph,
    pub kinds: Vec<NodeKind>,
    pub members: Vec<VertexSet>,
}

/// Quotient by the components of `G_A = G[A ∪ {0}]` and `G_B = G[B ∪ {0}]`,
/// the root kept alone. Node order: root, A-nodes, B-nodes, each by smallest
/// member.
pub fn component_graph(g: &RootedWeightedGraph) -> Result<ComponentGraph> {
    g.require_bipartition()?;
    let mut members = vec![VertexSet::single(0)];
    let mut kinds = vec![NodeKind::Root];
    for (block, kind) in [(g.block_a(), NodeKind::A), (g.block_b(), NodeKind::B)] {
        for c in g.components(block.with(0)) {
            let c = c.without(0);
            if !c.is_empty() {
                members.push(c);
                kinds.push(kind);
            }
        }
    }
    let mut order: Vec<usize> = (1..members.len()).collect();
    order.sort_by_key(|&k| (kinds[k] == NodeKind::B, members[k].first()));
    let (members, kinds): (Vec<_>, Vec<_>) = std::iter::once(0).chain(order).map(|k| (members[k], kinds[k])).unzip();
    let (quotient, label) = g.quotient_graph(&members)?;
    // quotient_graph orders by smallest member; restore the A-then-B order.
    let mut perm = vec![0; members.len()];
    for (k, m) in members.iter().enumerate() {
        perm[label[m.first().unwrap()]] = k;
    }
    let graph = quotient.relabel(&perm, None);
    Ok(ComponentGraph { graph, kinds, members })
}
