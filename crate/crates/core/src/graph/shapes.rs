//! Structural matchers for the bipartitioned graphs whose parking functions
//! are invariant under permuting each block.
//!
//! Matchers assume `p, q ≥ 1` and that some A-vertex touches the root;
//! [`match_shapes`] exchanges the blocks when a match needs it.

use serde::Serialize;

use super::family::{is_cycle, one_dim_families, uniform_weight};
use super::{Block, GraphBuilder, OneDimFamily, RootedWeightedGraph, Vertex, VertexSet, Weight};
use crate::error::Result;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "shape", rename_all = "kebab-case")]
pub enum InvariantShape {
    /// The whole graph is a cycle of uniform weight.
    UniformCycle { a: Weight },
    /// A cycle with `A = {1}`; root edge to 1 weighs `a`, the rest `b`.
    CycleSingleA { a: Weight, b: Weight },
    /// A cycle through `0, 1, 2` with `A = {1, 2}`; root edges weigh `a`,
    /// the rest `b`.
    CyclePairA { a: Weight, b: Weight },
    /// `A = {1, 2}`: a cycle with root edges `a`, the chord `{1,2}` of
    /// weight `b`, and every other edge `c`.
    ChordedCycle { a: Weight, b: Weight, c: Weight },
    /// Every pair weighs by block: root-A `a`, A-A `b`, A-B `c`, B-B `d`,
    /// root-B `e` (zero meaning absent).
    CompleteBands { a: Weight, b: Weight, c: Weight, d: Weight, e: Weight },
    /// `G[A ∪ {0}]` is a cycle or complete graph and B hangs off the single
    /// vertex `hub` as a tree, cycle or complete graph.
    CoreWithHub { core: OneDimFamily, hub: Vertex, branch: OneDimFamily },
    /// `G[A ∪ {0}]` is a cycle or complete graph; each component of `G[B]`
    /// is a tree joined by one edge to `A ∪ {0}`, at two or more hubs.
    CoreWithPendantTrees { core: OneDimFamily, c: Weight, hubs: VertexSet },
    /// `G[A ∪ {0}]` is a forest of weight `a`; B hangs off `hub` (in the
    /// root's tree) as a cycle or complete graph, and no cycle meets any
    /// other vertex of `A ∪ {0}`.
    ForestWithHub { a: Weight, hub: Vertex, branch: OneDimFamily },
    /// A tree whose edges into A weigh `a` and into B weigh `b`.
    BlockTree { a: Weight, b: Weight },
}

impl InvariantShape {
    pub fn ordinal(&self) -> usize {
        match self {
            InvariantShape::UniformCycle { .. } => 0,
            InvariantShape::CycleSingleA { .. } => 1,
            InvariantShape::CyclePairA { .. } => 2,
            InvariantShape::ChordedCycle { .. } => 3,
            InvariantShape::CompleteBands { .. } => 4,
            InvariantShape::CoreWithHub { .. } => 5,
            InvariantShape::CoreWithPendantTrees { .. } => 6,
            InvariantShape::ForestWithHub { .. } => 7,
            InvariantShape::BlockTree { .. } => 8,
        }
    }

    pub fn label(&self) -> &'static str {
        match self {
            InvariantShape::UniformCycle { .. } => "uniform-cycle",
            InvariantShape::CycleSingleA { .. } => "cycle-single-a",
            InvariantShape::CyclePairA { .. } => "cycle-pair-a",
            InvariantShape::ChordedCycle { .. } => "chorded-cycle",
            InvariantShape::CompleteBands { .. } => "complete-bands",
            InvariantShape::CoreWithHub { .. } => "core-with-hub",
            InvariantShape::CoreWithPendantTrees { .. } => "core-with-pendant-trees",
            InvariantShape::ForestWithHub { .. } => "forest-with-hub",
            InvariantShape::BlockTree { .. } => "block-tree",
        }
    }

    pub const LABELS: [&'static str; 9] = [
        "uniform-cycle",
        "cycle-single-a",
        "cycle-pair-a",
        "chorded-cycle",
        "complete-bands",
        "core-with-hub",
        "core-with-pendant-trees",
        "forest-with-hub",
        "block-tree",
    ];
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ShapeMatch {
    /// Blocks were exchanged before matching; vertex labels inside the
    /// shapes refer to the swapped graph.
    pub swapped: bool,
    /// Ordered by [`InvariantShape::ordinal`].
    pub shapes: Vec<InvariantShape>,
}

/// All shapes the graph matches. Graphs with an empty block match none.
///
/// The blocks are exchanged when only B touches the root, and also when A
/// does but nothing matches as given while B touches the root too.
pub fn match_shapes(g: &RootedWeightedGraph) -> Result<ShapeMatch> {
    let bip = g.require_bipartition()?;
    if bip.p == 0 || bip.q == 0 {
        return Ok(ShapeMatch { swapped: false, shapes: Vec::new() });
    }
    let a_touches = !(g.neighbors(0) & g.block_a()).is_empty();
    let b_touches = !(g.neighbors(0) & g.block_b()).is_empty();
    let direct = if a_touches { match_oriented(g) } else { Vec::new() };
    if direct.is_empty() && b_touches {
        let shapes = match_oriented(&g.swap_blocks()?);
        if !shapes.is_empty() || !a_touches {
            return Ok(ShapeMatch { swapped: true, shapes });
        }
    }
    Ok(ShapeMatch { swapped: false, shapes: direct })
}

fn match_oriented(g: &RootedWeightedGraph) -> Vec<InvariantShape> {
    let mut out = Vec::new();
    out.extend(cycle_shapes(g));
    out.extend(chorded_cycle(g));
    out.extend(complete_bands(g));
    out.extend(core_shapes(g));
    out.extend(forest_with_hub(g));
    if let Some((a, b)) = as_block_tree(g) {
        out.push(InvariantShape::BlockTree { a, b });
    }
    out
}

/// Weight shared by all edges other than the root edges to `roots`.
fn split_weights(g: &RootedWeightedGraph, roots: &[Vertex]) -> Option<(Weight, Weight)> {
    let a = g.weight(0, roots[0]);
    if a == 0 || roots.iter().any(|&v| g.weight(0, v) != a) {
        return None;
    }
    let mut rest = g.edges().iter().filter(|e| !(e.u == 0 && roots.contains(&e.v)));
    let b = rest.next()?.weight;
    rest.all(|e| e.weight == b).then_some((a, b))
}

fn cycle_shapes(g: &RootedWeightedGraph) -> Vec<InvariantShape> {
    let mut out = Vec::new();
    if !is_cycle(g) {
        return out;
    }
    if let Some(a) = uniform_weight(g) {
        out.push(InvariantShape::UniformCycle { a });
    }
    let p = g.block_a().len();
    let roots: Vec<Vertex> = (1..=p).collect();
    if p <= 2 {
        if let Some((a, b)) = split_weights(g, &roots) {
            if a != b {
                out.push(if p == 1 {
                    InvariantShape::CycleSingleA { a, b }
                } else {
                    InvariantShape::CyclePairA { a, b }
                });
            }
        }
    }
    out
}

fn chorded_cycle(g: &RootedWeightedGraph) -> Option<InvariantShape> {
    if g.block_a().len() != 2 || g.weight(1, 2) == 0 {
        return None;
    }
    let b = g.weight(1, 2);
    let edges: Vec<_> = g.edges().iter().filter(|e| (e.u, e.v) != (1, 2)).map(|e| (e.u, e.v, e.weight)).collect();
    let h = GraphBuilder::new(g.n_nonroot()).edges(&edges).build().ok()?;
    if !is_cycle(&h) {
        return None;
    }
    let (a, c) = split_weights(&h, &[1, 2])?;
    Some(InvariantShape::ChordedCycle { a, b, c })
}

fn complete_bands(g: &RootedWeightedGraph) -> Option<InvariantShape> {
    // Band order: root-A, A-A, A-B, B-B, root-B.
    let mut bands: [Option<Weight>; 5] = [None; 5];
    let size = g.vertex_count();
    for x in 0..size {
        for y in x + 1..size {
            let band = match (g.block_of(x)?, g.block_of(y)?) {
                (Block::Root, Block::A) => 0,
                (Block::A, Block::A) => 1,
                (Block::A, Block::B) => 2,
                (Block::B, Block::B) => 3,
                (Block::Root, Block::B) => 4,
                _ => unreachable!("vertices are ordered root, A, B"),
            };
            let w = g.weight(x, y);
            match bands[band] {
                None => bands[band] = Some(w),
                Some(prev) if prev != w => return None,
                _ => {}
            }
        }
    }
    let [a, b, c, d, e] = bands.map(|w| w.unwrap_or(0));
    (a > 0 && c > 0).then_some(InvariantShape::CompleteBands { a, b, c, d, e })
}

fn core_family(g: &RootedWeightedGraph) -> Option<OneDimFamily> {
    let (core, _) = g.rooted_subgraph(0, g.block_a().with(0));
    let fams = one_dim_families(&core);
    fams.iter()
        .copied()
        .find(|f| matches!(f, OneDimFamily::Cycle { .. }))
        .or_else(|| fams.iter().copied().find(|f| matches!(f, OneDimFamily::Complete { .. })))
}

/// Vertices of `A ∪ {0}` with a neighbor in B.
fn hubs(g: &RootedWeightedGraph) -> VertexSet {
    let b = g.block_b();
    g.block_a().with(0).iter().filter(|&v| !(g.neighbors(v) & b).is_empty()).collect()
}

fn branch_family(g: &RootedWeightedGraph, hub: Vertex, allow_tree: bool) -> Option<OneDimFamily> {
    let (h, _) = g.rooted_subgraph(hub, g.block_b().with(hub));
    one_dim_families(&h).into_iter().find(|f| allow_tree || !matches!(f, OneDimFamily::Tree { .. }))
}

fn core_shapes(g: &RootedWeightedGraph) -> Vec<InvariantShape> {
    let mut out = Vec::new();
    let Some(core) = core_family(g) else {
        return out;
    };
    let hubs = hubs(g);
    if hubs.len() == 1 {
        let hub = hubs.first().unwrap();
        if let Some(branch) = branch_family(g, hub, true) {
            out.push(InvariantShape::CoreWithHub { core, hub, branch });
        }
        return out;
    }
    let rest = g.block_a().with(0);
    let mut c = None;
    for comp in g.components(g.block_b()) {
        if g.edges_within(comp) != comp.len() - 1 {
            return out;
        }
        let attach: Vec<_> = g.edges().iter().filter(|e| comp.contains(e.v) && rest.contains(e.u)).collect();
        if attach.len() != 1 {
            return out;
        }
    }
    for e in g.edges() {
        if g.block_b().contains(e.v) {
            match c {
                None => c = Some(e.weight),
                Some(w) if w != e.weight => return out,
                _ => {}
            }
        }
    }
    out.push(InvariantShape::CoreWithPendantTrees { core, c: c.unwrap(), hubs });
    out
}

fn forest_with_hub(g: &RootedWeightedGraph) -> Vec<InvariantShape> {
    let mut out = Vec::new();
    let rest = g.block_a().with(0);
    let (ga, _) = g.rooted_subgraph(0, rest);
    let Some(a) = uniform_weight(&ga) else {
        return out;
    };
    if ga.edge_count() + ga.components(ga.vertices()).len() != ga.vertex_count() {
        return out;
    }
    let root_tree = g.reach(VertexSet::single(0), rest);
    let on_cycles = g.cycle_vertices();
    for hub in root_tree.iter() {
        if !(on_cycles & rest.without(hub)).is_empty() {
            continue;
        }
        if let Some(branch) = branch_family(g, hub, false) {
            out.push(InvariantShape::ForestWithHub { a, hub, branch });
        }
    }
    out
}

/// `(a, b)` when the graph is a tree whose edges into A weigh `a` and into
/// B weigh `b`. Needs both blocks non-empty.
pub fn as_block_tree(g: &RootedWeightedGraph) -> Option<(Weight, Weight)> {
    let bip = g.bipartition()?;
    if bip.p == 0 || bip.q == 0 || g.edge_count() != g.n_nonroot() || !g.is_connected() {
        return None;
    }
    let mut stack = vec![0];
    let mut seen = VertexSet::single(0);
    let (mut a, mut b) = (None, None);
    while let Some(v) = stack.pop() {
        for w in (g.neighbors(v) - seen).iter() {
            seen.insert(w);
            stack.push(w);
            let slot = if g.block_of(w) == Some(Block::A) { &mut a } else { &mut b };
            let wt = g.weight(v, w);
            match *slot {
                None => *slot = Some(wt),
                Some(prev) if prev != wt => return None,
                _ => {}
            }
        }
    }
    Some((a?, b?))
}
