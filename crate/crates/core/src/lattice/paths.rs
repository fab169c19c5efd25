use super::{is_bounded_by, LatticePath, PairSequence, Step, WeightGrid};
use crate::error::{Error, Result};
use crate::graph::{Block, RootedWeightedGraph};
use crate::orientations::Orientation;

/// Deletes 0, then repeatedly deletes the lowest-index vertex with no arc
/// from a surviving vertex, writing E for A-vertices and N for B-vertices.
pub fn path_from_orientation(o: &Orientation<'_>) -> Result<LatticePath> {
    let g = o.graph();
    g.require_bipartition()?;
    if !o.sources().contains(0) || o.sources().len() != 1 {
        return Err(Error::NotInA);
    }
    let in_nbrs: Vec<_> = (0..g.vertex_count()).map(|v| o.in_neighbors(v)).collect();
    let mut alive = g.nonroot();
    let mut steps = Vec::with_capacity(g.n_nonroot());
    for step in 0..g.n_nonroot() {
        let v = alive.iter().find(|&v| (in_nbrs[v] & alive).is_empty()).ok_or(Error::PeelingStalled(step))?;
        alive.remove(v);
        steps.push(if g.block_of(v) == Some(Block::A) { Step::E } else { Step::N });
    }
    Ok(LatticePath(steps))
}

/// Orients every edge away from its endpoint visited first, visiting 0 and
/// then, for an E-step leaving `(i, j)`, vertex `i + 1` and for an N-step,
/// vertex `p + j + 1`.
pub fn orientation_from_path<'g>(
    g: &'g RootedWeightedGraph,
    grid: &WeightGrid,
    path: &LatticePath,
    pair: &PairSequence,
) -> Result<Orientation<'g>> {
    let bip = g.require_bipartition()?;
    if (bip.p, bip.q) != (grid.p(), grid.q()) {
        return Err(Error::ShapeMismatch(format!(
            "graph blocks ({}, {}) against grid ({}, {})",
            bip.p,
            bip.q,
            grid.p(),
            grid.q()
        )));
    }
    if !is_bounded_by(pair, path, grid)? {
        return Err(Error::PathDoesNotBound);
    }
    let mut rank = vec![0u32; g.vertex_count()];
    for (k, ((i, j), s)) in path.walk().enumerate() {
        let v = match s {
            Step::E => i + 1,
            Step::N => bip.p + j + 1,
        };
        rank[v] = k as u32 + 1;
    }
    Ok(Orientation::from_ranks(g, &rank))
}
