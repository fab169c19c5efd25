use serde::Serialize;

use super::shapes::{as_block_tree, match_shapes, InvariantShape};
use super::{RootedWeightedGraph, Weight};

/// A graph family whose parking functions are vector parking functions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "family", rename_all = "kebab-case")]
pub enum OneDimFamily {
    Tree {
        a: Weight,
    },
    Cycle {
        a: Weight,
    },
    /// Root edges weigh `a`, all other pairs `b`. With one non-root vertex
    /// there are no other pairs and `b` is reported as 0.
    Complete {
        a: Weight,
        b: Weight,
    },
}

impl OneDimFamily {
    /// The vector `u` with `PF(G) = PF_u` for `len` non-root vertices.
    pub fn vector(self, len: usize) -> Vec<u32> {
        match self {
            OneDimFamily::Tree { a } => vec![a; len],
            OneDimFamily::Cycle { a } => {
                let mut u = vec![a; len];
                if let Some(last) = u.last_mut() {
                    *last = 2 * a;
                }
                u
            }
            OneDimFamily::Complete { a, b } => (0..len as u32).map(|i| a + i * b).collect(),
        }
    }
}

pub(crate) fn uniform_weight(g: &RootedWeightedGraph) -> Option<Weight> {
    let w = g.edges().first()?.weight;
    g.edges().iter().all(|e| e.weight == w).then_some(w)
}

pub(crate) fn is_tree(g: &RootedWeightedGraph) -> bool {
    g.edge_count() == g.n_nonroot() && g.is_connected()
}

pub(crate) fn is_cycle(g: &RootedWeightedGraph) -> bool {
    g.vertex_count() >= 3 && (0..g.vertex_count()).all(|v| g.neighbors(v).len() == 2) && g.is_connected()
}

pub(crate) fn as_complete(g: &RootedWeightedGraph) -> Option<(Weight, Weight)> {
    let n = g.n_nonroot();
    if n == 0 || g.edge_count() != n * (n + 1) / 2 {
        return None;
    }
    let a = g.weight(0, 1);
    if (1..=n).any(|v| g.weight(0, v) != a) {
        return None;
    }
    if n == 1 {
        return Some((a, 0));
    }
    let b = g.weight(1, 2);
    let inner_ok = (1..=n).all(|x| (x + 1..=n).all(|y| g.weight(x, y) == b));
    inner_ok.then_some((a, b))
}

/// Every one-dimensional family the graph belongs to, ignoring any
/// bipartition.
pub fn one_dim_families(g: &RootedWeightedGraph) -> Vec<OneDimFamily> {
    let mut out = Vec::new();
    if let Some(w) = uniform_weight(g) {
        if is_tree(g) {
            out.push(OneDimFamily::Tree { a: w });
        }
        if is_cycle(g) {
            out.push(OneDimFamily::Cycle { a: w });
        }
    }
    if let Some((a, b)) = as_complete(g) {
        out.push(OneDimFamily::Complete { a, b });
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "tag", rename_all = "kebab-case")]
pub enum FamilyTag {
    Path { a: Weight },
    Star { a: Weight },
    Tree { a: Weight },
    Cycle { a: Weight },
    Complete { a: Weight, b: Weight },
    BlockTree { a: Weight, b: Weight },
    Shape { shape: InvariantShape, swapped: bool },
    Unclassified,
}

fn structural_tags(g: &RootedWeightedGraph) -> Vec<FamilyTag> {
    let mut out = Vec::new();
    if let Some(a) = uniform_weight(g) {
        if is_tree(g) {
            if (0..g.vertex_count()).all(|v| g.neighbors(v).len() <= 2) {
                out.push(FamilyTag::Path { a });
            }
            if g.edges().iter().all(|e| e.u == 0) {
                out.push(FamilyTag::Star { a });
            }
            out.push(FamilyTag::Tree { a });
        }
        if is_cycle(g) {
            out.push(FamilyTag::Cycle { a });
        }
    }
    // A single edge is already a tree.
    if g.n_nonroot() >= 2 {
        if let Some((a, b)) = as_complete(g) {
            out.push(FamilyTag::Complete { a, b });
        }
    }
    out
}

/// All matching tags, most specific first. Bipartitioned graphs list the
/// invariant shapes before the plain structural families.
pub fn recognize_family(g: &RootedWeightedGraph) -> Vec<FamilyTag> {
    let mut out = Vec::new();
    if g.bipartition().is_some() {
        if let Ok(m) = match_shapes(g) {
            out.extend(m.shapes.into_iter().map(|shape| FamilyTag::Shape { shape, swapped: m.swapped }));
        }
        if let Some((a, b)) = as_block_tree(g) {
            out.push(FamilyTag::BlockTree { a, b });
        }
    }
    out.extend(structural_tags(g));
    if out.is_empty() {
        out.push(FamilyTag::Unclassified);
    }
    out
}
