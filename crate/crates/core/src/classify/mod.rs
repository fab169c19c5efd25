//! Block-permutation invariance of PF(G) and the correspondence between
//! invariant graphs and weight grids.

mod sweep;

pub use sweep::{search_graphs_for_grids, sweep_classification, Counterexample, SweepConfig, SweepReport};

use std::collections::{BTreeMap, BTreeSet, HashSet};

use serde::Serialize;

use crate::error::{Error, Limits, Result};
use crate::graph::{
    match_shapes, recognize_family, Bipartition, FamilyTag, GraphBuilder, InvariantShape, RootedWeightedGraph, Vertex,
    Weight,
};
use crate::lattice::{maximal_increasing_upf, orbit_size, AffineParams, PairSequence, WeightGrid};
use crate::orientations::maximal_vectors;
use crate::parking::{enumerate_mpf, enumerate_pf, ParkingVector};

/// Sorts each block of `x`, the first `p` entries forming block A.
pub fn block_sorted(x: &ParkingVector, p: usize) -> ParkingVector {
    let mut v = x.0.clone();
    v[..p].sort_unstable();
    v[p..].sort_unstable();
    ParkingVector(v)
}

pub(crate) fn block_orbit_size(x: &ParkingVector, p: usize) -> u128 {
    orbit_size(&x[..p]) * orbit_size(&x[p..])
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InvarianceWitness {
    pub element: ParkingVector,
    /// `image[k] = element[permutation[k]]`, moving entries only within
    /// their block.
    pub permutation: Vec<usize>,
    pub image: ParkingVector,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InvarianceReport {
    pub invariant: bool,
    pub witness: Option<InvarianceWitness>,
    pub family_matches: Vec<FamilyTag>,
}

/// Decides whether MPF(G) is closed under permuting each block, or returns
/// the first missing image.
pub fn mpf_invariance(mpf: &BTreeSet<ParkingVector>, p: usize) -> Option<InvarianceWitness> {
    let mut classes: BTreeMap<ParkingVector, Vec<&ParkingVector>> = BTreeMap::new();
    for x in mpf {
        classes.entry(block_sorted(x, p)).or_default().push(x);
    }
    for (canon, members) in &classes {
        if members.len() as u128 == block_orbit_size(canon, p) {
            continue;
        }
        let pair = PairSequence::split(canon, p);
        let image = crate::lattice::orbit(&pair)
            .into_iter()
            .map(|y| y.concat())
            .find(|y| !mpf.contains(y))
            .expect("a short orbit has a missing member");
        let element = members[0].clone();
        let permutation = matching_permutation(&element, &image, p);
        return Some(InvarianceWitness { element, permutation, image });
    }
    None
}

fn matching_permutation(x: &ParkingVector, y: &ParkingVector, p: usize) -> Vec<usize> {
    let mut used = vec![false; x.len()];
    (0..y.len())
        .map(|k| {
            let range = if k < p { 0..p } else { p..x.len() };
            let l = range.clone().find(|&l| !used[l] && x[l] == y[k]).expect("same block multiset");
            used[l] = true;
            l
        })
        .collect()
}

pub fn is_invariant(g: &RootedWeightedGraph) -> Result<InvarianceReport> {
    let bip = g.require_bipartition()?;
    let witness = mpf_invariance(&enumerate_mpf(g), bip.p);
    Ok(InvarianceReport { invariant: witness.is_none(), witness, family_matches: recognize_family(g) })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Agreement {
    pub pf_invariant: bool,
    pub mpf_invariant: bool,
}

impl Agreement {
    pub fn agrees(self) -> bool {
        self.pf_invariant == self.mpf_invariant
    }
}

/// Closure of a whole vector set under adjacent transpositions inside each
/// block.
pub fn set_is_block_invariant(set: &HashSet<ParkingVector>, p: usize) -> bool {
    set.iter().all(|x| {
        (0..x.len().saturating_sub(1)).filter(|&k| k + 1 != p).all(|k| {
            let mut y = x.clone();
            y.0.swap(k, k + 1);
            set.contains(&y)
        })
    })
}

/// Invariance of PF(G) tested directly on the full set, next to the
/// MPF-only test.
pub fn check_pf_mpf_agreement(g: &RootedWeightedGraph, limits: &Limits) -> Result<Agreement> {
    let bip = g.require_bipartition()?;
    let pf: HashSet<ParkingVector> = enumerate_pf(g, limits)?.into_iter().collect();
    let mpf_invariant = mpf_invariance(&enumerate_mpf(g), bip.p).is_none();
    Ok(Agreement { pf_invariant: set_is_block_invariant(&pf, bip.p), mpf_invariant })
}

pub use crate::graph::match_shapes as match_invariant_families;

/// Joins two rooted graphs at their roots; `g1` supplies block A.
pub fn wedge(g1: &RootedWeightedGraph, g2: &RootedWeightedGraph) -> RootedWeightedGraph {
    let p = g1.n_nonroot();
    let q = g2.n_nonroot();
    let mut edges: Vec<(Vertex, Vertex, Weight)> = g1.edges().iter().map(|e| (e.u, e.v, e.weight)).collect();
    let shift = |v: Vertex| if v == 0 { 0 } else { v + p };
    edges.extend(g2.edges().iter().map(|e| (shift(e.u), shift(e.v), e.weight)));
    GraphBuilder::new(p + q)
        .edges(&edges)
        .bipartition(p, q)
        .require_connected(false)
        .build()
        .expect("wedge of valid graphs is valid")
}

fn band_graph(p: usize, q: usize, bands: [i64; 5]) -> Result<RootedWeightedGraph> {
    let [a, b, c, d, e] = bands;
    let block = |v: usize| {
        if v == 0 {
            0
        } else if v <= p {
            1
        } else {
            2
        }
    };
    let mut edges = Vec::new();
    for x in 0..=p + q {
        for y in x + 1..=p + q {
            let w = match (block(x), block(y)) {
                (0, 1) => a,
                (1, 1) => b,
                (1, 2) => c,
                (2, 2) => d,
                (0, 2) => e,
                _ => unreachable!(),
            };
            if w > 0 {
                edges.push((x, y, w as Weight));
            }
        }
    }
    GraphBuilder::new(p + q).edges(&edges).bipartition(p, q).build()
}

/// The graph whose parking functions are PF²(U) for the affine grid with
/// the given parameters: a wedge of two complete graphs when `c = c′ = 0`,
/// a complete graph weighted by block when `c = c′ ≥ 1`.
pub fn graph_from_affine(p: usize, q: usize, k: &AffineParams) -> Result<RootedWeightedGraph> {
    let AffineParams { a, b, c, cprime, d, e } = *k;
    if [a, b, c, cprime, d, e].iter().any(|&x| x < 0) {
        return Err(Error::InvalidParameters("parameters must be non-negative".into()));
    }
    if c != cprime {
        return Err(Error::InvalidParameters(format!("no graph exists when c ({c}) differs from c' ({cprime})")));
    }
    if c == 0 && ((p > 0 && a == 0) || (q > 0 && e == 0)) {
        return Err(Error::InvalidParameters("a diagonal matrix needs a, e ≥ 1".into()));
    }
    if c > 0 && a == 0 && e == 0 {
        return Err(Error::InvalidParameters("a and e cannot both be 0".into()));
    }
    band_graph(p, q, [a, b, c, d, e]).map_err(|err| match err {
        Error::Disconnected => Error::InvalidParameters("parameters give a disconnected graph".into()),
        other => other,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConstructedGrid {
    pub shape: InvariantShape,
    /// The blocks were exchanged to match, and the grid transposed back.
    pub swapped: bool,
    pub grid: WeightGrid,
}

fn cycle_grid(p: usize, q: usize, a: u32, b: u32) -> Result<WeightGrid> {
    let mut u = vec![vec![a; q + 1]; p + 1];
    let mut v = vec![vec![b; q + 1]; p + 1];
    u[p - 1][q] = a + b;
    u[p][q] = a + b;
    v[p][q - 1] = 2 * b;
    v[p][q] = 2 * b;
    WeightGrid::new(p, q, u, v)
}

fn chorded_grid(p: usize, q: usize, a: u32, b: u32, c: u32) -> Result<WeightGrid> {
    if p != 2 {
        return Err(Error::InvalidParameters("a chorded cycle needs |A| = 2".into()));
    }
    let mut u = vec![vec![a; q + 1], vec![a + b; q + 1], vec![a + b; q + 1]];
    u[1][q] = a + b + c;
    u[2][q] = a + b + c;
    let mut v = vec![vec![c; q + 1]; 3];
    v[2][q - 1] = 2 * c;
    v[2][q] = 2 * c;
    WeightGrid::new(p, q, u, v)
}

/// The grid for a matched shape on a graph with blocks of sizes `p, q`.
pub fn grid_for_shape(shape: &InvariantShape, p: usize, q: usize) -> Result<WeightGrid> {
    use InvariantShape::*;
    match *shape {
        UniformCycle { a } => cycle_grid(p, q, a, a),
        CycleSingleA { a, b } | CyclePairA { a, b } => cycle_grid(p, q, a, b),
        ChordedCycle { a, b, c } => chorded_grid(p, q, a, b, c),
        CompleteBands { a, b, c, d, e } => {
            let k = AffineParams { a: a.into(), b: b.into(), c: c.into(), cprime: c.into(), d: d.into(), e: e.into() };
            WeightGrid::from_affine(p, q, &k)
        }
        CoreWithHub { core, branch, .. } => WeightGrid::from_vectors(&core.vector(p), &branch.vector(q)),
        CoreWithPendantTrees { core, c, .. } => WeightGrid::from_vectors(&core.vector(p), &vec![c; q]),
        ForestWithHub { a, branch, .. } => WeightGrid::from_vectors(&vec![a; p], &branch.vector(q)),
        BlockTree { a, b } => WeightGrid::from_vectors(&vec![a; p], &vec![b; q]),
    }
}

/// The weight grid prescribed for the lowest matching shape.
pub fn construct_grid(g: &RootedWeightedGraph) -> Result<ConstructedGrid> {
    let m = match_shapes(g)?;
    let shape = m.shapes.first().cloned().ok_or(Error::NotClassified)?;
    let Bipartition { p, q } = g.require_bipartition()?;
    let grid = if m.swapped { grid_for_shape(&shape, q, p)?.transpose() } else { grid_for_shape(&shape, p, q)? };
    Ok(ConstructedGrid { shape, swapped: m.swapped, grid })
}

/// Block-sorted maximal members of PF²(U) with their total orbit size.
#[derive(Debug, Clone)]
pub struct GridMaxima {
    pub p: usize,
    pub reps: BTreeSet<ParkingVector>,
    pub total: u128,
}

impl GridMaxima {
    pub fn new(grid: &WeightGrid) -> Self {
        let reps: BTreeSet<ParkingVector> = maximal_increasing_upf(grid).iter().map(PairSequence::concat).collect();
        let total = reps.iter().map(|r| block_orbit_size(r, grid.p())).sum();
        GridMaxima { p: grid.p(), reps, total }
    }

    /// Equality with a maximal set: same size and same block-sorted
    /// classes, which together force equal sets.
    pub fn matches(&self, mpf: &[ParkingVector]) -> bool {
        if mpf.len() as u128 != self.total {
            return false;
        }
        let canon: BTreeSet<ParkingVector> = mpf.iter().map(|x| block_sorted(x, self.p)).collect();
        canon == self.reps
    }
}

fn shapes_agree(g: &RootedWeightedGraph, grid: &WeightGrid) -> Result<()> {
    let (p, q) = g.bipartition().map_or((g.n_nonroot(), 0), |b| (b.p, b.q));
    if (p, q) != (grid.p(), grid.q()) {
        return Err(Error::ShapeMismatch(format!("graph blocks ({p}, {q}) against grid ({}, {})", grid.p(), grid.q())));
    }
    Ok(())
}

/// `PF(G) = PF²(U)`, decided on the maximal elements. A graph without a
/// bipartition is read as `A = {1..n}` against a grid with `q = 0`.
pub fn verify_equality(g: &RootedWeightedGraph, grid: &WeightGrid) -> Result<bool> {
    shapes_agree(g, grid)?;
    Ok(GridMaxima::new(grid).matches(&maximal_vectors(g)))
}

/// `PF(G) = PF²(U)` by materializing both sets.
pub fn verify_equality_full(g: &RootedWeightedGraph, grid: &WeightGrid, limits: &Limits) -> Result<bool> {
    shapes_agree(g, grid)?;
    let pf = enumerate_pf(g, limits)?;
    let upf: BTreeSet<ParkingVector> =
        crate::lattice::enumerate_upf(grid, limits)?.iter().map(PairSequence::concat).collect();
    Ok(pf == upf)
}
