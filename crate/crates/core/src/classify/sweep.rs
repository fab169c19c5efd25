use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;
use serde::Serialize;

use super::{block_orbit_size, block_sorted, construct_grid, GridMaxima};
use crate::generate::GraphSpace;
use crate::graph::{match_shapes, to_canonical_text, InvariantShape, RootedWeightedGraph, Weight};
use crate::lattice::WeightGrid;
use crate::orientations::maximal_vectors;
use crate::parking::ParkingVector;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SweepConfig {
    /// Largest `p + q`.
    pub max_n: usize,
    pub max_w: Weight,
    /// Worker threads; 0 uses the rayon default.
    pub jobs: usize,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig { max_n: 4, max_w: 2, jobs: 0 }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Counterexample {
    /// `unmatched`, `no-grid`, or `grid-mismatch`.
    pub kind: String,
    pub graph: String,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepReport {
    pub budget: SweepConfig,
    pub graphs_tested: u64,
    pub invariant_count: u64,
    /// Lowest matching shape of each invariant graph.
    pub per_family_counts: BTreeMap<String, u64>,
    /// Every matching shape of each invariant graph.
    pub all_match_counts: BTreeMap<String, u64>,
    /// Graphs matching some shape although PF(G) is not invariant.
    pub matched_not_invariant: u64,
    pub counterexamples: Vec<Counterexample>,
}

pub(crate) fn mpf_is_invariant(mpf: &[ParkingVector], p: usize) -> bool {
    let mut classes: BTreeMap<ParkingVector, u128> = BTreeMap::new();
    for x in mpf {
        *classes.entry(block_sorted(x, p)).or_default() += 1;
    }
    classes.iter().all(|(canon, &count)| count == block_orbit_size(canon, p))
}

#[derive(Default)]
struct Tally {
    tested: u64,
    invariant: u64,
    lowest: BTreeMap<String, u64>,
    all: BTreeMap<String, u64>,
    matched_not_invariant: u64,
    counterexamples: Vec<Counterexample>,
}

impl Tally {
    fn merge(mut self, other: Tally) -> Tally {
        self.tested += other.tested;
        self.invariant += other.invariant;
        for (k, v) in other.lowest {
            *self.lowest.entry(k).or_default() += v;
        }
        for (k, v) in other.all {
            *self.all.entry(k).or_default() += v;
        }
        self.matched_not_invariant += other.matched_not_invariant;
        self.counterexamples.extend(other.counterexamples);
        self
    }

    fn record(&mut self, g: &RootedWeightedGraph) {
        let p = g.bipartition().unwrap().p;
        self.tested += 1;
        let mpf = maximal_vectors(g);
        let shapes = match_shapes(g).expect("sweep graphs carry a bipartition");
        if !mpf_is_invariant(&mpf, p) {
            if !shapes.shapes.is_empty() {
                self.matched_not_invariant += 1;
            }
            return;
        }
        self.invariant += 1;
        let text = || to_canonical_text(g).trim_end().replace('\n', "; ");
        let Some(lowest) = shapes.shapes.first() else {
            self.counterexamples.push(Counterexample {
                kind: "unmatched".into(),
                graph: text(),
                detail: String::new(),
            });
            return;
        };
        *self.lowest.entry(lowest.label().into()).or_default() += 1;
        for s in &shapes.shapes {
            *self.all.entry(s.label().into()).or_default() += 1;
        }
        match construct_grid(g) {
            Ok(c) => {
                if !GridMaxima::new(&c.grid).matches(&mpf) {
                    self.counterexamples.push(Counterexample {
                        kind: "grid-mismatch".into(),
                        graph: text(),
                        detail: describe(&c.shape),
                    });
                }
            }
            Err(e) => self.counterexamples.push(Counterexample {
                kind: "no-grid".into(),
                graph: text(),
                detail: format!("{}: {e}", describe(lowest)),
            }),
        }
    }
}

fn describe(shape: &InvariantShape) -> String {
    serde_json::to_string(shape).unwrap_or_else(|_| shape.label().to_string())
}

fn pool(jobs: usize) -> rayon::ThreadPool {
    rayon::ThreadPoolBuilder::new().num_threads(jobs).build().expect("thread pool")
}

/// Every connected bipartitioned graph with `2 ≤ p + q ≤ max_n`, both blocks
/// non-empty and weights `≤ max_w`, one per block-relabeling class: checks
/// that each invariant graph matches a shape and that the grid built for it
/// reproduces PF(G).
pub fn sweep_classification(config: &SweepConfig) -> SweepReport {
    let spaces: Vec<GraphSpace> = (2..=config.max_n)
        .flat_map(|n| (1..n).map(move |p| (p, n - p)))
        .map(|(p, q)| GraphSpace::new(p, q, config.max_w))
        .collect();
    let tally = pool(config.jobs).install(|| {
        spaces
            .iter()
            .map(|space| {
                (0..space.size())
                    .into_par_iter()
                    .fold(Tally::default, |mut t, index| {
                        if let Some(g) = space.canonical_graph(index) {
                            t.record(&g);
                        }
                        t
                    })
                    .reduce(Tally::default, Tally::merge)
            })
            .fold(Tally::default(), Tally::merge)
    });
    let mut counterexamples = tally.counterexamples;
    counterexamples.sort();
    SweepReport {
        budget: *config,
        graphs_tested: tally.tested,
        invariant_count: tally.invariant,
        per_family_counts: tally.lowest,
        all_match_counts: tally.all,
        matched_not_invariant: tally.matched_not_invariant,
        counterexamples,
    }
}

/// For each grid, the graphs with matching block sizes and weights
/// `≤ max_w` (one per relabeling class) whose parking functions equal
/// PF²(U), plus the number of graphs examined.
pub fn search_graphs_for_grids(grids: &[WeightGrid], max_w: Weight, jobs: usize) -> (u64, Vec<Vec<String>>) {
    let mut found = vec![Vec::new(); grids.len()];
    let mut tested = 0;
    let shapes: BTreeSet<(usize, usize)> = grids.iter().map(|g| (g.p(), g.q())).collect();
    for (p, q) in shapes {
        let space = GraphSpace::new(p, q, max_w);
        let targets: Vec<(usize, GridMaxima)> = grids
            .iter()
            .enumerate()
            .filter(|(_, g)| (g.p(), g.q()) == (p, q))
            .map(|(k, g)| (k, GridMaxima::new(g)))
            .collect();
        let (count, hits) = pool(jobs).install(|| {
            (0..space.size())
                .into_par_iter()
                .filter_map(|index| space.canonical_graph(index))
                .map(|g| {
                    let mpf = maximal_vectors(&g);
                    let hits: Vec<(usize, String)> = targets
                        .iter()
                        .filter(|(_, t)| t.matches(&mpf))
                        .map(|(k, _)| (*k, to_canonical_text(&g)))
                        .collect();
                    (1u64, hits)
                })
                .reduce(
                    || (0, Vec::new()),
                    |mut x, y| {
                        x.0 += y.0;
                        x.1.extend(y.1);
                        x
                    },
                )
        });
        tested += count;
        for (k, text) in hits {
            found[k].push(text);
        }
    }
    for f in &mut found {
        f.sort();
    }
    (tested, found)
}
