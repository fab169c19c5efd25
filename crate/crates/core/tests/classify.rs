mod common;

use std::collections::BTreeSet;

use common::{k321, weighted_example};
use parklab::classify::{
    block_sorted, check_pf_mpf_agreement, construct_grid, graph_from_affine, grid_for_shape, is_invariant,
    mpf_invariance, search_graphs_for_grids, sweep_classification, verify_equality, verify_equality_full, wedge,
    GridMaxima, SweepConfig, SweepReport,
};
use parklab::generate::{complete_graph, cycle_graph, random_invariant_graph, random_one_dim, shuffle_blocks};
use parklab::graph::{match_shapes, to_canonical_text, InvariantShape, OneDimFamily, Weight};
use parklab::lattice::AffineParams;
use parklab::parking::enumerate_mpf;
use parklab::{Error, GraphBuilder, Limits, ParkingVector, RootedWeightedGraph, WeightGrid};
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::SeedableRng;

fn bip(n: usize, p: usize, edges: &[(usize, usize, Weight)]) -> RootedWeightedGraph {
    GraphBuilder::new(n).edges(edges).bipartition(p, n - p).build().unwrap()
}

fn lowest(g: &RootedWeightedGraph) -> Option<InvariantShape> {
    match_shapes(g).unwrap().shapes.first().cloned()
}

/// Invariant, matched, and reproduced by its grid on both equality routes.
fn assert_classified(g: &RootedWeightedGraph) -> InvariantShape {
    assert!(is_invariant(g).unwrap().invariant, "{}", to_canonical_text(g));
    let c = construct_grid(g).unwrap();
    assert!(verify_equality(g, &c.grid).unwrap());
    if enumerate_mpf(g).iter().map(|b| b.iter().map(|&x| x as u64 + 1).product::<u64>()).sum::<u64>() < 200_000 {
        assert!(verify_equality_full(g, &c.grid, &Limits::default()).unwrap());
    }
    c.shape
}

fn chorded(a: Weight, b: Weight, c: Weight, chord: bool) -> RootedWeightedGraph {
    let mut e = vec![(0, 1, a), (0, 2, a), (1, 3, c), (3, 4, c), (4, 5, c), (5, 2, c)];
    if chord {
        e.push((1, 2, b));
    }
    bip(5, 2, &e)
}

#[test]
fn block_sorting() {
    let x = ParkingVector(vec![3, 1, 2, 5, 0]);
    assert_eq!(block_sorted(&x, 3), ParkingVector(vec![1, 2, 3, 0, 5]));
    assert_eq!(block_sorted(&x, 0), ParkingVector(vec![0, 1, 2, 3, 5]));
}

#[test]
fn weighted_example_with_a_two_vertex_block() {
    // Vertices 1 and 3 form A; relabel so A comes first.
    let g = weighted_example().relabel(&[0, 1, 3, 2], None).with_bipartition(2, 1).unwrap();
    let report = is_invariant(&g).unwrap();
    assert!(!report.invariant);
    let w = report.witness.unwrap();
    let mpf = enumerate_mpf(&g);
    assert!(mpf.contains(&w.element) && !mpf.contains(&w.image));
    assert_eq!(block_sorted(&w.element, 2), block_sorted(&w.image, 2));
    let perm: ParkingVector = w.permutation.iter().map(|&k| w.element[k]).collect();
    assert_eq!(perm, w.image);
    let agreement = check_pf_mpf_agreement(&g, &Limits::default()).unwrap();
    assert!(agreement.agrees() && !agreement.pf_invariant);
    assert!(matches!(is_invariant(&weighted_example()), Err(Error::BipartitionMissing)));
}

#[test]
fn invariance_of_small_sets() {
    let set: BTreeSet<_> = [vec![0, 1, 2], vec![1, 0, 2]].into_iter().map(ParkingVector).collect();
    assert!(mpf_invariance(&set, 2).is_none());
    let w = mpf_invariance(&set, 3).unwrap();
    assert!(!set.contains(&w.image));
}

#[test]
fn complete_tripartite_graph() {
    let g = k321();
    assert_eq!(lowest(&g), Some(InvariantShape::CompleteBands { a: 1, b: 0, c: 1, d: 0, e: 1 }));
    assert_classified(&g);
    let grid = construct_grid(&g).unwrap().grid;
    let bigger = grid.perturbed(0, 0, 1).unwrap();
    assert!(!verify_equality(&g, &bigger).unwrap());
    assert!(!verify_equality_full(&g, &bigger, &Limits::default()).unwrap());
    let (tested, found) = search_graphs_for_grids(&[grid], 1, 0);
    assert!(tested > 0);
    assert_eq!(found[0], vec![to_canonical_text(&g)]);
}

#[test]
fn chorded_cycle_and_its_chordless_version() {
    let g = chorded(1, 2, 1, true);
    assert_eq!(lowest(&g), Some(InvariantShape::ChordedCycle { a: 1, b: 2, c: 1 }));
    assert_classified(&g);
    let h = chorded(2, 1, 1, false);
    assert_eq!(lowest(&h), Some(InvariantShape::CyclePairA { a: 2, b: 1 }));
    assert_classified(&h);
}

#[test]
fn cycles_with_one_a_vertex() {
    let g = bip(3, 1, &[(0, 1, 2), (1, 2, 1), (2, 3, 1), (3, 0, 1)]);
    assert_eq!(lowest(&g), Some(InvariantShape::CycleSingleA { a: 2, b: 1 }));
    assert_classified(&g);
    let u = cycle_graph(4, 3).with_bipartition(2, 2).unwrap();
    assert_eq!(lowest(&u), Some(InvariantShape::UniformCycle { a: 3 }));
    assert_classified(&u);
}

#[test]
fn forest_with_a_complete_branch() {
    // An a-tree on A with a complete graph on B hung at vertex 3.
    let (a, c, d) = (1, 1, 2);
    let mut e = vec![(0, 1, a), (1, 2, a), (1, 3, a), (0, 4, a)];
    for x in 5..=8 {
        e.push((3, x, c));
        for y in x + 1..=8 {
            e.push((x, y, d));
        }
    }
    let g = bip(8, 4, &e);
    assert_eq!(
        lowest(&g),
        Some(InvariantShape::ForestWithHub { a, hub: 3, branch: OneDimFamily::Complete { a: c, b: d } })
    );
    assert_classified(&g);
    assert!(!verify_equality(&g, &construct_grid(&g).unwrap().grid.perturbed(2, 1, 1).unwrap()).unwrap());
}

#[test]
fn cycle_core_with_pendant_trees() {
    let (a, c) = (2, 1);
    let mut e: Vec<_> = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)].iter().map(|&(x, y)| (x, y, a)).collect();
    e.extend([(0, 5), (5, 6), (2, 7), (2, 8), (3, 9)].iter().map(|&(x, y)| (x, y, c)));
    let g = bip(9, 4, &e);
    match lowest(&g) {
        Some(InvariantShape::CoreWithPendantTrees { core, c: cc, hubs }) => {
            assert_eq!(core, OneDimFamily::Cycle { a });
            assert_eq!(cc, c);
            assert_eq!(hubs, [0, 2, 3].into_iter().collect());
        }
        other => panic!("unexpected match {other:?}"),
    }
    assert_classified(&g);
}

#[test]
fn forest_hub_with_trees_hanging_from_b() {
    // A = 1..=9, B = 10..=12; B and vertex 6 span a complete graph, and the
    // A-vertices 7, 8, 9 hang from B.
    let (a, b, c) = (1, 2, 1);
    let mut e: Vec<_> = [(0, 1), (0, 5), (5, 6), (1, 2), (2, 3), (1, 4), (10, 7), (12, 8), (8, 9)]
        .iter()
        .map(|&(x, y)| (x, y, a))
        .collect();
    e.extend([(6, 10, b), (6, 11, b), (6, 12, b), (10, 11, c), (11, 12, c), (10, 12, c)]);
    let g = bip(12, 9, &e);
    assert!(is_invariant(&g).unwrap().invariant);
    let shape = lowest(&g).expect("matched");
    assert_eq!(shape.label(), "forest-with-hub");
    assert!(verify_equality(&g, &construct_grid(&g).unwrap().grid).unwrap());
}

#[test]
fn block_trees() {
    let g = bip(4, 2, &[(0, 1, 2), (1, 2, 2), (0, 3, 1), (3, 4, 1)]);
    assert_eq!(lowest(&g), Some(InvariantShape::BlockTree { a: 2, b: 1 }));
    assert_classified(&g);
}

#[test]
fn wedges_of_one_dimensional_families() {
    let g1 = complete_graph(2, 2, 1);
    let g2 = cycle_graph(3, 1);
    let w = wedge(&g1, &g2);
    assert_eq!(w.bipartition().map(|b| (b.p, b.q)), Some((2, 3)));
    assert_eq!(w.total_weight(), g1.total_weight() + g2.total_weight());
    let f1 = OneDimFamily::Complete { a: 2, b: 1 };
    let f2 = OneDimFamily::Cycle { a: 1 };
    let grid = WeightGrid::from_vectors(&f1.vector(2), &f2.vector(3)).unwrap();
    assert!(verify_equality(&w, &grid).unwrap());
    assert!(verify_equality_full(&w, &grid, &Limits::default()).unwrap());
    assert!(!verify_equality(&w, &grid.transpose()).unwrap_or(false));
}

#[test]
fn affine_graphs() {
    let k = AffineParams { a: 1, b: 1, c: 1, cprime: 1, d: 1, e: 1 };
    let g = graph_from_affine(2, 2, &k).unwrap();
    assert_eq!(to_canonical_text(&g.without_bipartition()), to_canonical_text(&complete_graph(4, 1, 1)));
    assert!(verify_equality(&g, &WeightGrid::from_affine(2, 2, &k).unwrap()).unwrap());
    let skew = AffineParams { cprime: 2, ..k };
    assert!(matches!(graph_from_affine(2, 2, &skew), Err(Error::InvalidParameters(_))));
    let diagonal = AffineParams { a: 0, c: 0, cprime: 0, ..k };
    assert!(matches!(graph_from_affine(2, 2, &diagonal), Err(Error::InvalidParameters(_))));
    let wedge_like = AffineParams { c: 0, cprime: 0, ..k };
    let g = graph_from_affine(2, 1, &wedge_like).unwrap();
    assert!(verify_equality(&g, &WeightGrid::from_affine(2, 1, &wedge_like).unwrap()).unwrap());
}

#[test]
fn zero_b_block_reduces_to_vector_parking() {
    let g = complete_graph(3, 1, 1);
    assert!(verify_equality(&g, &WeightGrid::from_vectors(&[1, 2, 3], &[]).unwrap()).unwrap());
    assert!(!verify_equality(&g, &WeightGrid::from_vectors(&[1, 2, 4], &[]).unwrap()).unwrap());
    assert!(matches!(
        verify_equality(&g, &WeightGrid::from_vectors(&[1, 2], &[1]).unwrap()),
        Err(Error::ShapeMismatch(_))
    ));
}

#[test]
fn unclassified_graphs() {
    let g = weighted_example().relabel(&[0, 1, 3, 2], None).with_bipartition(2, 1).unwrap();
    assert!(matches!(construct_grid(&g), Err(Error::NotClassified)));
    let chord = grid_for_shape(&InvariantShape::ChordedCycle { a: 1, b: 1, c: 1 }, 3, 2);
    assert!(matches!(chord, Err(Error::InvalidParameters(_))));
}

#[test]
fn grid_maxima_compare_whole_sets() {
    let g = k321();
    let grid = construct_grid(&g).unwrap().grid;
    let maxima = GridMaxima::new(&grid);
    let mpf: Vec<_> = enumerate_mpf(&g).into_iter().collect();
    assert!(maxima.matches(&mpf));
    assert!(!maxima.matches(&mpf[1..]));
    assert_eq!(maxima.total, mpf.len() as u128);
}

#[test]
fn small_sweep_has_no_counterexamples() {
    let report = sweep_classification(&SweepConfig { max_n: 3, max_w: 1, jobs: 2 });
    assert!(report.counterexamples.is_empty(), "{:?}", report.counterexamples);
    assert!(report.invariant_count > 0 && report.invariant_count <= report.graphs_tested);
    assert_eq!(report.per_family_counts.values().sum::<u64>(), report.invariant_count);
    let again = sweep_classification(&SweepConfig { max_n: 3, max_w: 1, jobs: 1 });
    assert_eq!(report, SweepReport { budget: report.budget, ..again });
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn generated_invariant_graphs_reproduce_their_grid(kind in 0usize..9, seed in any::<u64>()) {
        let mut rng = StdRng::seed_from_u64(seed);
        let g = random_invariant_graph(&mut rng, 3, 3, 2, kind);
        prop_assert!(is_invariant(&g).unwrap().invariant);
        let c = construct_grid(&g).unwrap();
        prop_assert!(verify_equality(&g, &c.grid).unwrap());
    }

    #[test]
    fn shuffling_blocks_keeps_the_verdict(kind in 0usize..9, seed in any::<u64>()) {
        let mut rng = StdRng::seed_from_u64(seed);
        let g = random_invariant_graph(&mut rng, 3, 2, 2, kind);
        let h = shuffle_blocks(&mut rng, &g);
        prop_assert!(is_invariant(&h).unwrap().invariant);
        let grid = construct_grid(&g).unwrap().grid;
        prop_assert!(verify_equality(&h, &grid).unwrap());
    }

    #[test]
    fn wedges_match_their_vector_grids(n1 in 1usize..=3, n2 in 1usize..=3, seed in any::<u64>()) {
        let mut rng = StdRng::seed_from_u64(seed);
        let (g1, f1) = random_one_dim(&mut rng, n1, 2);
        let (g2, f2) = random_one_dim(&mut rng, n2, 2);
        let w = wedge(&g1, &g2);
        let grid = WeightGrid::from_vectors(&f1.vector(n1), &f2.vector(n2)).unwrap();
        prop_assert!(verify_equality(&w, &grid).unwrap());
        prop_assert!(verify_equality_full(&w, &grid, &Limits::default()).unwrap());
        prop_assert!(is_invariant(&w).unwrap().invariant);
    }

    #[test]
    fn pf_and_mpf_invariance_agree(seed in any::<u64>(), p in 0usize..=4) {
        let mut rng = StdRng::seed_from_u64(seed);
        let g = parklab::generate::random_connected_graph(&mut rng, 4, 9);
        let g = g.with_bipartition(p, 4 - p).unwrap();
        prop_assert!(check_pf_mpf_agreement(&g, &Limits::default()).unwrap().agrees());
    }
}
