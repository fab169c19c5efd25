mod common;

use std::collections::BTreeSet;

use common::{brute_force_mpf, labelled_trees, uniform, weighted_example};
use parklab::generate::{complete_graph, cycle_graph, random_connected_graph};
use parklab::orientations::{count_orientations, enumerate_orientations, mpf_to_orientation, orientation_to_mpf};
use parklab::parking::enumerate_mpf;
use parklab::{Error, Orientation, ParkingVector, RootedWeightedGraph, VertexSet};
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::SeedableRng;

#[test]
fn weighted_example_has_four_orientations() {
    let g = weighted_example();
    let all = enumerate_orientations(&g);
    assert_eq!(all.len(), 4);
    assert_eq!(count_orientations(&g), 4);
    assert!(all.iter().all(|o| o.is_in_a()));
    let images: BTreeSet<_> = all.iter().map(|o| orientation_to_mpf(o).unwrap()).collect();
    assert_eq!(images, enumerate_mpf(&g));
}

#[test]
fn orientation_from_arcs() {
    let g = weighted_example();
    let o = Orientation::from_arcs(&g, &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]).unwrap();
    assert!(o.is_in_a());
    assert_eq!(o.sources(), VertexSet::single(0));
    assert_eq!(o.sinks(), VertexSet::single(3));
    assert_eq!(o.indegree(3), 6);
    assert_eq!(o.outdegree(0), 4);
    assert_eq!(orientation_to_mpf(&o).unwrap(), ParkingVector(vec![1, 2, 5]));
    assert_eq!(o.tokens(), vec!["0->1", "0->2", "1->2", "1->3", "2->3"]);

    let reversed = Orientation::from_arcs(&g, &[(0, 1), (0, 2), (2, 1), (3, 1), (2, 3)]).unwrap();
    assert!(reversed.is_acyclic());
    assert!(reversed.is_in_a());

    let cyclic = Orientation::from_arcs(&g, &[(0, 1), (0, 2), (1, 2), (2, 3), (3, 1)]).unwrap();
    assert!(!cyclic.is_acyclic());
    assert!(matches!(orientation_to_mpf(&cyclic), Err(Error::NotInA)));

    let two_sources = Orientation::from_arcs(&g, &[(0, 1), (2, 0), (2, 1), (1, 3), (2, 3)]).unwrap();
    assert!(two_sources.is_acyclic() && !two_sources.is_in_a());

    assert!(matches!(Orientation::from_arcs(&g, &[(0, 1)]), Err(Error::OrientationMismatch)));
    assert!(matches!(
        Orientation::from_arcs(&g, &[(0, 1), (1, 0), (0, 2), (1, 2), (1, 3)]),
        Err(Error::OrientationMismatch)
    ));
    assert!(matches!(
        Orientation::from_arcs(&g, &[(0, 3), (0, 2), (1, 2), (1, 3), (2, 3)]),
        Err(Error::OrientationMismatch)
    ));
}

#[test]
fn inverse_map_rejects_non_maxima() {
    let g = weighted_example();
    assert!(matches!(mpf_to_orientation(&g, &ParkingVector(vec![0, 0, 0])), Err(Error::NotMaximal)));
    assert!(matches!(mpf_to_orientation(&g, &ParkingVector(vec![2, 4, 2])), Err(Error::InconsistentIndegrees(_))));
    assert!(matches!(mpf_to_orientation(&g, &ParkingVector(vec![1])), Err(Error::LengthMismatch { .. })));
}

#[test]
fn counts_for_standard_families() {
    for n in 1..=6 {
        assert_eq!(count_orientations(&complete_graph(n, 1, 1)), (1..=n).product::<usize>());
        assert_eq!(count_orientations(&cycle_graph(n.max(2), 2)), n.max(2));
    }
    for n in 1..=4 {
        for t in labelled_trees(n) {
            assert_eq!(count_orientations(&uniform(n, &t, 3)), 1);
        }
    }
    // Weights never change which orientations exist.
    let g = weighted_example();
    let unit = uniform(3, &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)], 1);
    assert_eq!(count_orientations(&g), count_orientations(&unit));
}

fn arb_graph() -> impl Strategy<Value = RootedWeightedGraph> {
    (1usize..=6, 0u64..10, any::<u64>()).prop_map(|(n, extra, seed)| {
        let mut rng = StdRng::seed_from_u64(seed);
        random_connected_graph(&mut rng, n, n as u64 + extra)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn layering_matches_brute_force(g in arb_graph()) {
        prop_assume!(g.edge_count() <= 14);
        let brute: BTreeSet<ParkingVector> = brute_force_mpf(&g).into_iter().map(ParkingVector).collect();
        let all = enumerate_orientations(&g);
        prop_assert_eq!(all.len(), brute_force_mpf(&g).len());
        let images: BTreeSet<_> = all.iter().map(|o| orientation_to_mpf(o).unwrap()).collect();
        prop_assert_eq!(images.len(), all.len());
        prop_assert_eq!(images, brute);
    }

    #[test]
    fn bijection_round_trips(g in arb_graph()) {
        for o in enumerate_orientations(&g) {
            let b = orientation_to_mpf(&o).unwrap();
            prop_assert_eq!(b.sum() + g.n_nonroot() as u64, g.total_weight());
            prop_assert_eq!(mpf_to_orientation(&g, &b).unwrap(), o);
        }
        for b in enumerate_mpf(&g) {
            let o = mpf_to_orientation(&g, &b).unwrap();
            prop_assert!(o.is_in_a());
            prop_assert_eq!(orientation_to_mpf(&o).unwrap(), b);
        }
    }

    #[test]
    fn orientations_are_distinct(g in arb_graph()) {
        let all = enumerate_orientations(&g);
        let distinct: BTreeSet<_> = all.iter().cloned().collect();
        prop_assert_eq!(distinct.len(), all.len());
        prop_assert_eq!(count_orientations(&g), all.len());
    }
}
