mod common;

use std::collections::BTreeSet;

use common::{box_vectors, cars_all_park, labelled_trees, subset_condition, uniform, weighted_example};
use parklab::generate::{complete_graph, cycle_graph, path_graph, random_connected_graph, star_graph};
use parklab::parking::{
    burn, down_set, enumerate_mpf, enumerate_pf, is_classical_pf, is_g_pf, is_g_pf_by_subsets, is_maximal,
    is_vector_pf, order_statistics,
};
use parklab::{Error, Limits, ParkingVector, RootedWeightedGraph, VertexSet};
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::SeedableRng;

fn pv(x: &[u32]) -> ParkingVector {
    ParkingVector(x.to_vec())
}

#[test]
fn order_statistics_sorts() {
    assert_eq!(order_statistics(&pv(&[3, 0, 2, 0])), pv(&[0, 0, 2, 3]));
    assert_eq!(pv(&[]).order_statistics(), pv(&[]));
}

#[test]
fn classical_parking_functions() {
    assert!(is_classical_pf(&pv(&[0, 0, 1])));
    assert!(is_classical_pf(&pv(&[2, 0, 1])));
    assert!(!is_classical_pf(&pv(&[1, 1, 1])));
    assert!(!is_classical_pf(&pv(&[0, 2, 2])));
    assert!(is_classical_pf(&pv(&[])));
    for n in 1..=5 {
        let count = box_vectors(n, n as u32).iter().filter(|v| is_classical_pf(&pv(v))).count();
        assert_eq!(count as u64, (n as u64 + 1).pow(n as u32 - 1));
        for v in box_vectors(n, n as u32) {
            assert_eq!(is_classical_pf(&pv(&v)), cars_all_park(&v), "{v:?}");
        }
    }
}

#[test]
fn vector_parking_functions() {
    assert!(is_vector_pf(&pv(&[1, 0, 4]), &[1, 3, 5]).unwrap());
    assert!(!is_vector_pf(&pv(&[1, 1, 4]), &[1, 3, 5]).unwrap());
    assert!(is_vector_pf(&pv(&[0, 0, 1]), &[1, 2, 3]).unwrap());
    assert!(matches!(is_vector_pf(&pv(&[0]), &[1, 2]), Err(Error::LengthMismatch { expected: 2, got: 1 })));
    assert!(matches!(is_vector_pf(&pv(&[0, 0]), &[2, 1]), Err(Error::UNotMonotone)));
    assert!(matches!(is_vector_pf(&pv(&[0, 0]), &[0, 1]), Err(Error::UNotMonotone)));
    for v in box_vectors(4, 4) {
        assert_eq!(is_vector_pf(&pv(&v), &[1, 2, 3, 4]).unwrap(), is_classical_pf(&pv(&v)));
    }
}

#[test]
fn membership_on_the_weighted_example() {
    let g = weighted_example();
    for v in [[5, 1, 2], [1, 5, 2], [2, 1, 5], [1, 2, 5], [0, 0, 0], [1, 1, 1]] {
        assert!(is_g_pf(&g, &pv(&v)).unwrap(), "{v:?}");
    }
    for v in [[6, 1, 2], [2, 4, 2], [4, 2, 2], [0, 0, 6], [2, 2, 2]] {
        assert!(!is_g_pf(&g, &pv(&v)).unwrap(), "{v:?}");
        assert!(!subset_condition(&g, &v));
    }
    assert_eq!(burn(&g, &pv(&[2, 4, 2])), VertexSet::from_iter([1, 2, 3]));
    assert!(matches!(is_g_pf(&g, &pv(&[0, 0])), Err(Error::LengthMismatch { .. })));
}

#[test]
fn maximal_parking_functions_of_the_weighted_example() {
    let g = weighted_example();
    let mpf = enumerate_mpf(&g);
    let expected: BTreeSet<_> = [[1, 2, 5], [1, 5, 2], [2, 1, 5], [5, 1, 2]].iter().map(|x| pv(x)).collect();
    assert_eq!(mpf, expected);
    for b in &mpf {
        assert_eq!(b.sum() + 3, g.total_weight());
        assert!(is_maximal(&g, b).unwrap());
    }
    assert!(!is_maximal(&g, &pv(&[0, 0, 0])).unwrap());
    assert!(matches!(is_maximal(&g, &pv(&[9, 9, 9])), Err(Error::NotAParkingFunction)));
}

#[test]
fn complete_graphs_give_classical_parking_functions() {
    for n in 1..=5 {
        let g = complete_graph(n, 1, 1);
        let pf = enumerate_pf(&g, &Limits::default()).unwrap();
        let classical: BTreeSet<_> =
            box_vectors(n, n as u32).into_iter().map(ParkingVector).filter(is_classical_pf).collect();
        assert_eq!(pf, classical);
        let mpf = enumerate_mpf(&g);
        assert_eq!(mpf.len(), (1..=n).product::<usize>());
    }
}

#[test]
fn trees_park_only_the_zero_vector() {
    for n in 1..=4 {
        for tree in labelled_trees(n) {
            let g = uniform(n, &tree, 1);
            assert_eq!(enumerate_mpf(&g), BTreeSet::from([ParkingVector::zeros(n)]));
        }
    }
    let heavy = path_graph(3, 3);
    assert_eq!(enumerate_mpf(&heavy), BTreeSet::from([pv(&[2, 2, 2])]));
    let pf = enumerate_pf(&star_graph(2, 2), &Limits::default()).unwrap();
    assert_eq!(pf.len(), 4);
}

#[test]
fn cycle_maxima() {
    // The unit cycle on n+1 vertices has n maximal vectors with a single 1.
    for n in 2..=6 {
        let mpf = enumerate_mpf(&cycle_graph(n, 1));
        assert_eq!(mpf.len(), n);
        assert!(mpf.iter().all(|b| b.sum() == 1));
    }
}

#[test]
fn down_sets() {
    let tops = [pv(&[1, 2])];
    let d = down_set(tops.clone(), &Limits::default()).unwrap();
    assert_eq!(d.len(), 6);
    let tiny = Limits { max_set: 3, ..Limits::default() };
    assert!(matches!(down_set(tops, &tiny), Err(Error::TooLarge { .. })));
    assert!(down_set(Vec::new(), &Limits::default()).unwrap().is_empty());
}

#[test]
fn subset_scan_guard() {
    let g = weighted_example();
    let tiny = Limits { max_subset_n: 2, ..Limits::default() };
    assert!(matches!(is_g_pf_by_subsets(&g, &pv(&[0, 0, 0]), &tiny), Err(Error::TooLarge { .. })));
    assert!(is_g_pf(&g, &pv(&[0, 0, 0])).unwrap());
}

fn arb_graph() -> impl Strategy<Value = RootedWeightedGraph> {
    (1usize..=5, 0u64..8, any::<u64>()).prop_map(|(n, extra, seed)| {
        let mut rng = StdRng::seed_from_u64(seed);
        random_connected_graph(&mut rng, n, n as u64 + extra)
    })
}

proptest! {
    #[test]
    fn burning_agrees_with_the_subset_scan(g in arb_graph(), seed in any::<u64>()) {
        let n = g.n_nonroot();
        let mut x = seed;
        let b: Vec<u32> = (0..n).map(|_| { x = x.wrapping_mul(6364136223846793005).wrapping_add(1); (x >> 33) as u32 % 8 }).collect();
        let v = ParkingVector(b.clone());
        let burned = is_g_pf(&g, &v).unwrap();
        prop_assert_eq!(burned, is_g_pf_by_subsets(&g, &v, &Limits::default()).unwrap());
        prop_assert_eq!(burned, subset_condition(&g, &b));
    }

    #[test]
    fn pf_is_the_down_set_of_its_maxima(g in arb_graph()) {
        let pf = enumerate_pf(&g, &Limits::default()).unwrap();
        // U = {i} forces b_i < deg(i).
        let bound = (1..g.vertex_count()).map(|i| g.degree(i) as u32).max().unwrap_or(0);
        let direct: BTreeSet<_> = box_vectors(g.n_nonroot(), bound)
            .into_iter()
            .filter(|v| subset_condition(&g, v))
            .map(ParkingVector)
            .collect();
        prop_assert_eq!(&pf, &direct);
        for v in &pf {
            for k in 0..v.len() {
                if v[k] > 0 {
                    let mut w = v.clone();
                    w.0[k] -= 1;
                    prop_assert!(pf.contains(&w));
                }
            }
        }
    }

    #[test]
    fn maxima_share_one_sum(g in arb_graph()) {
        let target = g.total_weight() - g.n_nonroot() as u64;
        for b in enumerate_mpf(&g) {
            prop_assert_eq!(b.sum(), target);
            prop_assert!(is_maximal(&g, &b).unwrap());
        }
    }

    #[test]
    fn classical_pf_matches_parking(v in proptest::collection::vec(0u32..7, 0..7)) {
        prop_assert_eq!(is_classical_pf(&ParkingVector(v.clone())), cars_all_park(&v));
    }
}
