#![allow(dead_code)]

use std::collections::BTreeSet;

use parklab::graph::{GraphBuilder, RootedWeightedGraph, Weight};
use parklab::lattice::WeightGrid;
use parklab::{build_graph, PairSequence, ParkingVector};

pub fn weighted_example() -> RootedWeightedGraph {
    build_graph(3, &[(0, 1, 2), (0, 2, 2), (1, 2, 1), (1, 3, 3), (2, 3, 3)]).unwrap()
}

pub fn listed_maxima() -> BTreeSet<ParkingVector> {
    [[5, 1, 2], [1, 5, 2], [2, 4, 2], [4, 2, 2], [2, 1, 5], [1, 2, 5]]
        .iter()
        .map(|x| ParkingVector(x.to_vec()))
        .collect()
}

pub fn affine_grid() -> WeightGrid {
    let u = (0..=3).map(|i| vec![i as u32 + 1; 4]).collect();
    let v = (0..=3).map(|_| (0..=3).map(|j| 2 * j as u32 + 1).collect()).collect();
    WeightGrid::new(3, 3, u, v).unwrap()
}

pub fn affine_pair() -> PairSequence {
    PairSequence::new(vec![2, 0, 1], vec![1, 3, 0])
}

/// Complete tripartite graph on `{0}`, A = {1,2,3}, B = {4,5}.
pub fn k321() -> RootedWeightedGraph {
    let mut e = Vec::new();
    for x in 0..=5usize {
        for y in x + 1..=5 {
            let part = |v: usize| {
                if v == 0 {
                    0
                } else if v <= 3 {
                    1
                } else {
                    2
                }
            };
            if part(x) != part(y) {
                e.push((x, y, 1));
            }
        }
    }
    GraphBuilder::new(5).edges(&e).bipartition(3, 2).build().unwrap()
}

/// Cars with preferences `a` park left to right in `n` spots; success when
/// none drives off.
pub fn cars_all_park(a: &[u32]) -> bool {
    let n = a.len();
    let mut taken = vec![false; n];
    for &pref in a {
        let Some(spot) = (pref as usize..n).find(|&s| !taken[s]) else {
            return false;
        };
        taken[spot] = true;
    }
    true
}

/// Every vector in `[0, bound)^len`.
pub fn box_vectors(len: usize, bound: u32) -> Vec<Vec<u32>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|v| {
                (0..bound).map(move |x| {
                    let mut w = v.clone();
                    w.push(x);
                    w
                })
            })
            .collect();
    }
    out
}

/// Indegree-minus-one vectors of every orientation of the 2^|E| choices
/// that is acyclic with 0 as its only source.
pub fn brute_force_mpf(g: &RootedWeightedGraph) -> Vec<Vec<u32>> {
    let edges = g.edges().to_vec();
    let n = g.vertex_count();
    let mut out = Vec::new();
    for mask in 0u64..(1 << edges.len()) {
        let mut indeg = vec![0u32; n];
        let mut succ = vec![Vec::new(); n];
        let mut has_in = vec![false; n];
        for (k, e) in edges.iter().enumerate() {
            let (t, h) = if mask >> k & 1 == 1 { (e.v, e.u) } else { (e.u, e.v) };
            indeg[h] += e.weight;
            has_in[h] = true;
            succ[t].push(h);
        }
        if has_in[0] || (1..n).any(|v| !has_in[v]) {
            continue;
        }
        // Acyclic iff a DFS meets no grey vertex.
        let mut colour = vec![0u8; n];
        fn cyclic(v: usize, succ: &[Vec<usize>], colour: &mut [u8]) -> bool {
            colour[v] = 1;
            for &w in &succ[v] {
                if colour[w] == 1 || (colour[w] == 0 && cyclic(w, succ, colour)) {
                    return true;
                }
            }
            colour[v] = 2;
            false
        }
        if (0..n).any(|v| colour[v] == 0 && cyclic(v, &succ, &mut colour)) {
            continue;
        }
        out.push(indeg[1..].iter().map(|d| d - 1).collect());
    }
    out
}

/// `b ∈ PF(G)` straight from the subset condition, independent of the
/// library.
pub fn subset_condition(g: &RootedWeightedGraph, b: &[u32]) -> bool {
    let n = g.n_nonroot();
    (1u64..(1 << n)).all(|mask| {
        let inside = |v: usize| v >= 1 && mask >> (v - 1) & 1 == 1;
        (1..=n).filter(|&i| inside(i)).any(|i| {
            let out: u64 = (0..=n).filter(|&w| !inside(w)).map(|w| g.weight(i, w) as u64).sum();
            (b[i - 1] as u64) < out
        })
    })
}

/// Pair membership in PF²(U) by trying every path, as bit patterns.
pub fn upf_by_all_paths(pair: &PairSequence, grid: &WeightGrid) -> bool {
    let (p, q) = (grid.p(), grid.q());
    let mut a = pair.a.0.clone();
    let mut b = pair.b.0.clone();
    a.sort_unstable();
    b.sort_unstable();
    (0u64..(1 << (p + q))).filter(|m| m.count_ones() as usize == q).any(|m| {
        let (mut i, mut j) = (0, 0);
        for k in 0..p + q {
            if m >> k & 1 == 0 {
                if a[i] >= grid.u(i, j) {
                    return false;
                }
                i += 1;
            } else {
                if b[j] >= grid.v(i, j) {
                    return false;
                }
                j += 1;
            }
        }
        true
    })
}

/// Labelled spanning trees of `0..=n`, as edge lists.
pub fn labelled_trees(n: usize) -> Vec<Vec<(usize, usize)>> {
    let pairs: Vec<(usize, usize)> = (0..=n).flat_map(|x| (x + 1..=n).map(move |y| (x, y))).collect();
    let mut out = Vec::new();
    for mask in 0u64..(1 << pairs.len()) {
        if mask.count_ones() as usize != n {
            continue;
        }
        let chosen: Vec<_> = (0..pairs.len()).filter(|&k| mask >> k & 1 == 1).map(|k| pairs[k]).collect();
        let mut comp: Vec<usize> = (0..=n).collect();
        fn find(c: &mut [usize], x: usize) -> usize {
            if c[x] != x {
                let r = find(c, c[x]);
                c[x] = r;
            }
            c[x]
        }
        let mut ok = true;
        for &(x, y) in &chosen {
            let (rx, ry) = (find(&mut comp, x), find(&mut comp, y));
            if rx == ry {
                ok = false;
                break;
            }
            comp[rx] = ry;
        }
        if ok {
            out.push(chosen);
        }
    }
    out
}

pub fn uniform(n: usize, edges: &[(usize, usize)], w: Weight) -> RootedWeightedGraph {
    let e: Vec<_> = edges.iter().map(|&(x, y)| (x, y, w)).collect();
    build_graph(n, &e).unwrap()
}

pub fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |c, i| c * (n - i) / (i + 1))
}
