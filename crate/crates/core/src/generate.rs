//! Exhaustive and random graph generation for sweeps and property tests.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::graph::{GraphBuilder, OneDimFamily, RootedWeightedGraph, Vertex, Weight};

/// Unordered vertex pairs of `0..=n` in lexicographic order.
pub fn vertex_pairs(n: usize) -> Vec<(Vertex, Vertex)> {
    (0..=n).flat_map(|x| (x + 1..=n).map(move |y| (x, y))).collect()
}

fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
    if items.is_empty() {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for k in 0..items.len() {
        let mut rest = items.to_vec();
        let first = rest.remove(k);
        for mut tail in permutations(&rest) {
            tail.insert(0, first);
            out.push(tail);
        }
    }
    out
}

/// Vertex permutations (`perm[old] = new`) fixing 0 and each block.
pub fn block_permutations(p: usize, q: usize) -> Vec<Vec<Vertex>> {
    let a: Vec<usize> = (1..=p).collect();
    let b: Vec<usize> = (p + 1..=p + q).collect();
    let mut out = Vec::new();
    for pa in permutations(&a) {
        for pb in permutations(&b) {
            let mut perm = vec![0];
            perm.extend(&pa);
            perm.extend(&pb);
            out.push(perm);
        }
    }
    out
}

/// All weight assignments `0..=max_w` on the pairs of `0..=p+q`, indexed by
/// a mixed-radix counter.
#[derive(Debug, Clone)]
pub struct GraphSpace {
    pub p: usize,
    pub q: usize,
    pub max_w: Weight,
    pairs: Vec<(Vertex, Vertex)>,
    /// For each non-identity block permutation, the image index of each pair.
    pair_maps: Vec<Vec<usize>>,
}

impl GraphSpace {
    pub fn new(p: usize, q: usize, max_w: Weight) -> Self {
        let n = p + q;
        let pairs = vertex_pairs(n);
        let index = |x: usize, y: usize| {
            let (x, y) = (x.min(y), x.max(y));
            pairs.iter().position(|&e| e == (x, y)).unwrap()
        };
        let pair_maps = block_permutations(p, q)
            .into_iter()
            .filter(|perm| perm.iter().enumerate().any(|(k, &v)| k != v))
            .map(|perm| pairs.iter().map(|&(x, y)| index(perm[x], perm[y])).collect())
            .collect();
        GraphSpace { p, q, max_w, pairs, pair_maps }
    }

    pub fn size(&self) -> u64 {
        (self.max_w as u64 + 1).pow(self.pairs.len() as u32)
    }

    pub fn decode(&self, mut index: u64) -> Vec<Weight> {
        let radix = self.max_w as u64 + 1;
        (0..self.pairs.len())
            .map(|_| {
                let w = (index % radix) as Weight;
                index /= radix;
                w
            })
            .collect()
    }

    pub fn is_connected(&self, w: &[Weight]) -> bool {
        let n = self.p + self.q;
        let mut adj = vec![0u64; n + 1];
        for (k, &(x, y)) in self.pairs.iter().enumerate() {
            if w[k] > 0 {
                adj[x] |= 1 << y;
                adj[y] |= 1 << x;
            }
        }
        let mut seen = 1u64;
        let mut frontier = 1u64;
        while frontier != 0 {
            let mut next = 0;
            let mut f = frontier;
            while f != 0 {
                next |= adj[f.trailing_zeros() as usize];
                f &= f - 1;
            }
            frontier = next & !seen;
            seen |= frontier;
        }
        seen.count_ones() as usize == n + 1
    }

    /// Lexicographically least among its block-preserving relabelings.
    pub fn is_canonical(&self, w: &[Weight]) -> bool {
        let mut image = vec![0; w.len()];
        self.pair_maps.iter().all(|map| {
            for (k, &to) in map.iter().enumerate() {
                image[to] = w[k];
            }
            w <= image.as_slice()
        })
    }

    pub fn graph(&self, w: &[Weight]) -> RootedWeightedGraph {
        let edges: Vec<_> = self.pairs.iter().zip(w).filter(|(_, &x)| x > 0).map(|(&(x, y), &wt)| (x, y, wt)).collect();
        GraphBuilder::new(self.p + self.q)
            .edges(&edges)
            .bipartition(self.p, self.q)
            .require_connected(false)
            .build()
            .expect("space members are valid graphs")
    }

    /// Connected canonical graph at `index`, if it is one.
    pub fn canonical_graph(&self, index: u64) -> Option<RootedWeightedGraph> {
        let w = self.decode(index);
        (self.is_connected(&w) && self.is_canonical(&w)).then(|| self.graph(&w))
    }
}

fn draft(n: usize, p: usize, edges: &[(Vertex, Vertex, Weight)]) -> RootedWeightedGraph {
    GraphBuilder::new(n).edges(edges).bipartition(p, n - p).build().expect("generated graphs are connected and valid")
}

/// A uniformly random relabeling that keeps each block in place.
pub fn shuffle_blocks<R: Rng>(rng: &mut R, g: &RootedWeightedGraph) -> RootedWeightedGraph {
    let (p, q) = g.bipartition().map_or((g.n_nonroot(), 0), |b| (b.p, b.q));
    let mut a: Vec<usize> = (1..=p).collect();
    let mut b: Vec<usize> = (p + 1..=p + q).collect();
    a.shuffle(rng);
    b.shuffle(rng);
    let mut perm = vec![0];
    perm.extend(a);
    perm.extend(b);
    g.relabel(&perm, g.bipartition())
}

/// Edges of a random tree on `vertices`, grown from `vertices[0]`.
fn random_tree_edges<R: Rng>(rng: &mut R, vertices: &[Vertex]) -> Vec<(Vertex, Vertex)> {
    let mut placed = vec![vertices[0]];
    let mut rest = vertices[1..].to_vec();
    rest.shuffle(rng);
    let mut out = Vec::new();
    for v in rest {
        let parent = placed[rng.gen_range(0..placed.len())];
        out.push((parent, v));
        placed.push(v);
    }
    out
}

/// Connected graph on `0..=n`: a random spanning tree of unit edges plus
/// extra units on random pairs, total weight at most `max_total`.
pub fn random_connected_graph<R: Rng>(rng: &mut R, n: usize, max_total: u64) -> RootedWeightedGraph {
    assert!(max_total >= n as u64);
    let vertices: Vec<usize> = (0..=n).collect();
    let pairs = vertex_pairs(n);
    let mut w = vec![0 as Weight; pairs.len()];
    let index = |x: usize, y: usize| pairs.iter().position(|&e| e == (x.min(y), x.max(y))).unwrap();
    for (x, y) in random_tree_edges(rng, &vertices) {
        w[index(x, y)] = 1;
    }
    let extra = rng.gen_range(0..=max_total - n as u64);
    for _ in 0..extra {
        w[rng.gen_range(0..pairs.len())] += 1;
    }
    let edges: Vec<_> = pairs.iter().zip(&w).filter(|(_, &x)| x > 0).map(|(&(x, y), &wt)| (x, y, wt)).collect();
    GraphBuilder::new(n).edges(&edges).build().expect("spanning tree keeps it connected")
}

pub fn tree_graph<R: Rng>(rng: &mut R, n: usize, a: Weight) -> RootedWeightedGraph {
    let vertices: Vec<usize> = (0..=n).collect();
    let edges: Vec<_> = random_tree_edges(rng, &vertices).into_iter().map(|(x, y)| (x, y, a)).collect();
    GraphBuilder::new(n).edges(&edges).build().unwrap()
}

pub fn path_graph(n: usize, a: Weight) -> RootedWeightedGraph {
    let edges: Vec<_> = (0..n).map(|v| (v, v + 1, a)).collect();
    GraphBuilder::new(n).edges(&edges).build().unwrap()
}

pub fn star_graph(n: usize, a: Weight) -> RootedWeightedGraph {
    let edges: Vec<_> = (1..=n).map(|v| (0, v, a)).collect();
    GraphBuilder::new(n).edges(&edges).build().unwrap()
}

/// The cycle `0, 1, …, n, 0`; needs `n ≥ 2`.
pub fn cycle_graph(n: usize, a: Weight) -> RootedWeightedGraph {
    let mut edges: Vec<_> = (0..n).map(|v| (v, v + 1, a)).collect();
    edges.push((0, n, a));
    GraphBuilder::new(n).edges(&edges).build().unwrap()
}

/// Complete graph with root edges `a` and all other edges `b`.
pub fn complete_graph(n: usize, a: Weight, b: Weight) -> RootedWeightedGraph {
    let edges: Vec<_> = vertex_pairs(n)
        .into_iter()
        .filter_map(|(x, y)| {
            let w = if x == 0 { a } else { b };
            (w > 0).then_some((x, y, w))
        })
        .collect();
    GraphBuilder::new(n).edges(&edges).build().unwrap()
}

/// A random member of a one-dimensional family on `n ≥ 1` non-root
/// vertices, with its family.
pub fn random_one_dim<R: Rng>(rng: &mut R, n: usize, max_weight: Weight) -> (RootedWeightedGraph, OneDimFamily) {
    let a = rng.gen_range(1..=max_weight);
    let b = rng.gen_range(1..=max_weight);
    match rng.gen_range(0..3) {
        1 if n >= 2 => {
            let g = shuffle_blocks(rng, &cycle_graph(n, a));
            (g, OneDimFamily::Cycle { a })
        }
        2 => (complete_graph(n, a, b), OneDimFamily::Complete { a, b: if n == 1 { 0 } else { b } }),
        _ => (tree_graph(rng, n, a), OneDimFamily::Tree { a }),
    }
}

/// Edges of a one-dimensional family graph placed on `hub` and `others`,
/// `hub` playing the root.
fn family_edges<R: Rng>(
    rng: &mut R,
    hub: Vertex,
    others: &[Vertex],
    family: OneDimFamily,
) -> Vec<(Vertex, Vertex, Weight)> {
    let mut order = others.to_vec();
    order.shuffle(rng);
    let mut vs = vec![hub];
    vs.extend(&order);
    match family {
        OneDimFamily::Tree { a } => random_tree_edges(rng, &vs).into_iter().map(|(x, y)| (x, y, a)).collect(),
        OneDimFamily::Cycle { a } => {
            let mut e: Vec<_> = vs.windows(2).map(|w| (w[0], w[1], a)).collect();
            e.push((vs[vs.len() - 1], hub, a));
            e
        }
        OneDimFamily::Complete { a, b } => {
            let mut e = Vec::new();
            for (k, &x) in vs.iter().enumerate() {
                for &y in &vs[k + 1..] {
                    e.push((x, y, if x == hub { a } else { b }));
                }
            }
            e
        }
    }
}

fn random_family<R: Rng>(rng: &mut R, size: usize, w: Weight, allow_tree: bool) -> OneDimFamily {
    let a = rng.gen_range(1..=w);
    let b = rng.gen_range(1..=w);
    loop {
        match rng.gen_range(0..3) {
            0 if allow_tree => return OneDimFamily::Tree { a },
            1 if size >= 2 => return OneDimFamily::Cycle { a },
            2 => return OneDimFamily::Complete { a, b: if size == 1 { 0 } else { b } },
            _ if !allow_tree && size < 2 => return OneDimFamily::Complete { a, b: 0 },
            _ => {}
        }
    }
}

/// Names of the generators [`random_invariant_graph`] draws from.
pub const INVARIANT_GENERATORS: [&str; 9] = [
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

/// A random bipartitioned graph built to one of the invariant shapes, with
/// `1 ≤ p ≤ max_p`, `1 ≤ q ≤ max_q` (some shapes fix `p`), weights up to
/// `w`, and randomly shuffled labels inside each block.
pub fn random_invariant_graph<R: Rng>(
    rng: &mut R,
    max_p: usize,
    max_q: usize,
    w: Weight,
    kind: usize,
) -> RootedWeightedGraph {
    let q = rng.gen_range(1..=max_q);
    let mut weight = || rng.gen_range(1..=w);
    let (a, b, c) = (weight(), weight(), weight());
    let (bb, dd, ee) = (rng.gen_range(0..=w), rng.gen_range(0..=w), rng.gen_range(0..=w));
    let g = match kind {
        0 => {
            let p = rng.gen_range(1..=max_p);
            let n = p + q;
            let mut order: Vec<usize> = (1..=n).collect();
            order.shuffle(rng);
            let mut vs = vec![0];
            vs.extend(order);
            let mut e: Vec<_> = vs.windows(2).map(|x| (x[0], x[1], a)).collect();
            e.push((vs[n], 0, a));
            draft(n, p, &e)
        }
        1..=3 => {
            let p = if kind == 1 { 1 } else { 2 };
            let b = if b == a && kind != 3 { a + 1 } else { b };
            let n = p + q;
            let mut bs: Vec<usize> = (p + 1..=n).collect();
            bs.shuffle(rng);
            let mut vs = vec![0, 1];
            vs.extend(bs);
            if p == 2 {
                vs.push(2);
            }
            let mid = if kind == 3 { c } else { b };
            let mut e: Vec<_> = vs.windows(2).map(|x| (x[0], x[1], if x[0] == 0 { a } else { mid })).collect();
            let last = *vs.last().unwrap();
            e.push((last, 0, if p == 2 { a } else { mid }));
            if kind == 3 {
                e.push((1, 2, b));
            }
            draft(n, p, &e)
        }
        4 => {
            let p = rng.gen_range(1..=max_p);
            let n = p + q;
            let block = |v: usize| {
                if v == 0 {
                    0
                } else if v <= p {
                    1
                } else {
                    2
                }
            };
            let e: Vec<_> = vertex_pairs(n)
                .into_iter()
                .filter_map(|(x, y)| {
                    let wt = match (block(x), block(y)) {
                        (0, 1) => a,
                        (1, 1) => bb,
                        (1, 2) => c,
                        (2, 2) => dd,
                        _ => ee,
                    };
                    (wt > 0).then_some((x, y, wt))
                })
                .collect();
            draft(n, p, &e)
        }
        5 | 6 => {
            let p = rng.gen_range(1..=max_p);
            let n = p + q;
            let a_side: Vec<usize> = (1..=p).collect();
            let core = if p >= 2 && rng.gen_bool(0.5) {
                OneDimFamily::Cycle { a }
            } else {
                OneDimFamily::Complete { a, b: if p == 1 { 0 } else { b } }
            };
            let mut e = family_edges(rng, 0, &a_side, core);
            let b_side: Vec<usize> = (p + 1..=n).collect();
            if kind == 5 {
                let hub = rng.gen_range(0..=p);
                let branch = random_family(rng, q, w, true);
                e.extend(family_edges(rng, hub, &b_side, branch));
            } else {
                // Pendant trees of weight c hung from random hubs.
                let mut placed: Vec<usize> = Vec::new();
                let mut shuffled = b_side.clone();
                shuffled.shuffle(rng);
                for v in shuffled {
                    let parent = if placed.is_empty() || rng.gen_bool(0.5) {
                        rng.gen_range(0..=p)
                    } else {
                        placed[rng.gen_range(0..placed.len())]
                    };
                    e.push((parent.min(v), parent.max(v), c));
                    placed.push(v);
                }
            }
            draft(n, p, &e)
        }
        7 => {
            let p = rng.gen_range(1..=max_p);
            let n = p + q;
            // Root tree on a non-empty prefix of A.
            let k = rng.gen_range(1..=p);
            let mut root_tree = vec![0];
            root_tree.extend(1..=k);
            let mut e: Vec<_> = random_tree_edges(rng, &root_tree).into_iter().map(|(x, y)| (x, y, a)).collect();
            let hub = root_tree[rng.gen_range(0..root_tree.len())];
            let b_side: Vec<usize> = (p + 1..=n).collect();
            let branch = random_family(rng, q, w, false);
            e.extend(family_edges(rng, hub, &b_side, branch));
            let mut anchors: Vec<usize> = root_tree.iter().copied().chain(b_side).collect();
            for v in k + 1..=p {
                let parent = anchors[rng.gen_range(0..anchors.len())];
                e.push((parent.min(v), parent.max(v), a));
                anchors.push(v);
            }
            draft(n, p, &e)
        }
        _ => {
            let p = rng.gen_range(1..=max_p);
            let n = p + q;
            let vertices: Vec<usize> = (0..=n).collect();
            let e: Vec<_> = random_tree_edges(rng, &vertices)
                .into_iter()
                .map(|(x, y)| (x.min(y), x.max(y), if y <= p { a } else { b }))
                .collect();
            draft(n, p, &e)
        }
    };
    shuffle_blocks(rng, &g)
}
