use std::collections::BTreeSet;

use super::{LatticePath, PairSequence, Step, WeightGrid};
use crate::error::{Error, Limits, Result};

fn check_shape(pair: &PairSequence, grid: &WeightGrid) -> Result<()> {
    if pair.a.len() != grid.p() || pair.b.len() != grid.q() {
        return Err(Error::ShapeMismatch(format!(
            "pair has lengths ({}, {}), grid expects ({}, {})",
            pair.a.len(),
            pair.b.len(),
            grid.p(),
            grid.q()
        )));
    }
    Ok(())
}

/// Whether the order statistics of each block sit strictly below the
/// weights of the matching steps of `path`.
pub fn is_bounded_by(pair: &PairSequence, path: &LatticePath, grid: &WeightGrid) -> Result<bool> {
    check_shape(pair, grid)?;
    if path.e_count() != grid.p() || path.n_count() != grid.q() {
        return Err(Error::ShapeMismatch(format!(
            "path {path} does not go from (0,0) to ({}, {})",
            grid.p(),
            grid.q()
        )));
    }
    let a = pair.a.order_statistics();
    let b = pair.b.order_statistics();
    Ok(path.walk().all(|((i, j), s)| match s {
        Step::E => a[i] < grid.u(i, j),
        Step::N => b[j] < grid.v(i, j),
    }))
}

/// The lexicographically first bounding path (`E < N`), if any.
pub fn find_bounding_path(pair: &PairSequence, grid: &WeightGrid) -> Result<Option<LatticePath>> {
    check_shape(pair, grid)?;
    let a = pair.a.order_statistics();
    let b = pair.b.order_statistics();
    let (p, q) = (grid.p(), grid.q());
    let mut dead = vec![false; (p + 1) * (q + 1)];
    let mut steps = Vec::with_capacity(p + q);

    fn dfs(
        i: usize,
        j: usize,
        grid: &WeightGrid,
        a: &[u32],
        b: &[u32],
        dead: &mut [bool],
        steps: &mut Vec<Step>,
    ) -> bool {
        let (p, q) = (grid.p(), grid.q());
        if i == p && j == q {
            return true;
        }
        if dead[i * (q + 1) + j] {
            return false;
        }
        if i < p && a[i] < grid.u(i, j) {
            steps.push(Step::E);
            if dfs(i + 1, j, grid, a, b, dead, steps) {
                return true;
            }
            steps.pop();
        }
        if j < q && b[j] < grid.v(i, j) {
            steps.push(Step::N);
            if dfs(i, j + 1, grid, a, b, dead, steps) {
                return true;
            }
            steps.pop();
        }
        dead[i * (q + 1) + j] = true;
        false
    }

    Ok(dfs(0, 0, grid, &a, &b, &mut dead, &mut steps).then_some(LatticePath(steps)))
}

pub fn is_upf(pair: &PairSequence, grid: &WeightGrid) -> Result<bool> {
    Ok(find_bounding_path(pair, grid)?.is_some())
}

/// Number of distinct rearrangements of `x`.
pub fn orbit_size(x: &[u32]) -> u128 {
    let mut sorted = x.to_vec();
    sorted.sort_unstable();
    let mut total: u128 = 1;
    let mut run = 0u128;
    for k in 0..sorted.len() {
        run = if k > 0 && sorted[k] == sorted[k - 1] { run + 1 } else { 1 };
        total = total * (k as u128 + 1) / run;
    }
    total
}

fn next_permutation(x: &mut [u32]) -> bool {
    let Some(i) = (1..x.len()).rev().find(|&i| x[i - 1] < x[i]) else {
        return false;
    };
    let j = (i..x.len()).rev().find(|&j| x[j] > x[i - 1]).unwrap();
    x.swap(i - 1, j);
    x[i..].reverse();
    true
}

fn rearrangements(x: &[u32]) -> Vec<Vec<u32>> {
    let mut cur = x.to_vec();
    cur.sort_unstable();
    let mut out = vec![cur.clone()];
    while next_permutation(&mut cur) {
        out.push(cur.clone());
    }
    out
}

/// Every blockwise rearrangement of `pair`.
pub fn orbit(pair: &PairSequence) -> Vec<PairSequence> {
    let bs = rearrangements(&pair.b);
    rearrangements(&pair.a)
        .into_iter()
        .flat_map(|a| bs.iter().map(move |b| PairSequence::new(a.clone(), b.clone())))
        .collect()
}

fn sorted_sequences(len: usize, bound: u32) -> Vec<Vec<u32>> {
    fn rec(len: usize, lo: u32, bound: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        for x in lo..bound {
            cur.push(x);
            rec(len, x, bound, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(len, 0, bound, &mut Vec::new(), &mut out);
    out
}

fn multiset_count(len: usize, bound: u32) -> u128 {
    // C(bound + len - 1, len)
    let mut c: u128 = 1;
    for k in 0..len as u128 {
        c = c * (bound as u128 + k) / (k + 1);
    }
    c
}

/// Block-sorted members of PF²(U), by filtering the product space.
pub fn enumerate_increasing_upf(grid: &WeightGrid, limits: &Limits) -> Result<Vec<PairSequence>> {
    let (ma, mb) = (grid.max_e_weight(), grid.max_n_weight());
    let space = multiset_count(grid.p(), ma) * multiset_count(grid.q(), mb);
    if space > limits.max_set as u128 {
        return Err(Error::TooLarge { what: "increasing product space", limit: limits.max_set });
    }
    let bs = sorted_sequences(grid.q(), mb);
    let mut out = Vec::new();
    for a in sorted_sequences(grid.p(), ma) {
        for b in &bs {
            let pair = PairSequence::new(a.clone(), b.clone());
            if is_upf(&pair, grid)? {
                out.push(pair);
            }
        }
    }
    Ok(out)
}

/// PF²(U) in full.
pub fn enumerate_upf(grid: &WeightGrid, limits: &Limits) -> Result<BTreeSet<PairSequence>> {
    expand(enumerate_increasing_upf(grid, limits)?, limits)
}

fn expand(reps: Vec<PairSequence>, limits: &Limits) -> Result<BTreeSet<PairSequence>> {
    let total: u128 = reps.iter().map(|r| orbit_size(&r.a) * orbit_size(&r.b)).sum();
    if total > limits.max_set as u128 {
        return Err(Error::TooLarge { what: "U-parking function set", limit: limits.max_set });
    }
    Ok(reps.iter().flat_map(orbit).collect())
}

/// The largest pair a path bounds, or `None` when a step weighs 0.
fn path_top(path: &LatticePath, grid: &WeightGrid) -> Option<PairSequence> {
    let mut a = Vec::with_capacity(grid.p());
    let mut b = Vec::with_capacity(grid.q());
    for ((i, j), s) in path.walk() {
        match s {
            Step::E => a.push(grid.u(i, j).checked_sub(1)?),
            Step::N => b.push(grid.v(i, j).checked_sub(1)?),
        }
    }
    Some(PairSequence::new(a, b))
}

fn dominates(big: &PairSequence, small: &PairSequence) -> bool {
    small.a.dominated_by(&big.a) && small.b.dominated_by(&big.b)
}

/// Block-sorted maximal members of PF²(U): the largest pairs bounded by each
/// path, pruned to those no other path top dominates.
pub fn maximal_increasing_upf(grid: &WeightGrid) -> Vec<PairSequence> {
    let tops: BTreeSet<PairSequence> =
        LatticePath::all(grid.p(), grid.q()).iter().filter_map(|path| path_top(path, grid)).collect();
    let tops: Vec<_> = tops.into_iter().collect();
    tops.iter().filter(|t| !tops.iter().any(|o| o != *t && dominates(o, t))).cloned().collect()
}

/// Maximal members of PF²(U) in full.
pub fn maximal_upf(grid: &WeightGrid, limits: &Limits) -> Result<BTreeSet<PairSequence>> {
    expand(maximal_increasing_upf(grid), limits)
}

/// Entry sums of the pairs read off `E^p N^q` and `N^q E^p`, each entry being
/// the step weight minus one.
pub fn maximal_upf_sum_witness(grid: &WeightGrid) -> (i64, i64) {
    let sum = |path: LatticePath| -> i64 {
        path.walk()
            .map(|((i, j), s)| match s {
                Step::E => grid.u(i, j) as i64 - 1,
                Step::N => grid.v(i, j) as i64 - 1,
            })
            .sum()
    };
    (sum(LatticePath::east_first(grid.p(), grid.q())), sum(LatticePath::north_first(grid.p(), grid.q())))
}
