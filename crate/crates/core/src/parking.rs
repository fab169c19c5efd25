//! Classical, vector and graph parking functions.

use std::collections::{BTreeSet, HashSet};
use std::fmt;
use std::ops::Deref;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Limits, Result};
use crate::graph::{RootedWeightedGraph, VertexSet};
use crate::orientations::maximal_vectors;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ParkingVector(pub Vec<u32>);

impl ParkingVector {
    pub fn zeros(n: usize) -> Self {
        ParkingVector(vec![0; n])
    }

    pub fn sum(&self) -> u64 {
        self.0.iter().map(|&x| x as u64).sum()
    }

    pub fn order_statistics(&self) -> ParkingVector {
        let mut v = self.0.clone();
        v.sort_unstable();
        ParkingVector(v)
    }

    /// Componentwise `self ≼ other`.
    pub fn dominated_by(&self, other: &ParkingVector) -> bool {
        self.len() == other.len() && self.iter().zip(other.iter()).all(|(a, b)| a <= b)
    }

    pub fn into_inner(self) -> Vec<u32> {
        self.0
    }
}

impl Deref for ParkingVector {
    type Target = [u32];
    fn deref(&self) -> &[u32] {
        &self.0
    }
}

impl From<Vec<u32>> for ParkingVector {
    fn from(v: Vec<u32>) -> Self {
        ParkingVector(v)
    }
}

impl FromIterator<u32> for ParkingVector {
    fn from_iter<I: IntoIterator<Item = u32>>(iter: I) -> Self {
        ParkingVector(iter.into_iter().collect())
    }
}

impl fmt::Display for ParkingVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.iter().map(u32::to_string).collect();
        f.write_str(&parts.join(","))
    }
}

impl FromStr for ParkingVector {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(ParkingVector::default());
        }
        s.split(',')
            .map(|t| {
                t.trim().parse::<u32>().map_err(|_| Error::Parse {
                    line: 1,
                    message: format!("expected a natural number, got {:?}", t.trim()),
                })
            })
            .collect::<Result<Vec<_>>>()
            .map(ParkingVector)
    }
}

pub fn order_statistics(v: &ParkingVector) -> ParkingVector {
    v.order_statistics()
}

/// `a_(i) < i` for each `i`, 1-indexed.
pub fn is_classical_pf(v: &ParkingVector) -> bool {
    v.order_statistics().iter().enumerate().all(|(i, &x)| (x as usize) < i + 1)
}

/// `a_(i) < u_i` for each `i`.
pub fn is_vector_pf(v: &ParkingVector, u: &[u32]) -> Result<bool> {
    if v.len() != u.len() {
        return Err(Error::LengthMismatch { expected: u.len(), got: v.len() });
    }
    if u.first().is_some_and(|&x| x == 0) || u.windows(2).any(|w| w[0] > w[1]) {
        return Err(Error::UNotMonotone);
    }
    Ok(v.order_statistics().iter().zip(u).all(|(x, y)| x < y))
}

fn check_len(g: &RootedWeightedGraph, b: &ParkingVector) -> Result<()> {
    if b.len() != g.n_nonroot() {
        return Err(Error::LengthMismatch { expected: g.n_nonroot(), got: b.len() });
    }
    Ok(())
}

/// Membership in PF(G) by burning: strip vertices `i` with `b_i < d_U(i)`,
/// lowest index first, until none is left or none qualifies.
pub fn is_g_pf(g: &RootedWeightedGraph, b: &ParkingVector) -> Result<bool> {
    check_len(g, b)?;
    Ok(burn(g, b).is_empty())
}

/// The set left when burning stops; empty iff `b ∈ PF(G)`.
pub fn burn(g: &RootedWeightedGraph, b: &ParkingVector) -> VertexSet {
    let all = g.vertices();
    let mut u = g.nonroot();
    loop {
        let outside = all - u;
        match u.iter().find(|&i| (b[i - 1] as u64) < g.weight_into(i, outside)) {
            Some(i) => u.remove(i),
            None => return u,
        }
    }
}

/// Membership in PF(G) by scanning every non-empty `U ⊆ {1..n}`.
pub fn is_g_pf_by_subsets(g: &RootedWeightedGraph, b: &ParkingVector, limits: &Limits) -> Result<bool> {
    check_len(g, b)?;
    if g.n_nonroot() > limits.max_subset_n {
        return Err(Error::TooLarge { what: "non-root vertex count for the subset scan", limit: limits.max_subset_n });
    }
    let all = g.vertices();
    Ok(g.nonroot().subsets().all(|u| u.iter().any(|i| (b[i - 1] as u64) < g.weight_into(i, all - u))))
}

/// MPF(G), the images of A(G) under `indeg − 1`.
pub fn enumerate_mpf(g: &RootedWeightedGraph) -> BTreeSet<ParkingVector> {
    maximal_vectors(g).into_iter().collect()
}

/// PF(G) as the down-set of MPF(G).
pub fn enumerate_pf(g: &RootedWeightedGraph, limits: &Limits) -> Result<BTreeSet<ParkingVector>> {
    down_set(enumerate_mpf(g), limits)
}

/// Every vector below some member of `tops`.
pub fn down_set<I: IntoIterator<Item = ParkingVector>>(tops: I, limits: &Limits) -> Result<BTreeSet<ParkingVector>> {
    let mut seen: HashSet<ParkingVector> = HashSet::new();
    let mut stack: Vec<ParkingVector> = Vec::new();
    for t in tops {
        if seen.insert(t.clone()) {
            stack.push(t);
        }
    }
    while let Some(v) = stack.pop() {
        for k in 0..v.len() {
            if v[k] == 0 {
                continue;
            }
            let mut w = v.clone();
            w.0[k] -= 1;
            if seen.insert(w.clone()) {
                if seen.len() > limits.max_set {
                    return Err(Error::TooLarge { what: "parking function set", limit: limits.max_set });
                }
                stack.push(w);
            }
        }
    }
    Ok(seen.into_iter().collect())
}

/// No coordinate of `b ∈ PF(G)` can grow without leaving PF(G).
pub fn is_maximal(g: &RootedWeightedGraph, b: &ParkingVector) -> Result<bool> {
    if !is_g_pf(g, b)? {
        return Err(Error::NotAParkingFunction);
    }
    let mut c = b.clone();
    for k in 0..b.len() {
        c.0[k] += 1;
        let grows = burn(g, &c).is_empty();
        c.0[k] -= 1;
        if grows {
            return Ok(false);
        }
    }
    Ok(true)
}
