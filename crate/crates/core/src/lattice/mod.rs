//! Two-dimensional U-parking functions on a `(p+1) × (q+1)` weight grid.
//!
//! An E-step leaving node `(i, j)` weighs `u[i][j]` and an N-step leaving it
//! weighs `v[i][j]`. Only `u[i][j]` with `i < p` and `v[i][j]` with `j < q`
//! are ever read; the last row of `u` and the last column of `v` exist so
//! that every node carries a pair.

mod paths;
mod upf;

pub use paths::{orientation_from_path, path_from_orientation};
pub use upf::{
    enumerate_increasing_upf, enumerate_upf, find_bounding_path, is_bounded_by, is_upf, maximal_increasing_upf,
    maximal_upf, maximal_upf_sum_witness, orbit, orbit_size,
};

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::parking::ParkingVector;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct WeightGrid {
    p: usize,
    q: usize,
    u: Vec<Vec<u32>>,
    v: Vec<Vec<u32>>,
}

/// `u = b·i + c·j + a`, `v = c′·i + d·j + e`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize, Default)]
pub struct AffineParams {
    pub a: i64,
    pub b: i64,
    pub c: i64,
    pub cprime: i64,
    pub d: i64,
    pub e: i64,
}

fn monotone(m: &[Vec<u32>]) -> bool {
    let rows = m.len();
    let cols = m[0].len();
    (0..rows).all(|i| {
        (0..cols).all(|j| (i + 1 >= rows || m[i][j] <= m[i + 1][j]) && (j + 1 >= cols || m[i][j] <= m[i][j + 1]))
    })
}

fn nondecreasing_positive(x: &[u32]) -> bool {
    x.first().is_none_or(|&f| f > 0) && x.windows(2).all(|w| w[0] <= w[1])
}

impl WeightGrid {
    pub fn new(p: usize, q: usize, u: Vec<Vec<u32>>, v: Vec<Vec<u32>>) -> Result<Self> {
        for (name, m) in [("u", &u), ("v", &v)] {
            if m.len() != p + 1 || m.iter().any(|row| row.len() != q + 1) {
                return Err(Error::ShapeMismatch(format!("{name} must be {} rows of {} entries", p + 1, q + 1)));
            }
        }
        if !monotone(&u) || !monotone(&v) {
            return Err(Error::NotMonotone);
        }
        Ok(WeightGrid { p, q, u, v })
    }

    /// `u[i][j] = u_i`, `v[i][j] = v_j`; the unread last row and column
    /// repeat the final entry.
    pub fn from_vectors(u: &[u32], v: &[u32]) -> Result<Self> {
        if !nondecreasing_positive(u) || !nondecreasing_positive(v) {
            return Err(Error::NotMonotone);
        }
        let (p, q) = (u.len(), v.len());
        let ui = |i: usize| if p == 0 { 0 } else { u[i.min(p - 1)] };
        let vj = |j: usize| if q == 0 { 0 } else { v[j.min(q - 1)] };
        let um = (0..=p).map(|i| vec![ui(i); q + 1]).collect();
        let vm = (0..=p).map(|_| (0..=q).map(vj).collect()).collect();
        WeightGrid::new(p, q, um, vm)
    }

    pub fn from_affine(p: usize, q: usize, k: &AffineParams) -> Result<Self> {
        if k.b < 0 || k.c < 0 || k.cprime < 0 || k.d < 0 {
            return Err(Error::NotMonotone);
        }
        let cell = |x: i64| u32::try_from(x).map_err(|_| Error::NegativeEntry);
        let mut u = vec![vec![0; q + 1]; p + 1];
        let mut v = vec![vec![0; q + 1]; p + 1];
        for i in 0..=p {
            for j in 0..=q {
                let (fi, fj) = (i as i64, j as i64);
                u[i][j] = cell(k.b * fi + k.c * fj + k.a)?;
                v[i][j] = cell(k.cprime * fi + k.d * fj + k.e)?;
            }
        }
        WeightGrid::new(p, q, u, v)
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn u(&self, i: usize, j: usize) -> u32 {
        self.u[i][j]
    }

    pub fn v(&self, i: usize, j: usize) -> u32 {
        self.v[i][j]
    }

    pub fn u_rows(&self) -> &[Vec<u32>] {
        &self.u
    }

    pub fn v_rows(&self) -> &[Vec<u32>] {
        &self.v
    }

    /// Largest weight any E-step can carry.
    pub fn max_e_weight(&self) -> u32 {
        self.u[..self.p].iter().flatten().copied().max().unwrap_or(0)
    }

    pub fn max_n_weight(&self) -> u32 {
        self.v.iter().flat_map(|row| row[..self.q].iter()).copied().max().unwrap_or(0)
    }

    /// The grid with the roles of E and N exchanged.
    pub fn transpose(&self) -> WeightGrid {
        let u = (0..=self.q).map(|j| (0..=self.p).map(|i| self.v[i][j]).collect()).collect();
        let v = (0..=self.q).map(|j| (0..=self.p).map(|i| self.u[i][j]).collect()).collect();
        WeightGrid { p: self.q, q: self.p, u, v }
    }

    /// Adds `delta` to `u` on every node at or beyond `(i, j)`.
    pub fn perturbed(&self, i: usize, j: usize, delta: u32) -> Result<WeightGrid> {
        let mut u = self.u.clone();
        for row in u.iter_mut().skip(i) {
            for cell in row.iter_mut().skip(j) {
                *cell += delta;
            }
        }
        WeightGrid::new(self.p, self.q, u, self.v.clone())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Step {
    E,
    N,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticePath(pub Vec<Step>);

impl LatticePath {
    pub fn steps(&self) -> &[Step] {
        &self.0
    }

    pub fn e_count(&self) -> usize {
        self.0.iter().filter(|&&s| s == Step::E).count()
    }

    pub fn n_count(&self) -> usize {
        self.0.len() - self.e_count()
    }

    /// `E^p N^q`.
    pub fn east_first(p: usize, q: usize) -> Self {
        LatticePath([vec![Step::E; p], vec![Step::N; q]].concat())
    }

    /// `N^q E^p`.
    pub fn north_first(p: usize, q: usize) -> Self {
        LatticePath([vec![Step::N; q], vec![Step::E; p]].concat())
    }

    /// `(node, step)` pairs walked from `(0, 0)`.
    pub fn walk(&self) -> impl Iterator<Item = ((usize, usize), Step)> + '_ {
        let (mut i, mut j) = (0, 0);
        self.0.iter().map(move |&s| {
            let at = (i, j);
            match s {
                Step::E => i += 1,
                Step::N => j += 1,
            }
            (at, s)
        })
    }

    /// Every path with `p` E-steps and `q` N-steps, lexicographic with
    /// `E < N`.
    pub fn all(p: usize, q: usize) -> Vec<LatticePath> {
        fn rec(p: usize, q: usize, cur: &mut Vec<Step>, out: &mut Vec<LatticePath>) {
            if p == 0 && q == 0 {
                out.push(LatticePath(cur.clone()));
                return;
            }
            if p > 0 {
                cur.push(Step::E);
                rec(p - 1, q, cur, out);
                cur.pop();
            }
            if q > 0 {
                cur.push(Step::N);
                rec(p, q - 1, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(p, q, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for LatticePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.0 {
            f.write_str(if *s == Step::E { "E" } else { "N" })?;
        }
        Ok(())
    }
}

impl FromStr for LatticePath {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        s.trim()
            .chars()
            .map(|c| match c.to_ascii_uppercase() {
                'E' => Ok(Step::E),
                'N' => Ok(Step::N),
                _ => Err(Error::Parse { line: 1, message: format!("unexpected step {c:?}") }),
            })
            .collect::<Result<Vec<_>>>()
            .map(LatticePath)
    }
}

impl Serialize for LatticePath {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct PairSequence {
    pub a: ParkingVector,
    pub b: ParkingVector,
}

impl PairSequence {
    pub fn new(a: Vec<u32>, b: Vec<u32>) -> Self {
        PairSequence { a: ParkingVector(a), b: ParkingVector(b) }
    }

    /// Splits a vector over `1..=p+q` into its A and B parts.
    pub fn split(x: &ParkingVector, p: usize) -> Self {
        PairSequence::new(x[..p].to_vec(), x[p..].to_vec())
    }

    pub fn concat(&self) -> ParkingVector {
        ParkingVector([self.a.0.as_slice(), self.b.0.as_slice()].concat())
    }

    /// Both blocks sorted.
    pub fn increasing(&self) -> Self {
        PairSequence { a: self.a.order_statistics(), b: self.b.order_statistics() }
    }

    pub fn sum(&self) -> u64 {
        self.a.sum() + self.b.sum()
    }
}

impl fmt::Display for PairSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{};{}", self.a, self.b)
    }
}

impl FromStr for PairSequence {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let (a, b) =
            s.split_once(';').ok_or(Error::Parse { line: 1, message: "pair needs the form \"a,..;b,..\"".into() })?;
        Ok(PairSequence { a: a.parse()?, b: b.parse()? })
    }
}

#[derive(Deserialize)]
struct VectorsForm {
    u: Vec<u32>,
    v: Vec<u32>,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum GridFile {
    Explicit { p: usize, q: usize, u: Vec<Vec<u32>>, v: Vec<Vec<u32>> },
    Affine { p: usize, q: usize, affine: AffineParams },
    Vectors { vectors: VectorsForm },
}

/// Parses the JSON grid forms `{p, q, u, v}`, `{p, q, affine}` and
/// `{vectors: {u, v}}`. Affine grids also report their parameters.
pub fn parse_grid(text: &str) -> Result<(WeightGrid, Option<AffineParams>)> {
    let file: GridFile = serde_json::from_str(text).map_err(|e| Error::Parse {
        line: e.line(),
        message: format!("not a grid object ({e}); expected {{p,q,u,v}}, {{p,q,affine}} or {{vectors}}"),
    })?;
    match file {
        GridFile::Explicit { p, q, u, v } => Ok((WeightGrid::new(p, q, u, v)?, None)),
        GridFile::Affine { p, q, affine } => Ok((WeightGrid::from_affine(p, q, &affine)?, Some(affine))),
        GridFile::Vectors { vectors } => Ok((WeightGrid::from_vectors(&vectors.u, &vectors.v)?, None)),
    }
}
