use std::fmt::Write;

use super::{GraphBuilder, RootedWeightedGraph};
use crate::error::{Error, Result};

fn fields(line: &str) -> Vec<&str> {
    let body = match line.find('#') {
        Some(k) => &line[..k],
        None => line,
    };
    body.split_whitespace().collect()
}

fn number<T: std::str::FromStr>(tok: &str, line: usize) -> Result<T> {
    tok.parse().map_err(|_| Error::Parse { line, message: format!("expected a natural number, got {tok:?}") })
}

/// Parses `n p q` followed by `i j w` lines; `p = q = 0` means no
/// bipartition.
pub fn parse_graph(text: &str) -> Result<RootedWeightedGraph> {
    let mut header: Option<(usize, usize, usize)> = None;
    let mut edges = Vec::new();
    for (k, raw) in text.lines().enumerate() {
        let line = k + 1;
        let f = fields(raw);
        if f.is_empty() {
            continue;
        }
        if f.len() != 3 {
            return Err(Error::Parse { line, message: format!("expected 3 fields, got {}", f.len()) });
        }
        let (x, y, z) = (number(f[0], line)?, number(f[1], line)?, number::<u64>(f[2], line)?);
        if header.is_none() {
            header = Some((x, y, z as usize));
        } else {
            let w = u32::try_from(z).map_err(|_| Error::Parse { line, message: "weight too large".into() })?;
            edges.push((x, y, w));
        }
    }
    let (n, p, q) = header.ok_or(Error::Parse { line: 0, message: "missing header".into() })?;
    let mut b = GraphBuilder::new(n).edges(&edges);
    if p != 0 || q != 0 {
        b = b.bipartition(p, q);
    }
    b.build()
}

pub fn to_canonical_text(g: &RootedWeightedGraph) -> String {
    let (p, q) = g.bipartition().map_or((0, 0), |b| (b.p, b.q));
    let mut s = format!("{} {} {}\n", g.n_nonroot(), p, q);
    for e in g.edges() {
        writeln!(s, "{} {} {}", e.u, e.v, e.weight).unwrap();
    }
    s
}
