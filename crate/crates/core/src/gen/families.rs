//! Cycles, complete bipartite graphs, and pumpkins.

use crate::detect::PumpkinWitness;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// The cycle `0 – 1 – … – (len − 1) – 0`.
pub fn cycle(len: usize) -> Result<Graph> {
    if len < 3 {
        return Err(Error::input(format!("a cycle needs at least 3 vertices, got {len}")));
    }
    Graph::from_edges(len, (0..len).map(|i| (i, (i + 1) % len)))
}

/// `K_{a,b}` with left ids `0..a` and right ids `a..a + b`.
pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph> {
    if a == 0 || b == 0 {
        return Err(Error::input("complete bipartite sides must be nonempty"));
    }
    Graph::from_edges(a + b, (0..a).flat_map(|i| (0..b).map(move |j| (i, a + j))))
}

/// The pumpkin with terminals 0 and 1 joined by paths of the given odd
/// lengths, interiors numbered consecutively path by path from 2.
pub fn pumpkin(path_lengths: &[usize]) -> Result<(Graph, PumpkinWitness)> {
    if path_lengths.len() < 2 {
        return Err(Error::input("a pumpkin needs at least two paths"));
    }
    if let Some(&l) = path_lengths.iter().find(|&&l| l % 2 == 0) {
        return Err(Error::input(format!("pumpkin path lengths must be odd, got {l}")));
    }
    if path_lengths.iter().filter(|&&l| l == 1).count() > 1 {
        return Err(Error::input("at most one pumpkin path can be the single edge"));
    }
    let n = 2 + path_lengths.iter().map(|l| l - 1).sum::<usize>();
    let mut g = Graph::new(n);
    let mut next = 2;
    let mut paths = Vec::with_capacity(path_lengths.len());
    for &l in path_lengths {
        let mut p = vec![0];
        p.extend(next..next + l - 1);
        p.push(1);
        next += l - 1;
        for w in p.windows(2) {
            g.add_edge(w[0], w[1])?;
        }
        paths.push(p);
    }
    let witness = PumpkinWitness { u: 0, v: 1, paths, size: n };
    Ok((g, witness))
}
