//! Pumpkins: two terminals joined by at least two internally disjoint paths
//! of odd length, and the largest pumpkin subgraph of a graph.

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::bicon::biconnected_components;
use crate::bits::{self, bit, Mask};
use crate::error::{check_cap, Result};
use crate::graph::Graph;

/// A pumpkin subgraph: its terminals and its paths, each listed from `u` to `v`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PumpkinWitness {
    pub u: usize,
    pub v: usize,
    pub paths: Vec<Vec<usize>>,
    /// Total number of distinct vertices.
    pub size: usize,
}

impl PumpkinWitness {
    /// Checks the witness against `g`: at least two `u`–`v` paths of odd
    /// length along edges of `g`, with pairwise disjoint interiors that avoid
    /// the terminals, and a size equal to the vertex count.
    pub fn is_valid(&self, g: &Graph) -> bool {
        if self.paths.len() < 2 || self.u == self.v || self.u >= g.n() || self.v >= g.n() {
            return false;
        }
        let mut used = vec![false; g.n()];
        used[self.u] = true;
        used[self.v] = true;
        let mut size = 2;
        for p in &self.paths {
            let ends_ok = p.first() == Some(&self.u) && p.last() == Some(&self.v);
            if !ends_ok || p.len() % 2 != 0 || p.iter().any(|&x| x >= g.n()) {
                return false;
            }
            if !p.windows(2).all(|w| g.has_edge(w[0], w[1])) {
                return false;
            }
            for &x in &p[1..p.len() - 1] {
                if std::mem::replace(&mut used[x], true) {
                    return false;
                }
                size += 1;
            }
        }
        // a path of one edge may appear only once
        let direct = self.paths.iter().filter(|p| p.len() == 2).count();
        direct <= 1 && size == self.size
    }
}

/// The pumpkin number and a largest pumpkin (`(0, None)` when there is none).
///
/// A pumpkin is 2-connected, so terminals are taken from one block at a time.
/// For each terminal pair all odd paths inside the block are listed (one per
/// interior vertex set), then packed by backtracking over disjoint interiors.
/// Ties go to the lexicographically first terminal pair.
pub fn pumpkin_number(g: &Graph, cap: usize) -> Result<(usize, Option<PumpkinWitness>)> {
    check_cap("pumpkin number", g.n(), cap.min(64))?;
    let adj = g.masks()?;
    let pairs: Vec<(usize, usize, Mask)> = biconnected_components(g)
        .into_iter()
        .filter(|b| b.len() >= 4)
        .flat_map(|b| {
            let members = b.to_vec();
            let mask = b.to_mask().expect("at most 64 vertices");
            let mut out = Vec::new();
            for (x, &u) in members.iter().enumerate() {
                for &v in &members[x + 1..] {
                    out.push((u, v, mask));
                }
            }
            out
        })
        .collect();
    let mut results: Vec<Option<PumpkinWitness>> =
        pairs.par_iter().map(|&(u, v, block)| best_for_pair(&adj, u, v, block)).collect();
    let order: Vec<(usize, usize)> = pairs.iter().map(|&(u, v, _)| (u, v)).collect();
    let mut best: Option<(usize, usize)> = None; // (size, index)
    for (idx, r) in results.iter().enumerate() {
        if let Some(w) = r {
            let better = match best {
                None => true,
                Some((size, j)) => w.size > size || (w.size == size && order[idx] < order[j]),
            };
            if better {
                best = Some((w.size, idx));
            }
        }
    }
    Ok(match best {
        Some((size, idx)) => (size, results[idx].take()),
        None => (0, None),
    })
}

fn best_for_pair(adj: &[Mask], u: usize, v: usize, block: Mask) -> Option<PumpkinWitness> {
    let mut by_interior: BTreeMap<Mask, Vec<usize>> = BTreeMap::new();
    let mut path = vec![u];
    odd_paths(adj, v, block, bit(u), &mut path, &mut by_interior);
    let mut items: Vec<(Mask, Vec<usize>)> = by_interior.into_iter().collect();
    // larger interiors first; the map already ordered equal sizes by mask
    items.sort_by_key(|(m, _)| std::cmp::Reverse(bits::count(*m)));

    let mut best: Option<(usize, Vec<usize>)> = None;
    let mut chosen = Vec::new();
    let free = block & !bit(u) & !bit(v);
    pack(&items, 0, free, 0, &mut chosen, &mut best);
    best.map(|(interior, idx)| PumpkinWitness {
        u,
        v,
        paths: idx.into_iter().map(|i| items[i].1.clone()).collect(),
        size: interior + 2,
    })
}

/// Depth-first listing of simple `path[0]`–`target` paths inside `block`
/// with an odd number of edges, keeping the first path per interior set.
fn odd_paths(
    adj: &[Mask],
    target: usize,
    block: Mask,
    visited: Mask,
    path: &mut Vec<usize>,
    out: &mut BTreeMap<Mask, Vec<usize>>,
) {
    let last = *path.last().expect("path starts at the source");
    for w in bits::ones(adj[last] & block & !visited) {
        if w == target {
            // path.len() vertices so far; adding target gives path.len() edges
            if path.len() % 2 == 1 {
                let interior = path[1..].iter().fold(0, |m, &x| m | bit(x));
                out.entry(interior).or_insert_with(|| {
                    let mut p = path.clone();
                    p.push(target);
                    p
                });
            }
            continue;
        }
        path.push(w);
        odd_paths(adj, target, block, visited | bit(w), path, out);
        path.pop();
    }
}

fn pack(
    items: &[(Mask, Vec<usize>)],
    from: usize,
    free: Mask,
    interior: usize,
    chosen: &mut Vec<usize>,
    best: &mut Option<(usize, Vec<usize>)>,
) {
    if chosen.len() >= 2 && best.as_ref().is_none_or(|(b, _)| interior > *b) {
        *best = Some((interior, chosen.clone()));
    }
    if best.as_ref().is_some_and(|(b, _)| interior + bits::count(free) <= *b) {
        return;
    }
    for i in from..items.len() {
        let m = items[i].0;
        if m & !free == 0 {
            chosen.push(i);
            pack(items, i + 1, free & !m, interior + bits::count(m), chosen, best);
            chosen.pop();
        }
    }
}
