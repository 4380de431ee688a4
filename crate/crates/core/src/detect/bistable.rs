//! Bistable graphs (connected, bipartite, with exactly the two partite sets
//! as maximum independent sets) and the bistable rank.

use rayon::prelude::*;

use crate::bits::{self, bit, Mask};
use crate::error::{check_cap, Result};
use crate::graph::Graph;
use crate::matching::{bipartition, maximum_independent_sets, Coloring};
use crate::vset::VertexSet;

/// A bistable graph's partite sets and its enumerated maximum independent
/// sets (at most three are ever listed).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BistableWitness {
    pub left: VertexSet,
    pub right: VertexSet,
    pub maximum_sets: Vec<VertexSet>,
}

impl BistableWitness {
    /// Size of the maximum independent sets.
    pub fn rank(&self) -> usize {
        self.left.len()
    }
}

/// Why a graph is not bistable.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Refusal {
    /// The graph has no vertices.
    Empty,
    Disconnected,
    NotBipartite { odd_cycle: Vec<usize> },
    /// The maximum independent sets (up to three listed) are not exactly the
    /// two partite sets.
    MaximumSets { found: Vec<VertexSet> },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Bistability {
    Bistable(BistableWitness),
    Refused(Refusal),
}

impl Bistability {
    pub fn is_bistable(&self) -> bool {
        matches!(self, Bistability::Bistable(_))
    }

    pub fn rank(&self) -> Option<usize> {
        match self {
            Bistability::Bistable(w) => Some(w.rank()),
            Bistability::Refused(_) => None,
        }
    }
}

/// Decides bistability: connectivity, then a two-coloring, then the maximum
/// independent sets (enumeration stops after three).
pub fn is_bistable(g: &Graph, cap: usize) -> Result<Bistability> {
    check_cap("bistable check", g.n(), cap)?;
    if g.n() == 0 {
        return Ok(Bistability::Refused(Refusal::Empty));
    }
    if !g.is_connected() {
        return Ok(Bistability::Refused(Refusal::Disconnected));
    }
    let bip = match bipartition(g) {
        Coloring::Bipartite(b) => b,
        Coloring::OddCycle(c) => return Ok(Bistability::Refused(Refusal::NotBipartite { odd_cycle: c })),
    };
    let found = maximum_independent_sets(g, 3)?;
    let sides_only = found.len() == 2 && found.iter().all(|w| *w == bip.left || *w == bip.right);
    Ok(if sides_only {
        Bistability::Bistable(BistableWitness {
            left: bip.left,
            right: bip.right,
            maximum_sets: found,
        })
    } else {
        Bistability::Refused(Refusal::MaximumSets { found })
    })
}

/// The bistable rank and the vertex set of a largest induced bistable
/// subgraph (`None` when the graph has no edges and the rank is 1 by
/// convention).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankReport {
    pub rank: usize,
    pub witness: Option<VertexSet>,
}

/// Largest rank of an induced bistable subgraph, by scanning vertex subsets
/// of size `2r` for decreasing `r`; within a size the lexicographically
/// first bistable subset is the witness. Cheap necessary conditions
/// (connected, bipartite, balanced, biconnected, perfect matching) are
/// checked before counting independent sets.
pub fn bistable_rank(g: &Graph, cap: usize) -> Result<RankReport> {
    check_cap("bistable rank", g.n(), cap.min(64))?;
    let adj = g.masks()?;
    rank_search(g, &adj, |sub| filtered_bistable(&adj, sub))
}

/// [`bistable_rank`] without the necessary-condition filters: every subset is
/// judged by its full list of maximum independent sets. Exponential in the
/// square; meant for cross-checking on small graphs.
pub fn bistable_rank_exhaustive(g: &Graph, cap: usize) -> Result<RankReport> {
    check_cap("exhaustive bistable rank", g.n(), cap.min(20))?;
    let adj = g.masks()?;
    rank_search(g, &adj, |sub| plain_bistable(&adj, sub))
}

fn rank_search(g: &Graph, adj: &[Mask], test: impl Fn(Mask) -> bool + Sync) -> Result<RankReport> {
    let all = bits::low_bits(adj.len());
    for r in (1..=adj.len() / 2).rev() {
        let mut layer = Vec::new();
        bits::for_each_subset_of_size(all, 2 * r, |m| {
            layer.push(m);
            true
        });
        if let Some(&m) = layer.par_iter().find_first(|&&m| test(m)) {
            return Ok(RankReport {
                rank: r,
                witness: Some(VertexSet::from_mask(g.n(), m)),
            });
        }
    }
    Ok(RankReport { rank: 1, witness: None })
}

/// Two-coloring of `G[sub]` with the lowest vertex on the left, if connected
/// and bipartite.
fn connected_sides(adj: &[Mask], sub: Mask) -> Option<(Mask, Mask)> {
    let start = sub.trailing_zeros() as usize;
    let (mut left, mut right) = (bit(start), 0);
    let mut frontier = bit(start);
    let mut on_left = true;
    while frontier != 0 {
        let next = bits::open_nbhd(adj, frontier) & sub & !(left | right);
        // a frontier vertex adjacent to its own side means an odd cycle
        let own = if on_left { left } else { right };
        if bits::ones(frontier).any(|v| adj[v] & own != 0) {
            return None;
        }
        if on_left {
            right |= next;
        } else {
            left |= next;
        }
        on_left = !on_left;
        frontier = next;
    }
    (left | right == sub).then_some((left, right))
}

fn is_connected_mask(adj: &[Mask], sub: Mask) -> bool {
    if sub == 0 {
        return true;
    }
    let mut seen = bit(sub.trailing_zeros() as usize);
    let mut frontier = seen;
    while frontier != 0 {
        frontier = bits::open_nbhd(adj, frontier) & sub & !seen;
        seen |= frontier;
    }
    seen == sub
}

fn has_perfect_matching(adj: &[Mask], left: Mask, right: Mask) -> bool {
    fn augment(adj: &[Mask], v: usize, right: Mask, seen: &mut Mask, mate: &mut [usize]) -> bool {
        for u in bits::ones(adj[v] & right & !*seen) {
            *seen |= bit(u);
            if mate[u] == usize::MAX || augment(adj, mate[u], right, seen, mate) {
                mate[u] = v;
                return true;
            }
        }
        false
    }
    let mut mate = vec![usize::MAX; adj.len()];
    bits::ones(left).all(|v| augment(adj, v, right, &mut 0, &mut mate))
}

/// Number of independent `k`-subsets of `cand`, counting no further than `limit`.
fn count_independent(adj: &[Mask], cand: Mask, k: usize, limit: usize) -> usize {
    fn go(adj: &[Mask], cand: Mask, need: usize, limit: usize, found: &mut usize) {
        if need == 0 {
            *found += 1;
            return;
        }
        let mut rest = cand;
        while bits::count(rest) >= need && *found < limit {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            go(adj, rest & !adj[v], need - 1, limit, found);
        }
    }
    let mut found = 0;
    go(adj, cand, k, limit, &mut found);
    found
}

fn filtered_bistable(adj: &[Mask], sub: Mask) -> bool {
    let Some((left, right)) = connected_sides(adj, sub) else {
        return false;
    };
    let r = bits::count(left);
    if r != bits::count(right) {
        return false;
    }
    let biconnected = r == 1 || bits::ones(sub).all(|v| is_connected_mask(adj, sub & !bit(v)));
    biconnected
        && has_perfect_matching(adj, left, right)
        // both sides are independent r-sets; a perfect matching rules out larger ones
        && count_independent(adj, sub, r, 3) == 2
}

fn plain_bistable(adj: &[Mask], sub: Mask) -> bool {
    let Some((left, right)) = connected_sides(adj, sub) else {
        return false;
    };
    let mut best = 0;
    let mut maximum = Vec::new();
    let mut s = sub;
    loop {
        if bits::is_independent(adj, s) {
            let size = bits::count(s);
            if size > best {
                best = size;
                maximum.clear();
            }
            if size == best {
                maximum.push(s);
            }
        }
        if s == 0 {
            break;
        }
        s = (s - 1) & sub;
    }
    maximum.len() == 2 && maximum.iter().all(|&w| w == left || w == right)
}
