//! Exact minimum vertex covers and feedback vertex sets.

use crate::bits::{self, bit, Mask};
use crate::error::{check_cap, Result};
use crate::graph::Graph;
use crate::matching::{bipartition, max_independent_set_bipartite, Coloring};
use crate::vset::VertexSet;

/// A minimum vertex cover. Bipartite graphs use König (complement of a
/// maximum independent set, polynomial and uncapped); other graphs use
/// branch and bound on uncovered edges, capped at `cap` vertices.
pub fn min_vertex_cover(g: &Graph, cap: usize) -> Result<VertexSet> {
    if let Coloring::Bipartite(bip) = bipartition(g) {
        return Ok(max_independent_set_bipartite(g, &bip).complement());
    }
    check_cap("minimum vertex cover", g.n(), cap.min(64))?;
    let adj = g.masks()?;
    let mut best = bits::low_bits(g.n());
    vc_branch(&adj, 0, &mut best);
    Ok(VertexSet::from_mask(g.n(), best))
}

fn vc_branch(adj: &[Mask], chosen: Mask, best: &mut Mask) {
    if bits::count(chosen) >= bits::count(*best) {
        return;
    }
    // highest-degree uncovered vertex; its uncovered neighbors otherwise
    let mut pick = None;
    let mut pick_deg = 0;
    for (v, &nb) in adj.iter().enumerate() {
        if chosen & bit(v) != 0 {
            continue;
        }
        let d = bits::count(nb & !chosen);
        if d > pick_deg {
            pick_deg = d;
            pick = Some(v);
        }
    }
    let Some(v) = pick else {
        *best = chosen;
        return;
    };
    // a matching-free lower bound: each remaining edge needs one more vertex,
    // and no vertex covers more than pick_deg of them
    let remaining: usize = (0..adj.len())
        .filter(|&u| chosen & bit(u) == 0)
        .map(|u| bits::count(adj[u] & !chosen))
        .sum::<usize>()
        / 2;
    if bits::count(chosen) + remaining.div_ceil(pick_deg) >= bits::count(*best) {
        return;
    }
    vc_branch(adj, chosen | bit(v), best);
    let nbrs = adj[v] & !chosen;
    vc_branch(adj, chosen | nbrs, best);
}

/// True iff `set` touches every edge of `g`.
pub fn is_vertex_cover(g: &Graph, set: &VertexSet) -> bool {
    g.edges()
        .iter()
        .all(|&(u, v)| set.contains(u) || set.contains(v))
}

/// A minimum feedback vertex set: subsets of increasing size in lexicographic
/// order, the first whose removal leaves a forest.
pub fn min_fvs(g: &Graph, cap: usize) -> Result<VertexSet> {
    check_cap("minimum feedback vertex set", g.n(), cap.min(64))?;
    if g.is_forest() {
        return Ok(g.empty_set());
    }
    let adj = g.masks()?;
    let all = bits::low_bits(g.n());
    for k in 1..=g.n() {
        let mut found = None;
        bits::for_each_subset_of_size(all, k, |s| {
            if is_acyclic(&adj, all & !s) {
                found = Some(s);
                false
            } else {
                true
            }
        });
        if let Some(s) = found {
            return Ok(VertexSet::from_mask(g.n(), s));
        }
    }
    unreachable!("removing every vertex leaves a forest")
}

/// True iff `g − set` is a forest.
pub fn is_feedback_vertex_set(g: &Graph, set: &VertexSet) -> Result<bool> {
    let rest = g.own(set)?.complement();
    Ok(g.induced_subgraph(&rest)?.0.is_forest())
}

/// Acyclicity of the subgraph induced by `keep`: edges + components = vertices.
pub(crate) fn is_acyclic(adj: &[Mask], keep: Mask) -> bool {
    let mut edges = 0;
    for v in bits::ones(keep) {
        edges += bits::count(adj[v] & keep);
    }
    edges /= 2;
    let mut comps = 0;
    let mut left = keep;
    while left != 0 {
        comps += 1;
        let mut frontier = left & left.wrapping_neg();
        let mut comp = frontier;
        while frontier != 0 {
            let mut next = 0;
            for v in bits::ones(frontier) {
                next |= adj[v] & keep;
            }
            frontier = next & !comp;
            comp |= next;
        }
        left &= !comp;
    }
    edges + comps == bits::count(keep)
}
