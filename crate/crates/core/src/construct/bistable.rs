//! Token jumping with jumps bounded by the bistable rank.

use crate::error::Result;
use crate::graph::Graph;
use crate::reconfig::Sequence;
use crate::vset::VertexSet;

use super::heavy::minimal_heavy_within;
use super::{active_neighbors, Pair};

/// Reconfigures `i` into `j` with jumps of at most `bi(G)` tokens.
///
/// On `G[I Δ J]`: if a target vertex is isolated, one token jumps onto it;
/// if only a source vertex is isolated, the reversed instance is solved;
/// otherwise the tokens on `N(S)` for a minimal heavy set `S` of targets
/// jump onto `S` together. `G[N[S]]` is bistable of rank `|S|`.
pub fn mtj_by_bistable(g: &Graph, i: &VertexSet, j: &VertexSet) -> Result<Sequence> {
    let pair = Pair::new(g, i, j)?;
    Ok(pair.lift(solve(g, &pair.source, &pair.target)))
}

fn solve(g: &Graph, a: &VertexSet, b: &VertexSet) -> Vec<VertexSet> {
    let mut active = a.union(b);
    let mut cur = a.clone();
    let mut out = vec![cur.clone()];
    loop {
        let targets = b.intersection(&active);
        if targets.is_empty() {
            return out;
        }
        let tokens = cur.intersection(&active);
        let isolated = |side: &VertexSet| side.iter().find(|&v| active_neighbors(g, &active, v).is_empty());
        if let Some(v) = isolated(&targets) {
            let u = tokens.first().expect("balanced instance");
            cur.remove(u);
            cur.insert(v);
            active.remove(u);
            active.remove(v);
            out.push(cur.clone());
            continue;
        }
        if isolated(&tokens).is_some() {
            let mut rest = solve(g, &targets, &tokens);
            rest.reverse();
            let fixed = cur.difference(&active);
            out.extend(rest.into_iter().skip(1).map(|w| w.union(&fixed)));
            return out;
        }
        let heavy = minimal_heavy_within(g, &active, &targets);
        debug_assert_eq!(heavy.set.len(), heavy.neighborhood.len());
        cur = cur.difference(&heavy.neighborhood).union(&heavy.set);
        active = active.difference(&heavy.set).difference(&heavy.neighborhood);
        out.push(cur.clone());
    }
}
