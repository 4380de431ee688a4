//! Token jumping with jumps bounded by the vertex cover number.

use crate::cover::min_vertex_cover;
use crate::error::Result;
use crate::graph::Graph;
use crate::reconfig::Sequence;
use crate::vset::VertexSet;

use super::Pair;

/// Reconfigures `i` into `j` with jumps of at most `max(vc(G), 1)` tokens.
///
/// Works on `G[I Δ J]` with a minimum vertex cover `S` of the current
/// sub-instance, oriented so that the source side meets `S` at least as much
/// as the target side:
/// * `S = ∅`: move tokens one at a time, pairing sources and targets by id;
/// * `|I'| ≤ |S|`: one jump of all tokens;
/// * otherwise: jump the `s` tokens on `I' ∩ S` onto the `s` lowest-id
///   vertices `Z ⊆ J' \ S`, then recurse on the rest with `Z` held fixed.
pub fn mtj_by_vertex_cover(g: &Graph, i: &VertexSet, j: &VertexSet) -> Result<Sequence> {
    let pair = Pair::new(g, i, j)?;
    let sets = solve(g, &pair.source, &pair.target)?;
    Ok(pair.lift(sets))
}

fn solve(g: &Graph, a: &VertexSet, b: &VertexSet) -> Result<Vec<VertexSet>> {
    if a.is_empty() {
        return Ok(vec![a.clone()]);
    }
    let active = a.union(b);
    let (h, map) = g.induced_subgraph(&active)?;
    // bipartite (two independent sides), so this is the uncapped König route
    let cover_local = min_vertex_cover(&h, usize::MAX)?;
    let cover = VertexSet::from_ids(g.n(), cover_local.iter().map(|x| map[x]))?;

    if a.intersection(&cover).len() < b.intersection(&cover).len() {
        let mut rev = solve(g, b, a)?;
        rev.reverse();
        return Ok(rev);
    }

    if cover.is_empty() {
        let mut cur = a.clone();
        let mut out = vec![cur.clone()];
        for (x, y) in a.iter().zip(b.iter()) {
            cur.remove(x);
            cur.insert(y);
            out.push(cur.clone());
        }
        return Ok(out);
    }

    if a.len() <= cover.len() {
        return Ok(vec![a.clone(), b.clone()]);
    }

    let lifted = a.intersection(&cover);
    let z = VertexSet::from_ids(g.n(), b.difference(&cover).iter().take(lifted.len()))?;
    let a_rest = a.difference(&cover);
    let b_rest = b.difference(&z);
    let mut out = vec![a.clone()];
    for w in solve(g, &a_rest, &b_rest)? {
        out.push(w.union(&z));
    }
    Ok(out)
}
