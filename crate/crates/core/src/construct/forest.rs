//! Unit-jump reconfiguration in forests, leaf first.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::reconfig::Sequence;
use crate::vset::VertexSet;

use super::{active_neighbors, Pair};

/// Reconfigures `i` into `j` in a forest using jumps of one token.
///
/// Repeatedly takes the lowest-id target vertex of degree at most one in
/// `G[I Δ J]` (one always exists in a balanced bipartite forest), and moves
/// onto it the token of its unique neighbor, or the lowest-id token if it is
/// isolated.
pub fn mtj_forest(g: &Graph, i: &VertexSet, j: &VertexSet) -> Result<Sequence> {
    if !g.is_forest() {
        return Err(Error::input("unit-jump forest reconfiguration needs an acyclic graph"));
    }
    let pair = Pair::new(g, i, j)?;
    let sets = forest_moves(g, &pair.source, &pair.target)
        .into_iter()
        .scan(pair.source.clone(), |cur, (u, v)| {
            cur.remove(u);
            cur.insert(v);
            Some(cur.clone())
        });
    let mut all = vec![pair.source.clone()];
    all.extend(sets);
    Ok(pair.lift(all))
}

/// The unit jumps `(from, to)` that carry tokens on `a` onto `b` when
/// `G[a ∪ b]` is a forest and `|a| = |b|`, `a ∩ b = ∅`.
pub(crate) fn forest_moves(g: &Graph, a: &VertexSet, b: &VertexSet) -> Vec<(usize, usize)> {
    let mut active = a.union(b);
    let mut tokens = a.clone();
    let mut targets = b.clone();
    let mut moves = Vec::with_capacity(a.len());
    loop {
        let Some(v) = targets.iter().find(|&v| active_neighbors(g, &active, v).len() <= 1) else {
            break;
        };
        let u = active_neighbors(g, &active, v)
            .first()
            .or_else(|| tokens.first())
            .expect("balanced instance has a token left");
        moves.push((u, v));
        tokens.remove(u);
        targets.remove(v);
        active.remove(u);
        active.remove(v);
    }
    assert!(targets.is_empty(), "G[I Δ J] must be a forest");
    moves
}
