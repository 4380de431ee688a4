//! Token addition/removal with buffer bounded by a feedback vertex set.

use crate::cover::{is_feedback_vertex_set, min_fvs};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::reconfig::Sequence;
use crate::vset::VertexSet;

use super::forest::forest_moves;
use super::Pair;

/// Reconfigures `i` into `j` with buffer at most `|S| + 1`, where `S` is a
/// feedback vertex set of `G[I Δ J]`.
///
/// A supplied `fvs` is first restricted to `I Δ J`; without one, a minimum
/// feedback vertex set of `G[I Δ J]` is computed (subject to `cap`). With
/// `k = |S|`: if `|I \ J| ≤ k` every token is removed and then every target
/// filled. Otherwise the tokens on `S_I` (the sources in `S`, padded to `k`
/// with the lowest-id sources) go into the buffer, the remaining forest is
/// reconfigured one token at a time, and the buffer is emptied onto `S_J`
/// (built the same way on the target side).
pub fn tar_by_fvs(g: &Graph, i: &VertexSet, j: &VertexSet, fvs: Option<&VertexSet>, cap: usize) -> Result<Sequence> {
    let pair = Pair::new(g, i, j)?;
    let diff = pair.difference();
    let fvs = match fvs {
        Some(s) => {
            let s = g.own(s)?.intersection(&diff);
            let (h, map) = g.induced_subgraph(&diff)?;
            let local = VertexSet::from_ids(h.n(), (0..h.n()).filter(|&x| s.contains(map[x])))?;
            if !is_feedback_vertex_set(&h, &local)? {
                return Err(Error::input("supplied set is not a feedback vertex set of G[I Δ J]"));
            }
            s
        }
        None => {
            let local = pair.localize(g)?;
            local.lift(&min_fvs(&local.graph, cap)?)
        }
    };
    let k = fvs.len();

    let mut cur = pair.source.clone();
    let mut out = vec![cur.clone()];
    let mut step = |cur: &mut VertexSet, v: usize, add: bool| {
        if add {
            cur.insert(v);
        } else {
            cur.remove(v);
        }
        out.push(cur.clone());
    };

    if pair.source.len() <= k {
        for v in pair.source.iter() {
            step(&mut cur, v, false);
        }
        for v in pair.target.iter() {
            step(&mut cur, v, true);
        }
    } else {
        let s_i = padded(&pair.source, &fvs, k);
        let s_j = padded(&pair.target, &fvs, k);
        for v in s_i.iter() {
            step(&mut cur, v, false);
        }
        for (u, v) in forest_moves(g, &pair.source.difference(&s_i), &pair.target.difference(&s_j)) {
            step(&mut cur, u, false);
            step(&mut cur, v, true);
        }
        for v in s_j.iter() {
            step(&mut cur, v, true);
        }
    }
    Ok(pair.lift(out))
}

/// `side ∩ fvs` extended to `k` vertices with the lowest-id members of `side`.
fn padded(side: &VertexSet, fvs: &VertexSet, k: usize) -> VertexSet {
    let mut s = side.intersection(fvs);
    for v in side.difference(fvs).iter() {
        if s.len() >= k {
            break;
        }
        s.insert(v);
    }
    s
}
