//! Token addition/removal with buffer bounded by the pathwidth.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::pathdecomp::{exact_pathwidth, NicePathDecomposition};
use crate::reconfig::Sequence;
use crate::vset::VertexSet;

use super::heavy::minimal_heavy_within;
use super::{active_neighborhood, active_neighbors, Pair};

/// A reconfiguration sequence together with the per-phase bookkeeping.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathwidthRun {
    pub sequence: Sequence,
    /// Width of the decomposition that drove the run (restricted to `I Δ J`).
    pub width: usize,
    pub phases: Vec<PhaseTrace>,
}

/// One heavy-set phase: its vertices in increasing last-bag order, and after
/// each grouped step `t` the buffer size `|B_t|` and the excess
/// `|N({i_1..i_t})| − t` measured in the current sub-instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PhaseTrace {
    pub order: Vec<usize>,
    pub buffer_sizes: Vec<usize>,
    pub prefix_excess: Vec<usize>,
}

/// Reconfigures `i` into `j` with buffer at most `max(width, 1)`.
///
/// `p` is a nice decomposition of `G` (original ids); it is restricted to
/// `I Δ J`. Without one, an optimal decomposition of `G[I Δ J]` is computed
/// (subject to `cap`). Each phase takes a minimal heavy set `S` of targets:
/// a singleton is filled after removing its only blocking token (or the
/// lowest-id token); otherwise `S` is processed in increasing last-bag order,
/// each `i_t` filled after lifting the tokens on its neighbors, and the
/// sub-instance shrinks by `S ∪ N(S)`.
pub fn tar_by_pathwidth(
    g: &Graph,
    i: &VertexSet,
    j: &VertexSet,
    p: Option<&NicePathDecomposition>,
    cap: usize,
) -> Result<PathwidthRun> {
    let pair = Pair::new(g, i, j)?;
    let local = pair.localize(g)?;
    let h = &local.graph;
    let nice = match p {
        Some(p) => restrict(g, h, &local.map, p)?,
        None => exact_pathwidth(h, cap)?.1,
    };
    let width = nice.width();
    let last = nice.lr_maps().r;

    let mut active = h.vertex_set();
    let mut cur = local.source.clone();
    let mut out = vec![cur.clone()];
    let mut phases = Vec::new();
    loop {
        let targets = local.target.intersection(&active);
        if targets.is_empty() {
            break;
        }
        let heavy = minimal_heavy_within(h, &active, &targets);
        if heavy.set.len() == 1 {
            let v = heavy.set.first().expect("nonempty");
            let u = heavy
                .neighborhood
                .first()
                .or_else(|| cur.intersection(&active).first())
                .expect("balanced instance");
            cur.remove(u);
            out.push(cur.clone());
            cur.insert(v);
            out.push(cur.clone());
            active.remove(u);
            active.remove(v);
            continue;
        }

        let mut order = heavy.set.to_vec();
        order.sort_by_key(|&v| last[v]);
        let mut buffer = VertexSet::new(h.n());
        let mut prefix = VertexSet::new(h.n());
        let mut trace = PhaseTrace {
            order: order.iter().map(|&v| local.map[v]).collect(),
            buffer_sizes: Vec::with_capacity(order.len()),
            prefix_excess: Vec::with_capacity(order.len()),
        };
        for (t, &v) in order.iter().enumerate() {
            let lifted = active_neighbors(h, &active, v).intersection(&cur);
            for u in lifted.iter() {
                cur.remove(u);
                out.push(cur.clone());
            }
            let u = buffer
                .first()
                .or_else(|| lifted.first())
                .expect("a token is available for every heavy-set vertex");
            buffer.union_with(&lifted);
            buffer.remove(u);
            cur.insert(v);
            out.push(cur.clone());
            prefix.insert(v);
            trace.buffer_sizes.push(buffer.len());
            trace.prefix_excess.push(active_neighborhood(h, &active, &prefix).len() - (t + 1));
        }
        phases.push(trace);
        active = active.difference(&heavy.set).difference(&heavy.neighborhood);
    }

    let sets = out.iter().map(|s| local.lift(s)).collect();
    Ok(PathwidthRun {
        sequence: pair.lift(sets),
        width,
        phases,
    })
}

/// `p` restricted to the vertices of `h` (original ids `map`), with repeated
/// consecutive bags collapsed; the result is nice and validated against `h`.
fn restrict(g: &Graph, h: &Graph, map: &[usize], p: &NicePathDecomposition) -> Result<NicePathDecomposition> {
    if p.bags().iter().any(|b| b.universe() != g.n()) {
        return Err(Error::input("decomposition bags do not match the graph's vertex count"));
    }
    let mut bags: Vec<VertexSet> = Vec::with_capacity(p.len());
    for b in p.bags() {
        let local = VertexSet::from_ids(h.n(), (0..h.n()).filter(|&x| b.contains(map[x])))?;
        if bags.last() != Some(&local) {
            bags.push(local);
        }
    }
    let nice = NicePathDecomposition::new(bags)?;
    nice.validate(h)
        .map_err(|v| Error::input(format!("invalid path decomposition: {v}")))?;
    Ok(nice)
}

/// For `s` ordered by increasing last bag in `nice` (a nice decomposition of
/// `g`), the pairs `(t, |N({i_1..i_t})|)` for every prefix length `t`.
pub fn prefix_neighborhoods(g: &Graph, s: &VertexSet, nice: &NicePathDecomposition) -> Result<Vec<(usize, usize)>> {
    let s = g.own(s)?;
    let last = nice.lr_maps().r;
    if last.len() != g.n() {
        return Err(Error::input("decomposition does not match the graph"));
    }
    let mut order = s.to_vec();
    order.sort_by_key(|&v| last[v]);
    let all = g.vertex_set();
    let mut prefix = g.empty_set();
    Ok(order
        .into_iter()
        .enumerate()
        .map(|(t, v)| {
            prefix.insert(v);
            (t + 1, active_neighborhood(g, &all, &prefix).len())
        })
        .collect())
}
