//! The super-pumpkin family: two copies of level `k − 1` glued into a
//! pumpkin with four length-3 paths.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vset::VertexSet;

/// Level `k` of the family with its terminals and the two independent sets
/// of half its size.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuperPumpkin {
    pub level: u32,
    pub graph: Graph,
    /// Terminals `(s, t)`, always `(0, 1)`.
    pub terminals: (usize, usize),
    /// The half-size independent sets containing `s` and `t` respectively.
    pub sets: [VertexSet; 2],
}

struct Raw {
    n: usize,
    edges: Vec<(usize, usize)>,
    with_s: Vec<usize>,
    with_t: Vec<usize>,
}

// Level ≥ 2 layout: s = 0, t = 1, u_i = 1 + i, v_i = 5 + i for i = 1..4,
// with paths s – u_i – v_i – t.
const S: usize = 0;
const T: usize = 1;
const fn u(i: usize) -> usize {
    1 + i
}
const fn v(i: usize) -> usize {
    5 + i
}

fn build(k: u32) -> Raw {
    if k == 1 {
        return Raw { n: 2, edges: vec![(S, T)], with_s: vec![S], with_t: vec![T] };
    }
    let sub = build(k - 1);
    let mut raw = Raw {
        n: 10,
        edges: (1..=4).flat_map(|i| [(S, u(i)), (u(i), v(i)), (v(i), T)]).collect(),
        with_s: vec![S, v(2), v(4)],
        with_t: vec![T, u(1), u(3)],
    };
    // copy 1 sits on (u_2, v_1), copy 2 on (u_4, v_3); the copy's s lands on a u
    for (at_s, at_t) in [(u(2), v(1)), (u(4), v(3))] {
        let base = raw.n;
        let map = |x: usize| match x {
            S => at_s,
            T => at_t,
            _ => base + x - 2,
        };
        raw.n += sub.n - 2;
        raw.edges.extend(sub.edges.iter().map(|&(a, b)| (map(a), map(b))));
        // the copy's s-set contains u_j, which sits with t's side here
        raw.with_t.extend(sub.with_s.iter().map(|&x| map(x)));
        raw.with_s.extend(sub.with_t.iter().map(|&x| map(x)));
    }
    raw
}

/// Builds level `k ≥ 1`: level 1 is a single edge; level `k` takes the
/// pumpkin on `s, t` with paths `s – u_i – v_i – t` (`i = 1..4`) and
/// identifies the terminals of one copy of level `k − 1` with `(u_2, v_1)`
/// and of another with `(u_4, v_3)`. Level 2 uses ids `s = 0`, `t = 1`,
/// `u_i = 1 + i`, `v_i = 5 + i`; each copy's other vertices follow in order.
pub fn super_pumpkin(k: u32) -> Result<SuperPumpkin> {
    if k == 0 {
        return Err(Error::input("super-pumpkin levels start at 1"));
    }
    if k > 20 {
        return Err(Error::Resource { what: "super-pumpkin level", size: k as usize, cap: 20 });
    }
    let raw = build(k);
    let graph = Graph::from_edges(raw.n, raw.edges)?;
    let sets = [VertexSet::from_ids(raw.n, raw.with_s)?, VertexSet::from_ids(raw.n, raw.with_t)?];
    Ok(SuperPumpkin { level: k, graph, terminals: (S, T), sets })
}
