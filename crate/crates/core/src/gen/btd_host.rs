//! Canonical hosts carrying a complete binary tree as a bipartite
//! topological double minor.

use crate::detect::BtdModel;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// The host for the complete binary tree of depth `d` together with its model.
///
/// Tree vertices are numbered in heap order (children of `x` are `2x + 1`
/// and `2x + 2`). Each becomes a cycle `c_0 … c_{L−1}`: a 6-cycle for
/// internal non-root vertices (one parent link and two child links) and a
/// 4-cycle otherwise. Link `j` of a vertex uses the slot pair
/// `(c_{2j}, c_{2j+1})`; parent links come first. A tree edge becomes two
/// length-3 paths, `parent c_{2j} → child c_{2j'+1}` and
/// `parent c_{2j+1} → child c_{2j'}`, so even cycle positions all share a side.
/// Cycle vertices are numbered first, tree vertex by tree vertex; then the
/// two interior vertices of each path, edge by edge.
pub fn btd_tree_host(d: u32) -> Result<(Graph, BtdModel)> {
    if d > 10 {
        return Err(Error::Resource { what: "tree host depth", size: d as usize, cap: 10 });
    }
    let nodes = (1usize << (d + 1)) - 1;
    let pattern = Graph::from_edges(nodes, (1..nodes).map(|x| ((x - 1) / 2, x)))?;
    let cycle_len = |x: usize| if x != 0 && 2 * x + 1 < nodes { 6 } else { 4 };

    let mut phi = Vec::with_capacity(nodes);
    let mut next = 0;
    for x in 0..nodes {
        phi.push((next..next + cycle_len(x)).collect::<Vec<_>>());
        next += cycle_len(x);
    }
    // link index of child `c` at its parent, and of the parent link at `c`
    let child_link = |c: usize| {
        let parent_links = usize::from((c - 1) / 2 != 0);
        parent_links + (c - 1) % 2
    };

    let mut edges = Vec::new();
    for img in &phi {
        let k = img.len();
        edges.extend((0..k).map(|i| (img[i], img[(i + 1) % k])));
    }
    let mut psi1 = Vec::with_capacity(pattern.m());
    let mut psi2 = Vec::with_capacity(pattern.m());
    for (p, c) in pattern.edges() {
        let j = child_link(c);
        let (pa, pc) = (&phi[p], &phi[c]);
        let one = vec![pa[2 * j], next, next + 1, pc[1]];
        let two = vec![pa[2 * j + 1], next + 2, next + 3, pc[0]];
        next += 4;
        for path in [&one, &two] {
            edges.extend(path.windows(2).map(|w| (w[0], w[1])));
        }
        psi1.push(one);
        psi2.push(two);
    }
    let host = Graph::from_edges(next, edges)?;
    Ok((host, BtdModel { pattern, phi, psi1, psi2 }))
}
