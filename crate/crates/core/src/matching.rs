//! Bipartitions, maximum matchings, and the König certificates built from them.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vset::VertexSet;

/// Two-coloring of a bipartite graph. In every connected component the
/// lowest-id vertex is on the left.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bipartition {
    pub left: VertexSet,
    pub right: VertexSet,
}

impl Bipartition {
    pub fn side_of(&self, v: usize) -> Side {
        if self.left.contains(v) {
            Side::Left
        } else {
            Side::Right
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// Outcome of two-coloring a graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Coloring {
    Bipartite(Bipartition),
    /// An odd cycle as a list of distinct vertices; consecutive entries (and
    /// the last and first) are adjacent.
    OddCycle(Vec<usize>),
}

/// Breadth-first two-coloring, component by component in increasing order of
/// the component's smallest vertex.
pub fn bipartition(g: &Graph) -> Coloring {
    let n = g.n();
    let mut color: Vec<Option<bool>> = vec![None; n];
    let mut parent = vec![usize::MAX; n];
    let mut depth = vec![0usize; n];
    for s in 0..n {
        if color[s].is_some() {
            continue;
        }
        color[s] = Some(false);
        let mut queue = VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            let cv = color[v].expect("queued vertices are colored");
            for u in g.neighbors(v).iter() {
                match color[u] {
                    None => {
                        color[u] = Some(!cv);
                        parent[u] = v;
                        depth[u] = depth[v] + 1;
                        queue.push_back(u);
                    }
                    Some(cu) if cu == cv => {
                        return Coloring::OddCycle(odd_cycle(&parent, &depth, v, u));
                    }
                    Some(_) => {}
                }
            }
        }
    }
    let mut left = VertexSet::new(n);
    let mut right = VertexSet::new(n);
    for (v, c) in color.iter().enumerate() {
        if *c == Some(false) {
            left.insert(v);
        } else {
            right.insert(v);
        }
    }
    Coloring::Bipartite(Bipartition { left, right })
}

/// Closes the BFS-tree paths from `a` and `b` (same layer parity, adjacent)
/// at their lowest common ancestor.
fn odd_cycle(parent: &[usize], depth: &[usize], a: usize, b: usize) -> Vec<usize> {
    let (mut x, mut y) = (a, b);
    let mut left = vec![x];
    let mut right = vec![y];
    while depth[x] > depth[y] {
        x = parent[x];
        left.push(x);
    }
    while depth[y] > depth[x] {
        y = parent[y];
        right.push(y);
    }
    while x != y {
        x = parent[x];
        y = parent[y];
        left.push(x);
        right.push(y);
    }
    right.pop();
    right.reverse();
    left.extend(right);
    left
}

/// Convenience: the bipartition or an input error naming the odd cycle.
pub fn require_bipartite(g: &Graph) -> Result<Bipartition> {
    match bipartition(g) {
        Coloring::Bipartite(b) => Ok(b),
        Coloring::OddCycle(c) => Err(Error::input(format!("graph is not bipartite (odd cycle {c:?})"))),
    }
}

/// A set of vertex-disjoint edges, stored as a partner table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matching {
    mate: Vec<Option<usize>>,
}

impl Matching {
    pub fn len(&self) -> usize {
        self.mate.iter().filter(|m| m.is_some()).count() / 2
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn mate(&self, v: usize) -> Option<usize> {
        self.mate[v]
    }

    /// Matched pairs `(u, v)` with `u < v`, sorted.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        self.mate
            .iter()
            .enumerate()
            .filter_map(|(u, m)| m.filter(|&v| u < v).map(|v| (u, v)))
            .collect()
    }

    pub fn covers(&self, set: &VertexSet) -> bool {
        set.iter().all(|v| self.mate[v].is_some())
    }

    /// Vertices of `side` reachable by alternating paths that start at an
    /// unmatched vertex of `side`. `None` when the matching covers `side`;
    /// otherwise the returned `S ⊆ side` has `|N(S)| < |S|`.
    ///
    /// `side` must be one color class of a bipartite graph and the matching
    /// must be maximum for the certificate to hold.
    pub fn hall_violator(&self, g: &Graph, side: &VertexSet) -> Option<VertexSet> {
        let free: Vec<usize> = side.iter().filter(|&v| self.mate[v].is_none()).collect();
        if free.is_empty() {
            return None;
        }
        let mut reach = VertexSet::new(g.n());
        let mut seen_other = VertexSet::new(g.n());
        let mut queue: VecDeque<usize> = free.into_iter().collect();
        for &v in &queue {
            reach.insert(v);
        }
        while let Some(v) = queue.pop_front() {
            for u in g.neighbors(v).iter() {
                if seen_other.contains(u) {
                    continue;
                }
                seen_other.insert(u);
                if let Some(w) = self.mate[u] {
                    if !reach.contains(w) {
                        reach.insert(w);
                        queue.push_back(w);
                    }
                }
            }
        }
        Some(reach)
    }
}

/// Maximum-cardinality matching of a bipartite graph by augmenting paths from
/// the left side, left vertices processed in increasing id order.
pub fn max_matching_bipartite(g: &Graph, bip: &Bipartition) -> Matching {
    let n = g.n();
    let mut mate = vec![None; n];
    for root in bip.left.iter() {
        let mut visited = vec![false; n];
        augment(g, root, &mut mate, &mut visited);
    }
    Matching { mate }
}

fn augment(g: &Graph, v: usize, mate: &mut [Option<usize>], visited: &mut [bool]) -> bool {
    for u in g.neighbors(v).iter() {
        if visited[u] {
            continue;
        }
        visited[u] = true;
        let free = match mate[u] {
            None => true,
            Some(w) => augment(g, w, mate, visited),
        };
        if free {
            mate[u] = Some(v);
            mate[v] = Some(u);
            return true;
        }
    }
    false
}

/// A maximum independent set of a bipartite graph via König: with `Z` the
/// vertices reachable from unmatched left vertices by alternating paths, the
/// set `(L ∩ Z) ∪ (R \ Z)` is independent and has size `n − ν`.
pub fn max_independent_set_bipartite(g: &Graph, bip: &Bipartition) -> VertexSet {
    let m = max_matching_bipartite(g, bip);
    let n = g.n();
    let mut z = VertexSet::new(n);
    let mut queue: VecDeque<usize> = bip.left.iter().filter(|&v| m.mate(v).is_none()).collect();
    for &v in &queue {
        z.insert(v);
    }
    while let Some(v) = queue.pop_front() {
        for u in g.neighbors(v).iter() {
            if z.contains(u) {
                continue;
            }
            z.insert(u);
            if let Some(w) = m.mate(u) {
                if !z.contains(w) {
                    z.insert(w);
                    queue.push_back(w);
                }
            }
        }
    }
    bip.left.intersection(&z).union(&bip.right.difference(&z))
}

/// Independence number of a bipartite graph.
pub fn independence_number_bipartite(g: &Graph, bip: &Bipartition) -> usize {
    g.n() - max_matching_bipartite(g, bip).len()
}

/// Enumerates maximum independent sets of a bipartite graph in lexicographic
/// order, stopping after `limit` sets. Branches on the lowest undecided vertex
/// and prunes with the König bound on the undecided part.
pub fn maximum_independent_sets(g: &Graph, limit: usize) -> Result<Vec<VertexSet>> {
    let bip = require_bipartite(g)?;
    let alpha = independence_number_bipartite(g, &bip);
    let mut out = Vec::new();
    if limit == 0 {
        return Ok(out);
    }
    let chosen = VertexSet::new(g.n());
    let free = g.vertex_set();
    mis_search(g, &bip, alpha, chosen, free, limit, &mut out);
    Ok(out)
}

fn mis_search(
    g: &Graph,
    bip: &Bipartition,
    alpha: usize,
    chosen: VertexSet,
    free: VertexSet,
    limit: usize,
    out: &mut Vec<VertexSet>,
) {
    if out.len() >= limit {
        return;
    }
    let Some(v) = free.first() else {
        if chosen.len() == alpha {
            out.push(chosen);
        }
        return;
    };
    let (sub, _) = g.induced_subgraph(&free).expect("free is within range");
    let sub_bip = restrict_bipartition(bip, &free);
    if chosen.len() + independence_number_bipartite(&sub, &sub_bip) < alpha {
        return;
    }
    let mut with = chosen.clone();
    with.insert(v);
    let mut free_with = free.difference(g.neighbors(v));
    free_with.remove(v);
    mis_search(g, bip, alpha, with, free_with, limit, out);
    let mut free_without = free;
    free_without.remove(v);
    mis_search(g, bip, alpha, chosen, free_without, limit, out);
}

/// Bipartition of `G[U]` inherited from `bip`, in the compacted numbering of
/// [`Graph::induced_subgraph`].
fn restrict_bipartition(bip: &Bipartition, set: &VertexSet) -> Bipartition {
    let k = set.len();
    let mut left = VertexSet::new(k);
    let mut right = VertexSet::new(k);
    for (i, v) in set.iter().enumerate() {
        if bip.left.contains(v) {
            left.insert(i);
        } else {
            right.insert(i);
        }
    }
    Bipartition { left, right }
}
