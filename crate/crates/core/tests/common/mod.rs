//! Brute-force oracles written independently of the library: plain bitmask
//! enumeration over every subset, ordering or matching. Only for tiny graphs.

#![allow(dead_code)]

use std::collections::VecDeque;

use reconf::gen::{connected_graphs, random_bipartite};
use reconf::{Graph, VertexSet};

pub type Mask = u32;

pub fn adjacency(g: &Graph) -> Vec<Mask> {
    assert!(g.n() <= 26, "brute-force oracles take at most 26 vertices");
    let mut adj = vec![0; g.n()];
    for (u, v) in g.edges() {
        adj[u] |= 1 << v;
        adj[v] |= 1 << u;
    }
    adj
}

pub fn mask_of(set: &VertexSet) -> Mask {
    set.iter().fold(0, |m, v| m | 1 << v)
}

pub fn set_of(n: usize, m: Mask) -> VertexSet {
    VertexSet::from_ids(n, (0..n).filter(|&v| m >> v & 1 == 1)).unwrap()
}

pub fn independent(adj: &[Mask], m: Mask) -> bool {
    (0..adj.len()).all(|v| m >> v & 1 == 0 || adj[v] & m == 0)
}

pub fn nbhd(adj: &[Mask], m: Mask) -> Mask {
    (0..adj.len()).filter(|&v| m >> v & 1 == 1).fold(0, |a, v| a | adj[v]) & !m
}

pub fn all_masks(n: usize) -> impl Iterator<Item = Mask> {
    0..(1 as Mask) << n
}

/// Independent sets of size `s`, in increasing mask order.
pub fn independent_of_size(adj: &[Mask], s: usize) -> Vec<Mask> {
    all_masks(adj.len())
        .filter(|&m| m.count_ones() as usize == s && independent(adj, m))
        .collect()
}

pub fn independence_number(adj: &[Mask]) -> usize {
    all_masks(adj.len())
        .filter(|&m| independent(adj, m))
        .map(|m| m.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

pub fn maximum_independent(adj: &[Mask]) -> Vec<Mask> {
    let alpha = independence_number(adj);
    independent_of_size(adj, alpha)
}

fn connected_under(nodes: &[Mask], targets: &[Mask], step: impl Fn(Mask, Mask) -> bool) -> bool {
    if targets.len() < 2 {
        return true;
    }
    let mut seen = vec![false; nodes.len()];
    let start = nodes.iter().position(|&x| x == targets[0]).unwrap();
    seen[start] = true;
    let mut queue = VecDeque::from([start]);
    while let Some(a) = queue.pop_front() {
        for b in 0..nodes.len() {
            if !seen[b] && step(nodes[a], nodes[b]) {
                seen[b] = true;
                queue.push_back(b);
            }
        }
    }
    targets.iter().all(|t| seen[nodes.iter().position(|x| x == t).unwrap()])
}

/// Smallest `k` under which all independent `s`-sets are mutually reachable
/// by jumps of at most `k` tokens (0 when fewer than two such sets exist).
pub fn mtj_at(adj: &[Mask], s: usize) -> usize {
    let sets = independent_of_size(adj, s);
    if sets.len() < 2 {
        return 0;
    }
    (1..=s)
        .find(|&k| connected_under(&sets, &sets, |a, b| (a & !b).count_ones() as usize <= k))
        .expect("a jump of s tokens connects everything")
}

/// Smallest buffer `k` under which all independent `s`-sets are mutually
/// reachable by single additions/removals through sets of size in `[s-k, s]`.
pub fn tar_at(adj: &[Mask], s: usize) -> usize {
    let sets = independent_of_size(adj, s);
    if sets.len() < 2 {
        return 0;
    }
    (1..=s)
        .find(|&k| {
            let nodes: Vec<Mask> = all_masks(adj.len())
                .filter(|&m| {
                    let c = m.count_ones() as usize;
                    c + k >= s && c <= s && independent(adj, m)
                })
                .collect();
            connected_under(&nodes, &sets, |a, b| (a ^ b).count_ones() == 1)
        })
        .expect("a buffer of s connects everything")
}

pub fn mtj(adj: &[Mask]) -> usize {
    (1..=adj.len()).map(|s| mtj_at(adj, s)).max().unwrap_or(0)
}

pub fn tar(adj: &[Mask]) -> usize {
    (1..=adj.len()).map(|s| tar_at(adj, s)).max().unwrap_or(0)
}

pub fn min_vertex_cover(adj: &[Mask]) -> usize {
    let n = adj.len();
    all_masks(n)
        .filter(|&c| (0..n).all(|v| c >> v & 1 == 1 || adj[v] & !c == 0))
        .map(|c| c.count_ones() as usize)
        .min()
        .unwrap()
}

/// Whether `G[keep]` has no cycle: no edge joins two vertices already connected.
pub fn acyclic(adj: &[Mask], keep: Mask) -> bool {
    let n = adj.len();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        if p[x] != x {
            let r = find(p, p[x]);
            p[x] = r;
        }
        p[x]
    }
    for (u, &nu) in adj.iter().enumerate() {
        for v in u + 1..n {
            if keep >> u & 1 == 1 && keep >> v & 1 == 1 && nu >> v & 1 == 1 {
                let (a, b) = (find(&mut parent, u), find(&mut parent, v));
                if a == b {
                    return false;
                }
                parent[a] = b;
            }
        }
    }
    true
}

pub fn min_fvs(adj: &[Mask]) -> usize {
    let n = adj.len();
    let full = all_masks(n).last().unwrap_or(0);
    all_masks(n)
        .filter(|&x| acyclic(adj, full & !x))
        .map(|x| x.count_ones() as usize)
        .min()
        .unwrap()
}

pub fn max_matching(adj: &[Mask]) -> usize {
    let edges: Vec<(usize, usize)> = (0..adj.len())
        .flat_map(|u| (u + 1..adj.len()).filter(move |&v| adj[u] >> v & 1 == 1).map(move |v| (u, v)))
        .collect();
    let mut best = 0;
    for pick in 0u64..1 << edges.len() {
        let mut used: Mask = 0;
        let mut ok = true;
        for (i, &(u, v)) in edges.iter().enumerate() {
            if pick >> i & 1 == 1 {
                if used & (1 << u | 1 << v) != 0 {
                    ok = false;
                    break;
                }
                used |= 1 << u | 1 << v;
            }
        }
        if ok {
            best = best.max(pick.count_ones() as usize);
        }
    }
    best
}

/// Calls `f` on every permutation of `0..n` (recursive swaps).
pub fn for_each_permutation(n: usize, mut f: impl FnMut(&[usize])) {
    fn go(p: &mut Vec<usize>, k: usize, f: &mut dyn FnMut(&[usize])) {
        if k == p.len() {
            f(p);
            return;
        }
        for i in k..p.len() {
            p.swap(k, i);
            go(p, k + 1, f);
            p.swap(k, i);
        }
    }
    let mut p: Vec<usize> = (0..n).collect();
    go(&mut p, 0, &mut f);
}

/// Vertex separation number: min over orderings of the max number of placed
/// vertices with a neighbor not yet placed. Equals pathwidth.
pub fn pathwidth(adj: &[Mask]) -> usize {
    let n = adj.len();
    if n == 0 {
        return 0;
    }
    let mut best = usize::MAX;
    for_each_permutation(n, |order| {
        let mut placed: Mask = 0;
        let mut worst = 0;
        for &v in order {
            placed |= 1 << v;
            let boundary = (0..n).filter(|&u| placed >> u & 1 == 1 && adj[u] & !placed != 0).count();
            worst = worst.max(boundary);
        }
        best = best.min(worst);
    });
    best
}

pub fn connected(adj: &[Mask], sub: Mask) -> bool {
    if sub == 0 {
        return true;
    }
    let mut seen = sub & sub.wrapping_neg();
    loop {
        let next = (seen | nbhd(adj, seen)) & sub;
        if next == seen {
            return seen == sub;
        }
        seen = next;
    }
}

/// Two-coloring of `G[sub]` when connected and bipartite.
pub fn sides(adj: &[Mask], sub: Mask) -> Option<(Mask, Mask)> {
    if sub == 0 || !connected(adj, sub) {
        return None;
    }
    let n = adj.len();
    let mut color = vec![u8::MAX; n];
    let start = sub.trailing_zeros() as usize;
    color[start] = 0;
    let mut queue = VecDeque::from([start]);
    while let Some(v) = queue.pop_front() {
        for u in 0..n {
            if sub >> u & 1 == 1 && adj[v] >> u & 1 == 1 {
                if color[u] == u8::MAX {
                    color[u] = 1 - color[v];
                    queue.push_back(u);
                } else if color[u] == color[v] {
                    return None;
                }
            }
        }
    }
    let left = (0..n).filter(|&v| sub >> v & 1 == 1 && color[v] == 0).fold(0, |m, v| m | 1 << v);
    Some((left, sub & !left))
}

/// The induced subgraph on `sub` as adjacency masks over `sub`'s members.
pub fn induced(adj: &[Mask], sub: Mask) -> Vec<Mask> {
    let members: Vec<usize> = (0..adj.len()).filter(|&v| sub >> v & 1 == 1).collect();
    members
        .iter()
        .map(|&v| {
            members
                .iter()
                .enumerate()
                .filter(|&(_, &u)| adj[v] >> u & 1 == 1)
                .fold(0, |m, (i, _)| m | 1 << i)
        })
        .collect()
}

/// Rank of `G[sub]` if it is bistable.
pub fn bistable_rank_of(adj: &[Mask], sub: Mask) -> Option<usize> {
    let (left, right) = sides(adj, sub)?;
    let h = induced(adj, sub);
    let max = maximum_independent(&h);
    let lift = |m: Mask| {
        let members: Vec<usize> = (0..adj.len()).filter(|&v| sub >> v & 1 == 1).collect();
        (0..members.len()).filter(|&i| m >> i & 1 == 1).fold(0, |a, i| a | 1 << members[i])
    };
    let lifted: Vec<Mask> = max.into_iter().map(lift).collect();
    let ok = lifted.len() == 2 && lifted.contains(&left) && lifted.contains(&right);
    ok.then(|| left.count_ones() as usize)
}

pub fn bistable_rank(adj: &[Mask]) -> usize {
    all_masks(adj.len())
        .filter_map(|m| bistable_rank_of(adj, m))
        .max()
        .unwrap_or(1)
}

/// Largest pumpkin subgraph: every pair of terminals, every set of simple
/// odd paths between them, packed by exhaustive search over path subsets.
pub fn pumpkin_number(adj: &[Mask]) -> usize {
    let n = adj.len();
    let mut best = 0;
    for u in 0..n {
        for v in u + 1..n {
            let mut interiors = Vec::new();
            odd_path_interiors(adj, v, 1 << u, u, 0, &mut interiors);
            interiors.sort_unstable();
            interiors.dedup();
            best = best.max(pack(&interiors, 0, 0, 0));
        }
    }
    best
}

fn odd_path_interiors(adj: &[Mask], target: usize, visited: Mask, at: usize, interior: Mask, out: &mut Vec<Mask>) {
    for w in 0..adj.len() {
        if adj[at] >> w & 1 == 0 || visited >> w & 1 == 1 {
            continue;
        }
        if w == target {
            // edges on the path = interior vertices + 1
            if interior.count_ones().is_multiple_of(2) {
                out.push(interior);
            }
        } else {
            odd_path_interiors(adj, target, visited | 1 << w, w, interior | 1 << w, out);
        }
    }
}

/// Max vertex count of at least two paths with disjoint interiors. Interiors
/// are distinct, so the direct edge (empty interior) is used at most once.
fn pack(items: &[Mask], from: usize, used: Mask, count: usize) -> usize {
    let mut best = if count >= 2 { used.count_ones() as usize + 2 } else { 0 };
    for i in from..items.len() {
        if items[i] & used == 0 {
            best = best.max(pack(items, i + 1, used | items[i], count + 1));
        }
    }
    best
}

/// Canonical form by trying every permutation: the smallest sorted edge list.
pub fn brute_canonical(g: &Graph) -> Vec<(usize, usize)> {
    let edges = g.edges();
    let mut best: Option<Vec<(usize, usize)>> = None;
    for_each_permutation(g.n(), |p| {
        let mut e: Vec<(usize, usize)> = edges
            .iter()
            .map(|&(u, v)| (p[u].min(p[v]), p[u].max(p[v])))
            .collect();
        e.sort_unstable();
        if best.as_ref().is_none_or(|b| e < *b) {
            best = Some(e);
        }
    });
    best.unwrap_or_default()
}

/// Connected graphs of orders `1..=max_n`, with ids.
pub fn corpus(max_n: usize) -> Vec<(String, Graph)> {
    (1..=max_n)
        .flat_map(|n| {
            connected_graphs(n)
                .unwrap()
                .into_iter()
                .enumerate()
                .map(move |(i, g)| (format!("c{n}_{i:05}"), g))
        })
        .collect()
}

/// `count` seeded random bipartite graphs with both sides in `1..=5`.
pub fn random_bipartite_corpus(count: u64) -> Vec<(String, Graph)> {
    (0..count)
        .map(|seed| {
            let nl = 1 + (seed % 5) as usize;
            let nr = 1 + (seed / 5 % 5) as usize;
            let p = [0.3, 0.5, 0.7][(seed % 3) as usize];
            (format!("rb{seed:03}"), random_bipartite(nl, nr, p, seed).unwrap())
        })
        .collect()
}

/// Ordered pairs of distinct equal-size independent sets.
pub fn equal_size_pairs(adj: &[Mask]) -> Vec<(Mask, Mask)> {
    let mut out = Vec::new();
    for s in 1..=adj.len() {
        let sets = independent_of_size(adj, s);
        for &a in &sets {
            for &b in &sets {
                if a != b {
                    out.push((a, b));
                }
            }
        }
    }
    out
}
