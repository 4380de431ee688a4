//! All connected graphs of a given order, one per isomorphism class.

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::error::{check_cap, Error, Result};
use crate::graph::Graph;

/// Largest order [`connected_graphs`] accepts.
const MAX_ORDER: usize = 8;
/// Largest order whose upper adjacency triangle fits a 64-bit code.
const MAX_CODE_ORDER: usize = 11;

/// The isomorphism-invariant code of `g` and the vertex order realizing it.
///
/// Vertices are first split into classes by iterated color refinement (a
/// vertex's color is refined by the multiset of its neighbors' colors until
/// stable), classes ordered by their color. Among all orders that list the
/// classes in that order, the code is the smallest upper-triangle adjacency
/// bit string, pairs `(i, j)` with `i < j` read row by row, most significant
/// first.
pub fn canonical_code(g: &Graph) -> Result<u64> {
    Ok(canonical(g)?.0)
}

fn canonical(g: &Graph) -> Result<(u64, Vec<usize>)> {
    let n = g.n();
    if n > MAX_CODE_ORDER {
        return Err(Error::Resource { what: "canonical code", size: n, cap: MAX_CODE_ORDER });
    }
    let colors = refine(g);
    let mut cells: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (v, &c) in colors.iter().enumerate() {
        cells.entry(c).or_default().push(v);
    }
    let cells: Vec<Vec<usize>> = cells.into_values().collect();
    let mut order = Vec::with_capacity(n);
    let mut best = (u64::MAX, Vec::new());
    permute_cells(g, &cells, 0, &mut order, &mut best);
    Ok(best)
}

fn refine(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut colors = vec![0usize; n];
    let mut classes = 1;
    loop {
        let sigs: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<usize> = g.neighbors(v).iter().map(|u| colors[u]).collect();
                nb.sort_unstable();
                (colors[v], nb)
            })
            .collect();
        let mut distinct = sigs.clone();
        distinct.sort();
        distinct.dedup();
        colors = sigs.iter().map(|s| distinct.binary_search(s).expect("present")).collect();
        if distinct.len() == classes {
            return colors;
        }
        classes = distinct.len();
    }
}

fn code_of(g: &Graph, order: &[usize]) -> u64 {
    let n = order.len();
    let mut code = 0u64;
    for i in 0..n {
        for j in i + 1..n {
            code = (code << 1) | u64::from(g.has_edge(order[i], order[j]));
        }
    }
    code
}

fn permute_cells(g: &Graph, cells: &[Vec<usize>], at: usize, order: &mut Vec<usize>, best: &mut (u64, Vec<usize>)) {
    if at == cells.len() {
        let code = code_of(g, order);
        if code < best.0 || best.1.is_empty() {
            *best = (code, order.clone());
        }
        return;
    }
    let mut cell = cells[at].clone();
    heap_permutations(&mut cell, &mut |perm| {
        let len = order.len();
        order.extend_from_slice(perm);
        permute_cells(g, cells, at + 1, order, best);
        order.truncate(len);
    });
}

/// Calls `f` on every permutation of `items` (Heap's algorithm).
fn heap_permutations(items: &mut [usize], f: &mut impl FnMut(&[usize])) {
    fn go(k: usize, items: &mut [usize], f: &mut impl FnMut(&[usize])) {
        if k <= 1 {
            f(items);
            return;
        }
        for i in 0..k - 1 {
            go(k - 1, items, f);
            let j = if k.is_multiple_of(2) { i } else { 0 };
            items.swap(j, k - 1);
        }
        go(k - 1, items, f);
    }
    go(items.len(), items, f);
}

/// `g` relabeled so that vertex `i` is `order[i]`.
fn relabel(g: &Graph, order: &[usize]) -> Graph {
    let mut pos = vec![0; order.len()];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    Graph::from_edges(g.n(), g.edges().into_iter().map(|(u, v)| (pos[u], pos[v]))).expect("relabeling keeps edges valid")
}

/// Every connected graph on `n ≤ 8` vertices up to isomorphism, each in its
/// canonical labeling, sorted by edge count and then by code.
///
/// Every connected graph has a vertex whose removal leaves it connected, so
/// the graphs of order `n` are the canonical classes of order-`(n − 1)`
/// graphs extended by a vertex joined to a nonempty subset.
pub fn connected_graphs(n: usize) -> Result<Vec<Graph>> {
    check_cap("connected graph enumeration", n, MAX_ORDER)?;
    if n == 0 {
        return Ok(Vec::new());
    }
    let mut level = vec![Graph::new(1)];
    for order in 2..=n {
        let found: BTreeMap<(usize, u64), Graph> = level
            .par_iter()
            .flat_map_iter(|h| {
                (1u32..1 << (order - 1)).map(move |subset| {
                    let mut g = Graph::new(order);
                    for (u, v) in h.edges() {
                        g.add_edge(u, v).expect("in range");
                    }
                    for u in (0..order - 1).filter(|&u| subset >> u & 1 == 1) {
                        g.add_edge(u, order - 1).expect("in range");
                    }
                    let (code, perm) = canonical(&g).expect("order within code range");
                    ((g.m(), code), relabel(&g, &perm))
                })
            })
            .collect();
        level = found.into_values().collect();
    }
    Ok(level)
}

/// File name for the `idx`-th corpus graph of order `order`.
pub fn corpus_file_name(order: usize, idx: usize) -> String {
    format!("c{order}_{idx:05}.graph")
}
