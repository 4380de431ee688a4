//! Biconnected components by the lowpoint method.

use crate::graph::Graph;
use crate::vset::VertexSet;

/// Maximal biconnected subgraphs as vertex sets, sorted. A bridge forms a
/// two-vertex component and an isolated vertex a singleton.
pub fn biconnected_components(g: &Graph) -> Vec<VertexSet> {
    let n = g.n();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut clock = 0;
    let mut edge_stack: Vec<(usize, usize)> = Vec::new();
    let mut out = Vec::new();

    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        if g.degree(root) == 0 {
            disc[root] = clock;
            clock += 1;
            out.push(VertexSet::from_ids(n, [root]).expect("in range"));
            continue;
        }
        // iterative DFS: (vertex, parent, remaining neighbors)
        disc[root] = clock;
        low[root] = clock;
        clock += 1;
        let mut stack: Vec<(usize, usize, Vec<usize>)> =
            vec![(root, usize::MAX, g.neighbors(root).to_vec())];
        while let Some((v, parent, rest)) = stack.last_mut() {
            let (v, parent) = (*v, *parent);
            if let Some(u) = rest.pop() {
                if disc[u] == usize::MAX {
                    edge_stack.push((v, u));
                    disc[u] = clock;
                    low[u] = clock;
                    clock += 1;
                    stack.push((u, v, g.neighbors(u).to_vec()));
                } else if u != parent && disc[u] < disc[v] {
                    edge_stack.push((v, u));
                    low[v] = low[v].min(disc[u]);
                }
                continue;
            }
            stack.pop();
            if let Some((p, _, _)) = stack.last() {
                let p = *p;
                low[p] = low[p].min(low[v]);
                if low[v] >= disc[p] {
                    let mut comp = VertexSet::new(n);
                    while let Some((a, b)) = edge_stack.pop() {
                        comp.insert(a);
                        comp.insert(b);
                        if (a, b) == (p, v) {
                            break;
                        }
                    }
                    out.push(comp);
                }
            }
        }
    }
    out.sort();
    out
}

/// True iff `g` is connected, has at least two vertices, and has no cut vertex.
pub fn is_biconnected(g: &Graph) -> bool {
    g.n() >= 2 && g.is_connected() && biconnected_components(g).len() == 1
}
