//! Vertex isoperimetry in trees: the least open neighborhood of an `i`-set.

use crate::bits::{self, Mask};
use crate::error::{check_cap, Error, Result};
use crate::graph::Graph;

const INF: usize = usize::MAX / 4;

fn require_tree(t: &Graph) -> Result<()> {
    if t.n() == 0 || !t.is_forest() || !t.is_connected() {
        return Err(Error::input("isoperimetry needs a nonempty tree"));
    }
    Ok(())
}

/// `min_{|S| = i} |N_T(S)|` for every `i = 1..=n` (index `i − 1`), by a
/// dynamic program over the tree rooted at vertex 0. Each vertex is either
/// in `S`, outside `S` with a child in `S`, or outside `S` with no child in
/// `S` (then it is a neighbor of `S` exactly when its parent is in `S`).
pub fn isoperimetric_profile(t: &Graph) -> Result<Vec<usize>> {
    require_tree(t)?;
    let n = t.n();
    let mut parent = vec![usize::MAX; n];
    let mut order = vec![0];
    let mut seen = vec![false; n];
    seen[0] = true;
    let mut idx = 0;
    while idx < order.len() {
        let v = order[idx];
        idx += 1;
        for u in t.neighbors(v).iter() {
            if !seen[u] {
                seen[u] = true;
                parent[u] = v;
                order.push(u);
            }
        }
    }

    // per vertex: (in S, outside with S-child, outside without S-child), by |S ∩ subtree|
    let mut tables: Vec<Option<[Vec<usize>; 3]>> = vec![None; n];
    for &v in order.iter().rev() {
        let mut inside = vec![INF, 0];
        let mut bare = vec![0];
        let mut covered = vec![INF];
        for c in t.neighbors(v).iter().filter(|&c| parent[c] == v) {
            let [ca, cb, cc] = tables[c].take().expect("children are finished first");
            let under_s: Vec<usize> = (0..ca.len()).map(|k| ca[k].min(cb[k]).min(cc[k].saturating_add(1))).collect();
            let no_s: Vec<usize> = (0..ca.len()).map(|k| cb[k].min(cc[k])).collect();
            let any: Vec<usize> = (0..ca.len()).map(|k| ca[k].min(cb[k]).min(cc[k])).collect();
            let next_covered = min_plus(&covered, &any).min_with(&min_plus(&bare, &ca));
            inside = min_plus(&inside, &under_s);
            bare = min_plus(&bare, &no_s);
            covered = next_covered;
        }
        let len = inside.len();
        let pad = |mut x: Vec<usize>| {
            x.resize(len, INF);
            x
        };
        let with_self = pad(covered).into_iter().map(|x| x.saturating_add(1).min(INF)).collect();
        tables[v] = Some([inside, with_self, pad(bare)]);
    }
    let [a, b, c] = tables[0].take().expect("root computed");
    Ok((1..=n).map(|k| a[k].min(b[k]).min(c[k])).collect())
}

trait MinWith {
    fn min_with(self, other: &[usize]) -> Vec<usize>;
}

impl MinWith for Vec<usize> {
    fn min_with(mut self, other: &[usize]) -> Vec<usize> {
        if other.len() > self.len() {
            self.resize(other.len(), INF);
        }
        for (x, &y) in self.iter_mut().zip(other) {
            *x = (*x).min(y);
        }
        self
    }
}

/// `(a ⊕ b)[k] = min_{i + j = k} a[i] + b[j]`.
fn min_plus(a: &[usize], b: &[usize]) -> Vec<usize> {
    let mut out = vec![INF; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate().filter(|(_, &x)| x < INF) {
        for (j, &y) in b.iter().enumerate().filter(|(_, &y)| y < INF) {
            out[i + j] = out[i + j].min(x + y);
        }
    }
    out
}

/// `min_{|S| = i} |N_T(S)|` for a tree `T` and `1 ≤ i ≤ n`.
pub fn tree_min_neighborhood(t: &Graph, i: usize) -> Result<usize> {
    require_tree(t)?;
    if i == 0 || i > t.n() {
        return Err(Error::input(format!("subset size {i} outside 1..={}", t.n())));
    }
    Ok(isoperimetric_profile(t)?[i - 1])
}

/// [`tree_min_neighborhood`] by trying every `i`-subset (at most `cap` vertices).
pub fn tree_min_neighborhood_exhaustive(t: &Graph, i: usize, cap: usize) -> Result<usize> {
    require_tree(t)?;
    check_cap("exhaustive tree isoperimetry", t.n(), cap.min(32))?;
    if i == 0 || i > t.n() {
        return Err(Error::input(format!("subset size {i} outside 1..={}", t.n())));
    }
    let adj = t.masks()?;
    let mut best = usize::MAX;
    bits::for_each_subset_of_size(bits::low_bits(t.n()), i, |s: Mask| {
        best = best.min(bits::count(bits::open_nbhd(&adj, s)));
        best > 0
    });
    Ok(best)
}
