//! Independent-set enumeration by backtracking in increasing vertex order,
//! which yields sets in lexicographic order of their sorted member lists.

use std::cmp::Ordering;

use crate::bits::{self, bit, Mask};
use crate::error::Result;
use crate::graph::Graph;
use crate::vset::VertexSet;

/// Compares two masks as sorted member lists, lexicographically.
pub(crate) fn cmp_lex(a: Mask, b: Mask) -> Ordering {
    let diff = a ^ b;
    if diff == 0 {
        return Ordering::Equal;
    }
    let d = diff.trailing_zeros();
    let above = |m: Mask| if d >= 63 { 0 } else { m >> (d + 1) };
    if a & (1 << d) != 0 {
        // `a` continues with d; `b` either continues with something larger or stops
        if above(b) == 0 && b >> d == 0 {
            Ordering::Greater
        } else {
            Ordering::Less
        }
    } else if above(a) == 0 && a >> d == 0 {
        Ordering::Less
    } else {
        Ordering::Greater
    }
}

/// All independent sets of size exactly `s`, lexicographic order.
pub(crate) fn independent_masks_of_size(adj: &[Mask], s: usize) -> Vec<Mask> {
    let mut out = Vec::new();
    let cand = bits::low_bits(adj.len());
    fixed_size(adj, 0, cand, s, &mut out);
    out
}

fn fixed_size(adj: &[Mask], chosen: Mask, cand: Mask, need: usize, out: &mut Vec<Mask>) {
    if need == 0 {
        out.push(chosen);
        return;
    }
    let mut rest = cand;
    while bits::count(rest) >= need {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        fixed_size(adj, chosen | bit(v), rest & !adj[v], need - 1, out);
    }
}

/// Calls `f` on every independent `k`-subset of `cand`, lexicographic order.
pub(crate) fn for_each_independent_of_size(adj: &[Mask], cand: Mask, k: usize, f: &mut impl FnMut(Mask)) {
    fn go(adj: &[Mask], chosen: Mask, cand: Mask, need: usize, f: &mut impl FnMut(Mask)) {
        if need == 0 {
            f(chosen);
            return;
        }
        let mut rest = cand;
        while bits::count(rest) >= need {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            go(adj, chosen | bit(v), rest & !adj[v], need - 1, f);
        }
    }
    go(adj, 0, cand, k, f);
}

/// All independent sets of size at most `max_size`, grouped by size; each
/// group in lexicographic order.
pub(crate) fn independent_masks_by_size(adj: &[Mask], max_size: usize) -> Vec<Vec<Mask>> {
    let mut out = vec![Vec::new(); max_size + 1];
    all_sets(adj, 0, bits::low_bits(adj.len()), max_size, &mut out);
    while out.len() > 1 && out.last().is_some_and(Vec::is_empty) {
        out.pop();
    }
    out
}

fn all_sets(adj: &[Mask], chosen: Mask, cand: Mask, max_size: usize, out: &mut [Vec<Mask>]) {
    let size = bits::count(chosen);
    out[size].push(chosen);
    if size == max_size {
        return;
    }
    let mut rest = cand;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        all_sets(adj, chosen | bit(v), rest & !adj[v], max_size, out);
    }
}

/// Every independent set of size exactly `s`, each once, in lexicographic
/// order of sorted member lists.
pub fn independent_sets_of_size(g: &Graph, s: usize) -> Result<Vec<VertexSet>> {
    let n = g.n();
    if n <= 64 {
        let adj = g.masks()?;
        return Ok(independent_masks_of_size(&adj, s)
            .into_iter()
            .map(|m| VertexSet::from_mask(n, m))
            .collect());
    }
    let mut out = Vec::new();
    wide_fixed_size(g, &mut g.empty_set(), g.vertex_set(), s, &mut out);
    Ok(out)
}

fn wide_fixed_size(g: &Graph, chosen: &mut VertexSet, cand: VertexSet, need: usize, out: &mut Vec<VertexSet>) {
    if need == 0 {
        out.push(chosen.clone());
        return;
    }
    let mut rest = cand;
    while rest.len() >= need {
        let v = rest.first().expect("nonempty");
        rest.remove(v);
        chosen.insert(v);
        wide_fixed_size(g, chosen, rest.difference(g.neighbors(v)), need - 1, out);
        chosen.remove(v);
    }
}

/// Every independent set (including the empty set), in lexicographic order.
pub fn independent_sets(g: &Graph) -> Result<Vec<VertexSet>> {
    let n = g.n();
    let adj = g.masks()?;
    let mut all: Vec<Mask> = independent_masks_by_size(&adj, n).into_iter().flatten().collect();
    all.sort_by(|&a, &b| cmp_lex(a, b));
    Ok(all.into_iter().map(|m| VertexSet::from_mask(n, m)).collect())
}

/// Number of independent sets of each size `0..=α`.
pub fn count_independent_sets_by_size(g: &Graph) -> Result<Vec<usize>> {
    let adj = g.masks()?;
    Ok(independent_masks_by_size(&adj, g.n())
        .iter()
        .map(Vec::len)
        .collect())
}
