//! Shortest witness sequences between two given independent sets, found by
//! breadth-first search with successors visited in lexicographic order.

use std::collections::{HashMap, VecDeque};

use crate::bits::{self, Mask};
use crate::error::{check_cap, Error, Result};
use crate::graph::Graph;
use crate::vset::VertexSet;

use super::enumerate::{cmp_lex, for_each_independent_of_size};
use super::Sequence;

fn endpoints(g: &Graph, i: &VertexSet, j: &VertexSet, cap: usize) -> Result<(Vec<Mask>, Mask, Mask)> {
    check_cap("witness search", g.n(), cap.min(64))?;
    let adj = g.masks()?;
    let (i, j) = (g.own(i)?, g.own(j)?);
    if !g.is_independent(&i)? || !g.is_independent(&j)? {
        return Err(Error::input("source and target must be independent sets"));
    }
    if i.len() != j.len() {
        return Err(Error::input(format!(
            "source and target differ in size ({} vs {})",
            i.len(),
            j.len()
        )));
    }
    let (a, b) = (i.to_mask().expect("checked"), j.to_mask().expect("checked"));
    Ok((adj, a, b))
}

fn bfs(start: Mask, goal: Mask, mut successors: impl FnMut(Mask) -> Vec<Mask>) -> Option<Vec<Mask>> {
    let mut parent: HashMap<Mask, Mask> = HashMap::from([(start, start)]);
    let mut queue = VecDeque::from([start]);
    while let Some(cur) = queue.pop_front() {
        if cur == goal {
            let mut path = vec![cur];
            let mut x = cur;
            while x != start {
                x = parent[&x];
                path.push(x);
            }
            path.reverse();
            return Some(path);
        }
        for next in successors(cur) {
            if let std::collections::hash_map::Entry::Vacant(e) = parent.entry(next) {
                e.insert(cur);
                queue.push_back(next);
            }
        }
    }
    None
}

fn to_sequence(n: usize, path: Vec<Mask>) -> Sequence {
    Sequence::new(path.into_iter().map(|m| VertexSet::from_mask(n, m)).collect())
}

fn mtj_successors(adj: &[Mask], a: Mask, k: usize) -> Vec<Mask> {
    let all = bits::low_bits(adj.len());
    let mut out = Vec::new();
    for j in 1..=k.min(bits::count(a)) {
        bits::for_each_subset_of_size(a, j, |r| {
            let keep = a & !r;
            let blocked = keep | bits::open_nbhd(adj, keep) | r;
            for_each_independent_of_size(adj, all & !blocked, j, &mut |x| out.push(keep | x));
            true
        });
    }
    out.sort_by(|&x, &y| cmp_lex(x, y));
    out
}

fn tar_successors(adj: &[Mask], w: Mask, lo: usize, hi: usize) -> Vec<Mask> {
    let all = bits::low_bits(adj.len());
    let size = bits::count(w);
    let mut out = Vec::new();
    if size > lo {
        out.extend(bits::ones(w).map(|v| w & !bits::bit(v)));
    }
    if size < hi {
        let free = all & !(w | bits::open_nbhd(adj, w));
        out.extend(bits::ones(free).map(|v| w | bits::bit(v)));
    }
    out.sort_by(|&x, &y| cmp_lex(x, y));
    out
}

/// A shortest sequence from `i` to `j` whose jumps move at most `k` tokens,
/// or `None` if `k` does not suffice.
pub fn mtj_witness(g: &Graph, i: &VertexSet, j: &VertexSet, k: usize, cap: usize) -> Result<Option<Sequence>> {
    let (adj, a, b) = endpoints(g, i, j, cap)?;
    Ok(bfs(a, b, |w| mtj_successors(&adj, w, k)).map(|p| to_sequence(g.n(), p)))
}

/// A shortest sequence from `i` to `j` of single additions/removals with
/// every intermediate size in `[|i| − k, |i|]`, or `None` if `k` does not suffice.
pub fn tar_witness(g: &Graph, i: &VertexSet, j: &VertexSet, k: usize, cap: usize) -> Result<Option<Sequence>> {
    let (adj, a, b) = endpoints(g, i, j, cap)?;
    let s = bits::count(a);
    let lo = s.saturating_sub(k);
    Ok(bfs(a, b, |w| tar_successors(&adj, w, lo, s)).map(|p| to_sequence(g.n(), p)))
}

/// The smallest jump size that reconfigures `i` into `j` (0 when equal).
pub fn mtj_pair_cost(g: &Graph, i: &VertexSet, j: &VertexSet, cap: usize) -> Result<usize> {
    let (adj, a, b) = endpoints(g, i, j, cap)?;
    for k in 0..=bits::count(a) {
        if bfs(a, b, |w| mtj_successors(&adj, w, k)).is_some() {
            return Ok(k);
        }
    }
    unreachable!("a single jump of size |I| always works")
}

/// The smallest buffer that reconfigures `i` into `j` (0 when equal).
pub fn tar_pair_cost(g: &Graph, i: &VertexSet, j: &VertexSet, cap: usize) -> Result<usize> {
    let (adj, a, b) = endpoints(g, i, j, cap)?;
    let s = bits::count(a);
    for k in 0..=s {
        if bfs(a, b, |w| tar_successors(&adj, w, s - k, s)).is_some() {
            return Ok(k);
        }
    }
    unreachable!("emptying and refilling always works")
}
