//! Exact MTJ and TAR thresholds by search over the space of independent sets.
//!
//! Both oracles use the convention that a size class with fewer than two
//! independent sets has threshold 0.

use std::collections::HashMap;

use rayon::prelude::*;

use crate::bits::{self, Mask};
use crate::error::{check_cap, Result};
use crate::graph::Graph;

use super::enumerate::{for_each_independent_of_size, independent_masks_by_size};

/// Threshold per set size `s = 1..=n` and the maximum over all sizes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThresholdReport {
    /// `(s, threshold at s)` for every `s` in `1..=n`.
    pub per_size: Vec<(usize, usize)>,
    pub overall: usize,
}

impl ThresholdReport {
    fn from_values(values: Vec<usize>) -> Self {
        let per_size: Vec<(usize, usize)> =
            values.into_iter().enumerate().map(|(i, k)| (i + 1, k)).collect();
        let overall = per_size.iter().map(|&(_, k)| k).max().unwrap_or(0);
        ThresholdReport { per_size, overall }
    }

    pub fn at(&self, s: usize) -> usize {
        self.per_size
            .iter()
            .find(|&&(t, _)| t == s)
            .map_or(0, |&(_, k)| k)
    }
}

struct UnionFind {
    parent: Vec<u32>,
    sets: usize,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n as u32).collect(),
            sets: n,
        }
    }

    fn grow(&mut self, extra: usize) {
        let n = self.parent.len() as u32;
        self.parent.extend(n..n + extra as u32);
        self.sets += extra;
    }

    fn find(&mut self, mut x: u32) -> u32 {
        while self.parent[x as usize] != x {
            let p = self.parent[x as usize];
            self.parent[x as usize] = self.parent[p as usize];
            x = p;
        }
        x
    }

    fn union(&mut self, a: u32, b: u32) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb) as usize] = ra.min(rb);
            self.sets -= 1;
        }
    }
}

fn index_of(sets: &[Mask]) -> HashMap<Mask, u32> {
    sets.iter().enumerate().map(|(i, &m)| (m, i as u32)).collect()
}

/// Smallest `k` such that the size-`s` sets (`sets`) are connected when two
/// sets are adjacent iff they differ in at most `k` vertices on each side.
/// Pairs are merged in increasing order of their distance.
fn mtj_level(adj: &[Mask], sets: &[Mask]) -> usize {
    if sets.len() < 2 {
        return 0;
    }
    let all = bits::low_bits(adj.len());
    let s = bits::count(sets[0]);
    let index = index_of(sets);
    let mut uf = UnionFind::new(sets.len());
    for k in 1..=s {
        for (ai, &a) in sets.iter().enumerate() {
            bits::for_each_subset_of_size(a, k, |r| {
                let keep = a & !r;
                let blocked = keep | bits::open_nbhd(adj, keep) | r;
                for_each_independent_of_size(adj, all & !blocked, k, &mut |x| {
                    let b = keep | x;
                    let bi = index[&b];
                    if bi > ai as u32 {
                        uf.union(ai as u32, bi);
                    }
                });
                true
            });
            if uf.sets == 1 {
                return k;
            }
        }
    }
    unreachable!("any two size-{s} sets differ by at most {s} vertices")
}

/// Smallest buffer `k ≥ 1` such that all size-`s` sets are connected by
/// single additions/removals through sets of size in `[s − k, s]`.
/// `levels[t]` holds the size-`t` sets for `t ≤ s`.
///
/// Restricting sizes to at most `s` loses nothing once `k ≥ 1`: a sequence
/// that grows beyond `s` can be shadowed by a subset-sequence of size
/// `min(s, |W_i|)` that stays within the same buffer.
fn tar_level(adj: &[Mask], levels: &[Vec<Mask>], s: usize) -> usize {
    if levels.get(s).map_or(0, Vec::len) < 2 {
        return 0;
    }
    let all = bits::low_bits(adj.len());
    // union-find ids: level s first, then each added lower level
    let mut offsets = vec![0u32; s + 1];
    let mut indexes: Vec<Option<HashMap<Mask, u32>>> = vec![None; s + 1];
    indexes[s] = Some(index_of(&levels[s]));
    let mut uf = UnionFind::new(levels[s].len());
    let targets = levels[s].len() as u32;
    for k in 1..=s {
        let t = s - k;
        offsets[t] = uf.parent.len() as u32;
        uf.grow(levels[t].len());
        let upper = indexes[t + 1].as_ref().expect("built on the previous round");
        for (xi, &x) in levels[t].iter().enumerate() {
            let free = all & !(x | bits::open_nbhd(adj, x));
            for v in bits::ones(free) {
                let y = upper[&(x | bits::bit(v))];
                uf.union(offsets[t] + xi as u32, offsets[t + 1] + y);
            }
        }
        if t > 0 {
            indexes[t] = Some(index_of(&levels[t]));
        }
        let root = uf.find(0);
        if (1..targets).all(|i| uf.find(i) == root) {
            return k;
        }
    }
    unreachable!("the empty set joins every size class")
}

/// The same threshold with the state space unbounded above: every
/// independent set of size `≥ s − k` is allowed, so `k = 0` can succeed by
/// detouring through larger sets. `levels` must hold every size class.
fn tar_level_unbounded(adj: &[Mask], levels: &[Vec<Mask>], s: usize) -> usize {
    if levels.get(s).map_or(0, Vec::len) < 2 {
        return 0;
    }
    let all = bits::low_bits(adj.len());
    let top = levels.len() - 1;
    let mut offsets = vec![0u32; top + 1];
    let mut uf = UnionFind::new(0);
    let indexes: Vec<HashMap<Mask, u32>> = levels.iter().map(|l| index_of(l)).collect();
    let link_down = |uf: &mut UnionFind, offsets: &[u32], t: usize| {
        for (xi, &x) in levels[t].iter().enumerate() {
            let free = all & !(x | bits::open_nbhd(adj, x));
            for v in bits::ones(free) {
                let y = indexes[t + 1][&(x | bits::bit(v))];
                uf.union(offsets[t] + xi as u32, offsets[t + 1] + y);
            }
        }
    };
    for t in (s..=top).rev() {
        offsets[t] = uf.parent.len() as u32;
        uf.grow(levels[t].len());
        if t < top {
            link_down(&mut uf, &offsets, t);
        }
    }
    let connected = |uf: &mut UnionFind, offsets: &[u32]| {
        let root = uf.find(offsets[s]);
        (0..levels[s].len() as u32).all(|i| uf.find(offsets[s] + i) == root)
    };
    if connected(&mut uf, &offsets) {
        return 0;
    }
    for k in 1..=s {
        let t = s - k;
        offsets[t] = uf.parent.len() as u32;
        uf.grow(levels[t].len());
        link_down(&mut uf, &offsets, t);
        if connected(&mut uf, &offsets) {
            return k;
        }
    }
    unreachable!("the empty set joins every size class")
}

/// `MTJ(G, s)`: the smallest jump size connecting all size-`s` independent sets.
pub fn mtj_threshold_at(g: &Graph, s: usize, cap: usize) -> Result<usize> {
    check_cap("threshold oracle", g.n(), cap.min(64))?;
    let adj = g.masks()?;
    let sets = super::enumerate::independent_masks_of_size(&adj, s);
    Ok(mtj_level(&adj, &sets))
}

/// `MTJ(G, s)` for every `s` and `MTJ(G)`, their maximum.
pub fn mtj_threshold(g: &Graph, cap: usize) -> Result<ThresholdReport> {
    check_cap("threshold oracle", g.n(), cap.min(64))?;
    let adj = g.masks()?;
    let levels = independent_masks_by_size(&adj, g.n());
    let values = (1..=g.n())
        .into_par_iter()
        .map(|s| levels.get(s).map_or(0, |l| mtj_level(&adj, l)))
        .collect();
    Ok(ThresholdReport::from_values(values))
}

/// `TAR(G, s)`: the smallest buffer connecting all size-`s` independent sets,
/// with intermediate sets never larger than `s`.
pub fn tar_threshold_at(g: &Graph, s: usize, cap: usize) -> Result<usize> {
    check_cap("threshold oracle", g.n(), cap.min(64))?;
    let adj = g.masks()?;
    let levels = independent_masks_by_size(&adj, s);
    Ok(tar_level(&adj, &levels, s))
}

/// `TAR(G, s)` for every `s` and `TAR(G)`, their maximum.
pub fn tar_threshold(g: &Graph, cap: usize) -> Result<ThresholdReport> {
    check_cap("threshold oracle", g.n(), cap.min(64))?;
    let adj = g.masks()?;
    let levels = independent_masks_by_size(&adj, g.n());
    let values = (1..=g.n())
        .into_par_iter()
        .map(|s| tar_level(&adj, &levels, s))
        .collect();
    Ok(ThresholdReport::from_values(values))
}

/// `TAR(G, s)` with intermediate sets of any size above `s − k` allowed,
/// including sets larger than `s`. Agrees with [`tar_threshold_at`] whenever
/// either value is at least 1.
pub fn tar_threshold_at_unbounded(g: &Graph, s: usize, cap: usize) -> Result<usize> {
    check_cap("threshold oracle", g.n(), cap.min(64))?;
    let adj = g.masks()?;
    let levels = independent_masks_by_size(&adj, g.n());
    Ok(tar_level_unbounded(&adj, &levels, s))
}
