//! Word-sized vertex sets for the exponential searches.
//!
//! Every exact procedure in this crate caps its input well below 64 vertices,
//! so the hot loops work on plain `u64` masks with bit `v` standing for vertex `v`.

pub(crate) type Mask = u64;

#[inline]
pub(crate) fn bit(v: usize) -> Mask {
    1u64 << v
}

#[inline]
pub(crate) fn low_bits(n: usize) -> Mask {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

#[inline]
pub(crate) fn count(m: Mask) -> usize {
    m.count_ones() as usize
}

/// Iterates the set bits of `m` in increasing order.
pub(crate) fn ones(mut m: Mask) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let v = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(v)
        }
    })
}

/// Open neighborhood of `set` given per-vertex adjacency masks.
#[inline]
pub(crate) fn open_nbhd(adj: &[Mask], set: Mask) -> Mask {
    ones(set).fold(0, |acc, v| acc | adj[v]) & !set
}

#[inline]
pub(crate) fn is_independent(adj: &[Mask], set: Mask) -> bool {
    ones(set).all(|v| adj[v] & set == 0)
}

/// Calls `f` on every `k`-subset of the members of `within`, in lexicographic
/// order of the sorted member lists. Stops early when `f` returns `false`.
pub(crate) fn for_each_subset_of_size(within: Mask, k: usize, mut f: impl FnMut(Mask) -> bool) {
    let elems: Vec<usize> = ones(within).collect();
    let n = elems.len();
    if k > n {
        return;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    'outer: loop {
        let m = idx.iter().fold(0, |acc, &i| acc | bit(elems[i]));
        if !f(m) {
            return;
        }
        let mut i = k;
        while i > 0 {
            i -= 1;
            if idx[i] < i + n - k {
                idx[i] += 1;
                for j in i + 1..k {
                    idx[j] = idx[j - 1] + 1;
                }
                continue 'outer;
            }
        }
        return;
    }
}
