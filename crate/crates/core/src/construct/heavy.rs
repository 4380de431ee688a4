//! Inclusion-minimal heavy sets: nonempty `S` on one side of a bipartite
//! graph with `|N(S)| ≤ |S|`.

use crate::bits;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vset::VertexSet;

use super::active_neighborhood;

/// A nonempty one-sided set that is no smaller than its neighborhood.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HeavySet {
    pub set: VertexSet,
    pub neighborhood: VertexSet,
    /// No nonempty proper subset is heavy.
    pub minimal: bool,
}

/// The first heavy subset of `side` in order of increasing cardinality, then
/// lexicographic order; being first by size, it is inclusion-minimal.
///
/// Requires `side` independent with `|side| ≥ |N(side)|`.
pub fn minimal_heavy_set(g: &Graph, side: &VertexSet) -> Result<HeavySet> {
    let side = g.own(side)?;
    if !g.is_independent(&side)? {
        return Err(Error::input("heavy-set side must be an independent set"));
    }
    let active = g.vertex_set();
    if side.is_empty() || active_neighborhood(g, &active, &side).len() > side.len() {
        return Err(Error::input("heavy-set side must be nonempty and no smaller than its neighborhood"));
    }
    Ok(minimal_heavy_within(g, &active, &side))
}

/// [`minimal_heavy_set`] inside `G[active]`, for a side already known to be heavy.
pub(crate) fn minimal_heavy_within(g: &Graph, active: &VertexSet, side: &VertexSet) -> HeavySet {
    let members: Vec<usize> = side.iter().collect();
    assert!(members.len() <= 64, "heavy-set search supports at most 64 side vertices");
    let nbrs: Vec<VertexSet> = members
        .iter()
        .map(|&v| g.neighbors(v).intersection(active))
        .collect();
    let positions = bits::low_bits(members.len());
    for size in 1..=members.len() {
        let mut found = None;
        bits::for_each_subset_of_size(positions, size, |m| {
            let mut nb = VertexSet::new(g.n());
            for p in bits::ones(m) {
                nb.union_with(&nbrs[p]);
                if nb.len() > size {
                    return true;
                }
            }
            found = Some((m, nb));
            false
        });
        if let Some((m, nb)) = found {
            let set = VertexSet::from_ids(g.n(), bits::ones(m).map(|p| members[p])).expect("in range");
            return HeavySet {
                set,
                neighborhood: nb,
                minimal: true,
            };
        }
    }
    unreachable!("the whole side is heavy")
}
