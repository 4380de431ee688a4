//! Constructive reconfiguration: each algorithm emits a validated sequence
//! whose step (jump or buffer) size stays within a structural bound.
//!
//! Every algorithm works on the symmetric difference `I Δ J` and keeps the
//! common part `I ∩ J` in every emitted set, so the sequences are valid in
//! the original graph with original vertex ids.

mod bistable;
mod forest;
mod fvs;
mod heavy;
mod pathwidth;
mod vc;

pub use bistable::mtj_by_bistable;
pub use forest::mtj_forest;
pub use fvs::tar_by_fvs;
pub use heavy::{minimal_heavy_set, HeavySet};
pub use pathwidth::{prefix_neighborhoods, tar_by_pathwidth, PathwidthRun, PhaseTrace};
pub use vc::mtj_by_vertex_cover;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::reconfig::Sequence;
use crate::vset::VertexSet;

/// A validated source/target pair split into its common part and the two
/// halves of the symmetric difference.
pub(crate) struct Pair {
    pub common: VertexSet,
    /// `I \ J`, the vertices holding tokens that must move.
    pub source: VertexSet,
    /// `J \ I`, the vertices that must receive tokens.
    pub target: VertexSet,
}

impl Pair {
    pub fn new(g: &Graph, i: &VertexSet, j: &VertexSet) -> Result<Pair> {
        let (i, j) = (g.own(i)?, g.own(j)?);
        if !g.is_independent(&i)? {
            return Err(Error::input("source set is not independent"));
        }
        if !g.is_independent(&j)? {
            return Err(Error::input("target set is not independent"));
        }
        if i.len() != j.len() {
            return Err(Error::input(format!(
                "source and target differ in size ({} vs {})",
                i.len(),
                j.len()
            )));
        }
        Ok(Pair {
            common: i.intersection(&j),
            source: i.difference(&j),
            target: j.difference(&i),
        })
    }

    pub fn difference(&self) -> VertexSet {
        self.source.union(&self.target)
    }

    /// `G[I Δ J]` with local ids, the local-to-original id map, and the
    /// source and target halves in local ids.
    pub fn localize(&self, g: &Graph) -> Result<Local> {
        let (graph, map) = g.induced_subgraph(&self.difference())?;
        let to_local = |s: &VertexSet| {
            VertexSet::from_ids(graph.n(), map.iter().enumerate().filter(|(_, &v)| s.contains(v)).map(|(x, _)| x))
        };
        Ok(Local {
            source: to_local(&self.source)?,
            target: to_local(&self.target)?,
            graph,
            map,
            universe: g.n(),
        })
    }

    /// Adds the common part to every set of a sequence on `I Δ J`.
    pub fn lift(&self, sets: Vec<VertexSet>) -> Sequence {
        Sequence::new(sets.into_iter().map(|w| w.union(&self.common)).collect())
    }
}

/// A sub-instance on `G[I Δ J]` renumbered to `0..|I Δ J|`.
pub(crate) struct Local {
    pub graph: Graph,
    pub map: Vec<usize>,
    pub source: VertexSet,
    pub target: VertexSet,
    universe: usize,
}

impl Local {
    /// Maps a local set back to original ids.
    pub fn lift(&self, s: &VertexSet) -> VertexSet {
        VertexSet::from_ids(self.universe, s.iter().map(|x| self.map[x])).expect("local ids map into the graph")
    }
}

/// `N(v) ∩ active`.
pub(crate) fn active_neighbors(g: &Graph, active: &VertexSet, v: usize) -> VertexSet {
    g.neighbors(v).intersection(active)
}

/// `N(S) ∩ active`, with `S ⊆ active` assumed independent.
pub(crate) fn active_neighborhood(g: &Graph, active: &VertexSet, s: &VertexSet) -> VertexSet {
    let mut out = VertexSet::new(g.n());
    for v in s.iter() {
        out.union_with(g.neighbors(v));
    }
    out.intersection(active).difference(s)
}

#[cfg(test)]
pub(crate) mod testutil {
    use crate::graph::Graph;
    use crate::vset::VertexSet;

    pub fn set(n: usize, ids: &[usize]) -> VertexSet {
        VertexSet::from_ids(n, ids.iter().copied()).unwrap()
    }

    pub fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    pub fn kbip(a: usize, b: usize) -> Graph {
        Graph::from_edges(a + b, (0..a).flat_map(|i| (0..b).map(move |j| (i, a + j)))).unwrap()
    }

    pub fn evens(n: usize) -> VertexSet {
        VertexSet::from_ids(n, (0..n).step_by(2)).unwrap()
    }

    pub fn odds(n: usize) -> VertexSet {
        VertexSet::from_ids(n, (1..n).step_by(2)).unwrap()
    }
}
