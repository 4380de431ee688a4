//! Independent-set reconfiguration under token jumping and token
//! addition/removal: exact threshold oracles for small graphs, constructive
//! reconfiguration algorithms with provable step bounds, structural detectors,
//! and generators for the graph families on which those bounds are tight.

pub mod bicon;
pub(crate) mod bits;
pub mod construct;
pub mod cover;
pub mod detect;
pub mod error;
pub mod gen;
pub mod graph;
pub mod ledger;
pub mod matching;
pub mod pathdecomp;
pub mod reconfig;
pub mod vset;

pub use error::{Error, Result};
pub use graph::Graph;
pub use vset::VertexSet;

/// Size caps for the exponential procedures. Every exact routine fails with
/// [`Error::Resource`] instead of running on an instance above its cap.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Exact vertex cover (non-bipartite branch and bound) and feedback vertex set.
    pub exact: usize,
    /// Exact pathwidth subset dynamic program.
    pub pathwidth: usize,
    /// Threshold oracles and sequence-search state spaces.
    pub oracle: usize,
    /// Bistable rank and pumpkin number searches.
    pub detect: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            exact: 24,
            pathwidth: 20,
            oracle: 22,
            detect: 16,
        }
    }
}
