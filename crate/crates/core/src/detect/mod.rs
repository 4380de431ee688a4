//! Structure recognition: bistable graphs and the bistable rank, pumpkins,
//! bipartite topological double minor models, tree isoperimetric profiles,
//! and the closed-form bound functions relating them.

mod bistable;
mod bounds;
mod btd;
mod isoperimetry;
mod pumpkin;

pub use bistable::{bistable_rank, bistable_rank_exhaustive, is_bistable, Bistability, BistableWitness, RankReport, Refusal};
pub use bounds::{bound_f, bound_g1, bound_g2};
pub use btd::{
    btd_structure_checks, half_bounds_hold, validate_btd_model, BtdModel, BtdStructureReport, BtdViolation,
};
pub use isoperimetry::{isoperimetric_profile, tree_min_neighborhood, tree_min_neighborhood_exhaustive};
pub use pumpkin::{pumpkin_number, PumpkinWitness};
