//! Instance generators: cycles, complete bipartite graphs, pumpkins, the
//! recursive super-pumpkin family, binary-tree double-minor hosts, seeded
//! random bipartite graphs, and all connected graphs up to isomorphism.

mod btd_host;
mod corpus;
mod families;
mod random;
mod superpumpkin;

pub use btd_host::btd_tree_host;
pub use corpus::{canonical_code, connected_graphs, corpus_file_name};
pub use families::{complete_bipartite, cycle, pumpkin};
pub use random::random_bipartite;
pub use superpumpkin::{super_pumpkin, SuperPumpkin};
