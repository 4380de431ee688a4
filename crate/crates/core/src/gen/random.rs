//! Seeded random bipartite graphs.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// A random bipartite graph with left ids `0..nl` and right ids `nl..nl + nr`.
///
/// Cross pairs are visited row by row (left vertex, then right vertex) and
/// each becomes an edge when the next `f64` drawn from a ChaCha8 generator
/// seeded with `seed` is below `p`. Equal arguments give identical graphs.
pub fn random_bipartite(nl: usize, nr: usize, p: f64, seed: u64) -> Result<Graph> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::input(format!("edge probability {p} is outside [0, 1]")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = Graph::new(nl + nr);
    for u in 0..nl {
        for v in 0..nr {
            if rng.random::<f64>() < p {
                g.add_edge(u, nl + v)?;
            }
        }
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen::complete_bipartite;

    #[test]
    fn extremes_and_determinism() {
        assert_eq!(random_bipartite(3, 4, 0.0, 9).unwrap().m(), 0);
        assert_eq!(random_bipartite(3, 4, 1.0, 9).unwrap(), complete_bipartite(3, 4).unwrap());
        assert_eq!(random_bipartite(3, 3, 0.5, 1).unwrap(), random_bipartite(3, 3, 0.5, 1).unwrap());
        let differs = (0..20).any(|s| random_bipartite(4, 4, 0.5, s).unwrap() != random_bipartite(4, 4, 0.5, 1).unwrap());
        assert!(differs);
        assert!(random_bipartite(2, 2, 1.5, 0).is_err());
    }
}
