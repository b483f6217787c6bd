//! Random class members for fuzzing: rejection sampling around a planted
//! substructure.
//!
//! The sampler starts from the planted graph (whose vertices keep their
//! labels 0..p) and grows it one vertex at a time, drawing random
//! neighborhoods and keeping only extensions that stay 𝓗-free. Seeds are
//! caller-supplied so every sampled graph is reproducible.

use crate::graph::Graph;
use crate::induced::is_free;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// How many random neighborhoods to try per added vertex before giving up
/// on growing further.
pub const DEFAULT_TRIES_PER_VERTEX: usize = 64;

/// Grow `planted` to (up to) `target_n` vertices while staying free of all
/// graphs in `forbidden`. Each new vertex draws uniform random nonempty
/// neighborhoods until one keeps the graph free or the per-vertex budget
/// runs out; on exhaustion the current (always free) graph is returned
/// early. The planted substructure keeps labels 0..planted.n().
pub fn sample_free_extension(
    planted: &Graph,
    forbidden: &[Graph],
    target_n: usize,
    seed: u64,
    tries_per_vertex: usize,
) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    debug_assert!(is_free(planted, forbidden));
    let mut g = planted.clone();
    while g.n() < target_n {
        let mut grew = false;
        for _ in 0..tries_per_vertex {
            let mask = loop {
                let m = rng.gen::<u64>() & g.full_mask();
                if m != 0 {
                    break m;
                }
            };
            let candidate = g.extend_with(mask).expect("within vertex limit");
            if is_free(&candidate, forbidden) {
                g = candidate;
                grew = true;
                break;
            }
        }
        if !grew {
            break;
        }
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn planted_cycle_survives_and_graphs_stay_free() {
        let planted = catalog::cycle(5);
        let forbidden = [catalog::path(5), catalog::by_name("diamond").unwrap()];
        for seed in 0..20 {
            let g = sample_free_extension(&planted, &forbidden, 12, seed, 32);
            assert!(g.n() >= 5 && g.n() <= 12);
            assert!(is_free(&g, &forbidden));
            for i in 0..5 {
                assert_eq!(
                    g.has_edge(i, (i + 1) % 5),
                    true,
                    "planted cycle edge lost at seed {seed}"
                );
            }
        }
    }

    #[test]
    fn same_seed_reproduces() {
        let planted = catalog::antihole7();
        let forbidden = [
            catalog::path(5),
            catalog::complete(4),
            catalog::wheel(5),
            catalog::graph_f(),
        ];
        let a = sample_free_extension(&planted, &forbidden, 13, 7, 32);
        let b = sample_free_extension(&planted, &forbidden, 13, 7, 32);
        assert_eq!(a, b);
    }
}
