//! The one random source used across the crate: ChaCha8 keyed by a `u64`
//! seed. Its output stream is fixed by the algorithm, so seeded corpora are
//! identical across platforms and runs.

use rand::SeedableRng;
pub use rand_chacha::ChaCha8Rng as Rng;

pub fn seeded(seed: u64) -> Rng {
    Rng::seed_from_u64(seed)
}
