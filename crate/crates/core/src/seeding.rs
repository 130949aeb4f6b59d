//! Deterministic per-sample random streams.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Generator for sample `index` under `seed`. Re-running a sample with the
/// same pair reproduces it exactly, independent of how many samples ran
/// before it.
pub fn sample_rng(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}
