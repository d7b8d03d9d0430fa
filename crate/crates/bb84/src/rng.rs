//! Seed-splitting helpers.
//!
//! A run is reproducible iff every consumer of randomness gets its own
//! stream addressed by (master seed, counter). ChaCha8's independent stream
//! parameter gives exactly that: `stream(seed, i)` and `stream(seed, j)`
//! never overlap for `i != j`, and re-running with the same pair replays the
//! identical sequence regardless of what other trials did.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// The workspace-wide RNG type. Deterministic, seedable, cheap to fork.
pub type SplitRng = ChaCha8Rng;

/// Derive the `index`-th independent stream of `master`.
pub fn stream(master: u64, index: u64) -> SplitRng {
    let mut rng = ChaCha8Rng::seed_from_u64(master);
    rng.set_stream(index);
    rng
}
