//! Deterministic randomness plumbing.
//!
//! Every stochastic site (parameter init, per-epoch shuffling, dropout,
//! synthetic data) draws from its own ChaCha stream derived from the run
//! seed and a purpose tag, so adding or removing one consumer never shifts
//! the draws seen by another.

use rand_chacha::ChaCha8Rng;
use rand_chacha::rand_core::SeedableRng;

/// Purpose tags for derived RNG streams.
#[derive(Debug, Clone, Copy)]
pub enum Stream {
    /// Learnable embedding initialization.
    InitEmbedding,
    /// Attention projection init for encoder slot `slot`.
    InitEncoder(u64),
    /// Training-set shuffle for the given epoch.
    Shuffle(u64),
    /// Dropout masks for the given epoch.
    Dropout(u64),
    /// Synthetic data generation.
    Synthetic,
}

impl Stream {
    fn tag(self) -> u64 {
        match self {
            Stream::InitEmbedding => 1 << 56,
            Stream::InitEncoder(slot) => (2 << 56) | slot,
            Stream::Shuffle(epoch) => (3 << 56) | epoch,
            Stream::Dropout(epoch) => (4 << 56) | epoch,
            Stream::Synthetic => 5 << 56,
        }
    }
}

/// splitmix64 finalizer; decorrelates seed/tag combinations.
pub fn mix(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e3779b97f4a7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
    z ^ (z >> 31)
}

/// RNG for one purpose stream of a seeded run.
pub fn derive(seed: u64, stream: Stream) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(mix(seed ^ mix(stream.tag())))
}
