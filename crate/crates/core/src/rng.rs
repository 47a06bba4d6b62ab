//! Seed derivation.
//!
//! Every random stream is a ChaCha8 generator keyed by the user seed, with the
//! 64-bit stream id set to `purpose << 32 | index`. ChaCha8 output is fixed
//! across platforms, so identical seeds give identical graphs everywhere.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub type GraphRng = ChaCha8Rng;

/// What a stream is used for; keeps independent consumers from sharing bits.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[repr(u64)]
pub enum Purpose {
    Sequence = 0,
    Generator = 1,
    Baseline = 2,
}

pub fn stream(seed: u64, purpose: Purpose, index: u32) -> GraphRng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(((purpose as u64) << 32) | u64::from(index));
    rng
}
