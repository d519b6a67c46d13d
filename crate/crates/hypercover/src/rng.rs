//! Seed derivation and the reproducible generator used everywhere.
//!
//! All randomness flows through [`ChaCha8Rng`] streams whose seeds are derived
//! from a master seed by the SplitMix64 mixer below. A stream is addressed by
//! `(master_seed, stream_index)`; the derivation is a pure function, so any
//! partition of work across threads that assigns one stream per logical unit
//! (one sample, one worker) reproduces bit-identical results regardless of
//! the worker count.

use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// SplitMix64 mixing step (Steele, Lea, Flood 2014). Used only to spread
/// seed material, never as the sampling generator itself.
#[inline]
pub fn splitmix64(state: &mut u64) -> u64 {
    *state = state.wrapping_add(0x9e37_79b9_7f4a_7c15);
    let mut z = *state;
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Derive the seed of stream `index` from `master`.
pub fn derive_stream_seed(master: u64, index: u64) -> u64 {
    let mut s = master ^ 0x6a09_e667_f3bc_c908u64.wrapping_mul(index.wrapping_add(1));
    let a = splitmix64(&mut s);
    let b = splitmix64(&mut s);
    a ^ b.rotate_left(32)
}

/// A fresh generator for stream `(master, index)`.
pub fn stream_rng(master: u64, index: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(derive_stream_seed(master, index))
}
