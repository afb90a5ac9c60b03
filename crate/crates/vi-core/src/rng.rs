//! Deterministic sub-stream derivation.
//!
//! One root seed per run; every consumer of randomness derives its own
//! ChaCha8 stream by hashing `(root, purpose tag, index)` with pure integer
//! arithmetic, so results are bit-reproducible across platforms and
//! independent of evaluation order.

use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// SplitMix64 finalizer; a bijective mixer with good avalanche behavior.
#[inline]
pub fn mix64(mut h: u64) -> u64 {
    h = h.wrapping_add(0x9e37_79b9_7f4a_7c15);
    h = (h ^ (h >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    h = (h ^ (h >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    h ^ (h >> 31)
}

/// FNV-1a over a string, for stable text tags (algorithm names etc.).
#[inline]
pub fn fnv1a64(s: &str) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for b in s.as_bytes() {
        h ^= u64::from(*b);
        h = h.wrapping_mul(0x0000_0100_0000_01b3);
    }
    h
}

/// Derives the seed of the `(tag, index)` sub-stream of `root`.
#[inline]
pub fn derive_seed(root: u64, tag: u64, index: u64) -> u64 {
    mix64(mix64(root ^ mix64(tag)) ^ mix64(index))
}

/// Returns the ChaCha8 stream for `(root, tag, index)`.
pub fn substream(root: u64, tag: u64, index: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(derive_seed(root, tag, index))
}
