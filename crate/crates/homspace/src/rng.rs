//! Deterministic random streams for the randomized routines.
//!
//! Every randomized computation in the workspace draws from a ChaCha8 stream
//! whose 64-bit seed is derived from the user seed plus a textual stage tag
//! and detail string (usually a partition). The derivation below is frozen:
//! FNV-1a over the tag bytes, a separator, the detail bytes, XORed with the
//! user seed, then finalized with the SplitMix64 mixer. Identical inputs
//! yield identical streams on every platform and in every future version.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const FNV_OFFSET: u64 = 0xcbf2_9ce4_8422_2325;
const FNV_PRIME: u64 = 0x0000_0100_0000_01b3;

fn fnv1a(h: u64, bytes: &[u8]) -> u64 {
    let mut h = h;
    for &b in bytes {
        h ^= u64::from(b);
        h = h.wrapping_mul(FNV_PRIME);
    }
    h
}

fn splitmix64(z: u64) -> u64 {
    let mut z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// A reproducible stream for the given user seed, stage tag, and detail
/// string.
#[must_use]
pub fn stream(seed: u64, stage: &str, detail: &str) -> ChaCha8Rng {
    let mut h = fnv1a(FNV_OFFSET, stage.as_bytes());
    h = fnv1a(h, &[0xff]);
    h = fnv1a(h, detail.as_bytes());
    ChaCha8Rng::seed_from_u64(splitmix64(h ^ seed))
}
