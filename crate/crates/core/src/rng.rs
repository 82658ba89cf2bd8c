//! Seeded randomness.
//!
//! Every random choice in the crate draws from xoshiro256++ seeded through
//! SplitMix64 (`Xoshiro256PlusPlus::seed_from_u64`). Derived seeds (retry
//! trials, experiment cells) are SplitMix64 outputs, so a run is a pure
//! function of its 64-bit seed.

use rand::{RngCore, SeedableRng};
use rand_xoshiro::{SplitMix64, Xoshiro256PlusPlus};

pub type Rng = Xoshiro256PlusPlus;

pub fn rng_from_seed(seed: u64) -> Rng {
    Xoshiro256PlusPlus::seed_from_u64(seed)
}

/// Seed of the trial following the one seeded with `seed`.
pub fn next_seed(seed: u64) -> u64 {
    SplitMix64::seed_from_u64(seed).next_u64()
}

/// Seed for cell `(n, trial)` of an experiment.
pub fn cell_seed(master: u64, n: usize, trial: usize) -> u64 {
    let key = ((n as u64) << 32) ^ trial as u64;
    master ^ SplitMix64::seed_from_u64(key).next_u64()
}
