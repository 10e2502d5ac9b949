//! Seeded randomness for reproducible sampling.
//!
//! The generator is SplitMix64 with its state initialised directly from the
//! 64-bit seed. The first three outputs for seed 0 are
//! `0xe220a8397b1dcdaf`, `0x6e789e6aa1b965f4`, `0x06c45d188009454f`.
//! Bounded draws use rejection sampling on the raw 64-bit output so that the
//! sequence of sampled values is fully specified by the seed.

use rand_core::{RngCore, SeedableRng};
use rand_xoshiro::SplitMix64;

#[derive(Debug, Clone)]
pub struct SearchRng(SplitMix64);

impl SearchRng {
    pub fn new(seed: u64) -> Self {
        SearchRng(SplitMix64::seed_from_u64(seed))
    }

    pub fn next_u64(&mut self) -> u64 {
        self.0.next_u64()
    }

    /// Uniform draw from `0..bound`; `bound` must be positive.
    pub fn below(&mut self, bound: u64) -> u64 {
        assert!(bound > 0, "empty range");
        // Reject the top `2^64 mod bound` outputs.
        let rejected = (u64::MAX % bound + 1) % bound;
        loop {
            let x = self.next_u64();
            if x <= u64::MAX - rejected {
                return x % bound;
            }
        }
    }

    /// Uniform draw from `lo..=hi`.
    pub fn inclusive(&mut self, lo: u64, hi: u64) -> u64 {
        debug_assert!(lo <= hi);
        match (hi - lo).checked_add(1) {
            Some(span) => lo + self.below(span),
            None => self.next_u64(),
        }
    }
}
