//! Counter-based edge randomness.
//!
//! ChaCha20 keyed by `seed`, with `attempt` as the stream id and the pair
//! index selecting the word position. Every draw is a pure function of
//! `(seed, attempt, pair_index)`, so attempts can be evaluated in any order.

use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha20Rng;

const SCALE: f64 = 1.0 / (1u64 << 53) as f64;

fn to_unit(x: u64) -> f64 {
    (x >> 11) as f64 * SCALE
}

fn stream(seed: u64, attempt: u64) -> ChaCha20Rng {
    let mut rng = ChaCha20Rng::seed_from_u64(seed);
    rng.set_stream(attempt);
    rng
}

/// Uniform draw in `[0, 1)` for one pair of one attempt.
pub fn pair_uniform(seed: u64, attempt: u64, pair_index: u64) -> f64 {
    let mut rng = stream(seed, attempt);
    rng.set_word_pos(2 * pair_index as u128);
    to_unit(rng.next_u64())
}

/// Sequential reader over the pair draws of one attempt, starting at pair 0.
pub struct EdgeStream {
    rng: ChaCha20Rng,
}

impl EdgeStream {
    pub fn new(seed: u64, attempt: u64) -> Self {
        EdgeStream {
            rng: stream(seed, attempt),
        }
    }

    pub fn next_uniform(&mut self) -> f64 {
        to_unit(self.rng.next_u64())
    }
}
