//! Seeded random streams.
//!
//! Every stochastic step draws from a [`RandomStream`]. Streams are backed by
//! ChaCha8, which is counter based, so independent sub-streams can be split
//! off a parent without sharing state.

use rand::seq::index;
use rand::RngCore;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::Scalar;

#[derive(Debug, Clone)]
pub struct RandomStream {
    seed: u64,
    rng: ChaCha8Rng,
}

impl RandomStream {
    pub fn new(seed: u64) -> Self {
        Self {
            seed,
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    /// Independent stream sharing this stream's key but a distinct stream id.
    /// Splitting does not advance `self`.
    pub fn split(&self, stream_id: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        rng.set_stream(stream_id.wrapping_add(1));
        Self {
            seed: self.seed,
            rng,
        }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.rng.next_u64()
    }

    /// Uniform draw on `[0, 1)`.
    pub fn uniform<S: Scalar>(&mut self) -> S {
        let u = (self.rng.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64);
        let s = S::lit(u);
        // f32 rounding can land on 1.0
        if s >= S::one() {
            S::below_one()
        } else {
            s
        }
    }

    /// Uniform draw on `[lower, upper]`.
    pub fn uniform_between<S: Scalar>(&mut self, lower: S, upper: S) -> S {
        let u: S = self.uniform();
        (lower + u * (upper - lower)).max(lower).min(upper)
    }

    /// Uniform index in `0..n`.
    pub fn index(&mut self, n: usize) -> usize {
        assert!(n > 0, "cannot draw an index from an empty range");
        (self.rng.next_u64() % n as u64) as usize
    }

    /// `amount` distinct indices from `0..len`, in draw order.
    pub fn sample_indices(&mut self, len: usize, amount: usize) -> Vec<usize> {
        index::sample(&mut self.rng, len, amount).into_vec()
    }

    /// Fisher-Yates shuffle.
    pub fn shuffle<T>(&mut self, items: &mut [T]) {
        for i in (1..items.len()).rev() {
            let j = self.index(i + 1);
            items.swap(i, j);
        }
    }
}

/// Draws one point with each coordinate independently uniform on
/// `[lower[i], upper[i]]`.
pub fn uniform_in_box<S: Scalar>(rng: &mut RandomStream, lower: &[S], upper: &[S]) -> Vec<S> {
    debug_assert_eq!(lower.len(), upper.len());
    lower
        .iter()
        .zip(upper)
        .map(|(&lo, &hi)| rng.uniform_between(lo, hi))
        .collect()
}

fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Stable seed derivation from a master seed, a label and integer
/// coordinates. Stable across platforms and compiler versions.
pub fn derive_seed(master: u64, label: &str, parts: &[u64]) -> u64 {
    // FNV-1a over the label
    let mut label_hash: u64 = 0xcbf2_9ce4_8422_2325;
    for byte in label.bytes() {
        label_hash ^= u64::from(byte);
        label_hash = label_hash.wrapping_mul(0x0000_0100_0000_01b3);
    }
    let mut state = splitmix64(master);
    state = splitmix64(state ^ label_hash);
    for &part in parts {
        state = splitmix64(state ^ part);
    }
    state
}
