//! Seedable, stream-addressed random number generation.
//!
//! Every stochastic operation in the crate draws from a [`Stream`], which is a
//! ChaCha8 generator keyed by `(seed, stream_id)`.  Distinct stream ids give
//! statistically independent sequences from the same seed, so concurrent
//! consumers (input noise, atom initialization, subsample draws, ...) never
//! contend for generator state and results are bit-reproducible regardless of
//! thread count.

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

/// Well-known stream ids; keeping them in one place avoids collisions.
pub mod streams {
    /// Input sequence u.
    pub const INPUT: u64 = 0;
    /// Measurement noise v.
    pub const NOISE: u64 = 1;
    /// Random atom initialization.
    pub const ATOMS: u64 = 2;
    /// Base id for subsample draws; subsample i uses `SUBSAMPLE_BASE + i`.
    pub const SUBSAMPLE_BASE: u64 = 100;
}

/// A deterministic random stream.
pub struct Stream {
    rng: ChaCha8Rng,
}

impl Stream {
    /// Create the stream identified by `(seed, stream_id)`.
    pub fn new(seed: u64, stream_id: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(stream_id);
        Self { rng }
    }

    /// Uniform draw in [0, 1) with 53 random mantissa bits.
    pub fn next_uniform(&mut self) -> f64 {
        (self.rng.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    /// Standard normal draw (Box-Muller; consumes uniforms in pairs of calls).
    pub fn next_normal(&mut self) -> f64 {
        // Avoid ln(0) by flipping u1 to (0, 1].
        let u1 = 1.0 - self.next_uniform();
        let u2 = self.next_uniform();
        (-2.0 * u1.ln()).sqrt() * (std::f64::consts::TAU * u2).cos()
    }

    /// Uniform index in [0, n) via rejection sampling (no modulo bias).
    pub fn next_index(&mut self, n: usize) -> usize {
        assert!(n > 0, "next_index needs a nonempty range");
        let n = n as u64;
        let zone = u64::MAX - (u64::MAX % n);
        loop {
            let v = self.rng.next_u64();
            if v < zone {
                return (v % n) as usize;
            }
        }
    }

    /// A sorted simple random sample of `k` distinct indices from [0, n).
    ///
    /// Partial Fisher-Yates over an index vector, then sort: deterministic for
    /// a given stream state and independent of how the caller uses the result.
    pub fn sample_indices(&mut self, n: usize, k: usize) -> Vec<usize> {
        assert!(k <= n, "cannot sample {k} of {n}");
        let mut idx: Vec<usize> = (0..n).collect();
        for i in 0..k {
            let j = i + self.next_index(n - i);
            idx.swap(i, j);
        }
        let mut sample = idx[..k].to_vec();
        sample.sort_unstable();
        sample
    }

    /// Fill `buf` with i.i.d. standard normal draws.
    pub fn fill_normal(&mut self, buf: &mut [f64]) {
        for x in buf.iter_mut() {
            *x = self.next_normal();
        }
    }
}
