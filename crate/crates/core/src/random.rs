//! Seeded pseudo-random embeddings.
//!
//! The stream is SplitMix64: the state advances by `0x9E3779B97F4A7C15` and
//! each output is the state passed through the standard two-multiply
//! finalizer. Entries are drawn uniformly modulo `p^{β_i}` by rejection, in
//! generator-major order. Identical seeds and parameters give identical
//! embeddings on every platform.

use crate::embedding::{Embedding, EmbeddingError};
use crate::partition::Partition;
use crate::ring::{Matrix, RingCtx};
use crate::tableau::LRTableau;

#[derive(Clone, Debug)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform in `[0, bound)`.
    pub fn below(&mut self, bound: u64) -> u64 {
        assert!(bound > 0);
        let zone = u64::MAX - (u64::MAX % bound);
        loop {
            let x = self.next_u64();
            if x < zone {
                return x % bound;
            }
        }
    }
}

pub fn random_embedding(
    p: u64,
    beta: &Partition,
    num_gens: usize,
    seed: u64,
) -> Result<Embedding, EmbeddingError> {
    let ctx = RingCtx::for_exponents(p, beta.parts().iter().copied())?;
    let mut rng = SplitMix64::new(seed);
    let cols: Vec<Vec<u64>> = (0..num_gens)
        .map(|_| beta.parts().iter().map(|&e| rng.below(ctx.pow(e))).collect())
        .collect();
    Embedding::new(p, beta.clone(), Matrix::from_columns(beta.len(), &cols))
}

/// First seed in `start..start + tries` whose random embedding has the
/// given tableau.
pub fn search_tableau(
    p: u64,
    num_gens: usize,
    target: &LRTableau,
    start: u64,
    tries: u64,
) -> Result<Option<(u64, Embedding)>, EmbeddingError> {
    let beta = target.beta();
    for seed in start..start.saturating_add(tries) {
        let e = random_embedding(p, beta, num_gens, seed)?;
        if e.chain() == target.chain() {
            return Ok(Some((seed, e)));
        }
    }
    Ok(None)
}
