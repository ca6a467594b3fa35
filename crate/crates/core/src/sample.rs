//! Seeded random tropical matrices.

use rand::distributions::uniform::SampleUniform;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::matrix::Matrix;
use crate::scalar::{Scalar, Trop};

pub const DEFAULT_ENTRY_BOUND: i64 = 20;
pub const DEFAULT_NEG_INF_PROB: f64 = 0.25;

/// Entries are independently `-inf` with probability `neg_inf_prob`, otherwise
/// uniform in `[-entry_bound, entry_bound]`. With `triangular` set, entries
/// below the diagonal are always `-inf`.
#[derive(Debug, Clone, Copy)]
pub struct MatrixSampler<S> {
    pub n: usize,
    pub triangular: bool,
    pub entry_bound: S,
    pub neg_inf_prob: f64,
}

impl<S: Scalar + SampleUniform> MatrixSampler<S> {
    pub fn new(n: usize, triangular: bool, entry_bound: S) -> Self {
        MatrixSampler {
            n,
            triangular,
            entry_bound,
            neg_inf_prob: DEFAULT_NEG_INF_PROB,
        }
    }

    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> Result<Matrix<S>> {
        let bound = self.entry_bound.abs();
        Matrix::from_fn(self.n, |i, j| {
            if (self.triangular && i > j) || rng.gen_bool(self.neg_inf_prob) {
                Trop::NegInf
            } else {
                Trop::Finite(rng.gen_range(-bound..=bound))
            }
        })
    }
}

/// Independent, reproducible RNG stream for trial `index` under `seed`.
pub fn trial_rng(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}
