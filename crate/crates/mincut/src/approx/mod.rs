//! Approximate minimum cuts.
//!
//! * [`k_approx_min_cut`] simulates random contraction with one batch of
//!   component-weight operations per trial.
//! * [`sparse_certificate`] and [`matula_approx`] give a `(2 + eps)`
//!   approximation by repeated certificate contraction.
//! * [`constant_approx_min_cut`] combines both on sampled skeletons.

mod certificate;
mod constant;
mod contraction;
mod matula;

pub use certificate::{scan_first_search, sparse_certificate};
pub use constant::{constant_approx_min_cut, ConstantApprox};
pub(crate) use constant::constant_approx_bounded;
pub use contraction::{k_approx_min_cut, logn_approx, trials_for};
pub use matula::matula_approx;

use serde::{Deserialize, Serialize};

/// Tunable constants of the randomized pipeline.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Constants {
    /// Contraction trials: `ceil(alpha * n^(2/k) * ln n)`.
    pub alpha: f64,
    /// Skeleton certificates use `beta * ceil(log2 n)` rounds; a guess is
    /// accepted when its skeleton cut reaches half of that.
    pub beta: f64,
    /// Packing skeletons sample with `p = gamma * ceil(log2 n) / c`.
    pub gamma: f64,
    /// Default number of packed trees: `ceil(delta * log2 n)`.
    pub delta: f64,
    /// Matula slack: the answer is within `2 + eps` of the minimum cut.
    pub eps: f64,
}

impl Default for Constants {
    fn default() -> Self {
        Self { alpha: 3.0, beta: 6.0, gamma: 3.0, delta: 2.0, eps: 1.0 }
    }
}
