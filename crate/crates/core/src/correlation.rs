//! Exact aperiodic correlation arithmetic.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::sequence::{BinarySequence, SequencePair};

/// Profiles longer than this are computed in parallel over the shift.
const PARALLEL_PROFILE_LEN: usize = 2048;

/// `sum_{k=0}^{n-1-tau} a[k] * b[k + tau]` for `0 <= tau`; zero once the
/// shift runs off the end.
#[inline]
pub(crate) fn correlate(a: &[i8], b: &[i8], tau: usize) -> i64 {
    debug_assert_eq!(a.len(), b.len());
    if tau >= a.len() {
        return 0;
    }
    a[..a.len() - tau]
        .iter()
        .zip(&b[tau..])
        .map(|(&x, &y)| i64::from(x * y))
        .sum()
}

/// Aperiodic cross-correlation of two equal-length sequences at a signed shift.
///
/// Negative shifts are answered through `ρ_{a,b}(-τ) = ρ_{b,a}(τ)`.
pub fn cross_correlation(a: &BinarySequence, b: &BinarySequence, tau: i64) -> Result<i64> {
    if a.len() != b.len() {
        return Err(Error::LengthMismatch(a.len(), b.len()));
    }
    if tau < 0 {
        return cross_correlation(b, a, -tau);
    }
    let tau = usize::try_from(tau).unwrap_or(usize::MAX);
    Ok(correlate(a.as_slice(), b.as_slice(), tau))
}

/// Aperiodic autocorrelation at `0 <= tau < len`.
pub fn aacf(a: &BinarySequence, tau: usize) -> Result<i64> {
    if tau >= a.len() {
        return Err(Error::ShiftOutOfRange {
            tau: tau as i64,
            len: a.len(),
        });
    }
    Ok(correlate(a.as_slice(), a.as_slice(), tau))
}

/// Autocorrelation sums `ρ_a(τ) + ρ_b(τ)` of a pair, indexed by `τ = 0..N`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CorrelationProfile {
    values: Vec<i64>,
}

impl CorrelationProfile {
    pub fn from_values(values: Vec<i64>) -> Self {
        CorrelationProfile { values }
    }

    pub fn values(&self) -> &[i64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn magnitudes(&self) -> Vec<u64> {
        self.values.iter().map(|v| v.unsigned_abs()).collect()
    }

    pub fn get(&self, tau: usize) -> Option<i64> {
        self.values.get(tau).copied()
    }
}

fn pair_sum(p: &SequencePair, tau: usize) -> i64 {
    let a = p.first().as_slice();
    let b = p.second().as_slice();
    correlate(a, a, tau) + correlate(b, b, tau)
}

pub fn aacs_profile(p: &SequencePair) -> CorrelationProfile {
    let n = p.len();
    let values = if n >= PARALLEL_PROFILE_LEN {
        (0..n).into_par_iter().map(|tau| pair_sum(p, tau)).collect()
    } else {
        (0..n).map(|tau| pair_sum(p, tau)).collect()
    };
    CorrelationProfile { values }
}

/// First shift in `1..N` with a nonzero autocorrelation sum, if any.
pub(crate) fn first_nonzero_shift(p: &SequencePair) -> Option<usize> {
    (1..p.len()).find(|&tau| pair_sum(p, tau) != 0)
}
