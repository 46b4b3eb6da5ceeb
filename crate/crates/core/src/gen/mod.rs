//! Test-matrix generation: worked fixtures, sign-preserving perturbations
//! and rejection-sampled ASSR candidates.
//!
//! All randomness is seeded. Batch generators derive one stream per trial
//! from `seed + trial`, so results do not depend on the execution mode.

mod fixtures;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::classify::{is_assr, ClassifyOptions};
use crate::exact::{backward_identity, flip_rows, int, ratio, RMatrix, Rational};
use crate::par::{self, Execution};

pub use fixtures::{
    a1, a2, a3, a4, a5, a6, auxiliary_matrices, fixture, fixture_matrix, reference_fixtures, ExpectedCombined,
    ExpectedFacts, Fixture, FixtureId,
};

/// Smallest and largest order accepted by [`sample_assr`].
pub const SAMPLE_MIN_ORDER: usize = 2;
pub const SAMPLE_MAX_ORDER: usize = 6;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GenError {
    #[error("order {n} outside {min}..={max}")]
    InvalidOrder { n: usize, min: usize, max: usize },
    #[error("entry range must be at least 1, got {0}")]
    InvalidRange(i64),
}

/// Seeded generator for trial `trial` of a batch.
pub fn trial_rng(seed: u64, trial: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed.wrapping_add(trial))
}

/// Positive scale factors in `[1/4, 8]` with small denominators.
pub fn scale_factors() -> Vec<Rational> {
    let mut v = vec![ratio(1, 4), ratio(1, 3), ratio(1, 2), ratio(2, 3), ratio(3, 2)];
    v.extend((1..=8).map(int));
    v
}

pub fn random_scale(rng: &mut impl Rng) -> Rational {
    scale_factors().choose(rng).expect("nonempty").clone()
}

/// Diagonal with entries drawn from [`scale_factors`].
pub fn random_positive_diagonal(rng: &mut impl Rng, n: usize) -> RMatrix {
    RMatrix::diagonal((0..n).map(|_| random_scale(rng)).collect())
}

/// Nonsingular diagonal with independent random signs.
pub fn random_signed_diagonal(rng: &mut impl Rng, n: usize) -> RMatrix {
    RMatrix::diagonal(
        (0..n)
            .map(|_| {
                let v = random_scale(rng);
                if rng.gen_bool(0.5) {
                    -v
                } else {
                    v
                }
            })
            .collect(),
    )
}

/// Diagonal whose entries share one random strict sign.
pub fn random_uniform_sign_diagonal(rng: &mut impl Rng, n: usize) -> RMatrix {
    let d = random_positive_diagonal(rng, n);
    if rng.gen_bool(0.5) {
        d.neg()
    } else {
        d
    }
}

pub fn random_permutation(rng: &mut impl Rng, n: usize) -> RMatrix {
    let mut perm: Vec<usize> = (1..=n).collect();
    perm.shuffle(rng);
    RMatrix::from_fn(n, |i, j| if perm[i - 1] == j { int(1) } else { int(0) })
}

/// `D A E` for random positive diagonals `D`, `E`. Every minor is scaled by
/// a positive factor, so zero pattern, staircase shape, SR/ASSR status,
/// signature and combined matrix are all unchanged.
pub fn scale_perturb(a: &RMatrix, seed: u64) -> RMatrix {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = a.order();
    let d = random_positive_diagonal(&mut rng, n);
    let e = random_positive_diagonal(&mut rng, n);
    &(&d * a) * &e
}

/// A signed diagonal `D_n`, or `P_n D_n`, chosen at random.
pub fn random_signed_monomial(n: usize, seed: u64) -> RMatrix {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let d = random_uniform_sign_diagonal(&mut rng, n);
    if rng.gen_bool(0.5) {
        &backward_identity(n) * &d
    } else {
        d
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SampleConfig {
    /// Magnitudes are drawn uniformly from `1..=entry_max`.
    pub entry_max: i64,
    /// Give every nonzero entry the same random sign, as required of the
    /// order-1 nontrivial minors.
    pub presign: bool,
    pub exec: Execution,
}

impl Default for SampleConfig {
    fn default() -> Self {
        SampleConfig { entry_max: 9, presign: true, exec: Execution::default() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SampleOutcome {
    pub matrices: Vec<RMatrix>,
    pub attempts: usize,
}

impl SampleOutcome {
    pub fn yield_rate(&self) -> f64 {
        if self.attempts == 0 {
            0.0
        } else {
            self.matrices.len() as f64 / self.attempts as f64
        }
    }
}

/// Random type-I staircase integer matrix. For every column the zeros below
/// the diagonal start at a row that never moves up from left to right, and
/// symmetrically above the diagonal.
pub fn random_type_i_staircase(rng: &mut impl Rng, n: usize, entry_max: i64, presign: bool) -> RMatrix {
    // lower[c]: first zero row (0-based) in column c; n means none
    let mut lower = vec![n; n];
    let mut floor = 0;
    for (c, slot) in lower.iter_mut().enumerate() {
        let lo = floor.max(c + 1);
        *slot = if lo >= n { n } else { rng.gen_range(lo..=n) };
        floor = *slot;
    }
    // upper[r]: first zero column in row r
    let mut upper = vec![n; n];
    let mut floor = 0;
    for (r, slot) in upper.iter_mut().enumerate() {
        let lo = floor.max(r + 1);
        *slot = if lo >= n { n } else { rng.gen_range(lo..=n) };
        floor = *slot;
    }
    let sign = if presign && rng.gen_bool(0.5) { -1 } else { 1 };
    RMatrix::from_fn(n, |i, j| {
        let (r, c) = (i - 1, j - 1);
        let zero = (r > c && r >= lower[c]) || (c > r && c >= upper[r]);
        if zero {
            int(0)
        } else {
            let mag = rng.gen_range(1..=entry_max);
            let s = if presign { sign } else if rng.gen_bool(0.5) { -1 } else { 1 };
            int(s * mag)
        }
    })
}

/// Rejection sampling of ASSR matrices of order `n`: draw `trials`
/// staircase-patterned candidates (type-II via a row flip half of the time)
/// and keep those that classify as ASSR. May return fewer than `trials`.
pub fn sample_assr(n: usize, trials: usize, seed: u64) -> Result<SampleOutcome, GenError> {
    sample_assr_with(n, trials, seed, &SampleConfig::default())
}

pub fn sample_assr_with(n: usize, trials: usize, seed: u64, cfg: &SampleConfig) -> Result<SampleOutcome, GenError> {
    if !(SAMPLE_MIN_ORDER..=SAMPLE_MAX_ORDER).contains(&n) {
        return Err(GenError::InvalidOrder { n, min: SAMPLE_MIN_ORDER, max: SAMPLE_MAX_ORDER });
    }
    if cfg.entry_max < 1 {
        return Err(GenError::InvalidRange(cfg.entry_max));
    }
    let opts = ClassifyOptions::default().with_exec(Execution::Sequential);
    let kept = par::map_range(cfg.exec, trials, |t| {
        let mut rng = trial_rng(seed, t as u64);
        let candidate = random_type_i_staircase(&mut rng, n, cfg.entry_max, cfg.presign);
        let candidate = if rng.gen_bool(0.5) { flip_rows(&candidate) } else { candidate };
        let ok = is_assr(&candidate, &opts).map(|o| o.is_assr).unwrap_or(false);
        ok.then_some(candidate)
    });
    Ok(SampleOutcome { matrices: kept.into_iter().flatten().collect(), attempts: trials })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify::Signature;
    use crate::patterns::staircase_type;

    #[test]
    fn scaling_keeps_signature() {
        for seed in 0..5 {
            let m = scale_perturb(&a2(), seed);
            let r = is_assr(&m, &ClassifyOptions::default()).unwrap();
            assert!(r.is_assr);
            assert_eq!(r.signature, Some(Signature::from_signs(&[-1, 1, -1, 1, -1, -1])));
        }
        let d = scale_perturb(&RMatrix::identity(3), 3);
        assert!(d.is_diagonal() && d.is_nonnegative());
    }

    #[test]
    fn staircase_generator_produces_type_i() {
        let mut rng = trial_rng(11, 0);
        for _ in 0..200 {
            let n = rng.gen_range(1..=6);
            let m = random_type_i_staircase(&mut rng, n, 5, true);
            assert!(staircase_type(&m).has_type_i(), "{m}");
        }
    }

    #[test]
    fn sampling_is_deterministic_and_valid() {
        let a = sample_assr(2, 100, 5).unwrap();
        assert!(!a.matrices.is_empty());
        let seq = sample_assr_with(3, 50, 5, &SampleConfig { exec: Execution::Sequential, ..Default::default() });
        let par = sample_assr_with(3, 50, 5, &SampleConfig { exec: Execution::Parallel, ..Default::default() });
        assert_eq!(seq, par);
        assert_eq!(sample_assr(7, 1, 0), Err(GenError::InvalidOrder { n: 7, min: 2, max: 6 }));
        assert_eq!(sample_assr(1, 1, 0), Err(GenError::InvalidOrder { n: 1, min: 2, max: 6 }));
    }

    #[test]
    fn monomials() {
        for seed in 0..20 {
            let m = random_signed_monomial(4, seed);
            assert!(crate::classify::is_monomial(&m));
        }
        let p = random_permutation(&mut trial_rng(1, 2), 5);
        assert!(crate::classify::is_monomial(&p) && p.is_nonnegative());
    }
}
