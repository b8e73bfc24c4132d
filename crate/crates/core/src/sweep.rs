//! Randomised trial sweeps.
//!
//! Trial `k` of a sweep seeded with `s` always draws from the ChaCha stream
//! `(s, k)`, so results do not depend on how trials are scheduled. With the
//! `parallel` feature the trials fan out over rayon; without it
//! [`Execution::Parallel`] quietly runs sequentially.

use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Execution {
    Sequential,
    #[default]
    Parallel,
}

impl Execution {
    /// Whether this mode actually runs on the thread pool in this build.
    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == Execution::Parallel
    }
}

/// RNG for one trial.
pub fn trial_rng(seed: u64, trial: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    rng
}

/// Runs `trials` independent trials and collects `(trial, message)` for
/// each failure, ordered by trial index.
pub fn run_trials<F>(trials: u64, seed: u64, exec: Execution, f: F) -> Vec<(u64, String)>
where
    F: Fn(&mut ChaCha8Rng) -> Option<String> + Sync,
{
    let one = |k: u64| f(&mut trial_rng(seed, k)).map(|msg| (k, msg));
    #[cfg(feature = "parallel")]
    if exec.is_parallel() {
        let mut out: Vec<(u64, String)> = (0..trials).into_par_iter().filter_map(one).collect();
        out.sort_by_key(|(k, _)| *k);
        return out;
    }
    let _ = exec;
    (0..trials).filter_map(one).collect()
}
