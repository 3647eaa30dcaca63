//! Row-parallel pair enumeration.

use rayon::prelude::*;
use tavoid_core::atlas::SphericalCode;
use tavoid_core::designs::{profile, sample_rows, tally_rows, CodeProfile, ProfileMode};

const BLOCK: usize = 64;

/// Same result as [`tavoid_core::designs::profile`], computed on the current
/// rayon pool.
pub fn profile_parallel<C: SphericalCode + Sync + ?Sized>(code: &C, mode: ProfileMode) -> CodeProfile {
    let n = code.len();
    let (tally, full) = match mode {
        ProfileMode::Full => {
            let blocks: Vec<_> = (0..n).step_by(BLOCK).map(|s| s..(s + BLOCK).min(n)).collect();
            (blocks.into_par_iter().map(|r| tally_rows(code, r)).reduce_with(|a, b| a.merge(b)), true)
        }
        ProfileMode::Sampled { points, seed } => {
            let rows = sample_rows(n, points, seed);
            (rows.into_par_iter().map(|i| tally_rows(code, i..i + 1)).reduce_with(|a, b| a.merge(b)), points >= n)
        }
    };
    match tally {
        Some(t) => CodeProfile::from_tally(code, &t, full),
        None => profile(code, mode),
    }
}

/// Runs `f` on a pool of `jobs` threads, or on the global pool for `None`.
pub fn with_jobs<T: Send>(jobs: Option<usize>, f: impl FnOnce() -> T + Send) -> T {
    match jobs {
        None => f(),
        Some(j) => rayon::ThreadPoolBuilder::new().num_threads(j.max(1)).build().expect("thread pool").install(f),
    }
}
