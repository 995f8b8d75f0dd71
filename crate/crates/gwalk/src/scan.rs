//! Rayon-backed candidate scanning.

use gwalk_core::search::{CandidateScan, SupportCandidate};
use gwalk_core::WaveFunction;
use rayon::prelude::*;
use rayon::{ThreadPool, ThreadPoolBuildError, ThreadPoolBuilder};

/// Probes a batch on a dedicated pool and keeps the hit with the lowest
/// batch index, so results do not depend on the number of workers.
pub struct Parallel {
    pool: ThreadPool,
}

impl Parallel {
    pub fn new(workers: usize) -> Result<Self, ThreadPoolBuildError> {
        let pool = ThreadPoolBuilder::new().num_threads(workers).build()?;
        Ok(Parallel { pool })
    }

    pub fn workers(&self) -> usize {
        self.pool.current_num_threads()
    }
}

impl CandidateScan for Parallel {
    fn find_first(
        &self,
        batch: &[SupportCandidate],
        probe: &(dyn Fn(&SupportCandidate) -> Option<WaveFunction> + Sync),
    ) -> Option<(usize, WaveFunction)> {
        self.pool.install(|| {
            batch
                .par_iter()
                .enumerate()
                .find_map_first(|(i, c)| probe(c).map(|w| (i, w)))
        })
    }
}
