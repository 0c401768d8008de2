use rayon::prelude::*;

use crate::HarnessError;

/// Runs replicas in parallel and returns results ordered by replica index.
pub struct ReplicaPool {
    pool: Option<rayon::ThreadPool>,
}

impl ReplicaPool {
    /// `None` uses the global pool; `Some(t)` caps the pool at `t` threads.
    pub fn new(threads: Option<usize>) -> Result<Self, HarnessError> {
        let pool = match threads {
            None => None,
            Some(t) => Some(
                rayon::ThreadPoolBuilder::new()
                    .num_threads(t.max(1))
                    .build()
                    .map_err(|e| HarnessError::ThreadPool(e.to_string()))?,
            ),
        };
        Ok(ReplicaPool { pool })
    }

    pub fn map<T, F>(&self, count: usize, f: F) -> Vec<T>
    where
        T: Send,
        F: Fn(usize) -> T + Sync + Send,
    {
        let run = || (0..count).into_par_iter().map(&f).collect();
        match &self.pool {
            Some(p) => p.install(run),
            None => run(),
        }
    }
}
