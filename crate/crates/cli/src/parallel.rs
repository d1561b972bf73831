use ctrlab_core::Executor;
use rayon::prelude::*;

/// Runs scans on a rayon pool. `par_iter().collect()` keeps input order,
/// so results do not depend on the thread count.
pub struct Rayon {
    pool: rayon::ThreadPool,
}

impl Rayon {
    /// `threads = 0` lets rayon pick.
    pub fn new(threads: usize) -> Rayon {
        let pool = rayon::ThreadPoolBuilder::new().num_threads(threads).build().expect("thread pool");
        Rayon { pool }
    }

    /// Capped by `CTRLAB_THREADS` when it is set to a positive integer.
    pub fn from_env() -> Rayon {
        let threads = std::env::var("CTRLAB_THREADS").ok().and_then(|s| s.trim().parse().ok()).unwrap_or(0);
        Rayon::new(threads)
    }
}

impl Executor for Rayon {
    fn map<I, T, F>(&self, items: &[I], f: F) -> Vec<T>
    where
        I: Sync,
        T: Send,
        F: Fn(&I) -> T + Sync + Send,
    {
        self.pool.install(|| items.par_iter().map(f).collect())
    }
}
