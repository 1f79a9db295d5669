//! Order-preserving data-parallel maps.

use std::ops::Range;

use crate::{Error, Result};

/// Executes independent work items, in parallel when built with the
/// `parallel` feature and more than one job is requested.
///
/// Outputs are always returned in input order, so results never depend on
/// the worker count.
pub struct Runner {
    jobs: usize,
    #[cfg(feature = "parallel")]
    pool: Option<rayon::ThreadPool>,
}

impl Runner {
    pub fn sequential() -> Self {
        Runner {
            jobs: 1,
            #[cfg(feature = "parallel")]
            pool: None,
        }
    }

    pub fn new(jobs: usize) -> Result<Self> {
        if jobs == 0 {
            return Err(Error::InvalidArgument("jobs must be at least 1".into()));
        }
        if jobs == 1 {
            return Ok(Self::sequential());
        }
        #[cfg(feature = "parallel")]
        {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(jobs)
                .build()
                .map_err(|e| Error::InvalidArgument(format!("thread pool: {e}")))?;
            Ok(Runner {
                jobs,
                pool: Some(pool),
            })
        }
        #[cfg(not(feature = "parallel"))]
        {
            Ok(Runner { jobs })
        }
    }

    /// Requested worker count (the effective count is 1 without `parallel`).
    pub fn jobs(&self) -> usize {
        self.jobs
    }

    pub fn is_parallel(&self) -> bool {
        #[cfg(feature = "parallel")]
        {
            self.pool.is_some()
        }
        #[cfg(not(feature = "parallel"))]
        {
            false
        }
    }

    pub fn map<T, R, F>(&self, items: &[T], f: F) -> Vec<R>
    where
        T: Sync,
        R: Send,
        F: Fn(&T) -> R + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if let Some(pool) = &self.pool {
            use rayon::prelude::*;
            return pool.install(|| items.par_iter().map(f).collect());
        }
        items.iter().map(f).collect()
    }

    pub fn map_range<R, F>(&self, range: Range<usize>, f: F) -> Vec<R>
    where
        R: Send,
        F: Fn(usize) -> R + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if let Some(pool) = &self.pool {
            use rayon::prelude::*;
            return pool.install(|| range.into_par_iter().map(f).collect());
        }
        range.map(f).collect()
    }
}

impl Default for Runner {
    fn default() -> Self {
        Self::sequential()
    }
}

impl std::fmt::Debug for Runner {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Runner")
            .field("jobs", &self.jobs)
            .field("parallel", &self.is_parallel())
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_is_preserved_for_any_job_count() {
        let expected: Vec<usize> = (0..1000).map(|i| i * i).collect();
        for jobs in [1, 2, 8] {
            let runner = Runner::new(jobs).unwrap();
            assert_eq!(runner.map_range(0..1000, |i| i * i), expected);
            let items: Vec<usize> = (0..1000).collect();
            assert_eq!(runner.map(&items, |&i| i * i), expected);
        }
    }

    #[test]
    fn zero_jobs_rejected() {
        assert!(Runner::new(0).is_err());
    }
}
