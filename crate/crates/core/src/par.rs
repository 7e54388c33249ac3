//! Worker-count aware data parallelism.
//!
//! With the `parallel` feature and more than one worker, chunks are mapped on
//! a dedicated rayon pool; otherwise the same closures run sequentially.
//! Results always come back in chunk order, so reductions are identical for
//! every worker count.

use std::ops::Range;
#[cfg(feature = "parallel")]
use std::sync::Arc;

use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub struct Workers {
    n: usize,
    #[cfg(feature = "parallel")]
    pool: Option<Arc<rayon::ThreadPool>>,
}

impl Default for Workers {
    fn default() -> Self {
        Self::sequential()
    }
}

impl Workers {
    pub fn sequential() -> Self {
        Self {
            n: 1,
            #[cfg(feature = "parallel")]
            pool: None,
        }
    }

    /// `n` workers; `n = 1` is the sequential path. Without the `parallel`
    /// feature every count runs sequentially.
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidArgument(
                "worker count must be at least 1".into(),
            ));
        }
        #[cfg(feature = "parallel")]
        {
            let pool = if n > 1 {
                let p = rayon::ThreadPoolBuilder::new()
                    .num_threads(n)
                    .build()
                    .map_err(|e| Error::InvalidArgument(format!("thread pool: {e}")))?;
                Some(Arc::new(p))
            } else {
                None
            };
            Ok(Self { n, pool })
        }
        #[cfg(not(feature = "parallel"))]
        Ok(Self { n })
    }

    pub fn count(&self) -> usize {
        self.n
    }

    pub fn is_parallel(&self) -> bool {
        #[cfg(feature = "parallel")]
        return self.pool.is_some();
        #[cfg(not(feature = "parallel"))]
        false
    }

    /// Maps `f` over consecutive chunks of `items`, preserving order.
    pub fn map_chunks<T, R, G>(&self, items: &[T], chunk: usize, f: G) -> Vec<R>
    where
        T: Sync,
        R: Send,
        G: Fn(&[T]) -> R + Sync + Send,
    {
        let chunk = chunk.max(1);
        #[cfg(feature = "parallel")]
        if let Some(pool) = &self.pool {
            use rayon::prelude::*;
            return pool.install(|| items.par_chunks(chunk).map(&f).collect());
        }
        items.chunks(chunk).map(f).collect()
    }

    /// Maps `f` over `0..total` split into ranges of length `chunk`, in order.
    pub fn map_ranges<R, G>(&self, total: u64, chunk: u64, f: G) -> Vec<R>
    where
        R: Send,
        G: Fn(Range<u64>) -> R + Sync + Send,
    {
        let chunk = chunk.max(1);
        let ranges: Vec<Range<u64>> = (0..total.div_ceil(chunk))
            .map(|i| i * chunk..((i + 1) * chunk).min(total))
            .collect();
        #[cfg(feature = "parallel")]
        if let Some(pool) = &self.pool {
            use rayon::prelude::*;
            return pool.install(|| ranges.into_par_iter().map(&f).collect());
        }
        ranges.into_iter().map(f).collect()
    }
}
