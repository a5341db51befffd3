//! Execution strategy: rayon-backed data parallelism with a sequential
//! fallback. The `parallel` feature controls whether rayon is compiled in at
//! all; the strategy value lets callers (and the bench suite) pick per call.

/// How the data-parallel inner loops execute.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Strategy {
    Sequential,
    /// Rayon work-stealing. Without the `parallel` feature this behaves as
    /// `Sequential`.
    Parallel,
}

impl Default for Strategy {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            Strategy::Parallel
        } else {
            Strategy::Sequential
        }
    }
}

/// Map a slice and collect results in input order.
pub(crate) fn map_collect<T, U, F>(strategy: Strategy, items: &[T], f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> U + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        if strategy == Strategy::Parallel {
            use rayon::prelude::*;
            return items.par_iter().map(f).collect();
        }
    }
    let _ = strategy;
    items.iter().map(f).collect()
}
