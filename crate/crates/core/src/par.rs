//! Order-preserving data-parallel map used by field maps, sweeps and the
//! validation suite.
//!
//! With the `parallel` feature the work is spread over the rayon thread
//! pool; without it (or with [`Execution::Sequential`]) items are processed
//! in order on the calling thread. Results are identical either way because
//! every evaluation is a pure function of its input.

/// Defaults to `Parallel` when the feature is enabled.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Execution {
    #[cfg_attr(not(feature = "parallel"), default)]
    Sequential,
    #[cfg(feature = "parallel")]
    #[default]
    Parallel,
}

/// `items.iter().map(f).collect()`, possibly in parallel, output in input order.
pub fn map<T, R, F>(items: &[T], exec: Execution, f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    match exec {
        Execution::Sequential => items.iter().map(f).collect(),
        #[cfg(feature = "parallel")]
        Execution::Parallel => {
            use rayon::prelude::*;
            items.par_iter().map(f).collect()
        }
    }
}
