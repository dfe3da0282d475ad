//! Execution mode for the exhaustive sweeps.
//!
//! Every sweep in this crate is written against [`Exec`], which either runs
//! on the calling thread or fans out over rayon's pool. Output order never
//! depends on the mode: results are collected in input order.

/// How a sweep is executed.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Exec {
    /// Reference mode: a plain iterator on the calling thread.
    #[default]
    Sequential,
    /// Data-parallel over the current rayon pool. Falls back to sequential
    /// when the crate is built without the `parallel` feature.
    Parallel,
}

impl Exec {
    /// `Sequential` for one worker, `Parallel` otherwise.
    pub fn from_workers(workers: usize) -> Self {
        if workers <= 1 {
            Exec::Sequential
        } else {
            Exec::Parallel
        }
    }

    /// Whether this build can actually run in parallel.
    pub fn parallel_available() -> bool {
        cfg!(feature = "parallel")
    }

    /// Maps `f` over `items`, preserving order.
    pub fn map<T, R, F>(self, items: &[T], f: F) -> Vec<R>
    where
        T: Sync,
        R: Send,
        F: Fn(&T) -> R + Sync + Send,
    {
        match self {
            #[cfg(feature = "parallel")]
            Exec::Parallel => {
                use rayon::prelude::*;
                items.par_iter().map(f).collect()
            }
            _ => items.iter().map(f).collect(),
        }
    }

    /// Maps `f` over `items` and concatenates the results in input order.
    pub fn flat_map<T, R, F>(self, items: &[T], f: F) -> Vec<R>
    where
        T: Sync,
        R: Send,
        F: Fn(&T) -> Vec<R> + Sync + Send,
    {
        match self {
            #[cfg(feature = "parallel")]
            Exec::Parallel => {
                use rayon::prelude::*;
                items.par_iter().flat_map_iter(f).collect()
            }
            _ => items.iter().flat_map(f).collect(),
        }
    }

    /// Keeps the items for which `pred` holds, preserving order.
    pub fn filter<T, F>(self, items: &[T], pred: F) -> Vec<T>
    where
        T: Sync + Send + Clone,
        F: Fn(&T) -> bool + Sync + Send,
    {
        self.flat_map(items, |t| if pred(t) { vec![t.clone()] } else { Vec::new() })
    }
}

/// Runs `f` with a dedicated pool of `workers` threads when more than one
/// worker is requested and the `parallel` feature is enabled; otherwise runs
/// it directly. The closure receives the matching [`Exec`].
pub fn with_workers<R, F>(workers: usize, f: F) -> R
where
    R: Send,
    F: FnOnce(Exec) -> R + Send,
{
    let exec = Exec::from_workers(workers);
    #[cfg(feature = "parallel")]
    if exec == Exec::Parallel {
        if let Ok(pool) = rayon::ThreadPoolBuilder::new().num_threads(workers).build() {
            return pool.install(|| f(exec));
        }
    }
    f(exec)
}
