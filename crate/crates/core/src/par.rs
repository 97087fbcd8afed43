//! Data-parallel map with a sequential fallback.
//!
//! With the `parallel` feature (default) independent work items run on a
//! rayon pool; without it, or with `Parallelism::sequential()`, they run in
//! order on the calling thread. Results always come back in input order, so
//! output never depends on scheduling.

/// Worker-count setting threaded through the heavy stages.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Parallelism {
    threads: Option<usize>,
}

impl Default for Parallelism {
    /// Use every available core (rayon's global pool).
    fn default() -> Self {
        Parallelism { threads: None }
    }
}

impl Parallelism {
    pub fn sequential() -> Self {
        Parallelism { threads: Some(1) }
    }

    /// `0` means "all cores".
    pub fn with_threads(n: usize) -> Self {
        Parallelism {
            threads: (n > 0).then_some(n),
        }
    }

    pub fn is_sequential(&self) -> bool {
        self.threads == Some(1) || !cfg!(feature = "parallel")
    }

    pub fn threads(&self) -> Option<usize> {
        self.threads
    }
}

/// `items.iter().map(f).collect()`, possibly in parallel.
pub fn map<T, R, F>(items: &[T], par: Parallelism, f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    if par.is_sequential() || items.len() < 2 {
        return items.iter().map(f).collect();
    }
    parallel_map(items, par, f)
}

/// `(0..n).map(f).collect()`, possibly in parallel.
pub fn map_range<R, F>(n: usize, par: Parallelism, f: F) -> Vec<R>
where
    R: Send,
    F: Fn(usize) -> R + Sync + Send,
{
    let idx: Vec<usize> = (0..n).collect();
    map(&idx, par, |&i| f(i))
}

#[cfg(feature = "parallel")]
fn parallel_map<T, R, F>(items: &[T], par: Parallelism, f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    use rayon::prelude::*;
    match par.threads {
        None => items.par_iter().map(f).collect(),
        Some(n) => match rayon::ThreadPoolBuilder::new().num_threads(n).build() {
            Ok(pool) => pool.install(|| items.par_iter().map(f).collect()),
            Err(_) => items.iter().map(f).collect(),
        },
    }
}

#[cfg(not(feature = "parallel"))]
fn parallel_map<T, R, F>(items: &[T], _par: Parallelism, f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    items.iter().map(f).collect()
}
