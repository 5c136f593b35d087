//! Thin wrapper over the data-parallel backend. With the `parallel` feature
//! (default) inner loops fan out through rayon; without it everything runs
//! sequentially. All callers sort or otherwise canonicalize results, so the
//! two modes produce identical output.

#[cfg(feature = "parallel")]
pub fn map_slice<T: Sync, U: Send, F: Fn(&T) -> U + Sync + Send>(items: &[T], f: F) -> Vec<U> {
    use rayon::prelude::*;
    items.par_iter().map(|t| f(t)).collect()
}

#[cfg(not(feature = "parallel"))]
pub fn map_slice<T, U, F: Fn(&T) -> U>(items: &[T], f: F) -> Vec<U> {
    items.iter().map(f).collect()
}

#[cfg(feature = "parallel")]
pub fn map_range<U: Send, F: Fn(usize) -> U + Sync + Send>(n: usize, f: F) -> Vec<U> {
    use rayon::prelude::*;
    (0..n).into_par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub fn map_range<U, F: Fn(usize) -> U>(n: usize, f: F) -> Vec<U> {
    (0..n).map(f).collect()
}

/// Run `job` on a pool with `threads` workers (0 = library default).
/// Sequential builds ignore the thread count.
#[cfg(feature = "parallel")]
pub fn with_threads<U: Send, F: FnOnce() -> U + Send>(threads: usize, job: F) -> U {
    if threads == 0 {
        return job();
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .expect("thread pool");
    pool.install(job)
}

#[cfg(not(feature = "parallel"))]
pub fn with_threads<U, F: FnOnce() -> U>(_threads: usize, job: F) -> U {
    job()
}
