//! Executable checks of the structural statements about centralizer
//! lattices, and catalog-wide searches.

pub mod catalog;
pub mod checks;
pub mod report;
pub mod search;
pub mod suite;

use rayon::prelude::*;

/// Maps `f` over `items` on `jobs` worker threads, preserving input order.
/// With `jobs <= 1` everything runs on the calling thread.
pub fn run_parallel<T, R, F>(jobs: usize, items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    if jobs <= 1 || items.len() <= 1 {
        return items.iter().map(f).collect();
    }
    match rayon::ThreadPoolBuilder::new().num_threads(jobs).build() {
        Ok(pool) => pool.install(|| items.par_iter().map(&f).collect()),
        Err(_) => items.iter().map(f).collect(),
    }
}
