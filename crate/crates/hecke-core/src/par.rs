//! Thin facade over rayon so the crate builds with a sequential fallback.
//!
//! Results are merged in a deterministic order regardless of thread count:
//! every parallel map collects into a `Vec` indexed like its input.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Map over a slice, in parallel when the `parallel` feature is enabled.
#[cfg(feature = "parallel")]
pub fn map_vec<T: Sync, U: Send, F: Fn(&T) -> U + Sync + Send>(items: &[T], f: F) -> Vec<U> {
    items.par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub fn map_vec<T, U, F: Fn(&T) -> U>(items: &[T], f: F) -> Vec<U> {
    items.iter().map(f).collect()
}

/// Map over an index range.
#[cfg(feature = "parallel")]
pub fn map_range<U: Send, F: Fn(usize) -> U + Sync + Send>(n: usize, f: F) -> Vec<U> {
    (0..n).into_par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub fn map_range<U, F: Fn(usize) -> U>(n: usize, f: F) -> Vec<U> {
    (0..n).map(f).collect()
}

/// True when work is actually distributed over more than one thread.
#[cfg(feature = "parallel")]
pub fn is_parallel() -> bool {
    rayon::current_num_threads() > 1
}

#[cfg(not(feature = "parallel"))]
pub fn is_parallel() -> bool {
    false
}
