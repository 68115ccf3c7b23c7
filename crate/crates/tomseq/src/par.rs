//! Parallel dispatch helper. With the `parallel` feature the mapped closures
//! run on rayon when the caller asks for it; without the feature the same
//! call degrades to the sequential loop. Output order always matches input
//! order, so results are schedule-independent.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[cfg(feature = "parallel")]
pub(crate) fn map_indexed<T, U, F>(items: &[T], parallel: bool, f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> U + Send + Sync,
{
    if parallel {
        items.par_iter().map(&f).collect()
    } else {
        items.iter().map(&f).collect()
    }
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn map_indexed<T, U, F>(items: &[T], _parallel: bool, f: F) -> Vec<U>
where
    F: Fn(&T) -> U,
{
    items.iter().map(&f).collect()
}

/// Like [`map_indexed`] but with a per-worker scratch value, for kernels
/// that reuse buffers between items.
#[cfg(feature = "parallel")]
pub(crate) fn map_scratch<T, S, U, I, F>(items: &[T], parallel: bool, init: I, f: F) -> Vec<U>
where
    T: Sync,
    S: Send,
    U: Send,
    I: Fn() -> S + Send + Sync,
    F: Fn(&mut S, &T) -> U + Send + Sync,
{
    if parallel {
        items.par_iter().map_init(&init, |s, t| f(s, t)).collect()
    } else {
        let mut scratch = init();
        items.iter().map(|t| f(&mut scratch, t)).collect()
    }
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn map_scratch<T, S, U, I, F>(items: &[T], _parallel: bool, init: I, f: F) -> Vec<U>
where
    I: Fn() -> S,
    F: Fn(&mut S, &T) -> U,
{
    let mut scratch = init();
    items.iter().map(|t| f(&mut scratch, t)).collect()
}

#[cfg(feature = "parallel")]
pub(crate) fn map_range<U, F>(n: usize, parallel: bool, f: F) -> Vec<U>
where
    U: Send,
    F: Fn(usize) -> U + Send + Sync,
{
    if parallel {
        (0..n).into_par_iter().map(&f).collect()
    } else {
        (0..n).map(&f).collect()
    }
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn map_range<U, F>(n: usize, _parallel: bool, f: F) -> Vec<U>
where
    F: Fn(usize) -> U,
{
    (0..n).map(&f).collect()
}
