//! Data-parallel helpers with a sequential fallback.
//!
//! With the `parallel` feature these run on the current rayon pool; without it
//! they are plain iterator loops. Results never depend on the worker count.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Maps `f` over `items`, preserving order.
pub fn map<T, R, F>(items: Vec<T>, f: F) -> Vec<R>
where
    T: Send,
    R: Send,
    F: Fn(T) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        items.into_par_iter().map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        items.into_iter().map(f).collect()
    }
}

/// The first item (in input order) for which `f` returns `Some`.
pub fn find_map_first<T, R, F>(items: Vec<T>, f: F) -> Option<R>
where
    T: Send,
    R: Send,
    F: Fn(T) -> Option<R> + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        items.into_par_iter().find_map_first(f)
    }
    #[cfg(not(feature = "parallel"))]
    {
        items.into_iter().find_map(f)
    }
}

/// Whether the parallel backend is compiled in.
pub fn is_parallel() -> bool {
    cfg!(feature = "parallel")
}
