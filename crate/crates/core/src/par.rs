//! Ordered data-parallel helpers.
//!
//! Every scan in the solvers is phrased as "first success in enumeration
//! order". With the `parallel` feature the work is spread over the rayon pool,
//! but the lowest-index success always wins, so serial and parallel runs return
//! identical results.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Returns `f(item)` for the first item (in slice order) where it is `Some`.
pub(crate) fn find_first_map<T, R, F>(items: &[T], parallel: bool, f: F) -> Option<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> Option<R> + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if parallel {
        return items.par_iter().find_map_first(f);
    }
    let _ = parallel;
    items.iter().find_map(f)
}

/// Maps every item, preserving order.
pub(crate) fn map_collect<T, R, F>(items: &[T], parallel: bool, f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if parallel {
        return items.par_iter().map(f).collect();
    }
    let _ = parallel;
    items.iter().map(f).collect()
}

/// Keeps the items satisfying `pred`, preserving order.
pub(crate) fn filter_collect<T, F>(items: Vec<T>, parallel: bool, pred: F) -> Vec<T>
where
    T: Send + Sync,
    F: Fn(&T) -> bool + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if parallel {
        return items.into_par_iter().filter(|t| pred(t)).collect();
    }
    let _ = parallel;
    items.into_iter().filter(|t| pred(t)).collect()
}

/// `true` when the crate was built with rayon support.
pub const fn parallel_available() -> bool {
    cfg!(feature = "parallel")
}
