//! Order-preserving map that runs on the rayon pool when the `parallel`
//! feature is enabled and the caller asks for it, and sequentially otherwise.

/// Whether `parallel = true` requests actually run in parallel in this build.
pub const AVAILABLE: bool = cfg!(feature = "parallel");

pub(crate) fn map<T, R, F>(items: &[T], parallel: bool, f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if parallel {
        use rayon::prelude::*;
        return items.par_iter().map(f).collect();
    }
    let _ = parallel;
    items.iter().map(f).collect()
}

pub(crate) fn map_range<R, F>(range: std::ops::Range<usize>, parallel: bool, f: F) -> Vec<R>
where
    R: Send,
    F: Fn(usize) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if parallel {
        use rayon::prelude::*;
        return range.into_par_iter().map(f).collect();
    }
    let _ = parallel;
    range.map(f).collect()
}
