//! Data-parallel sweeps with a sequential fallback.
//!
//! With the `parallel` feature (default) the helpers run on rayon; the thread
//! count can be capped with `HOPFFORGE_THREADS`. Without the feature every
//! helper is a plain loop with identical results.

use std::sync::Once;

static INIT: Once = Once::new();

/// Reads `HOPFFORGE_THREADS` once and configures the global pool.
pub fn init_threads() {
    INIT.call_once(|| {
        #[cfg(feature = "parallel")]
        if let Some(n) = std::env::var("HOPFFORGE_THREADS")
            .ok()
            .and_then(|v| v.trim().parse::<usize>().ok())
            .filter(|&n| n > 0)
        {
            let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
        }
    });
}

/// Number of worker threads the sweeps will use.
pub fn threads() -> usize {
    init_threads();
    #[cfg(feature = "parallel")]
    {
        rayon::current_num_threads()
    }
    #[cfg(not(feature = "parallel"))]
    {
        1
    }
}

/// `(0..n).map(f).collect()`, possibly in parallel; output order is preserved.
pub fn map_range<T, F>(n: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    init_threads();
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        (0..n).into_par_iter().map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        (0..n).map(f).collect()
    }
}

/// Parallel map over a slice, preserving order.
pub fn map_slice<S, T, F>(items: &[S], f: F) -> Vec<T>
where
    S: Sync,
    T: Send,
    F: Fn(&S) -> T + Sync + Send,
{
    init_threads();
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        items.par_iter().map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        items.iter().map(f).collect()
    }
}

/// Applies `f` to every element of `items` in place.
pub fn for_each_mut<S, F>(items: &mut [S], f: F)
where
    S: Send,
    F: Fn(&mut S) + Sync + Send,
{
    init_threads();
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        items.par_iter_mut().for_each(f)
    }
    #[cfg(not(feature = "parallel"))]
    {
        items.iter_mut().for_each(f)
    }
}

/// Smallest index in `0..n` for which `f` returns `Some`, with its value.
pub fn find_first<T, F>(n: usize, f: F) -> Option<(usize, T)>
where
    T: Send,
    F: Fn(usize) -> Option<T> + Sync + Send,
{
    init_threads();
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        (0..n)
            .into_par_iter()
            .filter_map(|i| f(i).map(|v| (i, v)))
            .min_by_key(|(i, _)| *i)
    }
    #[cfg(not(feature = "parallel"))]
    {
        (0..n).find_map(|i| f(i).map(|v| (i, v)))
    }
}

/// Runs `f` with at most one worker thread.
pub fn sequential<R: Send, F: FnOnce() -> R + Send>(f: F) -> R {
    with_threads(1, f)
}

/// Runs `f` inside a dedicated pool of `n` threads.
pub fn with_threads<R: Send, F: FnOnce() -> R + Send>(n: usize, f: F) -> R {
    #[cfg(feature = "parallel")]
    {
        match rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build() {
            Ok(pool) => pool.install(f),
            Err(_) => f(),
        }
    }
    #[cfg(not(feature = "parallel"))]
    {
        let _ = n;
        f()
    }
}
