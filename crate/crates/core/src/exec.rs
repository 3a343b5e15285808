//! Execution strategy for the data-parallel inner loops (Kirby expansions,
//! coloring enumeration, parameter sweeps).
//!
//! With the `parallel` feature (default) [`Exec::Parallel`] fans work out on
//! the rayon pool. Without it, both strategies run sequentially. Results are
//! always collected in input order so that reductions are reproducible.

/// How to run an embarrassingly parallel loop.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Exec {
    Sequential,
    #[default]
    Parallel,
}

impl Exec {
    /// `true` when this strategy actually runs on several threads.
    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == Exec::Parallel
    }

    /// Map `f` over `items`, preserving order.
    pub fn map<T, R, F>(self, items: &[T], f: F) -> Vec<R>
    where
        T: Sync,
        R: Send,
        F: Fn(&T) -> R + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self == Exec::Parallel {
            use rayon::prelude::*;
            return items.par_iter().map(f).collect();
        }
        items.iter().map(f).collect()
    }

    /// Map `f` over `0..n`, preserving order.
    pub fn map_range<R, F>(self, n: usize, f: F) -> Vec<R>
    where
        R: Send,
        F: Fn(usize) -> R + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self == Exec::Parallel {
            use rayon::prelude::*;
            return (0..n).into_par_iter().map(f).collect();
        }
        (0..n).map(f).collect()
    }
}

/// Size the global worker pool. Has no effect without the `parallel` feature
/// or when the pool was already initialised.
pub fn configure_threads(jobs: usize) -> bool {
    #[cfg(feature = "parallel")]
    {
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
            .is_ok()
    }
    #[cfg(not(feature = "parallel"))]
    {
        let _ = jobs;
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn both_strategies_preserve_order() {
        let xs: Vec<u32> = (0..1000).collect();
        let a = Exec::Sequential.map(&xs, |x| x * 3);
        let b = Exec::Parallel.map(&xs, |x| x * 3);
        assert_eq!(a, b);
        assert_eq!(Exec::Parallel.map_range(17, |i| i), (0..17).collect::<Vec<_>>());
    }
}
