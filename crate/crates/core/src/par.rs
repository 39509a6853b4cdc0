//! Data-parallel helpers with a sequential fallback.
//!
//! Every sweep in the crate goes through these functions so that results are
//! collected in input order regardless of scheduling. With the `parallel`
//! feature disabled, [`Exec::Parallel`] silently runs sequentially.

use std::ops::Range;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Exec {
    Sequential,
    #[default]
    Parallel,
}

impl Exec {
    /// True when work will actually be spread across threads.
    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == Exec::Parallel
    }
}

pub fn map_range<T, F>(exec: Exec, range: Range<usize>, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if exec.is_parallel() {
        use rayon::prelude::*;
        return range.into_par_iter().map(f).collect();
    }
    let _ = exec;
    range.map(f).collect()
}

pub fn map_slice<S, T, F>(exec: Exec, items: &[S], f: F) -> Vec<T>
where
    S: Sync,
    T: Send,
    F: Fn(&S) -> T + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if exec.is_parallel() {
        use rayon::prelude::*;
        return items.par_iter().map(f).collect();
    }
    let _ = exec;
    items.iter().map(f).collect()
}

/// Caps the global worker pool. Only the first call has an effect.
pub fn configure_threads(threads: usize) {
    #[cfg(feature = "parallel")]
    {
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(threads.max(1))
            .build_global();
    }
    #[cfg(not(feature = "parallel"))]
    let _ = threads;
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_is_preserved() {
        let seq = map_range(Exec::Sequential, 0..1000, |i| i * i);
        let par = map_range(Exec::Parallel, 0..1000, |i| i * i);
        assert_eq!(seq, par);
        let items: Vec<u32> = (0..50).collect();
        assert_eq!(
            map_slice(Exec::Parallel, &items, |x| x + 1),
            map_slice(Exec::Sequential, &items, |x| x + 1)
        );
    }
}
