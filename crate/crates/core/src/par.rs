//! Data-parallel map helpers. With the `parallel` feature (default) the
//! work fans out over rayon; without it the same calls run sequentially.
//! The `_seq` variants are always sequential so benchmarks can compare.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Maps `f` over the items, preserving input order in the output.
#[cfg(feature = "parallel")]
pub fn map_collect<T, U, F>(items: Vec<T>, f: F) -> Vec<U>
where
    T: Send,
    U: Send,
    F: Fn(T) -> U + Sync + Send,
{
    items.into_par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub fn map_collect<T, U, F>(items: Vec<T>, f: F) -> Vec<U>
where
    F: Fn(T) -> U,
{
    items.into_iter().map(f).collect()
}

/// Always-sequential twin of [`map_collect`].
pub fn map_collect_seq<T, U, F>(items: Vec<T>, f: F) -> Vec<U>
where
    F: Fn(T) -> U,
{
    items.into_iter().map(f).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parallel_and_sequential_agree() {
        let squares = map_collect((0u64..100).collect(), |x| x * x);
        let expected = map_collect_seq((0u64..100).collect(), |x| x * x);
        assert_eq!(squares, expected);
    }
}
