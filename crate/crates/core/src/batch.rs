//! Order-preserving bulk evaluation.
//!
//! With the `parallel` feature (on by default) the work is spread over the
//! rayon pool; without it everything runs on the calling thread. Results are
//! always returned in input order.

use crate::error::Result;
use crate::solver::{solve, SolveOutcome};
use crate::spec::TriangleSpec;
use crate::triangle::Triangle;
use crate::verifier::{verify, ResidualReport};

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Map `f` over `items`, in parallel when the feature is enabled.
pub fn map_ordered<T, R, F>(items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        items.par_iter().map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        map_sequential(items, f)
    }
}

/// Single-threaded reference path, available regardless of features.
pub fn map_sequential<T, R, F>(items: &[T], f: F) -> Vec<R>
where
    F: Fn(&T) -> R,
{
    items.iter().map(f).collect()
}

pub fn verify_all(triangles: &[Triangle], tolerance: f64) -> Vec<Result<ResidualReport>> {
    map_ordered(triangles, |t| verify(t, tolerance))
}

pub fn verify_all_sequential(
    triangles: &[Triangle],
    tolerance: f64,
) -> Vec<Result<ResidualReport>> {
    map_sequential(triangles, |t| verify(t, tolerance))
}

pub fn solve_all(specs: &[TriangleSpec]) -> Vec<Result<SolveOutcome>> {
    map_ordered(specs, solve)
}

pub fn solve_all_sequential(specs: &[TriangleSpec]) -> Vec<Result<SolveOutcome>> {
    map_sequential(specs, solve)
}
