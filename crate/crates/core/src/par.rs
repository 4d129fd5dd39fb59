//! Data-parallel helpers.
//!
//! With the `parallel` feature (enabled by default) these fan work out over
//! rayon's thread pool; without it they run sequentially through the exact
//! same call sites. All reductions used in this crate are associative and
//! commutative over exact arithmetic, so both modes produce identical
//! results bit for bit.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Map every item and combine the results with an associative operation.
#[cfg(feature = "parallel")]
pub fn map_reduce<T, R, M, ID, OP>(items: &[T], map: M, identity: ID, op: OP) -> R
where
    T: Sync,
    R: Send,
    M: Fn(&T) -> R + Sync + Send,
    ID: Fn() -> R + Sync + Send,
    OP: Fn(R, R) -> R + Sync + Send,
{
    items.par_iter().map(&map).reduce(&identity, &op)
}

#[cfg(not(feature = "parallel"))]
pub fn map_reduce<T, R, M, ID, OP>(items: &[T], map: M, identity: ID, op: OP) -> R
where
    T: Sync,
    R: Send,
    M: Fn(&T) -> R + Sync + Send,
    ID: Fn() -> R + Sync + Send,
    OP: Fn(R, R) -> R + Sync + Send,
{
    items.iter().map(&map).fold(identity(), &op)
}

/// Map every item, preserving order.
#[cfg(feature = "parallel")]
pub fn map_collect<T, R, M>(items: &[T], map: M) -> Vec<R>
where
    T: Sync,
    R: Send,
    M: Fn(&T) -> R + Sync + Send,
{
    items.par_iter().map(&map).collect()
}

#[cfg(not(feature = "parallel"))]
pub fn map_collect<T, R, M>(items: &[T], map: M) -> Vec<R>
where
    T: Sync,
    R: Send,
    M: Fn(&T) -> R + Sync + Send,
{
    items.iter().map(&map).collect()
}

/// Name of the active execution mode, used to tag benchmark ids.
pub fn mode() -> &'static str {
    if cfg!(feature = "parallel") {
        "parallel"
    } else {
        "sequential"
    }
}
