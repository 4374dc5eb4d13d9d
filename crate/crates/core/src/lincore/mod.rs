//! Exact linear algebra over the rationals: the substrate every structure
//! map and diagram is evaluated on.

mod elim;
mod linmap;

pub use elim::{
    inverse, is_invertible, rank, rref, solve_linear, split_idempotent, Rref, Solution,
    SplitIdempotent,
};
pub use linmap::{compose, path, swap, tensor, tensor_all, LinMap};
