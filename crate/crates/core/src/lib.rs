//! Exact computations with finite-dimensional real Lie algebras carrying a
//! dual-number structure `ε`, `ε^p = 0`, `[εx, y] = [x, εy] = ε[x, y]`.

pub mod calculus;
pub mod construct;
pub mod error;
pub mod io;
pub mod lie;
pub mod linalg;
pub mod structure;

#[cfg(doctest)]
mod book;

pub use error::{Error, Result};
