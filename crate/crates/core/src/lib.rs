//! Exact evaluation of the Links–Gould invariant `LG_K(q,p)` and, as a
//! cross-check, the Jones polynomial, by contracting (1,1)-tangle tensor
//! networks built from the `U_q[gl(2|1)]` braid generator.

pub mod bracket;
pub mod cli;
pub mod error;
pub mod linkcat;
pub mod polyring;
pub mod rmatrix;
pub mod tensornet;

pub use error::{Error, Result};
