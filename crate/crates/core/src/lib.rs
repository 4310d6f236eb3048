//! Stationary subspace analysis for zero-mean varying-covariance processes.
//!
//! The observed series is X_t = A(t/T) Y_t with i.i.d. standardized
//! innovations; nonstationarity enters only through A. The library
//! estimates the deviation matrix M(u) = A^2(u) - int A^2, tests the
//! dimension of the stationary subspace locally (chi-square) and globally
//! (normal limit, with dyadic interval splitting), and estimates the
//! subspace itself by pooling (1,1)-pseudo-null spaces across time and
//! clustering them on a canonical-angle graph.

pub mod dimension;
pub mod error;
pub mod kernel;
pub mod nullity;
pub mod numeric;
pub mod sim;
pub mod subspace;

pub use error::{Error, Result};
