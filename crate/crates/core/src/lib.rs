//! Numerical laboratory for the Hardy Z-function ladder and its reverse
//! iterated integral identities.
//!
//! Modules:
//! - [`zeta`]: theta, Z, Z', and the weighted square Z-tilde
//! - [`ladder`]: the monotone antiderivative table with forward/reverse
//!   iteration
//! - [`energy`]: reverse iterated integrals and the identity checks
//! - [`curve`]: zeros, critical points, and the arc-length decomposition
//! - [`report`]: residual records shared by every check

pub mod energy;
pub mod error;
pub mod ladder;
pub mod quad;
pub mod report;
pub mod roots;
pub mod zeta;

pub use error::{Error, Result};
