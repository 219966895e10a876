//! Exact symbolic calculator for equivariant motivic zeta functions, volume
//! Poincaré series, motivic volumes and motivic nearby cycles, computed from
//! the combinatorics of a strict-normal-crossings resolution.
//!
//! The crate is organised bottom-up:
//!
//! - [`ring`]: Laurent polynomials in `L` and classes in the free module over
//!   μ-tagged stratum symbols.
//! - [`cone`]: series supported on half-open rational cones, with coefficient
//!   extraction, Cauchy and Hadamard products, and the `T → ∞` limit.
//! - [`zeta`]: per-level integrals, Poincaré series, motivic volumes, zeta
//!   functions, nearby cycles and the generalized Poincaré series.
//! - [`harness`]: built-in examples, end-to-end verifications, JSON I/O and
//!   the command-line front end.

pub mod cone;
pub mod error;
pub mod harness;
pub mod ring;
pub mod zeta;

pub use error::{Error, Result};
