//! Entropic complexity of two-level systems.
//!
//! The entropic complexity of a density matrix is its Shannon entropy minus
//! its order-2 Rényi entropy. For a qubit it depends only on the Bloch
//! radius, vanishes for pure and maximally mixed states, and peaks at the
//! universal radius [`entropy::critical_r`] ≈ 0.7432.
//!
//! The crate evaluates it for
//!
//! - Landau-Zener sweeps of the diagonal or off-diagonal energy ([`tls`]),
//! - binary and box disorder in the levels or the coupling ([`tls`], with a
//!   Monte Carlo cross-check in [`mc`]),
//! - free spins in a field and the mean-field Ising ferromagnet
//!   ([`thermal`]),
//!
//! and locates the maxima with the bracketed searches in [`optimize`].
//!
//! ```
//! use tls_complexity::entropy::{critical_r, entropy_from_r};
//!
//! let peak = entropy_from_r(critical_r(), false).unwrap();
//! assert!((peak.complexity - 0.12995).abs() < 1e-5);
//! ```

pub mod cli;
pub mod curve;
pub mod entropy;
pub mod error;
pub mod mc;
pub mod optimize;
pub mod thermal;
pub mod tls;

pub use error::{Error, Result};
