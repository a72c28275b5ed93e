//! Polarization entanglement of localized two-photon field states as seen
//! by a uniformly accelerated observer with a band-limited projective
//! detector.
//!
//! The crate is organised bottom-up:
//!
//! - [`spectral`]: Gaussian wavepackets and their Minkowski→Unruh re-expansion.
//! - [`squeezing`]: the two-mode squeeze relating Unruh and Rindler modes.
//! - [`fock`]: truncated multimode Fock kets, mode rotations and partial traces.
//! - [`entanglement`]: negativity of reduced states.
//! - [`engine`]: the peaked-detector assembly, the brute-force discretized
//!   oracle, sweeps and the cost model.
//! - [`config`] and [`cli`]: scenario files and the `rindler` command set.
//!
//! Runnable walkthroughs of each capability live in `examples/`.

// `!(x > 0.0)` is used on purpose: it also rejects NaN
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod cli;
pub mod config;
pub mod engine;
pub mod entanglement;
mod error;
pub mod fock;
pub mod linalg;
pub mod spectral;
pub mod squeezing;

pub use error::{Error, Result};

/// Complex scalar used throughout.
pub type C64 = num_complex::Complex64;
