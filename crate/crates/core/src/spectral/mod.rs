//! Frequency-domain wavepackets and their re-expansion in Unruh modes.
//!
//! A one-photon Minkowski wavepacket `x(ω)` is carried over to the Unruh
//! basis with the massless 1+1 Mellin kernel
//! `α_R(ω, Ω) = (2πω)^(-1/2) (ω/a)^(+iΩ)`, `α_L = (2πω)^(-1/2) (ω/a)^(-iΩ)`,
//! one copy per helicity. In the variable `u = ln(ω/a)` the transform is a
//! plain Fourier transform of `√ω x(ω)`, which is what makes the
//! Parseval check in [`parseval_defect`] meaningful.

mod grid;
mod profile;
mod spread;

pub use grid::FrequencyGrid;
pub use profile::{gaussian_profile, Chirp, SpectralProfile, Superposition, Wavepacket};
pub use spread::{
    auto_omega_grid, parseval_defect, sample_spread, spread_at, unruh_kernel, unruh_spread, UnruhSpread,
    DEFAULT_OMEGA_NODES, PARSEVAL_FAILURE,
};
