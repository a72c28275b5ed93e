//! End-to-end pipelines from a two-photon state to the detector-visible
//! reduced state.
//!
//! Both pipelines end in [`assemble`]. The photon of helicity σ lives on the
//! chain of region-I σ modes and their region-II partners of helicity −σ, so
//! the reduced state on `Alice ⊗ d↑ ⊗ d↓` factorizes into per-helicity blocks
//! `Tr_rest|X⟩⟨Y|` with `X, Y ∈ {photon branch, vacuum}`:
//!
//! - [`peaked`] builds those blocks from capture amplitudes and closed-form
//!   pair blocks, treating `r` as constant across the detector band.
//! - [`brute`] discretizes the band into bins, builds the full multimode ket
//!   and traces it explicitly. It is the oracle for the first.

mod blocks;
pub mod brute;
mod capture;
pub mod complexity;
mod detector;
pub mod peaked;
mod spread_report;
pub mod sweep;

use nalgebra::DMatrix;
use serde::{Deserialize, Serialize};

pub use blocks::{pair_block, PairState};
pub use brute::{bin_band, brute_force_reduced_state, reduce_binned, Binned, BinnedBand, BruteOptions, BruteOutput};
pub use capture::{capture_amplitudes, capture_with_convention, CaptureAmplitudes, LConvention};
pub use complexity::{complexity_estimate, fit_exponential, CostRecord};
pub use detector::{DetectorBand, DetectorShape, DetectorSpec};
pub use peaked::{assemble_peaked, peaked_blocks};
pub use spread_report::{spread_report, SpreadProfile, SpreadReport, SpreadSample};
pub use sweep::{
    evaluate_point, log_spaced, sweep_negativity, EngineChoice, PointResult, Scenario, SweepPoint, SweepResult,
};

use crate::error::{invalid, Result};
use crate::fock::DensityOperator;
use crate::spectral::SpectralProfile;
use crate::C64;

/// `|Ψ⟩ = P|a⟩|x↑⟩ + Q|b⟩|y↓⟩`. Nothing here depends on the observer.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct StateSpec {
    pub p: C64,
    pub q: C64,
    pub profile_x: SpectralProfile,
    pub profile_y: SpectralProfile,
}

impl StateSpec {
    pub fn new(p: C64, q: C64, profile_x: SpectralProfile, profile_y: SpectralProfile) -> Result<Self> {
        let norm = p.norm_sqr() + q.norm_sqr();
        if (norm - 1.0).abs() > 1e-12 {
            return Err(invalid("state", format!("|P|^2 + |Q|^2 = {norm}, expected 1")));
        }
        Ok(Self { p, q, profile_x, profile_y })
    }
}

/// The three traced operators of one helicity sector on its detector mode.
#[derive(Debug, Clone, PartialEq)]
pub struct SectorBlocks {
    /// `Tr_rest |photon⟩⟨photon|`
    pub photon: DMatrix<C64>,
    /// `Tr_rest |vac⟩⟨vac|`
    pub vacuum: DMatrix<C64>,
    /// `Tr_rest |photon⟩⟨vac|`
    pub cross: DMatrix<C64>,
}

/// Detector-visible state with its truncation audit.
#[derive(Debug, Clone, PartialEq)]
pub struct ReducedState {
    /// Unit trace, subsystems `[Alice (2), d↑ (n_max+1), d↓ (n_max+1)]`.
    pub rho: DensityOperator,
    pub n_max: usize,
    /// `1 − trace` before the single renormalization.
    pub trunc_loss: f64,
}

/// Combines per-helicity blocks into the state on `Alice ⊗ d↑ ⊗ d↓`
/// (Alice index 0 is `|a⟩`) and renormalizes once.
pub fn assemble(p: C64, q: C64, up: &SectorBlocks, down: &SectorBlocks) -> Result<ReducedState> {
    let d = up.photon.nrows();
    let shapes = [&up.photon, &up.vacuum, &up.cross, &down.photon, &down.vacuum, &down.cross];
    if shapes.iter().any(|m| m.nrows() != d || m.ncols() != d) {
        return Err(invalid("blocks", "all sector blocks must share one square shape"));
    }
    let herm = |m: &DMatrix<C64>| (m + m.adjoint()) * C64::new(0.5, 0.0);
    let aa = herm(&up.photon).kronecker(&herm(&down.vacuum)) * C64::new(p.norm_sqr(), 0.0);
    let bb = herm(&up.vacuum).kronecker(&herm(&down.photon)) * C64::new(q.norm_sqr(), 0.0);
    let ab = up.cross.kronecker(&down.cross.adjoint()) * (p * q.conj());

    let k = d * d;
    let mut m = DMatrix::zeros(2 * k, 2 * k);
    m.view_mut((0, 0), (k, k)).copy_from(&aa);
    m.view_mut((k, k), (k, k)).copy_from(&bb);
    m.view_mut((0, k), (k, k)).copy_from(&ab);
    m.view_mut((k, 0), (k, k)).copy_from(&ab.adjoint());

    let raw = DensityOperator::new(m, vec![2, d, d])?;
    // a trace above one by rounding is not a loss
    let trunc_loss = (1.0 - raw.trace()).max(0.0);
    let rho = raw.normalized()?;
    Ok(ReducedState { rho, n_max: d - 1, trunc_loss })
}
