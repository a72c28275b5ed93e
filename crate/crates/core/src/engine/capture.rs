use serde::{Deserialize, Serialize};

use super::DetectorBand;
use crate::error::{Error, Result};
use crate::spectral::UnruhSpread;
use crate::C64;

/// Rounding slack allowed on `|ε_R|² + |ε_L|² ≤ 1`.
const CAPTURE_SLACK: f64 = 1e-8;

/// How the L channel couples to the detector profile.
///
/// The R excitation puts a quantum into region I, so it overlaps `d†` through
/// `conj(g)`. The L excitation reaches region I only through an annihilator,
/// which carries `g` unconjugated and leaves the phase of `X_L` intact.
/// `Conjugated` replaces `ε_L` by its conjugate; it exists so tests can check
/// that the brute-force engine catches a wrong phase convention.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "kebab-case")]
pub enum LConvention {
    #[default]
    Pinned,
    Conjugated,
}

/// Overlap of one photon's Unruh-basis spread with the detector mode.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CaptureAmplitudes {
    pub eps_r: C64,
    pub eps_l: C64,
    /// `1 − |ε_R|² − |ε_L|²`: weight of the photon outside the detector mode.
    pub w_env: f64,
}

impl CaptureAmplitudes {
    pub fn new(eps_r: C64, eps_l: C64) -> Result<Self> {
        let captured = eps_r.norm_sqr() + eps_l.norm_sqr();
        if !(captured <= 1.0 + CAPTURE_SLACK) {
            return Err(Error::InvalidParameter {
                name: "capture",
                reason: format!("|eps_R|^2 + |eps_L|^2 = {captured} exceeds 1"),
            });
        }
        Ok(Self { eps_r, eps_l, w_env: (1.0 - captured).max(0.0) })
    }

    /// No overlap at all.
    pub fn none() -> Self {
        Self { eps_r: C64::new(0.0, 0.0), eps_l: C64::new(0.0, 0.0), w_env: 1.0 }
    }

    pub fn captured(&self) -> f64 {
        self.eps_r.norm_sqr() + self.eps_l.norm_sqr()
    }
}

/// `ε_R = ∫ conj(g) X_R dΩ`, `ε_L = ∫ g X_L dΩ` over the nodes of `spread`
/// that fall inside the band. Exact when the spread was sampled on
/// [`DetectorBand::grid`].
pub fn capture_amplitudes(spread: &UnruhSpread, band: &DetectorBand) -> Result<CaptureAmplitudes> {
    capture_with_convention(spread, band, LConvention::Pinned)
}

pub fn capture_with_convention(
    spread: &UnruhSpread,
    band: &DetectorBand,
    convention: LConvention,
) -> Result<CaptureAmplitudes> {
    let (lo, hi) = band.support();
    let (grid_lo, grid_hi) = spread.interval;
    if lo < grid_lo || hi > grid_hi {
        return Err(Error::BandOutsideGrid { lo, hi, grid_lo, grid_hi });
    }
    let mut eps_r = C64::new(0.0, 0.0);
    let mut eps_l = C64::new(0.0, 0.0);
    for i in 0..spread.len() {
        let om = spread.omega[i];
        if om < lo || om > hi {
            continue;
        }
        // g is real, so conjugation only matters through the convention flag
        let g = band.value(om) * spread.weights[i];
        eps_r += spread.x_r[i] * g;
        eps_l += spread.x_l[i] * g;
    }
    if convention == LConvention::Conjugated {
        eps_l = eps_l.conj();
    }
    CaptureAmplitudes::new(eps_r, eps_l)
}
