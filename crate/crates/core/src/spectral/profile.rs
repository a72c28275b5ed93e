use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use super::FrequencyGrid;
use crate::error::{invalid, Error, Result};
use crate::C64;

/// Half-width of the profile support in units of `σ`.
pub(crate) const SUPPORT_SIGMAS: f64 = 8.0;
/// Lowest support edge as a fraction of `ω₀`.
const SUPPORT_FLOOR: f64 = 1e-2;
const NORM_PANELS: usize = 32;
const NORM_ORDER: usize = 16;

/// Pure phase `θ(ω)` multiplying a Gaussian profile.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize, Default)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Chirp {
    #[default]
    None,
    /// `θ = shift · ln(ω/ω₀)`; moves the Unruh-basis spread to be centred at `Ω = shift`.
    LogPhase { shift: f64 },
    /// `θ = rate · ((ω − ω₀)/σ)²`.
    Quadratic { rate: f64 },
}

impl Chirp {
    fn phase(&self, omega: f64, center: f64, width: f64) -> f64 {
        match *self {
            Chirp::None => 0.0,
            Chirp::LogPhase { shift } => shift * (omega / center).ln(),
            Chirp::Quadratic { rate } => {
                let z = (omega - center) / width;
                rate * z * z
            }
        }
    }

    pub fn is_none(&self) -> bool {
        matches!(self, Chirp::None)
    }
}

/// Anything that can be re-expanded in Unruh modes.
pub trait Wavepacket: Sync {
    /// Amplitude `x(ω)`.
    fn amplitude(&self, omega: f64) -> C64;
    /// Interval outside of which the amplitude is negligible.
    fn support(&self) -> (f64, f64);
    /// `∫|x|² dω` on the packet's own normalization grid.
    fn norm_sq(&self) -> f64;
}

/// Gaussian one-photon profile `N (2πω)^(-1/4) exp(-(ω-ω₀)²/4σ²) e^{iθ(ω)}`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SpectralProfile {
    pub center: f64,
    pub width: f64,
    pub chirp: Chirp,
    /// Constant `N` making `∫|x|² dω = 1`.
    pub normalization: f64,
}

/// Builds a unit-norm Gaussian profile centred at `center` (rad/s) with
/// spread `width` (rad/s).
pub fn gaussian_profile(center: f64, width: f64, chirp: Chirp) -> Result<SpectralProfile> {
    if !(center > 0.0 && center.is_finite()) {
        return Err(invalid("omega0", "must be positive and finite"));
    }
    if !(width > 0.0 && width.is_finite()) {
        return Err(invalid("sigma", "must be positive and finite"));
    }
    let ratio = center / width;
    if ratio < 5.0 {
        return Err(Error::SupportCrossesZero { ratio });
    }
    let mut profile = SpectralProfile { center, width, chirp, normalization: 1.0 };
    let raw = profile.norm_sq();
    profile.normalization = raw.sqrt().recip();
    Ok(profile)
}

impl SpectralProfile {
    /// The unnormalized functional form, `normalization` not applied.
    pub fn shape(&self, omega: f64) -> f64 {
        let z = omega - self.center;
        (2.0 * PI * omega).powf(-0.25) * (-(z * z) / (4.0 * self.width * self.width)).exp()
    }

    /// Grid used to fix the normalization constant.
    pub fn norm_grid(&self) -> FrequencyGrid {
        let (lo, hi) = self.support();
        FrequencyGrid::gauss_legendre(lo, hi, NORM_PANELS, NORM_ORDER).expect("support is a valid positive interval")
    }
}

impl Wavepacket for SpectralProfile {
    fn amplitude(&self, omega: f64) -> C64 {
        if omega <= 0.0 {
            return C64::new(0.0, 0.0);
        }
        let magnitude = self.normalization * self.shape(omega);
        if self.chirp.is_none() {
            C64::new(magnitude, 0.0)
        } else {
            C64::from_polar(magnitude, self.chirp.phase(omega, self.center, self.width))
        }
    }

    fn support(&self) -> (f64, f64) {
        // for ω₀/σ < 8 the window is cut short of ω = 0, where |x|² is below e^{-12}
        (
            (self.center - SUPPORT_SIGMAS * self.width).max(SUPPORT_FLOOR * self.center),
            self.center + SUPPORT_SIGMAS * self.width,
        )
    }

    fn norm_sq(&self) -> f64 {
        self.norm_grid().integrate(|w| self.amplitude(w).norm_sqr())
    }
}

/// Linear combination `Σ cᵢ xᵢ(ω)` of profiles.
#[derive(Debug, Clone, Default)]
pub struct Superposition {
    pub terms: Vec<(C64, SpectralProfile)>,
}

impl Superposition {
    pub fn new(terms: Vec<(C64, SpectralProfile)>) -> Self {
        Self { terms }
    }

    pub fn zero() -> Self {
        Self::default()
    }
}

impl Wavepacket for Superposition {
    fn amplitude(&self, omega: f64) -> C64 {
        self.terms.iter().map(|(c, p)| c * p.amplitude(omega)).sum()
    }

    fn support(&self) -> (f64, f64) {
        self.terms.iter().map(|(_, p)| p.support()).reduce(|a, b| (a.0.min(b.0), a.1.max(b.1))).unwrap_or((1.0, 2.0))
    }

    fn norm_sq(&self) -> f64 {
        if self.terms.is_empty() {
            return 0.0;
        }
        let (lo, hi) = self.support();
        FrequencyGrid::gauss_legendre(lo, hi, NORM_PANELS * 2, NORM_ORDER)
            .expect("valid support")
            .integrate(|w| self.amplitude(w).norm_sqr())
    }
}
