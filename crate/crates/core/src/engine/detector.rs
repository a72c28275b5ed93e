use std::f64::consts::{LN_2, PI};

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Result};
use crate::spectral::FrequencyGrid;
use crate::squeezing::{acceleration_to_band, AccelerationContext};

/// Gaussian detector profiles are cut at this many widths from the centre.
const GAUSSIAN_REACH: f64 = 4.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "kebab-case")]
pub enum DetectorShape {
    /// `ΔΩ^{-1/2}` on `[Ω_det − ΔΩ/2, Ω_det + ΔΩ/2]`.
    #[default]
    TopHat,
    /// Normalized Gaussian whose full width at half maximum of `|g|²` is `ΔΩ`.
    Gaussian,
}

/// Band-limited detector in dimensionful Rindler frequency (1/s). Both
/// helicity channels use the same profile.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DetectorSpec {
    pub center: f64,
    /// Zero is allowed for validity reports only; a band cannot be built from it.
    pub width: f64,
    pub shape: DetectorShape,
}

impl DetectorSpec {
    pub fn new(center: f64, width: f64, shape: DetectorShape) -> Result<Self> {
        if !(center > 0.0 && center.is_finite()) {
            return Err(invalid("detector.center", "must be positive and finite"));
        }
        if !(width >= 0.0 && width < 2.0 * center) {
            return Err(invalid("detector.width", "must lie in [0, 2 * center)"));
        }
        Ok(Self { center, width, shape })
    }

    pub fn top_hat(center: f64, width: f64) -> Result<Self> {
        Self::new(center, width, DetectorShape::TopHat)
    }

    pub fn gaussian(center: f64, width: f64) -> Result<Self> {
        Self::new(center, width, DetectorShape::Gaussian)
    }

    pub fn quality_factor(&self) -> f64 {
        self.center / self.width
    }

    /// The profile on the dimensionless axis `Ω = Ω′/a`.
    pub fn band(&self, ctx: &AccelerationContext) -> Result<DetectorBand> {
        let b = acceleration_to_band(self, ctx);
        DetectorBand::new(b.omega_det, b.delta_omega, self.shape)
    }
}

/// Unit-norm detector profile `g(Ω)` on the dimensionless axis.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct DetectorBand {
    pub omega_det: f64,
    pub delta_omega: f64,
    pub shape: DetectorShape,
}

impl DetectorBand {
    pub fn new(omega_det: f64, delta_omega: f64, shape: DetectorShape) -> Result<Self> {
        if !(delta_omega > 0.0 && delta_omega.is_finite()) {
            return Err(invalid("detector width", "a band needs a positive width"));
        }
        let band = Self { omega_det, delta_omega, shape };
        if !(band.support().0 > 0.0) {
            return Err(invalid("detector band", "support must stay at positive frequency"));
        }
        Ok(band)
    }

    pub fn support(&self) -> (f64, f64) {
        let half = match self.shape {
            DetectorShape::TopHat => 0.5 * self.delta_omega,
            DetectorShape::Gaussian => GAUSSIAN_REACH * self.delta_omega,
        };
        (self.omega_det - half, self.omega_det + half)
    }

    /// `g(Ω)`, real and non-negative.
    pub fn value(&self, omega: f64) -> f64 {
        let (lo, hi) = self.support();
        if omega < lo || omega > hi {
            return 0.0;
        }
        match self.shape {
            DetectorShape::TopHat => self.delta_omega.sqrt().recip(),
            DetectorShape::Gaussian => {
                // |g|² has standard deviation s, so g itself has 2s² in the exponent
                let s = self.delta_omega / (2.0 * (2.0 * LN_2).sqrt());
                let z = omega - self.omega_det;
                (2.0 * PI * s * s).powf(-0.25) * (-(z * z) / (4.0 * s * s)).exp()
            }
        }
    }

    /// Gauss–Legendre grid over the support; `panels` equal panels.
    pub fn grid(&self, panels: usize, order: usize) -> Result<FrequencyGrid> {
        let (lo, hi) = self.support();
        FrequencyGrid::gauss_legendre(lo, hi, panels, order)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn profiles_are_unit_norm() {
        for shape in [DetectorShape::TopHat, DetectorShape::Gaussian] {
            let band = DetectorBand::new(3.0, 0.02, shape).unwrap();
            let grid = band.grid(12, 20).unwrap();
            let norm = grid.integrate(|w| band.value(w).powi(2));
            // the Gaussian cut at ±4 FWHM loses ~e^{-88}
            assert!((norm - 1.0).abs() < 1e-12, "{shape:?}: {norm}");
        }
    }

    #[test]
    fn quality_factor_survives_rescaling() {
        let det = DetectorSpec::top_hat(1e9, 2e6).unwrap();
        for accel in [3e16, 7e17, 3e18] {
            let ctx = AccelerationContext::new(accel, 3e8).unwrap();
            let b = det.band(&ctx).unwrap();
            assert!((b.omega_det / b.delta_omega - 500.0).abs() < 1e-9);
        }
    }

    #[test]
    fn rejects_bad_widths() {
        assert!(DetectorSpec::top_hat(1.0, 2.0).is_err());
        assert!(DetectorSpec::top_hat(-1.0, 0.1).is_err());
        assert!(DetectorSpec::top_hat(1.0, 0.0).is_ok());
        assert!(DetectorBand::new(1.0, 0.0, DetectorShape::TopHat).is_err());
        assert!(DetectorBand::new(0.1, 0.1, DetectorShape::Gaussian).is_err());
    }
}
