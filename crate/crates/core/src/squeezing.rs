//! Two-mode squeeze algebra linking Unruh modes to region I/II Rindler modes.
//!
//! Per dimensionless frequency `Ω`, `tanh r_Ω = e^{-πΩ}`. The Minkowski vacuum
//! restricted to one `(I, II)` pair is `Σ_n tanhⁿr / cosh r |n⟩_I |n⟩_II`; the
//! two one-particle Unruh excitations are
//! `a†_R |0⟩ = Σ_n √(n+1) tanhⁿr / cosh²r |n+1⟩_I |n⟩_II` and its mirror `a†_L`.
//! A region-I mode of helicity σ is paired with a region-II mode of helicity −σ;
//! [`crate::fock::ModeSet`] records that pairing explicitly.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::engine::DetectorSpec;
use crate::error::{invalid, Result};

/// Below this `e^{-πΩ}` the squeezing parameter is taken from its series.
const SERIES_THRESHOLD: f64 = 1e-8;
/// Validity ratios at or above this fail the peaked-detector gate.
pub const VALIDITY_LIMIT: f64 = 0.1;
/// Ratios in `[VALIDITY_WARN, VALIDITY_LIMIT)` pass with a warning.
pub const VALIDITY_WARN: f64 = 0.05;

/// Squeezing parameter `r` with `tanh r` and `sech² r = 1 − tanh² r` kept
/// separately so that neither loses precision.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SqueezeParam {
    /// Dimensionless Rindler frequency, `NaN` when built directly from `r`.
    pub omega: f64,
    pub r: f64,
    tanh: f64,
    sech_sq: f64,
}

impl SqueezeParam {
    /// Builds a parameter from `r` directly (used for forced-`r` checks).
    pub fn from_r(r: f64) -> Result<Self> {
        if !(r >= 0.0 && r.is_finite()) {
            return Err(invalid("r", "must be finite and non-negative"));
        }
        let c = r.cosh();
        Ok(Self { omega: f64::NAN, r, tanh: r.tanh(), sech_sq: 1.0 / (c * c) })
    }

    pub fn tanh(&self) -> f64 {
        self.tanh
    }

    pub fn cosh(&self) -> f64 {
        self.sech_sq.sqrt().recip()
    }

    pub fn sinh(&self) -> f64 {
        self.tanh * self.cosh()
    }

    /// `1 / cosh² r`.
    pub fn sech_sq(&self) -> f64 {
        self.sech_sq
    }
}

/// `r_Ω = atanh(e^{-πΩ})`.
pub fn squeeze_param(omega: f64) -> Result<SqueezeParam> {
    if !(omega > 0.0) {
        return Err(invalid("Omega", "must be positive (r diverges at Omega = 0)"));
    }
    let x = (-PI * omega).exp();
    let r = if x < SERIES_THRESHOLD {
        // ln r = -πΩ + ln(1 + x²/3 + x⁴/5)
        (-PI * omega + (x * x / 3.0).ln_1p()).exp()
    } else {
        x.atanh()
    };
    let sech_sq = -(-2.0 * PI * omega).exp_m1();
    Ok(SqueezeParam { omega, r, tanh: x, sech_sq })
}

/// The `Δr/r` estimate for a band of width `delta_omega` centred at `omega_det`.
pub fn peaked_validity(omega_det: f64, delta_omega: f64) -> Result<f64> {
    if !(omega_det > 0.0) {
        return Err(invalid("Omega_det", "must be positive"));
    }
    if !(delta_omega >= 0.0 && delta_omega < 2.0 * omega_det) {
        return Err(invalid("Delta Omega_det", "must lie in [0, 2 Omega_det)"));
    }
    let sq = squeeze_param(omega_det)?;
    let x = sq.tanh();
    Ok(PI * x * delta_omega / (sq.r * (1.0 + x * x)))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum ValidityVerdict {
    Pass,
    /// Below the gate but inside the warning band.
    Warn,
    Fail,
}

impl ValidityVerdict {
    pub fn classify(ratio: f64) -> Self {
        if ratio >= VALIDITY_LIMIT || ratio.is_nan() {
            Self::Fail
        } else if ratio >= VALIDITY_WARN {
            Self::Warn
        } else {
            Self::Pass
        }
    }

    pub fn passes(self) -> bool {
        self != Self::Fail
    }
}

/// Occupation cutoff and the probability mass it may discard.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TruncationConfig {
    pub n_max: usize,
    pub tail_tol: f64,
}

impl TruncationConfig {
    pub fn new(n_max: usize, tail_tol: f64) -> Result<Self> {
        if n_max < 1 {
            return Err(invalid("n_max", "must be at least 1"));
        }
        if !(tail_tol > 0.0) {
            return Err(invalid("tail_tol", "must be positive"));
        }
        Ok(Self { n_max, tail_tol })
    }
}

/// Proper acceleration `ã` and the acceleration frequency `a = ã/c`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AccelerationContext {
    pub proper_acceleration: f64,
    pub speed_of_light: f64,
    pub a: f64,
}

impl AccelerationContext {
    pub fn new(proper_acceleration: f64, speed_of_light: f64) -> Result<Self> {
        if !(proper_acceleration > 0.0 && proper_acceleration.is_finite()) {
            return Err(invalid("proper acceleration", "must be positive and finite"));
        }
        if !(speed_of_light > 0.0) {
            return Err(invalid("c", "must be positive"));
        }
        Ok(Self { proper_acceleration, speed_of_light, a: proper_acceleration / speed_of_light })
    }

    /// `Ω = Ω′/a`.
    pub fn dimensionless(&self, rindler_frequency: f64) -> f64 {
        rindler_frequency / self.a
    }
}

/// Detector band on the dimensionless Rindler axis.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct DimensionlessBand {
    pub omega_det: f64,
    pub delta_omega: f64,
    /// `√a`: `g(Ω) = √a g′(aΩ)` keeps the profile unit-norm.
    pub jacobian: f64,
}

impl DimensionlessBand {
    pub fn quality_factor(&self) -> f64 {
        self.omega_det / self.delta_omega
    }
}

pub fn acceleration_to_band(detector: &DetectorSpec, ctx: &AccelerationContext) -> DimensionlessBand {
    DimensionlessBand {
        omega_det: ctx.dimensionless(detector.center),
        delta_omega: ctx.dimensionless(detector.width),
        jacobian: ctx.a.sqrt(),
    }
}

/// `vₙ = tanhⁿr / cosh r` for `n = 0..=n_max`, the Schmidt coefficients of the
/// pair vacuum on `|n⟩_I |n⟩_II`.
pub fn tmsv_vacuum_coeffs(r: &SqueezeParam, n_max: usize) -> Vec<f64> {
    let t = r.tanh();
    let sech = r.sech_sq().sqrt();
    (0..=n_max).map(|n| t.powi(n as i32) * sech).collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ExcitationKind {
    /// `a†_R`: extra quantum in region I.
    R,
    /// `a†_L`: extra quantum in region II.
    L,
}

/// One term `amp |occ_i⟩_I |occ_ii⟩_II` of a pair state.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PairAmplitude {
    pub occ_i: usize,
    pub occ_ii: usize,
    pub amp: f64,
}

/// Pair expansion of a one-particle Unruh excitation, keeping every term whose
/// occupations stay within `n_max` (that is `n = 0..n_max`).
pub fn tmsv_excitation_coeffs(kind: ExcitationKind, r: &SqueezeParam, n_max: usize) -> Vec<PairAmplitude> {
    let t = r.tanh();
    let s = r.sech_sq();
    (0..n_max)
        .map(|n| {
            let amp = ((n + 1) as f64).sqrt() * t.powi(n as i32) * s;
            let (occ_i, occ_ii) = match kind {
                ExcitationKind::R => (n + 1, n),
                ExcitationKind::L => (n, n + 1),
            };
            PairAmplitude { occ_i, occ_ii, amp }
        })
        .collect()
}

/// Probability mass discarded by the cutoff.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TruncationTail {
    pub vacuum: f64,
    pub excitation: f64,
}

impl TruncationTail {
    pub fn max(&self) -> f64 {
        self.vacuum.max(self.excitation)
    }
}

pub fn truncation_tail(r: &SqueezeParam, n_max: usize) -> TruncationTail {
    let x = r.tanh() * r.tanh();
    let n = n_max as f64;
    TruncationTail { vacuum: x.powi(n_max as i32 + 1), excitation: x.powi(n_max as i32) * ((n + 1.0) - n * x) }
}

/// Smallest cutoff `≥ floor` whose tail is within `tol`, or `cap` if none is.
pub fn required_n_max(r: &SqueezeParam, tol: f64, floor: usize, cap: usize) -> usize {
    (floor.max(1)..=cap).find(|&n| truncation_tail(r, n).max() <= tol).unwrap_or(cap)
}

#[cfg(test)]
mod tests {
    use super::*;

    // atanh(e^{-π}) and atanh(e^{-π/10}) at 40 digits (mpmath)
    const R_AT_1: f64 = 0.043_240_848_283_570_18;
    const R_AT_TENTH: f64 = 0.929_590_016_221_810_3;

    #[test]
    fn closed_form_values() {
        assert!((squeeze_param(1.0).unwrap().r - R_AT_1).abs() < 1e-15);
        assert!((squeeze_param(0.1).unwrap().r - R_AT_TENTH).abs() < 1e-14);
    }

    #[test]
    fn large_omega_is_finite_and_normal() {
        let sq = squeeze_param(50.0).unwrap();
        // atanh(e^{-50π}) = 6.042022078324069e-69
        assert!(sq.r.is_normal());
        assert!((sq.r / 6.042_022_078_324_069e-69 - 1.0).abs() < 1e-13);
        assert!(squeeze_param(400.0).unwrap().r.is_finite());
        assert!(squeeze_param(1e6).unwrap().r >= 0.0);
    }

    #[test]
    fn series_branch_matches_atanh_at_switch() {
        let omega = -(SERIES_THRESHOLD.ln()) / PI;
        let below = squeeze_param(omega * 1.000001).unwrap();
        let x = (-PI * omega * 1.000001).exp();
        assert!((below.r / x.atanh() - 1.0).abs() < 1e-14);
    }

    #[test]
    fn rejects_non_positive_omega() {
        assert!(squeeze_param(0.0).is_err());
        assert!(squeeze_param(-1.0).is_err());
    }

    #[test]
    fn validity_values() {
        // direct evaluations of the closed form at 40 digits
        assert!((peaked_validity(10.0, 0.02).unwrap() - 0.062_831_853_071_795_86).abs() < 1e-12);
        assert!((peaked_validity(0.5, 0.001).unwrap() - 0.002_967_565_382_137_786_6).abs() < 1e-15);
        assert!((peaked_validity(100.0, 0.2).unwrap() - 0.628_318_530_717_958_6).abs() < 1e-12);
        assert_eq!(peaked_validity(3.0, 0.0).unwrap(), 0.0);
        assert!(peaked_validity(1.0, 2.0).is_err());
    }

    #[test]
    fn verdicts() {
        assert_eq!(ValidityVerdict::classify(0.01), ValidityVerdict::Pass);
        assert_eq!(ValidityVerdict::classify(0.0628), ValidityVerdict::Warn);
        assert!(ValidityVerdict::classify(0.0628).passes());
        assert_eq!(ValidityVerdict::classify(0.1), ValidityVerdict::Fail);
    }

    #[test]
    fn vacuum_coefficients() {
        let zero = SqueezeParam::from_r(0.0).unwrap();
        assert_eq!(tmsv_vacuum_coeffs(&zero, 3), vec![1.0, 0.0, 0.0, 0.0]);

        let sq = SqueezeParam::from_r(0.5).unwrap();
        let v = tmsv_vacuum_coeffs(&sq, 10);
        for w in v.windows(2) {
            assert!((w[1] / w[0] - 0.5f64.tanh()).abs() < 1e-15);
        }
        let norm: f64 = v.iter().map(|x| x * x).sum();
        // 1 - tanh(0.5)^22 = 1 - 4.212559499e-8
        assert!((norm - (1.0 - 4.212_559_499_274_82e-8)).abs() < 1e-15);
        assert!((1.0 - norm - truncation_tail(&sq, 10).vacuum).abs() < 1e-15);
    }

    #[test]
    fn excitation_coefficients() {
        let zero = SqueezeParam::from_r(0.0).unwrap();
        let c = tmsv_excitation_coeffs(ExcitationKind::R, &zero, 4);
        assert_eq!(c[0], PairAmplitude { occ_i: 1, occ_ii: 0, amp: 1.0 });
        assert!(c[1..].iter().all(|p| p.amp == 0.0));

        for r in [0.04, 0.5, 0.93] {
            let sq = SqueezeParam::from_r(r).unwrap();
            for n_max in [1, 3, 15] {
                let norm: f64 =
                    tmsv_excitation_coeffs(ExcitationKind::L, &sq, n_max).iter().map(|p| p.amp * p.amp).sum();
                assert!((norm + truncation_tail(&sq, n_max).excitation - 1.0).abs() < 1e-12);
            }
        }
        let l = tmsv_excitation_coeffs(ExcitationKind::L, &SqueezeParam::from_r(0.3).unwrap(), 3);
        assert!(l.iter().all(|p| p.occ_ii == p.occ_i + 1));
    }

    #[test]
    fn tail_matches_direct_sum() {
        let sq = squeeze_param(0.1).unwrap();
        let v = tmsv_vacuum_coeffs(&sq, 4000);
        let discarded: f64 = v[16..].iter().map(|x| x * x).sum();
        assert!((truncation_tail(&sq, 15).vacuum - discarded).abs() < 1e-12);
        let tails: Vec<f64> = (1..30).map(|n| truncation_tail(&sq, n).max()).collect();
        assert!(tails.windows(2).all(|w| w[1] < w[0]));
        assert_eq!(truncation_tail(&SqueezeParam::from_r(0.0).unwrap(), 3).max(), 0.0);
    }

    #[test]
    fn required_cutoff_meets_tolerance() {
        let sq = squeeze_param(0.1).unwrap();
        let n = required_n_max(&sq, 1e-8, 15, 80);
        assert!(truncation_tail(&sq, n).max() <= 1e-8);
        assert!(truncation_tail(&sq, n - 1).max() > 1e-8);
    }

    #[test]
    fn acceleration_mapping() {
        let det = DetectorSpec::top_hat(1e9, 2e6).unwrap();
        let ctx = AccelerationContext::new(3e16, 3e8).unwrap();
        let band = acceleration_to_band(&det, &ctx);
        assert_eq!(band.omega_det, 10.0);
        let doubled = acceleration_to_band(&det, &AccelerationContext::new(6e16, 3e8).unwrap());
        assert_eq!(doubled.omega_det, 5.0);
        assert!((band.quality_factor() - 500.0).abs() < 1e-9);
        assert!((doubled.quality_factor() - 500.0).abs() < 1e-9);
    }
}
