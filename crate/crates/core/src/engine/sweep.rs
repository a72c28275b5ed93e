//! Per-acceleration evaluation and sweeps.

use rayon::prelude::*;
use serde::Serialize;

use super::{
    assemble_peaked, brute_force_reduced_state, capture_with_convention, BruteOptions, CaptureAmplitudes, DetectorSpec,
    LConvention, ReducedState, StateSpec,
};
use crate::entanglement::{negativity, EntanglementResult};
use crate::error::{invalid, Error, Result};
use crate::spectral::{auto_omega_grid, parseval_defect, sample_spread, SpectralProfile};
use crate::squeezing::{
    peaked_validity, required_n_max, squeeze_param, truncation_tail, AccelerationContext, TruncationConfig,
    ValidityVerdict,
};

/// Everything a sweep needs besides the list of accelerations.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Scenario {
    pub state: StateSpec,
    pub detector: DetectorSpec,
    pub speed_of_light: f64,
    pub truncation: TruncationConfig,
    /// Largest cutoff the peaked engine may raise `n_max` to when the tail at
    /// small `Ω` exceeds `tail_tol`.
    pub n_max_cap: usize,
    /// Gauss–Legendre panels and order on the detector band.
    pub band_panels: usize,
    pub band_order: usize,
    /// Nodes of the automatic Ω window used for the Parseval diagnostic.
    pub omega_nodes: usize,
    /// Compute the Parseval defect for every point.
    pub parseval_diagnostics: bool,
    /// Run the peaked engine even when the validity gate fails.
    pub allow_invalid: bool,
    pub l_convention: LConvention,
}

#[derive(Debug, Clone, PartialEq)]
pub enum EngineChoice {
    Peaked,
    Brute(BruteOptions),
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PointResult {
    pub a_proper: f64,
    pub omega_det: f64,
    pub delta_omega: f64,
    pub r: f64,
    pub validity_ratio: f64,
    pub verdict: ValidityVerdict,
    pub capture_up: CaptureAmplitudes,
    pub capture_down: CaptureAmplitudes,
    pub n_max: usize,
    pub entanglement: EntanglementResult,
    pub trunc_loss: f64,
    /// Worst of the two photons; `None` when diagnostics are off.
    pub parseval_defect: Option<f64>,
    #[serde(skip)]
    pub state: ReducedState,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepPoint {
    pub a_proper: f64,
    pub outcome: std::result::Result<PointResult, String>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepResult {
    pub points: Vec<SweepPoint>,
}

impl SweepResult {
    /// Negativities of the points that succeeded, in sweep order.
    pub fn negativities(&self) -> Vec<f64> {
        self.points.iter().filter_map(|p| p.outcome.as_ref().ok().map(|r| r.entanglement.negativity)).collect()
    }

    pub fn failures(&self) -> usize {
        self.points.iter().filter(|p| p.outcome.is_err()).count()
    }
}

/// `n` values from `lo` to `hi` (inclusive), evenly spaced in `ln`.
pub fn log_spaced(lo: f64, hi: f64, n: usize) -> Result<Vec<f64>> {
    if !(lo > 0.0 && hi >= lo && hi.is_finite()) || n == 0 {
        return Err(invalid("sweep", "need 0 < lo <= hi and at least one point"));
    }
    if n == 1 {
        return Ok(vec![lo]);
    }
    let (l0, l1) = (lo.ln(), hi.ln());
    Ok((0..n)
        .map(|i| match i {
            0 => lo,
            _ if i == n - 1 => hi,
            _ => (l0 + (l1 - l0) * i as f64 / (n - 1) as f64).exp(),
        })
        .collect())
}

fn parseval_for(profile: &SpectralProfile, a: f64, nodes: usize) -> Result<f64> {
    let grid = auto_omega_grid(profile, a, nodes)?;
    Ok(parseval_defect(&sample_spread(profile, a, &grid)?))
}

/// Runs one engine at one proper acceleration.
pub fn evaluate_point(scn: &Scenario, a_proper: f64, engine: &EngineChoice) -> Result<PointResult> {
    let ctx = AccelerationContext::new(a_proper, scn.speed_of_light)?;
    let band = scn.detector.band(&ctx)?;
    let validity_ratio = peaked_validity(band.omega_det, band.delta_omega)?;
    let verdict = ValidityVerdict::classify(validity_ratio);
    let r = squeeze_param(band.omega_det)?;
    let st = &scn.state;

    let (state, capture_up, capture_down) = match engine {
        EngineChoice::Peaked => {
            if !verdict.passes() && !scn.allow_invalid {
                return Err(Error::ValidityViolation { ratio: validity_ratio, omega_det: band.omega_det });
            }
            let tol = scn.truncation.tail_tol;
            let n_max = required_n_max(&r, tol, scn.truncation.n_max, scn.n_max_cap);
            let tail = truncation_tail(&r, n_max).max();
            if tail > tol {
                return Err(Error::TruncationTail { tail, n_max, tol });
            }
            let grid = band.grid(scn.band_panels, scn.band_order)?;
            let cap = |p: &SpectralProfile| {
                capture_with_convention(&sample_spread(p, ctx.a, &grid)?, &band, scn.l_convention)
            };
            let (up, down) = (cap(&st.profile_x)?, cap(&st.profile_y)?);
            (assemble_peaked(st.p, st.q, &up, &down, &r, n_max)?, up, down)
        }
        EngineChoice::Brute(opts) => {
            let out = brute_force_reduced_state(st.p, st.q, &st.profile_x, &st.profile_y, ctx.a, &band, opts)?;
            (out.state, out.capture_up, out.capture_down)
        }
    };

    let parseval_defect = if scn.parseval_diagnostics {
        let dx = parseval_for(&st.profile_x, ctx.a, scn.omega_nodes)?;
        let dy = if st.profile_y == st.profile_x { dx } else { parseval_for(&st.profile_y, ctx.a, scn.omega_nodes)? };
        Some(dx.max(dy))
    } else {
        None
    };

    Ok(PointResult {
        a_proper,
        omega_det: band.omega_det,
        delta_omega: band.delta_omega,
        r: r.r,
        validity_ratio,
        verdict,
        capture_up,
        capture_down,
        n_max: state.n_max,
        entanglement: negativity(&state.rho, 0)?,
        trunc_loss: state.trunc_loss,
        parseval_defect,
        state,
    })
}

/// Evaluates every acceleration; failures are recorded per point and do not
/// stop the sweep. Output order follows `accels` regardless of scheduling.
pub fn sweep_negativity(scn: &Scenario, accels: &[f64], engine: &EngineChoice) -> SweepResult {
    let points = accels
        .par_iter()
        .map(|&a_proper| SweepPoint {
            a_proper,
            outcome: evaluate_point(scn, a_proper, engine).map_err(|e| e.to_string()),
        })
        .collect();
    SweepResult { points }
}
