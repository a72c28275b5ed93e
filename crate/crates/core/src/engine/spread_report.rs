use serde::Serialize;

use super::Scenario;
use crate::error::Result;
use crate::spectral::{auto_omega_grid, parseval_defect, spread_at, unruh_spread, UnruhSpread};
use crate::squeezing::AccelerationContext;
use crate::C64;

/// The `x↑` photon's spread at the detector centre `Ω = Ω′_det / a`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SpreadSample {
    pub a_proper: f64,
    pub omega_det: f64,
    pub x_r: C64,
    pub x_l: C64,
}

/// Full spread of the `x↑` photon at one acceleration.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SpreadProfile {
    pub a_proper: f64,
    pub spread: UnruhSpread,
    pub parseval_defect: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SpreadReport {
    pub samples: Vec<SpreadSample>,
    pub profiles: Vec<SpreadProfile>,
}

pub fn spread_report(scn: &Scenario, accels: &[f64], profile_accels: &[f64]) -> Result<SpreadReport> {
    let x = &scn.state.profile_x;
    let samples = accels
        .iter()
        .map(|&a_proper| {
            let ctx = AccelerationContext::new(a_proper, scn.speed_of_light)?;
            let omega_det = ctx.dimensionless(scn.detector.center);
            let (x_r, x_l) = spread_at(x, ctx.a, omega_det)?;
            Ok(SpreadSample { a_proper, omega_det, x_r, x_l })
        })
        .collect::<Result<_>>()?;
    let profiles = profile_accels
        .iter()
        .map(|&a_proper| {
            let ctx = AccelerationContext::new(a_proper, scn.speed_of_light)?;
            let grid = auto_omega_grid(x, ctx.a, scn.omega_nodes)?;
            let spread = unruh_spread(x, ctx.a, &grid)?;
            let parseval_defect = parseval_defect(&spread);
            Ok(SpreadProfile { a_proper, spread, parseval_defect })
        })
        .collect::<Result<_>>()?;
    Ok(SpreadReport { samples, profiles })
}
