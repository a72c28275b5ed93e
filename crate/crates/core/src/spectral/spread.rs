use std::f64::consts::PI;

use rayon::prelude::*;
use serde::Serialize;

use super::{FrequencyGrid, Wavepacket};
use crate::error::{invalid, Error, Result};
use crate::C64;

/// Node count of the automatically sized Rindler-frequency grid.
pub const DEFAULT_OMEGA_NODES: usize = 2000;
/// `unruh_spread` refuses grids that lose more than this fraction of the norm.
pub const PARSEVAL_FAILURE: f64 = 1e-2;

const NODES_PER_PERIOD: f64 = 20.0;
const MIN_QUAD_NODES: usize = 256;
const QUAD_ORDER: usize = 16;
const OMEGA_PANEL_ORDER: usize = 20;
const WINDOW_START: f64 = 8.0;
const WINDOW_IMPROVEMENT: f64 = 1e-6;
const MAX_DOUBLINGS: usize = 24;

/// Minkowski→Unruh kernel `(α_R, α_L)` at Minkowski frequency `omega` (rad/s),
/// dimensionless Rindler frequency `big_omega` and acceleration frequency `a` (1/s).
pub fn unruh_kernel(omega: f64, big_omega: f64, a: f64) -> Result<(C64, C64)> {
    if !(omega > 0.0) {
        return Err(invalid("omega", "must be positive"));
    }
    if !(big_omega > 0.0) {
        return Err(invalid("Omega", "must be positive"));
    }
    if !(a > 0.0) {
        return Err(invalid("a", "must be positive"));
    }
    let modulus = (2.0 * PI * omega).sqrt().recip();
    let phase = big_omega * (omega / a).ln();
    Ok((C64::from_polar(modulus, phase), C64::from_polar(modulus, -phase)))
}

/// Sampled Unruh-basis amplitudes of a one-photon wavepacket:
/// the coefficients of `a†_{R,Ω}` and `a†_{L,Ω}` acting on the Minkowski vacuum.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct UnruhSpread {
    pub omega: Vec<f64>,
    pub weights: Vec<f64>,
    pub x_r: Vec<C64>,
    pub x_l: Vec<C64>,
    /// `∫|x|² dω` of the source packet.
    pub source_norm_sq: f64,
    /// Interval covered by the Rindler-frequency grid.
    pub interval: (f64, f64),
}

impl UnruhSpread {
    /// `Σ w (|X_R|² + |X_L|²)`.
    pub fn captured_norm_sq(&self) -> f64 {
        self.weights
            .iter()
            .zip(self.x_r.iter().zip(&self.x_l))
            .map(|(w, (r, l))| w * (r.norm_sqr() + l.norm_sqr()))
            .sum()
    }

    pub fn len(&self) -> usize {
        self.omega.len()
    }

    pub fn is_empty(&self) -> bool {
        self.omega.is_empty()
    }
}

/// `1 − Σ w (|X_R|² + |X_L|²)` for a spread built from a unit-norm packet.
pub fn parseval_defect(spread: &UnruhSpread) -> f64 {
    1.0 - spread.captured_norm_sq()
}

/// Minkowski-frequency quadrature resolving `e^{-iΩ ln ω}` up to `max_omega`.
fn omega_quadrature(support: (f64, f64), max_omega: f64) -> Result<FrequencyGrid> {
    let (lo, hi) = support;
    let periods = max_omega * (hi / lo).ln() / (2.0 * PI);
    let nodes = ((NODES_PER_PERIOD * periods).ceil() as usize).max(MIN_QUAD_NODES);
    let panels = nodes.div_ceil(QUAD_ORDER);
    FrequencyGrid::gauss_legendre(lo, hi, panels, QUAD_ORDER)
}

/// Evaluates `X_R(Ω) = ∫dω conj(α_R) x(ω)` and `X_L(Ω) = ∫dω conj(α_L) x(ω)`
/// on every node of `grid`, without any completeness check.
pub fn sample_spread<W: Wavepacket + ?Sized>(packet: &W, a: f64, grid: &FrequencyGrid) -> Result<UnruhSpread> {
    let (x_r, x_l) = evaluate(packet, a, grid.nodes())?.into_iter().unzip();
    Ok(UnruhSpread {
        omega: grid.nodes().to_vec(),
        weights: grid.weights().to_vec(),
        x_r,
        x_l,
        source_norm_sq: packet.norm_sq(),
        interval: grid.interval(),
    })
}

/// `(X_R(Ω), X_L(Ω))` at a single frequency.
pub fn spread_at<W: Wavepacket + ?Sized>(packet: &W, a: f64, big_omega: f64) -> Result<(C64, C64)> {
    if !(big_omega >= 0.0 && big_omega.is_finite()) {
        return Err(invalid("Omega", "must be finite and non-negative"));
    }
    Ok(evaluate(packet, a, &[big_omega])?[0])
}

fn evaluate<W: Wavepacket + ?Sized>(packet: &W, a: f64, nodes: &[f64]) -> Result<Vec<(C64, C64)>> {
    if !(a > 0.0 && a.is_finite()) {
        return Err(invalid("a", "must be positive and finite"));
    }
    let max_omega = nodes.iter().fold(0.0f64, |m, &x| m.max(x.abs()));
    let quad = omega_quadrature(packet.support(), max_omega)?;

    // x(ω) (2πω)^(-1/2) w, and ln(ω/a), per Minkowski node
    let (k, u): (Vec<C64>, Vec<f64>) = quad
        .nodes()
        .iter()
        .zip(quad.weights())
        .map(|(&w, &wt)| {
            let k = packet.amplitude(w) * (wt / (2.0 * PI * w).sqrt());
            (k, (w / a).ln())
        })
        .unzip();

    Ok(nodes
        .par_iter()
        .map(|&om| {
            let mut c = C64::new(0.0, 0.0);
            let mut s = C64::new(0.0, 0.0);
            for (ki, &ui) in k.iter().zip(&u) {
                let (sin, cos) = (om * ui).sin_cos();
                c += ki * cos;
                s += ki * sin;
            }
            let i = C64::i();
            (c - i * s, c + i * s)
        })
        .collect())
}

/// Like [`sample_spread`], but fails when the grid misses more than 1% of the
/// packet's norm.
pub fn unruh_spread<W: Wavepacket + ?Sized>(packet: &W, a: f64, grid: &FrequencyGrid) -> Result<UnruhSpread> {
    let spread = sample_spread(packet, a, grid)?;
    let lost = spread.source_norm_sq - spread.captured_norm_sq();
    if lost > PARSEVAL_FAILURE * spread.source_norm_sq {
        return Err(Error::IncompleteSpread { defect: lost / spread.source_norm_sq, limit: PARSEVAL_FAILURE });
    }
    Ok(spread)
}

/// Picks `[0, Ω_max]` by doubling `Ω_max` until the Parseval defect improves
/// by less than 1e-6 per doubling.
pub fn auto_omega_grid<W: Wavepacket + ?Sized>(packet: &W, a: f64, nodes: usize) -> Result<FrequencyGrid> {
    let panels = nodes.div_ceil(OMEGA_PANEL_ORDER).max(1);
    let mut top = WINDOW_START;
    let mut grid = FrequencyGrid::gauss_legendre(0.0, top, panels, OMEGA_PANEL_ORDER)?;
    let mut defect = parseval_defect(&sample_spread(packet, a, &grid)?);
    for _ in 0..MAX_DOUBLINGS {
        top *= 2.0;
        let wider = FrequencyGrid::gauss_legendre(0.0, top, panels, OMEGA_PANEL_ORDER)?;
        let next = parseval_defect(&sample_spread(packet, a, &wider)?);
        let improvement = defect - next;
        grid = wider;
        defect = next;
        if improvement <= WINDOW_IMPROVEMENT {
            break;
        }
    }
    Ok(grid)
}
