//! Brute-force oracle: the detector band is cut into `m` equal bins, each bin
//! carries its own squeezed `(I, II)` pair, and the photon is built with
//! ladder operators straight from the Unruh mode definitions
//!
//! ```text
//! A†_R = cosh r a†_I − sinh r a_II        A†_L = cosh r a†_II − sinh r a_I
//! ```
//!
//! Region I is then rotated so that the detector mode is the first bin mode,
//! and everything else is traced explicitly.

use std::sync::Arc;

use nalgebra::DMatrix;

use super::{assemble, complexity_estimate, CaptureAmplitudes, DetectorBand, ReducedState, SectorBlocks};
use crate::error::{invalid, Error, Result};
use crate::fock::{
    cross_reduced, fock_lift_rotation, Helicity, Ladder, ModeLabel, ModeRole, ModeSet, Region, SparseKet,
};
use crate::linalg::complete_unitary;
use crate::spectral::{sample_spread, UnruhSpread, Wavepacket};
use crate::squeezing::{squeeze_param, tmsv_vacuum_coeffs, SqueezeParam};
use crate::C64;

#[derive(Debug, Clone, PartialEq)]
pub struct BruteOptions {
    pub bins: usize,
    pub n_max: usize,
    /// Use the band-centre `r` in every bin (the regime where the peaked
    /// assembly is exact).
    pub constant_r: bool,
    /// Passive unitary on the region-II bin modes applied before the trace.
    pub region_ii_unitary: Option<DMatrix<C64>>,
    /// Refuse to run when the predicted operation count exceeds this.
    pub budget: f64,
    /// Quadrature panels per bin when sampling the spread.
    pub panels_per_bin: usize,
    pub quad_order: usize,
}

impl Default for BruteOptions {
    fn default() -> Self {
        Self {
            bins: 1,
            n_max: 4,
            constant_r: false,
            region_ii_unitary: None,
            budget: 1e9,
            panels_per_bin: 4,
            quad_order: 20,
        }
    }
}

#[derive(Debug, Clone)]
pub struct BruteOutput {
    pub state: ReducedState,
    /// Squeezing parameter of each bin.
    pub bin_r: Vec<f64>,
    /// Effective capture `Σⱼ conj(gⱼ) β_{R,j}`, `Σⱼ gⱼ β_{L,j}` per helicity.
    pub capture_up: CaptureAmplitudes,
    pub capture_down: CaptureAmplitudes,
    /// Norm dropped at the ket level (ladder and rotation cutoffs), summed over
    /// both sectors' photon and vacuum kets.
    pub ket_loss: f64,
}

/// Bin-averaged view of one photon: `β_{X,j} = ∫_bin X_X / √wⱼ` and the
/// weight left outside the band.
#[derive(Debug, Clone, PartialEq)]
pub struct Binned {
    pub beta_r: Vec<C64>,
    pub beta_l: Vec<C64>,
    pub w_out: f64,
}

/// Discretized input to the Fock-space stage.
#[derive(Debug, Clone, PartialEq)]
pub struct BinnedBand {
    /// Detector coefficients `gⱼ = ∫_bin g / √wⱼ`.
    pub g: Vec<C64>,
    pub r: Vec<SqueezeParam>,
    pub up: Binned,
    pub down: Binned,
}

fn bin_spread(spread: &UnruhSpread, band: &DetectorBand, bins: usize) -> Binned {
    let (lo, hi) = band.support();
    let width = (hi - lo) / bins as f64;
    let mut sr = vec![C64::new(0.0, 0.0); bins];
    let mut sl = vec![C64::new(0.0, 0.0); bins];
    for i in 0..spread.len() {
        let j = (((spread.omega[i] - lo) / width) as usize).min(bins - 1);
        sr[j] += spread.x_r[i] * spread.weights[i];
        sl[j] += spread.x_l[i] * spread.weights[i];
    }
    let norm = width.sqrt();
    let beta_r: Vec<C64> = sr.iter().map(|s| s / norm).collect();
    let beta_l: Vec<C64> = sl.iter().map(|s| s / norm).collect();
    let inside: f64 = beta_r.iter().chain(&beta_l).map(|b| b.norm_sqr()).sum();
    Binned { beta_r, beta_l, w_out: (1.0 - inside).max(0.0) }
}

/// `gⱼ = ∫_bin g / √wⱼ`.
fn bin_detector(band: &DetectorBand, grid_nodes: &[f64], grid_weights: &[f64], bins: usize) -> Vec<C64> {
    let (lo, hi) = band.support();
    let width = (hi - lo) / bins as f64;
    let mut g = vec![0.0; bins];
    for (&om, &w) in grid_nodes.iter().zip(grid_weights) {
        let j = (((om - lo) / width) as usize).min(bins - 1);
        g[j] += band.value(om) * w;
    }
    g.into_iter().map(|x| C64::new(x / width.sqrt(), 0.0)).collect()
}

fn sector_blocks(
    binned: &Binned,
    helicity: Helicity,
    g: &[C64],
    rs: &[SqueezeParam],
    opts: &BruteOptions,
) -> Result<(SectorBlocks, f64)> {
    let m = g.len();
    let n = opts.n_max;
    let h = helicity;
    let mut labels = Vec::with_capacity(2 * m + 1);
    labels.extend((0..m).map(|j| ModeLabel::new(Region::I, h, ModeRole::Bin(j))));
    labels.extend((0..m).map(|j| ModeLabel::new(Region::II, h.flip(), ModeRole::Bin(j))));
    labels.push(ModeLabel::new(Region::I, h, ModeRole::Environment));
    let build = |ii_cutoff: usize| -> Result<Arc<ModeSet>> {
        let mut cutoffs = vec![n; m];
        cutoffs.extend(std::iter::repeat_n(ii_cutoff, m));
        cutoffs.push(1);
        let mut set = ModeSet::with_cutoffs(labels.clone(), cutoffs)?;
        for j in 0..m {
            set.declare_partner(j, m + j)?;
        }
        Ok(Arc::new(set))
    };
    let set = build(n)?;

    // product of per-bin squeezed vacua on |n⟩_I |n⟩_II
    let coeffs: Vec<Vec<f64>> = rs.iter().map(|r| tmsv_vacuum_coeffs(r, n)).collect();
    let mut entries = Vec::with_capacity((n + 1).pow(m as u32));
    let mut occ = vec![0usize; m];
    loop {
        let mut full = vec![0usize; 2 * m + 1];
        let mut amp = 1.0;
        for j in 0..m {
            full[j] = occ[j];
            full[m + j] = occ[j];
            amp *= coeffs[j][occ[j]];
        }
        entries.push((full, C64::new(amp, 0.0)));
        let mut k = 0;
        while k < m && occ[k] == n {
            occ[k] = 0;
            k += 1;
        }
        if k == m {
            break;
        }
        occ[k] += 1;
    }
    let vac = SparseKet::from_amplitudes(set.clone(), entries)?;

    let b = binned;
    let mut terms = Vec::with_capacity(4 * m + 1);
    for (j, &r) in rs.iter().enumerate().take(m) {
        let (ch, sh) = (C64::new(r.cosh(), 0.0), C64::new(r.sinh(), 0.0));
        terms.push((b.beta_r[j] * ch, Ladder::Create(j)));
        terms.push((-b.beta_r[j] * sh, Ladder::Annihilate(m + j)));
        terms.push((b.beta_l[j] * ch, Ladder::Create(m + j)));
        terms.push((-b.beta_l[j] * sh, Ladder::Annihilate(j)));
    }
    terms.push((C64::new(b.w_out.sqrt(), 0.0), Ladder::Create(2 * m)));
    let mut photon = vac.apply(&terms)?;
    let mut vac = vac;

    let region_i: Vec<usize> = (0..m).collect();
    let region_ii: Vec<usize> = (m..2 * m).collect();
    if let Some(v) = &opts.region_ii_unitary {
        // region II holds at most m·n quanta in total, so with that cutoff
        // per mode the rotation is exact
        let wide = build(m * n)?;
        vac = fock_lift_rotation(&vac.embed(wide.clone())?, &region_ii, v)?;
        photon = fock_lift_rotation(&photon.embed(wide)?, &region_ii, v)?;
    }
    let u = complete_unitary(g)?;
    let vac = fock_lift_rotation(&vac, &region_i, &u)?;
    let photon = fock_lift_rotation(&photon, &region_i, &u)?;

    let blocks = SectorBlocks {
        photon: cross_reduced(&photon, &photon, &[0])?,
        vacuum: cross_reduced(&vac, &vac, &[0])?,
        cross: cross_reduced(&photon, &vac, &[0])?,
    };
    Ok((blocks, vac.truncation_loss() + photon.truncation_loss()))
}

/// Samples both photons on the band and reduces them to bins.
pub fn bin_band<W: Wavepacket + ?Sized>(
    x: &W,
    y: &W,
    a: f64,
    band: &DetectorBand,
    opts: &BruteOptions,
) -> Result<BinnedBand> {
    let m = opts.bins;
    if m == 0 {
        return Err(invalid("brute", "bins must be at least 1"));
    }
    let grid = band.grid(opts.panels_per_bin * m, opts.quad_order)?;
    let up = bin_spread(&sample_spread(x, a, &grid)?, band, m);
    let down = bin_spread(&sample_spread(y, a, &grid)?, band, m);
    let g = bin_detector(band, grid.nodes(), grid.weights(), m);

    let centre = squeeze_param(band.omega_det)?;
    let (lo, hi) = band.support();
    let r = if opts.constant_r || m == 1 {
        vec![centre; m]
    } else {
        (0..m).map(|j| squeeze_param(lo + (j as f64 + 0.5) * (hi - lo) / m as f64)).collect::<Result<_>>()?
    };
    Ok(BinnedBand { g, r, up, down })
}

/// The Fock-space stage: builds both helicity sectors, rotates, traces and
/// assembles. Returns the state and the norm dropped at the ket level.
pub fn reduce_binned(p: C64, q: C64, input: &BinnedBand, opts: &BruteOptions) -> Result<(ReducedState, f64)> {
    let m = input.g.len();
    if opts.n_max == 0 || m == 0 {
        return Err(invalid("brute", "bins and n_max must be at least 1"));
    }
    if input.r.len() != m || input.up.beta_r.len() != m || input.down.beta_r.len() != m {
        return Err(invalid("brute", "binned input has inconsistent lengths"));
    }
    let cost = complexity_estimate(m, opts.n_max)?;
    if cost.operation_count > opts.budget {
        return Err(Error::BudgetExceeded {
            predicted: cost.operation_count,
            budget: opts.budget,
            bins: m,
            n_max: opts.n_max,
            base: cost.witness_base,
        });
    }
    if let Some(v) = &opts.region_ii_unitary {
        if v.nrows() != m || v.ncols() != m {
            return Err(invalid("region_ii_unitary", format!("expected {m}x{m}")));
        }
    }
    let (up, loss_up) = sector_blocks(&input.up, Helicity::Up, &input.g, &input.r, opts)?;
    let (down, loss_down) = sector_blocks(&input.down, Helicity::Down, &input.g, &input.r, opts)?;
    Ok((assemble(p, q, &up, &down)?, loss_up + loss_down))
}

/// Engine B on a detector band at `a = ã/c`.
pub fn brute_force_reduced_state<W: Wavepacket + ?Sized>(
    p: C64,
    q: C64,
    x: &W,
    y: &W,
    a: f64,
    band: &DetectorBand,
    opts: &BruteOptions,
) -> Result<BruteOutput> {
    // refuse before sampling anything
    let cost = complexity_estimate(opts.bins.max(1), opts.n_max.max(1))?;
    if cost.operation_count > opts.budget {
        return Err(Error::BudgetExceeded {
            predicted: cost.operation_count,
            budget: opts.budget,
            bins: opts.bins,
            n_max: opts.n_max,
            base: cost.witness_base,
        });
    }
    let input = bin_band(x, y, a, band, opts)?;
    let (state, ket_loss) = reduce_binned(p, q, &input, opts)?;
    let g = &input.g;
    let effective = |b: &Binned| {
        let er: C64 = g.iter().zip(&b.beta_r).map(|(gj, bj)| gj.conj() * bj).sum();
        let el: C64 = g.iter().zip(&b.beta_l).map(|(gj, bj)| gj * bj).sum();
        CaptureAmplitudes::new(er, el)
    };
    Ok(BruteOutput {
        state,
        bin_r: input.r.iter().map(|r| r.r).collect(),
        capture_up: effective(&input.up)?,
        capture_down: effective(&input.down)?,
        ket_loss,
    })
}
