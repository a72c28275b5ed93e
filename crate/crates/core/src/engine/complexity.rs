//! Cost model for the brute-force engine.
//!
//! With `m` bins and cutoff `n` per mode, one helicity sector holds `m`
//! region-I modes, their `m` region-II partners and one out-of-band mode, a
//! space of `2 (n+1)^{2m}` states. The squeezed vacuum alone already spreads
//! over `(n+1)^m` paired occupations and the band rotation expands every
//! region-I monomial into up to `C(mn + m − 1, m − 1)` terms, so the work grows
//! at least like `a(n)^m` with `a(n) = max(5, (n+1)²)`.

use serde::Serialize;

use crate::error::{invalid, Result};

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CostRecord {
    pub bins: usize,
    pub n_max: usize,
    /// States in one helicity sector.
    pub sector_basis: f64,
    /// States in the full two-helicity layout.
    pub basis_size: f64,
    /// Stored amplitudes of the vacuum and photon kets of one sector.
    pub sparse_entries: f64,
    /// Predicted amplitude updates for the whole construction.
    pub operation_count: f64,
    /// `a(n)`.
    pub witness_base: f64,
    /// `a(n)^m`.
    pub witness: f64,
}

fn binomial(n: usize, k: usize) -> f64 {
    (0..k).fold(1.0, |acc, i| acc * (n - i) as f64 / (i + 1) as f64)
}

pub fn complexity_estimate(bins: usize, n_max: usize) -> Result<CostRecord> {
    if bins == 0 || n_max == 0 {
        return Err(invalid("complexity", "bins and n_max must be at least 1"));
    }
    let m = bins as i32;
    let d = (n_max + 1) as f64;
    let sector_basis = 2.0 * d.powi(2 * m);
    let paired = d.powi(m);
    // vacuum plus 4m ladder terms and the out-of-band excitation
    let sparse_entries = paired * (4 * bins + 2) as f64;
    let expansion = binomial(bins * n_max + bins - 1, bins - 1);
    let operation_count = 2.0 * sparse_entries * expansion;
    let witness_base = (d * d).max(5.0);
    Ok(CostRecord {
        bins,
        n_max,
        sector_basis,
        basis_size: sector_basis * sector_basis,
        sparse_entries,
        operation_count,
        witness_base,
        witness: witness_base.powi(m),
    })
}

/// Least-squares fit of `t = A · bᵐ`; returns `(b, A)`.
pub fn fit_exponential(ms: &[f64], times: &[f64]) -> Result<(f64, f64)> {
    if ms.len() != times.len() || ms.len() < 2 {
        return Err(invalid("fit", "need at least two (m, t) pairs"));
    }
    if times.iter().any(|&t| !(t > 0.0)) {
        return Err(invalid("fit", "times must be positive"));
    }
    let n = ms.len() as f64;
    let ys: Vec<f64> = times.iter().map(|t| t.ln()).collect();
    let mx = ms.iter().sum::<f64>() / n;
    let my = ys.iter().sum::<f64>() / n;
    let sxx: f64 = ms.iter().map(|x| (x - mx).powi(2)).sum();
    if sxx == 0.0 {
        return Err(invalid("fit", "bin counts must not all be equal"));
    }
    let sxy: f64 = ms.iter().zip(&ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let slope = sxy / sxx;
    Ok((slope.exp(), (my - slope * mx).exp()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn witness_floor() {
        for m in 1..=4 {
            for n in 1..=6 {
                let c = complexity_estimate(m, n).unwrap();
                assert!(c.witness >= 5f64.powi(m as i32));
                assert!(c.operation_count >= c.witness);
            }
        }
    }

    #[test]
    fn fit_recovers_base() {
        let ms = [1.0, 2.0, 3.0];
        let ts: Vec<f64> = ms.iter().map(|m| 0.3 * 7f64.powf(*m)).collect();
        let (b, a) = fit_exponential(&ms, &ts).unwrap();
        assert!((b - 7.0).abs() < 1e-12 && (a - 0.3).abs() < 1e-12);
    }
}
