//! Negativity of bipartite states.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fock::{partial_transpose, DensityOperator};
use crate::linalg::{hermitian_eigenvalues, hermiticity_deviation};

const TRACE_TOL: f64 = 1e-6;
const HERMITIAN_TOL: f64 = 1e-10;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EntanglementResult {
    pub negativity: f64,
    pub log_negativity: f64,
    pub min_pt_eigenvalue: f64,
    /// Eigenvalues of the partial transpose above `tolerance` in magnitude.
    pub numerical_rank: usize,
    pub tolerance: f64,
}

/// `N = (‖ρ^{T_s}‖₁ − 1)/2` and `E_N = log₂ ‖ρ^{T_s}‖₁`, transposing subsystem `s`.
///
/// Eigenvalues below `1e-12 · dim · ‖ρ^{T_s}‖₁` in magnitude are treated as zero.
pub fn negativity(rho: &DensityOperator, subsystem: usize) -> Result<EntanglementResult> {
    let deviation = hermiticity_deviation(rho.matrix());
    if deviation > HERMITIAN_TOL {
        return Err(Error::NotHermitian { deviation });
    }
    let trace = rho.trace();
    if (trace - 1.0).abs() > TRACE_TOL {
        return Err(Error::BadTrace { trace, limit: TRACE_TOL });
    }
    let pt = partial_transpose(rho, subsystem)?;
    let ev = hermitian_eigenvalues(&pt);
    if ev.iter().any(|x| !x.is_finite()) {
        return Err(Error::InvalidParameter {
            name: "partial transpose",
            reason: "eigenvalue solver returned a non-finite value".into(),
        });
    }
    let raw_norm: f64 = ev.iter().map(|x| x.abs()).sum();
    let tolerance = 1e-12 * rho.dim() as f64 * raw_norm.max(1.0);
    let negative = ev.iter().filter(|&&x| x < -tolerance).fold(0.0, |acc, x| acc - x);
    let numerical_rank = ev.iter().filter(|x| x.abs() > tolerance).count();
    // ‖ρ^T‖₁ = Tr ρ + 2 Σ|λ₋| with the trace pinned to one
    let trace_norm = 1.0 + 2.0 * negative;
    Ok(EntanglementResult {
        negativity: negative,
        log_negativity: trace_norm.log2(),
        min_pt_eigenvalue: ev.first().copied().unwrap_or(0.0),
        numerical_rank,
        tolerance,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::C64;
    use nalgebra::DMatrix;

    fn c(x: f64) -> C64 {
        C64::new(x, 0.0)
    }

    #[test]
    fn bell_state_has_half() {
        let h = std::f64::consts::FRAC_1_SQRT_2;
        let rho = DensityOperator::from_pure(&[c(h), c(0.0), c(0.0), c(h)], vec![2, 2]).unwrap();
        let e = negativity(&rho, 0).unwrap();
        assert!((e.negativity - 0.5).abs() < 1e-14);
        assert!((e.log_negativity - 1.0).abs() < 1e-14);
    }

    #[test]
    fn werner_threshold() {
        // p |Φ+⟩⟨Φ+| + (1−p) 1/4 is entangled iff p > 1/3, N = (3p − 1)/4
        for &p in &[0.2, 1.0 / 3.0, 0.6, 0.9] {
            let h = 0.5 * p;
            let mut m = DMatrix::from_element(4, 4, c(0.0));
            for i in 0..4 {
                m[(i, i)] = c((1.0 - p) / 4.0);
            }
            m[(0, 0)] += c(h);
            m[(3, 3)] += c(h);
            m[(0, 3)] = c(h);
            m[(3, 0)] = c(h);
            let rho = DensityOperator::new(m, vec![2, 2]).unwrap();
            let e = negativity(&rho, 1).unwrap();
            let expect = ((3.0 * p - 1.0) / 4.0).max(0.0);
            assert!((e.negativity - expect).abs() < 1e-13, "p={p}");
        }
    }

    #[test]
    fn rejects_unnormalized() {
        let rho = DensityOperator::new(DMatrix::from_element(2, 2, c(0.25)), vec![2]).unwrap();
        assert!(matches!(negativity(&rho, 0), Err(Error::BadTrace { .. })));
    }
}
