//! Peaked-detector assembly: `r` is frozen at the band centre, so the photon
//! enters the detector mode only through its two capture amplitudes.

use nalgebra::DMatrix;

use super::{assemble, pair_block, CaptureAmplitudes, PairState, ReducedState, SectorBlocks};
use crate::error::Result;
use crate::squeezing::SqueezeParam;
use crate::C64;

/// Sector blocks for a photon with capture `cap`.
///
/// The part of the photon outside the detector mode sits in modes that are
/// traced out; orthogonality of those single-excitation sectors leaves only
/// `w_env` times the thermal block.
pub fn peaked_blocks(cap: &CaptureAmplitudes, r: &SqueezeParam, n_max: usize) -> SectorBlocks {
    use PairState::*;
    let b = |x, y| pair_block(x, y, r, n_max);
    let amps = [(R1, cap.eps_r), (L1, cap.eps_l)];
    let vacuum = b(Vac, Vac);

    let mut photon = &vacuum * C64::new(cap.w_env, 0.0);
    let mut cross = DMatrix::zeros(n_max + 1, n_max + 1);
    for &(x, ex) in &amps {
        cross += b(x, Vac) * ex;
        for &(y, ey) in &amps {
            photon += b(x, y) * (ex * ey.conj());
        }
    }
    SectorBlocks { photon, vacuum, cross }
}

/// Engine A: the reduced state on `Alice ⊗ d↑ ⊗ d↓` from the capture of each
/// photon (`up` for `x↑`, `down` for `y↓`).
pub fn assemble_peaked(
    p: C64,
    q: C64,
    up: &CaptureAmplitudes,
    down: &CaptureAmplitudes,
    r: &SqueezeParam,
    n_max: usize,
) -> Result<ReducedState> {
    assemble(p, q, &peaked_blocks(up, r, n_max), &peaked_blocks(down, r, n_max))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::entanglement::negativity;

    fn c(x: f64) -> C64 {
        C64::new(x, 0.0)
    }

    #[test]
    fn perfect_capture_without_squeezing_is_a_bell_pair() {
        let r = SqueezeParam::from_r(0.0).unwrap();
        let cap = CaptureAmplitudes::new(c(1.0), c(0.0)).unwrap();
        let h = std::f64::consts::FRAC_1_SQRT_2;
        let s = assemble_peaked(c(h), c(h), &cap, &cap, &r, 3).unwrap();
        let e = negativity(&s.rho, 0).unwrap();
        assert!((e.negativity - 0.5).abs() < 1e-14);
    }

    #[test]
    fn no_capture_means_no_coherence() {
        let r = SqueezeParam::from_r(0.7).unwrap();
        let h = std::f64::consts::FRAC_1_SQRT_2;
        let s = assemble_peaked(c(h), c(h), &CaptureAmplitudes::none(), &CaptureAmplitudes::none(), &r, 8).unwrap();
        let m = s.rho.matrix();
        let k = 81;
        assert!(m.view((0, k), (k, k)).iter().all(|z| *z == c(0.0)));
        assert_eq!(negativity(&s.rho, 0).unwrap().negativity, 0.0);
    }
}
