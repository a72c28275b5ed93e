use nalgebra::DMatrix;
use serde::{Deserialize, Serialize};

use crate::squeezing::{tmsv_excitation_coeffs, tmsv_vacuum_coeffs, ExcitationKind, PairAmplitude, SqueezeParam};
use crate::C64;

/// State of one squeezed `(I, II)` pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum PairState {
    Vac,
    R1,
    L1,
}

impl PairState {
    fn expansion(self, r: &SqueezeParam, n_max: usize) -> Vec<PairAmplitude> {
        match self {
            PairState::Vac => tmsv_vacuum_coeffs(r, n_max)
                .into_iter()
                .enumerate()
                .map(|(n, amp)| PairAmplitude { occ_i: n, occ_ii: n, amp })
                .collect(),
            PairState::R1 => tmsv_excitation_coeffs(ExcitationKind::R, r, n_max),
            PairState::L1 => tmsv_excitation_coeffs(ExcitationKind::L, r, n_max),
        }
    }
}

/// `Tr_II |left⟩⟨right|` on the region-I Fock space `{0..=n_max}`.
///
/// With `vₙ = tⁿ/cosh r`, `cₙ = √(n+1) tⁿ/cosh² r` and `N = n_max`:
///
/// ```text
/// (Vac, Vac) = Σ_{n≤N}   vₙ²         |n⟩⟨n|
/// (R1,  Vac) = Σ_{n<N}   cₙ vₙ       |n+1⟩⟨n|
/// (L1,  Vac) = Σ_{n<N}   cₙ vₙ₊₁     |n⟩⟨n+1|
/// (R1,  R1)  = Σ_{n<N}   cₙ²         |n+1⟩⟨n+1|
/// (L1,  L1)  = Σ_{n<N}   cₙ²         |n⟩⟨n|
/// (R1,  L1)  = Σ_{n<N−1} cₙ₊₁ cₙ     |n+2⟩⟨n|
/// ```
///
/// and `(Y, X) = (X, Y)†`. The L excitation leaves region II one quantum
/// ahead, so `(L1, Vac)` pairs `|n⟩_I|n+1⟩_II` with the vacuum term
/// `|n+1⟩_I|n+1⟩_II` and lowers the region-I occupation.
pub fn pair_block(left: PairState, right: PairState, r: &SqueezeParam, n_max: usize) -> DMatrix<C64> {
    let d = n_max + 1;
    let lhs = left.expansion(r, n_max);
    let rhs = right.expansion(r, n_max);
    let mut out = DMatrix::zeros(d, d);
    for x in &lhs {
        for y in rhs.iter().filter(|y| y.occ_ii == x.occ_ii) {
            out[(x.occ_i, y.occ_i)] += C64::new(x.amp * y.amp, 0.0);
        }
    }
    out
}
