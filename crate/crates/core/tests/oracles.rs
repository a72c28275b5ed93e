//! Dense-matrix oracles for the squeezing expansions, the pair blocks and
//! the sparse Fock kernel.

use std::sync::Arc;

use nalgebra::{DMatrix, DVector};
use rindler_entanglement::engine::{pair_block, PairState};
use rindler_entanglement::fock::{
    cross_reduced, fock_lift_rotation, DensityOperator, Helicity, ModeLabel, ModeRole, ModeSet, Region, SparseKet,
};
use rindler_entanglement::squeezing::{
    squeeze_param, tmsv_excitation_coeffs, tmsv_vacuum_coeffs, truncation_tail, ExcitationKind, SqueezeParam,
};
use rindler_entanglement::C64;

/// Cutoff of the dense squeeze oracle; far beyond any coefficient compared.
const K: usize = 160;

fn c(x: f64) -> C64 {
    C64::new(x, 0.0)
}

/// `exp(r (a†b† − ab)) |k₀ + s, k₀⟩` for `s = n_I − n_II ≥ 0`, or the mirror for
/// `s < 0`. The generator conserves `n_I − n_II`, so the sector spanned by
/// `|k + s, k⟩` (or `|k, k + |s|⟩`) is exponentiated as a dense matrix.
/// Returns amplitudes on `k = 0..K`.
fn dense_squeeze(r: f64, shift: i32) -> Vec<f64> {
    let s = shift.unsigned_abs() as usize;
    // ⟨k+1| a†b† |k⟩ in the sector
    let mut g = DMatrix::<f64>::zeros(K, K);
    for k in 0..K - 1 {
        let up = (((k + s + 1) * (k + 1)) as f64).sqrt();
        g[(k + 1, k)] = up * r;
        g[(k, k + 1)] = -up * r;
    }
    let e = g.exp();
    (0..K).map(|k| e[(k, 0)]).collect()
}

#[test]
fn vacuum_expansion_matches_dense_exponential() {
    for &r in &[0.043_240_848_283_570_18, 0.3, 0.7, 1.0] {
        let dense = dense_squeeze(r, 0);
        let v = tmsv_vacuum_coeffs(&SqueezeParam::from_r(r).unwrap(), 8);
        for (n, vn) in v.iter().enumerate() {
            assert!((vn - dense[n]).abs() < 1e-9, "r={r} n={n}: {vn} vs {}", dense[n]);
        }
    }
}

#[test]
fn excitation_expansions_match_dense_exponential() {
    // r at Omega = 1 and n_max = 6, then the whole r <= 1, n_max <= 8 range
    let mut cases = vec![(squeeze_param(1.0).unwrap().r, 6)];
    cases.extend([(0.2, 8), (0.6, 5), (1.0, 8)]);
    for (r, n_max) in cases {
        let sp = SqueezeParam::from_r(r).unwrap();
        for (kind, shift) in [(ExcitationKind::R, 1), (ExcitationKind::L, -1)] {
            let dense = dense_squeeze(r, shift);
            for (n, term) in tmsv_excitation_coeffs(kind, &sp, n_max).iter().enumerate() {
                assert!((term.amp - dense[n]).abs() < 1e-9, "{kind:?} r={r} n={n}");
            }
        }
    }
}

#[test]
fn truncation_tail_matches_direct_summation() {
    let sp = SqueezeParam::from_r(0.9297).unwrap();
    let v = tmsv_vacuum_coeffs(&sp, 4000);
    let discarded: f64 = v[16..].iter().rev().map(|x| x * x).sum();
    assert!((truncation_tail(&sp, 15).vacuum - discarded).abs() < 1e-12);
}

/// Dense pair state on `{0..=n}²` (index `i·(n+1) + ii`), restricted from the
/// dense squeeze oracle.
fn dense_pair(state: PairState, r: f64, n: usize) -> DVector<C64> {
    let d = n + 1;
    let mut out = DVector::zeros(d * d);
    let shift = match state {
        PairState::Vac => 0,
        PairState::R1 => 1,
        PairState::L1 => -1,
    };
    for (k, amp) in dense_squeeze(r, shift).into_iter().enumerate() {
        let (i, ii) = (k + (shift == 1) as usize, k + (shift == -1) as usize);
        if i <= n && ii <= n {
            out[i * d + ii] = c(amp);
        }
    }
    out
}

#[test]
fn pair_blocks_match_dense_partial_trace() {
    let states = [PairState::Vac, PairState::R1, PairState::L1];
    for (r, n) in [(squeeze_param(1.0).unwrap().r, 6), (0.5, 5), (0.93, 7)] {
        let sp = SqueezeParam::from_r(r).unwrap();
        for &x in &states {
            for &y in &states {
                let outer = dense_pair(x, r, n) * dense_pair(y, r, n).adjoint();
                // trace region II by hand
                let d = n + 1;
                let dense = DMatrix::from_fn(d, d, |i, j| (0..d).map(|k| outer[(i * d + k, j * d + k)]).sum::<C64>());
                let fast = pair_block(x, y, &sp, n);
                assert!((fast - dense).norm() < 1e-10, "{x:?},{y:?} r={r} n={n}");
            }
        }
    }
}

#[test]
fn l_excitation_has_a_vacuum_cross_block() {
    // Tr_II |L1⟩⟨Vac| pairs |n⟩_I|n+1⟩_II with |n+1⟩_I|n+1⟩_II, so it is not zero
    let sp = SqueezeParam::from_r(0.5).unwrap();
    let b = pair_block(PairState::L1, PairState::Vac, &sp, 4);
    assert!(b.norm() > 0.1);
    for i in 0..5 {
        for j in 0..5 {
            assert_eq!(b[(i, j)] != c(0.0), j == i + 1, "({i},{j})");
        }
    }
}

fn mode_set(cutoffs: &[usize]) -> Arc<ModeSet> {
    let labels = (0..cutoffs.len()).map(|j| ModeLabel::new(Region::I, Helicity::Up, ModeRole::Bin(j))).collect();
    Arc::new(ModeSet::with_cutoffs(labels, cutoffs.to_vec()).unwrap())
}

fn dense_of(ket: &SparseKet, cutoffs: &[usize]) -> DVector<C64> {
    let dims: Vec<usize> = cutoffs.iter().map(|c| c + 1).collect();
    let mut v = DVector::zeros(dims.iter().product());
    for (occ, amp) in ket.iter() {
        let idx = occ.iter().zip(&dims).fold(0, |acc, (&n, &d)| acc * d + n);
        v[idx] = amp;
    }
    v
}

#[test]
fn cross_reduction_matches_dense_partial_trace() {
    let cut = [2, 3, 2];
    let set = mode_set(&cut);
    let entries = |seed: f64| {
        let mut out = Vec::new();
        for a in 0..=2 {
            for b in 0..=3 {
                for d in 0..=2 {
                    let x = seed * (1 + a + 2 * b + 3 * d) as f64;
                    out.push((vec![a, b, d], C64::new(x.sin(), (1.7 * x).cos())));
                }
            }
        }
        out
    };
    let psi = SparseKet::from_amplitudes(set.clone(), entries(0.37)).unwrap();
    let phi = SparseKet::from_amplitudes(set, entries(0.91)).unwrap();
    let (dp, df) = (dense_of(&psi, &cut), dense_of(&phi, &cut));
    let outer = &dp * df.adjoint();
    // Hermitian part is enough to go through DensityOperator; check both halves
    let herm = (&outer + outer.adjoint()) * c(0.5);
    let anti = (&outer - outer.adjoint()) * C64::new(0.0, -0.5);
    for keep in [vec![0], vec![1], vec![2, 0], vec![1, 2]] {
        let dims = vec![3, 4, 3];
        let h = DensityOperator::new(herm.clone(), dims.clone()).unwrap().partial_trace(&keep).unwrap();
        let a = DensityOperator::new(anti.clone(), dims).unwrap().partial_trace(&keep).unwrap();
        let dense = h.matrix() + a.matrix() * C64::new(0.0, 1.0);
        let fast = cross_reduced(&psi, &phi, &keep).unwrap();
        assert!((fast - dense).norm() < 1e-12, "keep {keep:?}");
    }
}

#[test]
fn beam_splitter_bunches_two_photons() {
    let set = mode_set(&[2, 2]);
    let ket = SparseKet::from_amplitudes(set, [(vec![1, 1], c(1.0))]).unwrap();
    let h = std::f64::consts::FRAC_1_SQRT_2;
    let u = DMatrix::from_row_slice(2, 2, &[c(h), c(h), c(h), c(-h)]);
    let out = fock_lift_rotation(&ket, &[0, 1], &u).unwrap();
    assert!((out.amplitude(&[2, 0]) - c(h)).norm() < 1e-15);
    assert!((out.amplitude(&[0, 2]) - c(-h)).norm() < 1e-15);
    assert!(out.amplitude(&[1, 1]).norm() < 1e-15);
    assert_eq!(out.truncation_loss(), 0.0);
}

#[test]
fn creation_matches_dense_ladder_matrix() {
    let cut = [3, 2];
    let set = mode_set(&cut);
    let ket = SparseKet::from_amplitudes(
        set,
        [(vec![0, 0], c(0.5)), (vec![2, 1], C64::new(0.1, 0.7)), (vec![3, 0], c(-0.4))],
    )
    .unwrap();
    // a†_0 ⊗ 1 on the 4×3 space, with the |4⟩ row cut away
    let mut adag = DMatrix::<C64>::zeros(4, 4);
    for n in 0..3 {
        adag[(n + 1, n)] = c(((n + 1) as f64).sqrt());
    }
    let op = adag.kronecker(&DMatrix::identity(3, 3));
    let dense = &op * dense_of(&ket, &cut);
    let fast = ket.apply_creation(0).unwrap();
    assert!((dense_of(&fast, &cut) - &dense).norm() < 1e-14);
    // |3,0⟩ → 2|4,0⟩ falls outside the cutoff
    assert!((fast.truncation_loss() - 4.0 * 0.16).abs() < 1e-14);
    assert!((fast.norm_sq() + fast.truncation_loss() - dense.norm_squared() - 0.64).abs() < 1e-14);
}
