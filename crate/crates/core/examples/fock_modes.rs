//! Sparse multimode Fock kets: a passive rotation, a ladder operator that
//! runs into the cutoff, and the partial trace of a squeezed pair.
//!
//! cargo run --release --example fock_modes

use std::sync::Arc;

use nalgebra::DMatrix;
use rindler_entanglement::fock::{
    fock_lift_rotation, partial_trace, Helicity, ModeLabel, ModeRole, ModeSet, Region, SparseKet,
};
use rindler_entanglement::squeezing::{squeeze_param, tmsv_vacuum_coeffs};
use rindler_entanglement::C64;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let c = |x: f64| C64::new(x, 0.0);
    let bins = |n| (0..n).map(|j| ModeLabel::new(Region::I, Helicity::Up, ModeRole::Bin(j))).collect();

    // |1,1> through a balanced splitter: both photons leave together
    let modes = Arc::new(ModeSet::new(bins(2), 2)?);
    let ket = SparseKet::from_amplitudes(modes, [(vec![1, 1], c(1.0))])?;
    let h = std::f64::consts::FRAC_1_SQRT_2;
    let split = DMatrix::from_row_slice(2, 2, &[c(h), c(h), c(h), c(-h)]);
    println!("splitter on |1,1>:");
    for (occ, amp) in fock_lift_rotation(&ket, &[0, 1], &split)?.iter() {
        println!("  {occ:?}  {amp:.4}");
    }

    // a† applied past the cutoff is not silently dropped
    let modes = Arc::new(ModeSet::new(bins(1), 2)?);
    let top = SparseKet::from_amplitudes(modes, [(vec![2], c(1.0))])?.apply_creation(0)?;
    println!("a† on |2> with cutoff 2: kept norm {}, truncation loss {}", top.norm_sq(), top.truncation_loss());

    // tracing one arm of the squeezed vacuum leaves a thermal ladder
    let sp = squeeze_param(0.3)?;
    let n = 10;
    let labels = vec![
        ModeLabel::new(Region::I, Helicity::Up, ModeRole::Detector),
        ModeLabel::new(Region::II, Helicity::Up, ModeRole::Detector),
    ];
    let pair = Arc::new(ModeSet::new(labels, n)?);
    let amps = tmsv_vacuum_coeffs(&sp, n).into_iter().enumerate().map(|(k, a)| (vec![k, k], c(a)));
    let rho = partial_trace(&SparseKet::from_amplitudes(pair, amps)?, &[0])?;
    let x = sp.tanh().powi(2);
    println!("thermal populations at Omega = 0.3 (x = tanh^2 r = {x:.4}):");
    for k in 0..5 {
        println!("  p({k}) = {:.6e}   (1-x) x^k = {:.6e}", rho.matrix()[(k, k)].re, (1.0 - x) * x.powi(k as i32));
    }
    Ok(())
}
