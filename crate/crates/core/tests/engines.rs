//! Cross-engine checks: the peaked assembly against the discretized oracle.

use rindler_entanglement::engine::{
    assemble_peaked, brute_force_reduced_state, capture_with_convention, BruteOptions, DetectorBand, DetectorShape,
    LConvention, ReducedState,
};
use rindler_entanglement::entanglement::negativity;
use rindler_entanglement::fock::trace_distance;
use rindler_entanglement::linalg::complete_unitary;
use rindler_entanglement::spectral::{gaussian_profile, sample_spread, Chirp, SpectralProfile};
use rindler_entanglement::squeezing::squeeze_param;
use rindler_entanglement::C64;

const A: f64 = 0.8e9;

fn photons() -> (SpectralProfile, SpectralProfile) {
    (
        gaussian_profile(1e9, 2e8, Chirp::None).unwrap(),
        gaussian_profile(1.2e9, 2e8, Chirp::Quadratic { rate: 0.4 }).unwrap(),
    )
}

fn amps() -> (C64, C64) {
    (C64::new(0.6, 0.0), C64::new(0.0, 0.8))
}

fn peaked(band: &DetectorBand, n_max: usize, conv: LConvention) -> ReducedState {
    let (x, y) = photons();
    let (p, q) = amps();
    let grid = band.grid(12, 20).unwrap();
    let up = capture_with_convention(&sample_spread(&x, A, &grid).unwrap(), band, conv).unwrap();
    let down = capture_with_convention(&sample_spread(&y, A, &grid).unwrap(), band, conv).unwrap();
    let r = squeeze_param(band.omega_det).unwrap();
    assemble_peaked(p, q, &up, &down, &r, n_max).unwrap()
}

fn brute(band: &DetectorBand, opts: &BruteOptions) -> ReducedState {
    let (x, y) = photons();
    let (p, q) = amps();
    brute_force_reduced_state(p, q, &x, &y, A, band, opts).unwrap().state
}

#[test]
fn single_bin_matches_at_strong_squeezing() {
    let band = DetectorBand::new(0.35, 0.3, DetectorShape::TopHat).unwrap();
    let opts = BruteOptions { bins: 1, n_max: 4, ..Default::default() };
    let d = trace_distance(&peaked(&band, 4, LConvention::Pinned).rho, &brute(&band, &opts).rho).unwrap();
    assert!(d < 1e-10, "distance {d:e}");
}

#[test]
fn constant_r_multi_bin_matches() {
    let band = DetectorBand::new(1.3, 0.6, DetectorShape::TopHat).unwrap();
    let a = peaked(&band, 4, LConvention::Pinned);
    for bins in [2, 3] {
        let opts = BruteOptions { bins, n_max: 4, constant_r: true, ..Default::default() };
        let d = trace_distance(&a.rho, &brute(&band, &opts).rho).unwrap();
        assert!(d < 1e-10, "m = {bins}: distance {d:e}");
    }
}

#[test]
fn conjugated_l_channel_is_caught() {
    let band = DetectorBand::new(1.5, 1.0, DetectorShape::TopHat).unwrap();
    let opts = BruteOptions { bins: 1, n_max: 4, ..Default::default() };
    let b = brute(&band, &opts);
    let good = trace_distance(&peaked(&band, 4, LConvention::Pinned).rho, &b.rho).unwrap();
    let bad = trace_distance(&peaked(&band, 4, LConvention::Conjugated).rho, &b.rho).unwrap();
    assert!(good < 1e-10, "pinned {good:e}");
    assert!(bad > 1e-3, "conjugated {bad:e}");
}

#[test]
fn region_two_perturbation_is_invisible() {
    let band = DetectorBand::new(1.0, 0.8, DetectorShape::TopHat).unwrap();
    let plain = BruteOptions { bins: 2, n_max: 3, ..Default::default() };
    let u = complete_unitary(&[C64::new(0.6, 0.3), C64::new(-0.2, 0.7)]).unwrap();
    let kicked = BruteOptions { region_ii_unitary: Some(u), ..plain.clone() };
    let d = trace_distance(&brute(&band, &plain).rho, &brute(&band, &kicked).rho).unwrap();
    assert!(d < 1e-12, "distance {d:e}");
}

#[test]
fn natural_r_variation_stays_within_validity_scale() {
    let band = DetectorBand::new(0.6, 0.1, DetectorShape::TopHat).unwrap();
    let ratio = rindler_entanglement::squeezing::peaked_validity(0.6, 0.1).unwrap();
    let a = peaked(&band, 4, LConvention::Pinned);
    let b = brute(&band, &BruteOptions { bins: 3, n_max: 4, ..Default::default() });
    let d = trace_distance(&a.rho, &b.rho).unwrap();
    println!("validity ratio {ratio:.4e}, distance {d:.4e}, C = {:.3}", d / ratio);
    assert!(d < ratio, "distance {d:e} vs ratio {ratio:e}");
}

#[test]
fn states_are_physical() {
    let band = DetectorBand::new(0.35, 0.3, DetectorShape::TopHat).unwrap();
    for s in
        [peaked(&band, 6, LConvention::Pinned), brute(&band, &BruteOptions { bins: 2, n_max: 3, ..Default::default() })]
    {
        s.rho.check_physical().unwrap();
        assert!((s.rho.trace() - 1.0).abs() < 1e-12);
        let e = negativity(&s.rho, 0).unwrap();
        assert!(e.negativity >= 0.0);
    }
}
