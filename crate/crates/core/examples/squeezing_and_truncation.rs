//! Squeezing parameter, two-mode squeezed vacuum amplitudes and the Fock
//! cutoff needed to keep the discarded weight small.
//!
//! cargo run --release --example squeezing_and_truncation

use rindler_entanglement::squeezing::{
    required_n_max, squeeze_param, tmsv_excitation_coeffs, tmsv_vacuum_coeffs, truncation_tail, ExcitationKind,
};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    println!("{:>7} {:>12} {:>12} {:>12} {:>6}", "Omega", "r", "sinh^2 r", "tail(15)", "n(1e-8)");
    for omega in [0.1, 0.3, 1.0, 3.0, 10.0] {
        let sp = squeeze_param(omega)?;
        println!(
            "{omega:>7} {:>12.6e} {:>12.6e} {:>12.3e} {:>6}",
            sp.r,
            sp.sinh().powi(2),
            truncation_tail(&sp, 15).max(),
            required_n_max(&sp, 1e-8, 4, 200)
        );
    }

    let sp = squeeze_param(0.3)?;
    println!("\nOmega = 0.3: vacuum and one-particle amplitudes");
    let vac = tmsv_vacuum_coeffs(&sp, 6);
    let ex = tmsv_excitation_coeffs(ExcitationKind::R, &sp, 6);
    for (n, v) in vac.iter().enumerate() {
        let e = ex.get(n).map(|t| format!("{:.6} on |{},{}>", t.amp, t.occ_i, t.occ_ii)).unwrap_or_default();
        println!("  n = {n}: {v:.6} on |{n},{n}>   {e}");
    }
    Ok(())
}
