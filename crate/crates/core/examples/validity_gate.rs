//! How far the band-centre approximation can be trusted as the observer
//! accelerates harder, for a 1 GHz detector with Q = 500.
//!
//! cargo run --release --example validity_gate

use rindler_entanglement::engine::DetectorSpec;
use rindler_entanglement::squeezing::{acceleration_to_band, peaked_validity, AccelerationContext, ValidityVerdict};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let det = DetectorSpec::top_hat(1e9, 2e6)?;
    println!("Q = {}", det.quality_factor());
    println!("{:>10} {:>9} {:>10} {:>10}  verdict", "a [m/s^2]", "Omega", "dOmega", "ratio");
    for a_proper in [3e15, 1e16, 3e16, 1e17, 3e17, 3e18] {
        let band = acceleration_to_band(&det, &AccelerationContext::new(a_proper, 3e8)?);
        let ratio = peaked_validity(band.omega_det, band.delta_omega)?;
        println!(
            "{a_proper:>10.1e} {:>9.3} {:>10.4} {ratio:>10.3e}  {:?}",
            band.omega_det,
            band.delta_omega,
            ValidityVerdict::classify(ratio)
        );
    }
    Ok(())
}
