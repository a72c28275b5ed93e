//! Negativity at fixed detector capture as the squeezing grows. Holding the
//! captured weight fixed isolates the effect of the Unruh squeeze from the
//! shrinking overlap between photon and detector.
//!
//! cargo run --release --example fixed_capture

use rindler_entanglement::engine::{assemble_peaked, CaptureAmplitudes};
use rindler_entanglement::entanglement::negativity;
use rindler_entanglement::squeezing::{required_n_max, squeeze_param};
use rindler_entanglement::C64;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let h = C64::new(std::f64::consts::FRAC_1_SQRT_2, 0.0);
    println!("{:>7} {:>9} {:>4}   N for |eps|^2 = 1.0, 0.5, 0.1 (80% in the R channel)", "Omega", "r", "n");
    for omega in [3.0, 1.5, 1.0, 0.8, 0.7, 0.6, 0.5, 0.4, 0.3, 0.2] {
        let sp = squeeze_param(omega)?;
        let n = required_n_max(&sp, 1e-10, 6, 60);
        let mut cells = Vec::new();
        for captured in [1.0f64, 0.5, 0.1] {
            let cap =
                CaptureAmplitudes::new(C64::new((0.8 * captured).sqrt(), 0.0), C64::new((0.2 * captured).sqrt(), 0.0))?;
            let state = assemble_peaked(h, h, &cap, &cap, &sp, n)?;
            cells.push(format!("{:.4e}", negativity(&state.rho, 0)?.negativity));
        }
        println!("{omega:>7} {:>9.5} {n:>4}   {}", sp.r, cells.join("  "));
    }
    Ok(())
}
