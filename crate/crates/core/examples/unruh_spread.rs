//! Re-expands a Gaussian photon in Unruh modes and prints where its weight
//! lands in the dimensionless Rindler frequency.
//!
//! cargo run --release --example unruh_spread

use rindler_entanglement::spectral::{
    auto_omega_grid, gaussian_profile, parseval_defect, sample_spread, Chirp, DEFAULT_OMEGA_NODES,
};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let photon = gaussian_profile(1e9, 1e7, Chirp::None)?;
    for a_proper in [3e16, 3e17, 3e18] {
        let a = a_proper / 3e8;
        let grid = auto_omega_grid(&photon, a, DEFAULT_OMEGA_NODES)?;
        let spread = sample_spread(&photon, a, &grid)?;
        // Omega below which half of the R-channel weight lies
        let total: f64 = spread.weights.iter().zip(&spread.x_r).map(|(w, x)| w * x.norm_sqr()).sum();
        let mut acc = 0.0;
        let median = spread
            .omega
            .iter()
            .zip(spread.weights.iter().zip(&spread.x_r))
            .find(|(_, (w, x))| {
                acc += *w * x.norm_sqr();
                acc >= 0.5 * total
            })
            .map_or(f64::NAN, |(&o, _)| o);
        println!(
            "a = {a_proper:.1e} m/s^2: window [0, {:.0}], median Omega of |X_R|^2 = {median:.1}, Parseval defect {:.1e}",
            spread.interval.1,
            parseval_defect(&spread)
        );
        println!("   {:>8} {:>12} {:>12}", "Omega", "|X_R|", "arg X_R");
        for target in [0.1, 1.0, 3.0, 10.0] {
            let k = spread.omega.iter().position(|&o| o >= target).unwrap_or(spread.len() - 1);
            println!("   {:>8.3} {:>12.4e} {:>12.4}", spread.omega[k], spread.x_r[k].norm(), spread.x_r[k].arg());
        }
    }
    Ok(())
}
