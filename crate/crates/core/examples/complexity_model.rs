//! Predicted and measured cost of the brute-force engine as the detector
//! band is cut into more bins.
//!
//! cargo run --release --example complexity_model

use rindler_entanglement::cli::oracle_report;
use rindler_entanglement::config::ScenarioConfig;
use rindler_entanglement::engine::{complexity_estimate, fit_exponential};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    println!("{:>3} {:>3} {:>12} {:>12} {:>12}", "m", "n", "basis", "operations", "a(n)^m");
    for n in [2, 3, 4] {
        for m in 1..=4 {
            let c = complexity_estimate(m, n)?;
            println!("{m:>3} {n:>3} {:>12.3e} {:>12.3e} {:>12.3e}", c.basis_size, c.operation_count, c.witness);
        }
    }

    let cfg = ScenarioConfig::load("configs/oracle.toml".as_ref())?;
    let report = oracle_report(&cfg, false)?;
    let ms: Vec<f64> = report.timing.iter().map(|t| t.cost.bins as f64).collect();
    let ts: Vec<f64> = report.timing.iter().map(|t| t.seconds).collect();
    for t in &report.timing {
        println!("measured m = {}, n = {}: {:.3e} s", t.cost.bins, t.cost.n_max, t.seconds);
    }
    let (base, _) = fit_exponential(&ms, &ts)?;
    println!("fitted growth per extra bin: {base:.1}");
    Ok(())
}
