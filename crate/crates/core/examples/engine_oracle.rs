//! Runs the peaked assembly and the discretized brute-force engine side by
//! side on the oracle scenario and prints their trace distance per bin count.
//!
//! cargo run --release --example engine_oracle

use rindler_entanglement::cli::oracle_report;
use rindler_entanglement::config::ScenarioConfig;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let path = std::env::args().nth(1).unwrap_or_else(|| "configs/oracle.toml".into());
    let cfg = ScenarioConfig::load(path.as_ref())?;
    for tamper in [false, true] {
        let report = oracle_report(&cfg, tamper)?;
        let label = if tamper { "with the L channel conjugated" } else { "as built" };
        println!("Omega_det = {:.3}, {label}:", report.omega_det);
        for row in &report.rows {
            println!(
                "  m = {} (n = {}, constant r = {}): distance {:.3e}",
                row.bins, row.n_max, row.constant_r, row.distance
            );
        }
    }
    Ok(())
}
