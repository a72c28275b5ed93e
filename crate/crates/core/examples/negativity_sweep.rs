//! Negativity against proper acceleration for a scenario file
//! (default `configs/paper.toml`).
//!
//! cargo run --release --example negativity_sweep -- configs/paper.toml

use std::path::PathBuf;

use rindler_entanglement::config::ScenarioConfig;
use rindler_entanglement::engine::{sweep_negativity, EngineChoice};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let path = std::env::args().nth(1).map(PathBuf::from).unwrap_or_else(|| "configs/paper.toml".into());
    let cfg = ScenarioConfig::load(&path)?;
    let scn = cfg.scenario()?;
    let result = sweep_negativity(&scn, &cfg.sweep_accels()?, &EngineChoice::Peaked);

    println!(
        "{:>12} {:>9} {:>9} {:>11} {:>11} {:>4} {:>11}",
        "a [m/s^2]", "Omega", "r", "|eps_R|^2", "N", "n", "validity"
    );
    for p in &result.points {
        match &p.outcome {
            Ok(pt) => println!(
                "{:>12.4e} {:>9.4} {:>9.5} {:>11.4e} {:>11.4e} {:>4} {:>11.4e}",
                p.a_proper,
                pt.omega_det,
                pt.r,
                pt.capture_up.eps_r.norm_sqr(),
                pt.entanglement.negativity,
                pt.n_max,
                pt.validity_ratio
            ),
            Err(e) => println!("{:>12.4e} failed: {e}", p.a_proper),
        }
    }
    Ok(())
}
