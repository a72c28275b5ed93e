//! Negativity of textbook two-qubit states: the Bell pair and the Werner
//! family, whose threshold sits at p = 1/3.
//!
//! cargo run --release --example negativity_basics

use nalgebra::DMatrix;
use rindler_entanglement::entanglement::negativity;
use rindler_entanglement::fock::DensityOperator;
use rindler_entanglement::C64;

fn werner(p: f64) -> Result<DensityOperator, Box<dyn std::error::Error>> {
    let mut m = DMatrix::<C64>::identity(4, 4) * C64::new((1.0 - p) / 4.0, 0.0);
    for i in [0, 3] {
        for j in [0, 3] {
            m[(i, j)] += C64::new(p / 2.0, 0.0);
        }
    }
    Ok(DensityOperator::new(m, vec![2, 2])?)
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    println!("{:>6} {:>10} {:>10} {:>12}", "p", "N", "(3p-1)/4", "E_N");
    for p in [0.0, 0.2, 1.0 / 3.0, 0.5, 0.8, 1.0] {
        let e = negativity(&werner(p)?, 0)?;
        println!(
            "{p:>6.3} {:>10.6} {:>10.6} {:>12.6}",
            e.negativity,
            ((3.0 * p - 1.0) / 4.0).max(0.0),
            e.log_negativity
        );
    }
    Ok(())
}
