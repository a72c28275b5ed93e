use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::config::ScenarioConfig;
use crate::error::{Error, Result};

pub const TOOL: &str = env!("CARGO_PKG_NAME");
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

/// Per-point numerical audit.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PointDiagnostics {
    pub a_proper_m_per_s2: f64,
    pub validity_ratio: Option<f64>,
    pub n_max: Option<usize>,
    pub trunc_loss: Option<f64>,
    pub parseval_defect: Option<f64>,
    pub error: Option<String>,
}

/// Everything needed to reproduce an output file. Wall-clock timings are
/// kept out of it (they go to a separate file) so that identical inputs give
/// byte-identical manifests.
#[derive(Debug, Clone, Serialize)]
pub struct RunManifest {
    pub tool: &'static str,
    pub version: &'static str,
    pub command: String,
    /// Command-line overrides applied on top of the config file.
    pub options: serde_json::Value,
    pub units: &'static str,
    pub config: ScenarioConfig,
    /// SHA-256 over everything above.
    pub hash: String,
    pub points: Vec<PointDiagnostics>,
}

const UNITS: &str =
    "angular frequencies in rad/s (1 GHz read as 1e9 rad/s); Rindler frequencies in 1/s; accelerations in m/s^2";

impl RunManifest {
    pub fn new(command: &str, options: serde_json::Value, config: &ScenarioConfig) -> Result<Self> {
        let inputs = serde_json::json!({
            "tool": TOOL,
            "version": VERSION,
            "command": command,
            "options": options,
            "units": UNITS,
            "config": config,
        });
        let bytes = serde_json::to_vec(&inputs).map_err(|e| Error::Config(e.to_string()))?;
        let hash = hex::encode(Sha256::digest(&bytes));
        Ok(Self {
            tool: TOOL,
            version: VERSION,
            command: command.to_string(),
            options,
            units: UNITS,
            config: config.clone(),
            hash,
            points: Vec::new(),
        })
    }

    pub fn to_json(&self) -> Result<String> {
        serde_json::to_string_pretty(self).map(|s| s + "\n").map_err(|e| Error::Config(e.to_string()))
    }
}
