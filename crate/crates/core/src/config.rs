//! Scenario files.
//!
//! Every physical number carries its unit in the key name. Angular
//! frequencies are in rad/s (a figure quoted in "GHz" means 10⁹ rad/s),
//! Rindler frequencies in 1/s and accelerations in m/s². Numerical settings
//! have defaults; the resolved values are echoed into every run manifest.
//!
//! ```toml
//! [state]
//! p_re = 0.7071067811865476
//! q_re = 0.7071067811865476
//!
//! [state.x]
//! omega0_rad_per_s = 1e9
//! sigma_rad_per_s = 1e7
//!
//! [state.y]
//! omega0_rad_per_s = 1e9
//! sigma_rad_per_s = 1e7
//!
//! [detector]
//! center_per_s = 1e9
//! width_per_s = 2e6
//!
//! [accel]
//! c_m_per_s = 3e8
//!
//! [sweep]
//! a_min_m_per_s2 = 3e16
//! a_max_m_per_s2 = 3e18
//! ```

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::engine::{BruteOptions, DetectorShape, DetectorSpec, LConvention, Scenario, StateSpec};
use crate::error::{Error, Result};
use crate::spectral::{gaussian_profile, Chirp, DEFAULT_OMEGA_NODES};
use crate::squeezing::TruncationConfig;
use crate::C64;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScenarioConfig {
    pub state: StateSection,
    pub detector: DetectorSection,
    pub accel: AccelSection,
    pub sweep: SweepSection,
    #[serde(default)]
    pub truncation: TruncationSection,
    #[serde(default)]
    pub grid: GridSection,
    #[serde(default)]
    pub engine: EngineSection,
    #[serde(default)]
    pub oracle: OracleSection,
    #[serde(default)]
    pub spread: SpreadSection,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StateSection {
    #[serde(default)]
    pub p_re: f64,
    #[serde(default)]
    pub p_im: f64,
    #[serde(default)]
    pub q_re: f64,
    #[serde(default)]
    pub q_im: f64,
    pub x: ProfileSection,
    pub y: ProfileSection,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProfileSection {
    pub omega0_rad_per_s: f64,
    pub sigma_rad_per_s: f64,
    #[serde(default)]
    pub chirp: Chirp,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DetectorSection {
    pub center_per_s: f64,
    pub width_per_s: f64,
    #[serde(default)]
    pub shape: DetectorShape,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AccelSection {
    pub c_m_per_s: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SweepSection {
    pub a_min_m_per_s2: f64,
    pub a_max_m_per_s2: f64,
    #[serde(default = "default_points")]
    pub points: usize,
}

fn default_points() -> usize {
    50
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct TruncationSection {
    pub n_max: usize,
    pub n_max_cap: usize,
    pub tail_tol: f64,
}

impl Default for TruncationSection {
    fn default() -> Self {
        Self { n_max: 15, n_max_cap: 60, tail_tol: 1e-8 }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct GridSection {
    pub omega_nodes: usize,
    pub band_panels: usize,
    pub band_order: usize,
    pub parseval_diagnostics: bool,
}

impl Default for GridSection {
    fn default() -> Self {
        Self { omega_nodes: DEFAULT_OMEGA_NODES, band_panels: 12, band_order: 20, parseval_diagnostics: true }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "kebab-case")]
pub enum EngineKind {
    #[default]
    Peaked,
    Brute,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize, Default)]
#[serde(deny_unknown_fields, default)]
pub struct EngineSection {
    pub kind: EngineKind,
    /// Run the peaked engine past a failed validity gate.
    pub allow_invalid: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct OracleSection {
    /// Acceleration at which the engines are compared; the sweep's lower end
    /// when absent.
    pub a_proper_m_per_s2: Option<f64>,
    pub bins: Vec<usize>,
    pub n_max: usize,
    /// Constant `r` across bins for `m > 1`.
    pub constant_r: bool,
    pub tolerance: f64,
    pub budget_ops: f64,
    pub panels_per_bin: usize,
    /// Cutoff used for the runtime scaling table.
    pub timing_n_max: usize,
    pub timing_repeats: usize,
}

impl Default for OracleSection {
    fn default() -> Self {
        Self {
            a_proper_m_per_s2: None,
            bins: vec![1, 2, 3],
            n_max: 4,
            constant_r: true,
            tolerance: 1e-10,
            budget_ops: 1e9,
            panels_per_bin: 4,
            timing_n_max: 3,
            timing_repeats: 5,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct SpreadSection {
    /// Accelerations at which full profiles are written.
    pub profile_accels_m_per_s2: Vec<f64>,
}

impl Default for SpreadSection {
    fn default() -> Self {
        Self { profile_accels_m_per_s2: vec![3e17] }
    }
}

impl ScenarioConfig {
    pub fn from_toml_str(text: &str) -> Result<Self> {
        toml::from_str(text).map_err(|e| Error::Config(e.to_string()))
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::Config(format!("{}: {e}", path.display())))?;
        Self::from_toml_str(&text).map_err(|e| match e {
            Error::Config(m) => Error::Config(format!("{}: {m}", path.display())),
            other => other,
        })
    }

    /// Serialized form with every default filled in.
    pub fn to_toml_string(&self) -> Result<String> {
        toml::to_string(self).map_err(|e| Error::Config(e.to_string()))
    }

    pub fn detector(&self) -> Result<DetectorSpec> {
        DetectorSpec::new(self.detector.center_per_s, self.detector.width_per_s, self.detector.shape)
    }

    pub fn state(&self) -> Result<StateSpec> {
        let s = &self.state;
        let prof = |p: &ProfileSection| gaussian_profile(p.omega0_rad_per_s, p.sigma_rad_per_s, p.chirp);
        StateSpec::new(C64::new(s.p_re, s.p_im), C64::new(s.q_re, s.q_im), prof(&s.x)?, prof(&s.y)?)
    }

    pub fn scenario(&self) -> Result<Scenario> {
        let t = &self.truncation;
        Ok(Scenario {
            state: self.state()?,
            detector: self.detector()?,
            speed_of_light: self.accel.c_m_per_s,
            truncation: TruncationConfig::new(t.n_max, t.tail_tol)?,
            n_max_cap: t.n_max_cap.max(t.n_max),
            band_panels: self.grid.band_panels,
            band_order: self.grid.band_order,
            omega_nodes: self.grid.omega_nodes,
            parseval_diagnostics: self.grid.parseval_diagnostics,
            allow_invalid: self.engine.allow_invalid,
            l_convention: LConvention::Pinned,
        })
    }

    pub fn brute_options(&self, bins: usize, n_max: usize) -> BruteOptions {
        BruteOptions {
            bins,
            n_max,
            constant_r: self.oracle.constant_r,
            region_ii_unitary: None,
            budget: self.oracle.budget_ops,
            panels_per_bin: self.oracle.panels_per_bin,
            quad_order: self.grid.band_order,
        }
    }

    pub fn sweep_accels(&self) -> Result<Vec<f64>> {
        crate::engine::log_spaced(self.sweep.a_min_m_per_s2, self.sweep.a_max_m_per_s2, self.sweep.points)
    }
}
