use std::fs;
use std::path::Path;
use std::time::Instant;

use serde::Serialize;

use super::manifest::{PointDiagnostics, RunManifest};
use super::table::Table;
use super::{EngineArg, Exit, SWEEP_COLUMNS};
use crate::config::{EngineKind, ScenarioConfig};
use crate::engine::{
    assemble_peaked, bin_band, brute_force_reduced_state, capture_with_convention, complexity_estimate,
    fit_exponential, reduce_binned, spread_report, sweep_negativity, CostRecord, EngineChoice, LConvention,
};
use crate::error::{Error, Result};
use crate::fock::trace_distance;
use crate::spectral::sample_spread;
use crate::squeezing::{peaked_validity, squeeze_param, AccelerationContext, ValidityVerdict};

fn io_err(path: &Path, e: std::io::Error) -> Error {
    Error::Config(format!("{}: {e}", path.display()))
}

fn write(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).map_err(|e| io_err(path, e))
}

fn prepare_dir(dir: &Path) -> Result<()> {
    fs::create_dir_all(dir).map_err(|e| io_err(dir, e))
}

fn with_points(mut cfg: ScenarioConfig, points: Option<usize>) -> ScenarioConfig {
    if let Some(n) = points {
        cfg.sweep.points = n;
    }
    cfg
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ValidateRow {
    pub a_proper: f64,
    pub omega_det: f64,
    pub delta_omega: f64,
    pub r: f64,
    pub ratio: f64,
    pub verdict: ValidityVerdict,
}

pub fn validate_rows(cfg: &ScenarioConfig, accels: &[f64]) -> Result<Vec<ValidateRow>> {
    let det = cfg.detector()?;
    accels
        .iter()
        .map(|&a_proper| {
            let ctx = AccelerationContext::new(a_proper, cfg.accel.c_m_per_s)?;
            let omega_det = ctx.dimensionless(det.center);
            let delta_omega = ctx.dimensionless(det.width);
            let ratio = peaked_validity(omega_det, delta_omega)?;
            Ok(ValidateRow {
                a_proper,
                omega_det,
                delta_omega,
                r: squeeze_param(omega_det)?.r,
                ratio,
                verdict: ValidityVerdict::classify(ratio),
            })
        })
        .collect()
}

pub fn cmd_validate(path: &Path, accels: &[f64], points: Option<usize>) -> Result<Exit> {
    let cfg = with_points(ScenarioConfig::load(path)?, points);
    let accels = if accels.is_empty() { cfg.sweep_accels()? } else { accels.to_vec() };
    let rows = validate_rows(&cfg, &accels)?;
    if cfg.detector.width_per_s == 0.0 {
        eprintln!("warning: detector width is zero; the validity ratio is trivially 0");
    }
    println!("{:>14} {:>14} {:>14} {:>12} {:>12}  verdict", "a_m_per_s2", "omega_det", "delta_omega", "r", "ratio");
    let mut failed = false;
    for row in &rows {
        let verdict = match row.verdict {
            ValidityVerdict::Pass => "PASS",
            ValidityVerdict::Warn => "PASS (near threshold)",
            ValidityVerdict::Fail => {
                failed = true;
                "FAIL"
            }
        };
        println!(
            "{:>14.6e} {:>14.6e} {:>14.6e} {:>12.6e} {:>12.6e}  {verdict}",
            row.a_proper, row.omega_det, row.delta_omega, row.r, row.ratio
        );
    }
    Ok(if failed { Exit::Validity } else { Exit::Ok })
}

pub fn cmd_spread(path: &Path, out: &Path, points: Option<usize>) -> Result<Exit> {
    let cfg = with_points(ScenarioConfig::load(path)?, points);
    let scn = cfg.scenario()?;
    let manifest_base = RunManifest::new("spread", serde_json::json!({ "points": points }), &cfg)?;
    let report = spread_report(&scn, &cfg.sweep_accels()?, &cfg.spread.profile_accels_m_per_s2)?;
    prepare_dir(out)?;

    let stamp = format!("manifest {}", manifest_base.hash);
    let mut samples =
        Table::new(&["a_proper_m_per_s2", "omega_det_dimensionless", "abs_x_r", "abs_x_l", "arg_x_r", "arg_x_l"]);
    samples.comments.push(stamp.clone());
    for s in &report.samples {
        samples.push(vec![s.a_proper, s.omega_det, s.x_r.norm(), s.x_l.norm(), s.x_r.arg(), s.x_l.arg()]);
    }
    write(&out.join("spread_samples.csv"), &samples.render())?;

    let mut manifest = manifest_base;
    for (i, prof) in report.profiles.iter().enumerate() {
        let mut t =
            Table::new(&["omega", "abs_x_r", "abs_x_l", "arg_x_r", "arg_x_l", "log10_abs_x_r", "log10_abs_x_l"]);
        t.comments.push(stamp.clone());
        t.comments.push(format!("a_proper_m_per_s2 {:e}", prof.a_proper));
        t.comments.push(format!("parseval_defect {:e}", prof.parseval_defect));
        let sp = &prof.spread;
        for k in 0..sp.len() {
            let (xr, xl) = (sp.x_r[k], sp.x_l[k]);
            t.push(vec![sp.omega[k], xr.norm(), xl.norm(), xr.arg(), xl.arg(), xr.norm().log10(), xl.norm().log10()]);
        }
        write(&out.join(format!("spread_profile_{i:02}.csv")), &t.render())?;
        manifest.points.push(PointDiagnostics {
            a_proper_m_per_s2: prof.a_proper,
            validity_ratio: None,
            n_max: None,
            trunc_loss: None,
            parseval_defect: Some(prof.parseval_defect),
            error: None,
        });
        println!("profile {i:02}: a = {:e} m/s^2, Parseval defect {:.3e}", prof.a_proper, prof.parseval_defect);
    }
    write(&out.join("spread.manifest.json"), &manifest.to_json()?)?;
    println!("wrote {} samples and {} profiles to {}", report.samples.len(), report.profiles.len(), out.display());
    Ok(Exit::Ok)
}

pub fn cmd_sweep(
    path: &Path,
    out: &Path,
    engine: Option<EngineArg>,
    points: Option<usize>,
    bins: Option<usize>,
    constant_r: bool,
) -> Result<Exit> {
    let cfg = with_points(ScenarioConfig::load(path)?, points);
    let kind = match engine {
        Some(EngineArg::Peaked) => EngineKind::Peaked,
        Some(EngineArg::Brute) => EngineKind::Brute,
        None => cfg.engine.kind,
    };
    let choice = match kind {
        EngineKind::Peaked => EngineChoice::Peaked,
        EngineKind::Brute => {
            let m = bins.or_else(|| cfg.oracle.bins.iter().copied().max()).unwrap_or(1);
            let mut opts = cfg.brute_options(m, cfg.oracle.n_max);
            opts.constant_r = constant_r;
            EngineChoice::Brute(opts)
        }
    };
    let options = serde_json::json!({
        "engine": format!("{kind:?}").to_lowercase(),
        "points": points,
        "bins": bins,
        "constant_r": constant_r,
    });
    let mut manifest = RunManifest::new("sweep", options, &cfg)?;
    let scn = cfg.scenario()?;
    let accels = cfg.sweep_accels()?;

    let started = Instant::now();
    let result = sweep_negativity(&scn, &accels, &choice);
    let seconds = started.elapsed().as_secs_f64();

    let mut table = Table::new(&SWEEP_COLUMNS);
    table.comments.push(format!("manifest {}", manifest.hash));
    let mut failures = 0;
    for p in &result.points {
        match &p.outcome {
            Ok(pt) => {
                table.push(vec![
                    pt.a_proper,
                    pt.omega_det,
                    pt.r,
                    pt.capture_up.eps_r.norm(),
                    pt.capture_up.eps_l.norm(),
                    pt.capture_up.w_env,
                    pt.entanglement.negativity,
                    pt.entanglement.log_negativity,
                    pt.validity_ratio,
                    pt.trunc_loss,
                ]);
                manifest.points.push(PointDiagnostics {
                    a_proper_m_per_s2: pt.a_proper,
                    validity_ratio: Some(pt.validity_ratio),
                    n_max: Some(pt.n_max),
                    trunc_loss: Some(pt.trunc_loss),
                    parseval_defect: pt.parseval_defect,
                    error: None,
                });
            }
            Err(e) => {
                failures += 1;
                let mut row = vec![f64::NAN; SWEEP_COLUMNS.len()];
                row[0] = p.a_proper;
                table.push(row);
                manifest.points.push(PointDiagnostics {
                    a_proper_m_per_s2: p.a_proper,
                    validity_ratio: None,
                    n_max: None,
                    trunc_loss: None,
                    parseval_defect: None,
                    error: Some(e.clone()),
                });
                eprintln!("point a = {:e} failed: {e}", p.a_proper);
            }
        }
    }
    prepare_dir(out)?;
    write(&out.join("sweep.csv"), &table.render())?;
    write(&out.join("sweep.manifest.json"), &manifest.to_json()?)?;
    let timing = serde_json::json!({ "manifest": manifest.hash, "sweep_seconds": seconds, "points": accels.len() });
    write(&out.join("timing.json"), &(serde_json::to_string_pretty(&timing).unwrap_or_default() + "\n"))?;
    eprintln!("sweep: {} points in {seconds:.2} s", accels.len());
    println!("wrote {} ({} points, {failures} failed)", out.join("sweep.csv").display(), accels.len());
    Ok(if failures > 0 { Exit::Validity } else { Exit::Ok })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OracleRow {
    pub bins: usize,
    pub n_max: usize,
    pub constant_r: bool,
    pub distance: f64,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TimingRow {
    pub cost: CostRecord,
    /// Fastest of the repeated runs.
    pub seconds: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OracleReport {
    pub a_proper: f64,
    pub omega_det: f64,
    pub tolerance: f64,
    pub rows: Vec<OracleRow>,
    pub timing: Vec<TimingRow>,
    /// Exponential base fitted to the timing rows.
    pub fitted_base: Option<f64>,
}

impl OracleReport {
    pub fn passes(&self) -> bool {
        self.rows.iter().all(|r| r.pass)
    }
}

/// Runs both engines at the oracle acceleration for every configured bin
/// count, then times the brute-force engine at the timing cutoff.
pub fn oracle_report(cfg: &ScenarioConfig, tamper_l: bool) -> Result<OracleReport> {
    let scn = cfg.scenario()?;
    let o = &cfg.oracle;
    let a_proper = o.a_proper_m_per_s2.unwrap_or(cfg.sweep.a_min_m_per_s2);
    let ctx = AccelerationContext::new(a_proper, scn.speed_of_light)?;
    let band = scn.detector.band(&ctx)?;
    let conv = if tamper_l { LConvention::Conjugated } else { LConvention::Pinned };
    let st = &scn.state;

    let grid = band.grid(scn.band_panels, scn.band_order)?;
    let up = capture_with_convention(&sample_spread(&st.profile_x, ctx.a, &grid)?, &band, conv)?;
    let down = capture_with_convention(&sample_spread(&st.profile_y, ctx.a, &grid)?, &band, conv)?;
    let r = squeeze_param(band.omega_det)?;
    let peaked = assemble_peaked(st.p, st.q, &up, &down, &r, o.n_max)?;

    let mut rows = Vec::new();
    for &m in &o.bins {
        let opts = cfg.brute_options(m, o.n_max);
        let b = brute_force_reduced_state(st.p, st.q, &st.profile_x, &st.profile_y, ctx.a, &band, &opts)?;
        let distance = trace_distance(&peaked.rho, &b.state.rho)?;
        rows.push(OracleRow {
            bins: m,
            n_max: o.n_max,
            constant_r: opts.constant_r,
            distance,
            pass: distance < o.tolerance,
        });
    }

    let mut timing = Vec::new();
    for &m in &o.bins {
        let opts = cfg.brute_options(m, o.timing_n_max);
        let cost = complexity_estimate(m, o.timing_n_max)?;
        // band sampling is shared with the peaked engine and linear in m;
        // only the Fock-space stage is timed
        let input = bin_band(&st.profile_x, &st.profile_y, ctx.a, &band, &opts)?;
        let mut best = f64::INFINITY;
        for _ in 0..o.timing_repeats.max(1) {
            let t = Instant::now();
            reduce_binned(st.p, st.q, &input, &opts)?;
            best = best.min(t.elapsed().as_secs_f64());
        }
        timing.push(TimingRow { cost, seconds: best });
    }
    let ms: Vec<f64> = timing.iter().map(|t| t.cost.bins as f64).collect();
    let ts: Vec<f64> = timing.iter().map(|t| t.seconds).collect();
    let fitted_base = fit_exponential(&ms, &ts).ok().map(|(b, _)| b);

    Ok(OracleReport { a_proper, omega_det: band.omega_det, tolerance: o.tolerance, rows, timing, fitted_base })
}

pub fn cmd_oracle_check(path: &Path, out: Option<&Path>, tamper_l: bool) -> Result<Exit> {
    let cfg = ScenarioConfig::load(path)?;
    let report = oracle_report(&cfg, tamper_l)?;
    if tamper_l {
        println!("note: L-channel convention tampered (mutation check)");
    }
    println!("engine comparison at a = {:e} m/s^2 (omega_det = {})", report.a_proper, report.omega_det);
    println!("{:>5} {:>6} {:>11} {:>14}  result", "bins", "n_max", "constant_r", "trace_dist");
    for r in &report.rows {
        println!(
            "{:>5} {:>6} {:>11} {:>14.4e}  {}",
            r.bins,
            r.n_max,
            r.constant_r,
            r.distance,
            if r.pass { "PASS" } else { "FAIL" }
        );
    }
    println!("cost model and measured brute-force runtime:");
    println!("{:>5} {:>6} {:>14} {:>14} {:>14} {:>12}", "bins", "n_max", "sector_basis", "ops", "a(n)^m", "seconds");
    for t in &report.timing {
        let c = &t.cost;
        println!(
            "{:>5} {:>6} {:>14.4e} {:>14.4e} {:>14.4e} {:>12.4e}",
            c.bins, c.n_max, c.sector_basis, c.operation_count, c.witness, t.seconds
        );
    }
    if let Some(b) = report.fitted_base {
        println!("fitted runtime base per bin: {b:.2} ({} 5)", if b >= 5.0 { ">=" } else { "<" });
    }
    if let Some(dir) = out {
        prepare_dir(dir)?;
        let manifest = RunManifest::new("oracle-check", serde_json::json!({ "tamper_l": tamper_l }), &cfg)?;
        let rows =
            serde_json::json!({ "manifest": manifest.hash, "a_proper_m_per_s2": report.a_proper, "rows": report.rows });
        write(&dir.join("oracle.json"), &(serde_json::to_string_pretty(&rows).unwrap_or_default() + "\n"))?;
        write(&dir.join("oracle.manifest.json"), &manifest.to_json()?)?;
        let timing = serde_json::json!({ "manifest": manifest.hash, "timing": report.timing, "fitted_base": report.fitted_base });
        write(&dir.join("timing.json"), &(serde_json::to_string_pretty(&timing).unwrap_or_default() + "\n"))?;
    }
    Ok(if report.passes() { Exit::Ok } else { Exit::Oracle })
}
