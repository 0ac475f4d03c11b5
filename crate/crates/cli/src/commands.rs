//! The five subcommands. Each validates the whole configuration before
//! touching the output directory, so a rejected run writes nothing.

use std::path::Path;
use std::sync::atomic::{AtomicUsize, Ordering};

use itdual_core::duality::{self, SweepSpec};
use itdual_core::te_solver::{self, min_mode_for_window};
use itdual_core::{Root, Sweep};

use crate::config::{ConfigError, RunConfig};
use crate::output;
use crate::{verify, CliError};

/// Prints `label: N%` to stderr at every 5% step.
pub struct Progress {
    label: &'static str,
    quiet: bool,
    reported: AtomicUsize,
}

impl Progress {
    pub fn new(label: &'static str, quiet: bool) -> Self {
        Self { label, quiet, reported: AtomicUsize::new(0) }
    }

    pub fn tick(&self, done: usize, total: usize) {
        if self.quiet || total == 0 {
            return;
        }
        let twentieths = done * 20 / total;
        if twentieths > self.reported.fetch_max(twentieths, Ordering::Relaxed) {
            eprintln!("{}: {}%", self.label, twentieths * 5);
        }
    }
}

pub fn sweep_spec(cfg: &RunConfig) -> Result<SweepSpec<f64>, CliError> {
    cfg.validate()?;
    cfg.validate_modes()?;
    let spec = SweepSpec::new(cfg.medium()?, cfg.k_lo, cfg.k_hi, cfg.n_points, cfg.m_max)?;
    Ok(spec.with_regime(cfg.regime.forced()))
}

fn run_sweep(spec: &SweepSpec<f64>, quiet: bool) -> Result<Sweep, CliError> {
    let progress = Progress::new("sweep", quiet);
    Ok(duality::sweep_with_progress(spec, |d, t| progress.tick(d, t))?)
}

/// Every determinant root in the window, all modes up to
/// `ceil(k_hi √n R) + 20`.
pub fn window_roots(cfg: &RunConfig) -> Result<Vec<Root>, CliError> {
    cfg.validate()?;
    let medium = cfg.medium()?;
    let m_max = min_mode_for_window(&medium, cfg.k_hi);
    Ok(te_solver::all_tes(&medium, cfg.k_lo, cfg.k_hi, m_max, cfg.scan_step)?)
}

pub fn sweep(cfg: &RunConfig, out: &Path, quiet: bool) -> Result<String, CliError> {
    let spec = sweep_spec(cfg)?;
    let result = run_sweep(&spec, quiet)?;
    output::write_phases(out, &result.rows)?;
    output::write_star(out, &result.star_track)?;
    output::write_config_snapshot(out, cfg)?;
    Ok(format!(
        "{} wavenumbers x {} modes written to {}",
        result.k_grid.len(),
        cfg.m_max + 1,
        out.display()
    ))
}

pub fn roots(cfg: &RunConfig, out: &Path) -> Result<String, CliError> {
    let roots = window_roots(cfg)?;
    output::write_roots(out, &roots)?;
    output::write_config_snapshot(out, cfg)?;
    let mut summary = format!("{} roots in ({}, {})", roots.len(), cfg.k_lo, cfg.k_hi);
    for r in &roots {
        summary.push_str(&format!("\n  m = {:>3}  k = {:.10}", r.m, r.k));
    }
    Ok(summary)
}

/// Sweeps, detects events on the `δ⋆` track and matches them against the
/// determinant roots within two grid steps.
pub fn detect(cfg: &RunConfig, out: &Path, quiet: bool) -> Result<String, CliError> {
    let spec = sweep_spec(cfg)?;
    let roots = window_roots(cfg)?;
    let result = run_sweep(&spec, quiet)?;
    let events = duality::detect_tes(&result, cfg.detection_band, cfg.refine)?;
    let check = duality::cross_validate(&events, &roots, 2.0 * result.grid_step());
    output::write_detected(out, &check)?;
    output::write_roots(out, &roots)?;
    output::write_config_snapshot(out, cfg)?;
    Ok(check.verdict())
}

/// Profile of the `root_index`-th root of `mode` in the window.
pub fn eigfun(cfg: &RunConfig, out: &Path) -> Result<String, CliError> {
    cfg.validate()?;
    let medium = cfg.medium()?;
    let roots = te_solver::find_roots(&medium, cfg.mode, cfg.k_lo, cfg.k_hi, cfg.scan_step)?;
    let root = roots.get(cfg.root_index).ok_or_else(|| {
        ConfigError(format!(
            "mode {} has {} roots in ({}, {}); root_index {} is out of range",
            cfg.mode,
            roots.len(),
            cfg.k_lo,
            cfg.k_hi,
            cfg.root_index
        ))
    })?;
    let profile = duality::eigenfunction_profile(&medium, root, cfg.n_r)?;
    output::write_profile(out, &profile)?;
    output::write_config_snapshot(out, cfg)?;
    let mut summary = format!("mode {} root k = {:.10}", root.m, root.k);
    for step in &profile.ladder {
        summary.push_str(&format!("\n  offset {:e}: distance {:.6e}", step.offset, step.distance));
    }
    Ok(summary)
}

pub fn verify(cfg: &RunConfig, quiet: bool) -> Result<String, CliError> {
    let spec = sweep_spec(cfg)?;
    let checks = verify::run_all(&spec, cfg.verify_tolerance_scale, quiet)?;
    let lines: Vec<String> = checks.iter().map(|c| c.to_string()).collect();
    let failed = checks.iter().filter(|c| !c.passed()).count();
    println!("{}", lines.join("\n"));
    if failed > 0 {
        Err(CliError::VerifyFailed(failed))
    } else {
        Ok(format!("all {} invariant families pass", checks.len()))
    }
}
