//! Run configuration: a flat TOML file whose keys mirror [`RunConfig`],
//! overridable field by field from the command line.

use std::fmt;
use std::path::{Path, PathBuf};

use clap::ValueEnum;
use itdual_core::disk_model::Regime;
use itdual_core::specfun::MAX_ORDER;
use itdual_core::spectral::min_mode_count;
use itdual_core::te_solver::MAX_SCAN_STEP;
use itdual_core::Medium;
use serde::{Deserialize, Serialize};

/// Rejected configuration; maps to exit code 2.
#[derive(Debug, Clone, PartialEq)]
pub struct ConfigError(pub String);

impl fmt::Display for ConfigError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for ConfigError {}

/// How `δ⋆` is selected along a sweep.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, ValueEnum)]
pub enum RegimeChoice {
    /// From `sign(n - ρ/k²)` at each `k`.
    #[serde(rename = "auto")]
    #[value(name = "auto")]
    Auto,
    #[serde(rename = "n_above_nb")]
    #[value(name = "n_above_nb")]
    NAboveNb,
    #[serde(rename = "nb_above_n")]
    #[value(name = "nb_above_n")]
    NbAboveN,
}

impl RegimeChoice {
    pub fn forced(self) -> Option<Regime> {
        match self {
            RegimeChoice::Auto => None,
            RegimeChoice::NAboveNb => Some(Regime::NAboveNb),
            RegimeChoice::NbAboveN => Some(Regime::NbAboveN),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct RunConfig {
    /// Refractive index of the disk.
    pub n: f64,
    pub radius: f64,
    /// Background constant, `n_b = rho / k^2`.
    pub rho: f64,
    pub k_lo: f64,
    pub k_hi: f64,
    /// Sweep grid size, both ends included.
    pub n_points: usize,
    /// Highest Fourier mode in sweeps.
    pub m_max: u32,
    /// Determinant sign-scan step.
    pub scan_step: f64,
    pub detection_band: f64,
    pub output_path: PathBuf,
    pub regime: RegimeChoice,
    /// Bisect detected events down to `grid_step / 2^20`.
    pub refine: bool,
    /// Mode and 0-based root index for `eigfun`.
    pub mode: u32,
    pub root_index: usize,
    /// Radial samples in `eigfun` profiles.
    pub n_r: usize,
    /// Multiplies every `verify` tolerance.
    pub verify_tolerance_scale: f64,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            n: 2.0,
            radius: 1.0,
            rho: 0.0,
            k_lo: 1.0,
            k_hi: 5.5,
            n_points: 4500,
            m_max: 300,
            scan_step: 1e-3,
            detection_band: 0.2,
            output_path: PathBuf::from("out"),
            regime: RegimeChoice::Auto,
            refine: true,
            mode: 0,
            root_index: 0,
            n_r: 201,
            verify_tolerance_scale: 1.0,
        }
    }
}

fn positive(name: &str, v: f64) -> Result<(), ConfigError> {
    if v.is_finite() && v > 0.0 {
        Ok(())
    } else {
        Err(ConfigError(format!("{name} must be positive and finite, got {v}")))
    }
}

impl RunConfig {
    pub fn from_toml_str(s: &str) -> Result<Self, ConfigError> {
        toml::from_str(s).map_err(|e| ConfigError(format!("cannot parse config: {e}")))
    }

    pub fn to_toml_string(&self) -> String {
        toml::to_string(self).expect("RunConfig serializes")
    }

    pub fn load(path: &Path) -> Result<Self, ConfigError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| ConfigError(format!("cannot read {}: {e}", path.display())))?;
        Self::from_toml_str(&text)
    }

    pub fn medium(&self) -> Result<Medium, ConfigError> {
        Medium::new(self.n, self.radius, self.rho).map_err(|e| ConfigError(e.to_string()))
    }

    /// Checks shared by every command.
    pub fn validate(&self) -> Result<(), ConfigError> {
        positive("n", self.n)?;
        positive("radius", self.radius)?;
        if !self.rho.is_finite() {
            return Err(ConfigError(format!("rho must be finite, got {}", self.rho)));
        }
        positive("k_lo", self.k_lo)?;
        positive("k_hi", self.k_hi)?;
        if self.k_lo >= self.k_hi {
            return Err(ConfigError(format!("need k_lo < k_hi, got {} >= {}", self.k_lo, self.k_hi)));
        }
        if self.n_points < 2 {
            return Err(ConfigError(format!("n_points must be at least 2, got {}", self.n_points)));
        }
        if !(self.scan_step > 0.0 && self.scan_step <= MAX_SCAN_STEP) {
            return Err(ConfigError(format!("scan_step must lie in (0, {MAX_SCAN_STEP}], got {}", self.scan_step)));
        }
        if !(self.detection_band > 0.0 && self.detection_band <= 1.0) {
            return Err(ConfigError(format!("detection_band must lie in (0, 1], got {}", self.detection_band)));
        }
        if self.n_r < 3 {
            return Err(ConfigError(format!("n_r must be at least 3, got {}", self.n_r)));
        }
        if !(self.verify_tolerance_scale.is_finite() && self.verify_tolerance_scale >= 0.0) {
            return Err(ConfigError(format!(
                "verify_tolerance_scale must be finite and >= 0, got {}",
                self.verify_tolerance_scale
            )));
        }
        Ok(())
    }

    /// Additional checks for commands that sweep all modes.
    pub fn validate_modes(&self) -> Result<(), ConfigError> {
        let needed = min_mode_count(self.k_hi, self.radius);
        if self.m_max < needed {
            return Err(ConfigError(format!("m_max = {} below ceil(k_hi R) + 40 = {needed}", self.m_max)));
        }
        if self.m_max >= MAX_ORDER {
            return Err(ConfigError(format!("m_max must stay below {MAX_ORDER}, got {}", self.m_max)));
        }
        Ok(())
    }
}

/// Field-by-field replacements; `None` keeps the file value.
#[derive(Debug, Clone, Default, clap::Args)]
pub struct Overrides {
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub n: Option<f64>,
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub radius: Option<f64>,
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub rho: Option<f64>,
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub k_lo: Option<f64>,
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub k_hi: Option<f64>,
    #[arg(long, global = true)]
    pub n_points: Option<usize>,
    #[arg(long, global = true)]
    pub m_max: Option<u32>,
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub scan_step: Option<f64>,
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub detection_band: Option<f64>,
    /// Output directory.
    #[arg(long = "out", global = true)]
    pub output_path: Option<PathBuf>,
    #[arg(long, global = true, value_enum)]
    pub regime: Option<RegimeChoice>,
    #[arg(long, global = true)]
    pub refine: Option<bool>,
    #[arg(long, global = true)]
    pub mode: Option<u32>,
    #[arg(long, global = true)]
    pub root_index: Option<usize>,
    #[arg(long, global = true)]
    pub n_r: Option<usize>,
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub verify_tolerance_scale: Option<f64>,
}

impl Overrides {
    pub fn apply(&self, cfg: &mut RunConfig) {
        macro_rules! set {
            ($($field:ident),*) => {
                $(if let Some(v) = self.$field.clone() { cfg.$field = v; })*
            };
        }
        set!(
            n, radius, rho, k_lo, k_hi, n_points, m_max, scan_step, detection_band, output_path, regime, refine,
            mode, root_index, n_r, verify_tolerance_scale
        );
    }
}
