//! Invariant families checked by `verify` on a configured sweep grid.

use std::f64::consts::PI;
use std::fmt;

use itdual_core::disk_model::{ModeSolver, Regime};
use itdual_core::duality::SweepSpec;
use itdual_core::specfun::bessel_jy_table;
use itdual_core::spectral::{self, cayley_value, PhaseRecord};
use itdual_core::{Result, ScaledReal};
use num_complex::Complex;
use rayon::prelude::*;

use crate::commands::Progress;

pub const UNITARITY_TOLERANCE: f64 = 1e-10;
pub const CIRCLE_TOLERANCE: f64 = 1e-10;
pub const WRONSKIAN_TOLERANCE: f64 = 1e-10;
pub const CAYLEY_TOLERANCE: f64 = 1e-12;

const WRONSKIAN_ORDER: u32 = 310;
const WRONSKIAN_POINTS: usize = 1000;
const WRONSKIAN_RANGE: (f64, f64) = (0.1, 60.0);

#[derive(Debug, Clone)]
pub struct Check {
    pub name: &'static str,
    /// Largest residual seen; infinite if anything was NaN.
    pub worst: f64,
    pub tolerance: f64,
    pub detail: String,
}

impl Check {
    pub fn passed(&self) -> bool {
        self.worst < self.tolerance
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = if self.passed() { "PASS" } else { "FAIL" };
        write!(f, "{tag} {}: worst {:.3e} (tolerance {:.1e}); {}", self.name, self.worst, self.tolerance, self.detail)
    }
}

/// NaN compares false with everything, so fold it into +inf.
fn worse(a: f64, b: f64) -> f64 {
    if a.is_nan() || b.is_nan() {
        f64::INFINITY
    } else {
        a.max(b)
    }
}

#[derive(Debug, Clone, Copy, Default)]
struct RowStats {
    unitarity: f64,
    circle: f64,
    cayley: f64,
    cayley_mode_mismatches: usize,
    cayley_rows: usize,
    values: usize,
}

impl RowStats {
    fn merge(self, o: Self) -> Self {
        Self {
            unitarity: worse(self.unitarity, o.unitarity),
            circle: worse(self.circle, o.circle),
            cayley: worse(self.cayley, o.cayley),
            cayley_mode_mismatches: self.cayley_mode_mismatches + o.cayley_mode_mismatches,
            cayley_rows: self.cayley_rows + o.cayley_rows,
            values: self.values + o.values,
        }
    }
}

fn unit_gap(z: Complex<f64>) -> f64 {
    let d = (z.norm() - 1.0).abs();
    if z.re.is_finite() && z.im.is_finite() {
        d
    } else {
        f64::INFINITY
    }
}

fn row_stats(spec: &SweepSpec<f64>, k: f64) -> Result<RowStats> {
    let solver = ModeSolver::new(&spec.medium, k, spec.m_max)?;
    let one = Complex::new(1.0, 0.0);
    let mut s = RowStats::default();
    let mut records = Vec::with_capacity(spec.m_max as usize + 1);
    for m in 0..=spec.m_max {
        let c = solver.coefficients(m).map_err(|e| e.at_mode(k, m))?;
        let finite = c.b.is_finite() && c.b_b.is_finite() && c.delta_hat.is_finite();
        let u = [unit_gap(c.gamma), unit_gap(one + c.d * 2.0), unit_gap(one + c.d_b * 2.0)]
            .into_iter()
            .fold(if finite { 0.0 } else { f64::INFINITY }, worse);
        s.unitarity = worse(s.unitarity, u);
        let r = PhaseRecord::from_coefficients(&c);
        let circle = unit_gap(spectral::scattering_eigenvalue(k, r.mu))
            .max(unit_gap(spectral::scattering_eigenvalue(k, r.mu_b)));
        s.circle = worse(s.circle, circle);
        records.push(r);
    }
    s.values = records.len();

    let regime = spec.regime.unwrap_or_else(|| spec.medium.regime(k));
    if regime != Regime::Crossing {
        let star = spectral::delta_star(&records, regime)?;
        if let Ok(c_star) = cayley_value(star.delta_star) {
            // -cot(δ/2) increases with δ: δ⋆ is its max (n > n_b) or min (n_b > n)
            let mut best: Option<(f64, u32)> = None;
            for r in &records {
                let Ok(c) = cayley_value(r.delta_hat) else { continue };
                let better = match (regime, best) {
                    (_, None) => true,
                    (Regime::NAboveNb, Some((b, _))) => c > b,
                    (_, Some((b, _))) => c < b,
                };
                if better {
                    best = Some((c, r.m));
                }
            }
            if let Some((c_ext, m_ext)) = best {
                s.cayley = (c_star - c_ext).abs() / c_ext.abs().max(1.0);
                if m_ext != star.argmax_mode && c_ext != c_star {
                    s.cayley_mode_mismatches += 1;
                }
                s.cayley_rows = 1;
            }
        }
    }
    Ok(s)
}

fn wronskian() -> Result<f64> {
    let (lo, hi) = WRONSKIAN_RANGE;
    let xs: Vec<f64> = (0..WRONSKIAN_POINTS)
        .map(|i| lo + (hi - lo) * i as f64 / (WRONSKIAN_POINTS - 1) as f64)
        .collect();
    let per_x = xs
        .par_iter()
        .map(|&x| {
            let t = bessel_jy_table(WRONSKIAN_ORDER, x)?;
            let target = ScaledReal::new(2.0 / (PI * x));
            Ok((0..=WRONSKIAN_ORDER).fold(0.0, |acc, m| {
                let w = t.j.value(m) * t.y.derivative(m) - t.j.derivative(m) * t.y.value(m);
                worse(acc, ((w - target) / target).to_float().abs())
            }))
        })
        .collect::<Result<Vec<f64>>>()?;
    Ok(per_x.into_iter().fold(0.0, worse))
}

/// Runs every family; `scale` multiplies all tolerances.
pub fn run_all(spec: &SweepSpec<f64>, scale: f64, quiet: bool) -> Result<Vec<Check>> {
    let grid = spec.grid();
    let progress = Progress::new("verify", quiet);
    let done = std::sync::atomic::AtomicUsize::new(0);
    let rows = grid
        .par_iter()
        .map(|&k| {
            let s = row_stats(spec, k);
            progress.tick(done.fetch_add(1, std::sync::atomic::Ordering::Relaxed) + 1, grid.len());
            s
        })
        .collect::<Result<Vec<_>>>()?;
    let stats = rows.into_iter().fold(RowStats::default(), RowStats::merge);
    let w = wronskian()?;
    let cayley_worst = if stats.cayley_mode_mismatches > 0 { f64::INFINITY } else { stats.cayley };

    Ok(vec![
        Check {
            name: "unitarity",
            worst: stats.unitarity,
            tolerance: UNITARITY_TOLERANCE * scale,
            detail: format!("| |gamma|-1 |, | |1+2D|-1 |, | |1+2D_b|-1 | over {} values", stats.values),
        },
        Check {
            name: "circle",
            worst: stats.circle,
            tolerance: CIRCLE_TOLERANCE * scale,
            detail: format!("far-field eigenvalues on the scattering circle, {} values", stats.values),
        },
        Check {
            name: "wronskian",
            worst: w,
            tolerance: WRONSKIAN_TOLERANCE * scale,
            detail: format!(
                "relative J Y' - J' Y - 2/(pi x), m <= {WRONSKIAN_ORDER}, {WRONSKIAN_POINTS} points in [{lo}, {hi}]",
                lo = WRONSKIAN_RANGE.0,
                hi = WRONSKIAN_RANGE.1
            ),
        },
        Check {
            name: "cayley",
            worst: cayley_worst,
            tolerance: CAYLEY_TOLERANCE * scale,
            detail: format!(
                "extremal -cot(delta/2) against delta_star on {} rows, {} mode mismatches",
                stats.cayley_rows, stats.cayley_mode_mismatches
            ),
        },
    ])
}
