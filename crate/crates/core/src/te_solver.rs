//! Transmission eigenvalues from the determinant equation
//!
//! ```text
//! det [ V_m(R)    J_m(k√n R)        ]
//!     [ V'_m(R)   k√n J'_m(k√n R)   ] = 0,
//! ```
//!
//! located mode by mode with a sign scan in `k` followed by bisection.

use rayon::prelude::*;

use crate::disk_model::{background_table, BackgroundTable, MediumConfig};
use crate::error::{Error, Result};
use crate::scalar::Real;
use crate::scaled::ScaledReal;
use crate::specfun::bessel_j_table;

/// Coarsest admissible sign-scan step.
pub const MAX_SCAN_STEP: f64 = 1e-2;
/// Bisection stops once the bracket is narrower than this.
pub const BRACKET_TOLERANCE: f64 = 1e-10;
/// Bisection iteration cap.
pub const MAX_BISECTIONS: u32 = 60;
/// Roots of one mode closer than this are the same root.
pub const DEDUP_TOLERANCE: f64 = 1e-9;
/// Sign changes this close to the crossing wavenumber `√(ρ/n)` are dropped.
pub const CROSSING_EXCLUSION: f64 = 1e-6;
/// A local minimum of `|det|` below this, without a sign change, is
/// reported as a possible tangency.
pub const TANGENCY_THRESHOLD: f64 = 1e-3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RootSource {
    Determinant,
    PhaseDetector,
}

impl RootSource {
    pub fn as_str(&self) -> &'static str {
        match self {
            RootSource::Determinant => "determinant",
            RootSource::PhaseDetector => "phase_detector",
        }
    }
}

/// One transmission eigenvalue.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TERoot<T> {
    pub k: T,
    pub m: u32,
    /// `|normalized det|` at `k`.
    pub residual: T,
    /// 1 for `m = 0`, 2 otherwise (the `±m` pair).
    pub multiplicity_hint: u32,
    pub source: RootSource,
}

fn multiplicity(m: u32) -> u32 {
    if m == 0 {
        1
    } else {
        2
    }
}

/// Evaluates the normalized determinant for a fixed medium. `V_m(R)` does
/// not depend on `k`, so it is tabulated once.
#[derive(Debug, Clone)]
pub struct Determinant<T> {
    cfg: MediumConfig<T>,
    background: BackgroundTable<T>,
    max_order: u32,
}

impl<T: Real> Determinant<T> {
    pub fn new(cfg: &MediumConfig<T>, max_order: u32) -> Result<Self> {
        Ok(Self { cfg: *cfg, background: background_table(cfg, max_order, cfg.radius)?, max_order })
    }

    pub fn max_order(&self) -> u32 {
        self.max_order
    }

    /// Where `n_b(k) = n`, if anywhere. There the two columns coincide and
    /// every mode's determinant vanishes identically in `m`; this zero is not
    /// a transmission eigenvalue.
    pub fn crossing_wavenumber(&self) -> Option<T> {
        let ratio = self.cfg.rho / self.cfg.n;
        (ratio > T::zero()).then(|| ratio.sqrt())
    }

    fn near_crossing(&self, k: T) -> bool {
        self.crossing_wavenumber().is_some_and(|kc| {
            (k - kc).abs() <= T::lit(CROSSING_EXCLUSION) * kc.max(T::one())
        })
    }

    /// The normalized determinant of every mode `0..=max_order` at `k`.
    pub fn row(&self, k: T) -> Result<Vec<T>> {
        self.row_upto(k, self.max_order)
    }

    /// The normalized determinant of mode `m` at `k`.
    pub fn eval(&self, k: T, m: u32) -> Result<T> {
        if m > self.max_order {
            return Err(Error::InvalidInput(format!("mode {m} above tabulated maximum {}", self.max_order)));
        }
        Ok(self.row_upto(k, m)?[m as usize])
    }

    fn row_upto(&self, k: T, top: u32) -> Result<Vec<T>> {
        if !(k > T::zero()) || !k.is_finite() {
            return Err(Error::InvalidInput(format!("wavenumber must be positive, got {k}")));
        }
        let sqrt_n = self.cfg.n.sqrt();
        let inner = bessel_j_table(top, k * sqrt_n * self.cfg.radius)?;
        let ksn = ScaledReal::new(k * sqrt_n);
        Ok((0..=top)
            .map(|m| {
                let v = self.background.value(m);
                let vp = self.background.derivative(m);
                let a = ksn * inner.derivative(m);
                let b = inner.value(m);
                normalize(v * a - vp * b, (v * v + vp * vp).sqrt() * (a * a + b * b).sqrt())
            })
            .collect())
    }
}

fn normalize<T: Real>(det: ScaledReal<T>, scale: ScaledReal<T>) -> T {
    if scale.is_zero() {
        return T::zero();
    }
    (det / scale).to_float()
}

/// `V_m(R) k√n J'_m(k√n R) − V'_m(R) J_m(k√n R)`, divided by the product of
/// the column norms of the matrix. The result lies in `[-1, 1]`, keeps the
/// sign of the raw determinant and is a smooth function of `k`.
pub fn determinant<T: Real>(cfg: &MediumConfig<T>, k: T, m: u32) -> Result<T> {
    Determinant::new(cfg, m)?.eval(k, m)
}

/// Outcome of a bisection.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Bisection<T> {
    pub lo: T,
    pub hi: T,
    pub iterations: u32,
}

impl<T: Real> Bisection<T> {
    pub fn midpoint(&self) -> T {
        (self.lo + self.hi) * T::lit(0.5)
    }

    pub fn width(&self) -> T {
        self.hi - self.lo
    }
}

/// Halves `[lo, hi]` while `pred(lo) != pred(hi)`, until the bracket is
/// narrower than `tol` or `max_iter` steps are taken. `pred_lo` is
/// `pred(lo)`; `pred(hi)` is assumed to differ.
pub fn bisect<T: Real, F>(mut lo: T, mut hi: T, pred_lo: bool, tol: T, max_iter: u32, mut pred: F) -> Result<Bisection<T>>
where
    F: FnMut(T) -> Result<bool>,
{
    let mut iterations = 0;
    while hi - lo >= tol && iterations < max_iter {
        let mid = (lo + hi) * T::lit(0.5);
        if mid <= lo || mid >= hi {
            break;
        }
        if pred(mid)? == pred_lo {
            lo = mid;
        } else {
            hi = mid;
        }
        iterations += 1;
    }
    Ok(Bisection { lo, hi, iterations })
}

/// Uniform grid covering `[k_lo, k_hi]` with spacing at most `step`.
pub fn scan_grid<T: Real>(k_lo: T, k_hi: T, step: T) -> Vec<T> {
    // the slack keeps 4.5 / 1e-3 from rounding up to 4501 cells
    let cells = ((k_hi - k_lo) / step - T::lit(1e-9)).ceil().to_usize().unwrap_or(1).max(1);
    let h = (k_hi - k_lo) / T::from_usize(cells).unwrap();
    (0..=cells)
        .map(|i| if i == cells { k_hi } else { k_lo + h * T::from_usize(i).unwrap() })
        .collect()
}

fn check_window<T: Real>(k_lo: T, k_hi: T, scan_step: T) -> Result<()> {
    if !(k_lo > T::zero()) || !(k_hi > k_lo) || !k_hi.is_finite() {
        return Err(Error::InvalidInput(format!("need 0 < k_lo < k_hi, got ({k_lo}, {k_hi})")));
    }
    if !(scan_step > T::zero()) || scan_step > T::lit(MAX_SCAN_STEP) {
        return Err(Error::InvalidInput(format!("scan step must lie in (0, {MAX_SCAN_STEP}], got {scan_step}")));
    }
    Ok(())
}

/// Roots of one mode together with the tangency candidates seen on the way.
#[derive(Debug, Clone, PartialEq)]
pub struct RootScan<T> {
    pub roots: Vec<TERoot<T>>,
    /// Grid points where `|det|` has a small local minimum without a sign change.
    pub tangent_candidates: Vec<T>,
    /// Largest bisection count used.
    pub max_iterations: u32,
}

fn scan_mode<T: Real>(det: &Determinant<T>, m: u32, k_lo: T, k_hi: T, scan_step: T) -> Result<RootScan<T>> {
    check_window(k_lo, k_hi, scan_step)?;
    let grid = scan_grid(k_lo, k_hi, scan_step);
    let values = grid.iter().map(|&k| det.eval(k, m)).collect::<Result<Vec<_>>>()?;
    let tol = T::lit(BRACKET_TOLERANCE);
    let mut roots = Vec::new();
    let mut tangent_candidates = Vec::new();
    let mut max_iterations = 0;
    let root = |k: T, residual: T| TERoot { k, m, residual, multiplicity_hint: multiplicity(m), source: RootSource::Determinant };

    let accept = |r: TERoot<T>, roots: &mut Vec<TERoot<T>>| {
        if det.near_crossing(r.k) {
            log::debug!("mode {m}: dropping the n = n_b zero at k = {}", r.k);
        } else {
            roots.push(r);
        }
    };

    for i in 0..grid.len() - 1 {
        let (fa, fb) = (values[i], values[i + 1]);
        if fb == T::zero() && i + 1 < grid.len() - 1 {
            accept(root(grid[i + 1], T::zero()), &mut roots);
        } else if fa != T::zero() && fb != T::zero() && (fa < T::zero()) != (fb < T::zero()) {
            let b = bisect(grid[i], grid[i + 1], fa < T::zero(), tol, MAX_BISECTIONS, |k| Ok(det.eval(k, m)? < T::zero()))?;
            max_iterations = max_iterations.max(b.iterations);
            let k = b.midpoint();
            accept(root(k, det.eval(k, m)?.abs()), &mut roots);
        }
        if i > 0 {
            let (fl, fc) = (values[i - 1], values[i]);
            let same_sign = (fl < T::zero()) == (fc < T::zero()) && (fc < T::zero()) == (fb < T::zero());
            if same_sign && !det.near_crossing(grid[i]) && fc.abs() < fl.abs() && fc.abs() < fb.abs() && fc.abs() < T::lit(TANGENCY_THRESHOLD) {
                log::warn!("mode {m}: near-tangent determinant minimum {:e} at k = {}, not reported as a root", fc.abs(), grid[i]);
                tangent_candidates.push(grid[i]);
            }
        }
    }
    Ok(RootScan { roots, tangent_candidates, max_iterations })
}

/// Detailed scan of mode `m` over `(k_lo, k_hi)`.
pub fn scan_roots<T: Real>(cfg: &MediumConfig<T>, m: u32, k_lo: T, k_hi: T, scan_step: T) -> Result<RootScan<T>> {
    scan_mode(&Determinant::new(cfg, m)?, m, k_lo, k_hi, scan_step)
}

/// Sign changes of the normalized determinant of mode `m` on a grid of
/// spacing `scan_step`, refined by bisection to a bracket below `1e-10`.
/// Sorted by `k`. Two roots inside one scan cell cancel and are missed.
pub fn find_roots<T: Real>(cfg: &MediumConfig<T>, m: u32, k_lo: T, k_hi: T, scan_step: T) -> Result<Vec<TERoot<T>>> {
    Ok(scan_roots(cfg, m, k_lo, k_hi, scan_step)?.roots)
}

/// Recommended `m_max` for [`all_tes`]: `ceil(k_hi √n R) + 20`.
pub fn min_mode_for_window<T: Real>(cfg: &MediumConfig<T>, k_hi: T) -> u32 {
    required_modes(cfg, k_hi).saturating_add(20)
}

/// `ceil(k_hi √n R)`: every mode above it has its first determinant zero
/// beyond `k_hi`.
fn required_modes<T: Real>(cfg: &MediumConfig<T>, k_hi: T) -> u32 {
    (k_hi * cfg.n.sqrt() * cfg.radius).ceil().to_u32().unwrap_or(u32::MAX)
}

/// Every root of modes `0..=m_max` in the window, sorted by `k` (then `m`).
/// `m_max` below `ceil(k_hi √n R)` is rejected; below the recommended
/// margin of 20 more it is accepted with a warning.
pub fn all_tes<T: Real>(cfg: &MediumConfig<T>, k_lo: T, k_hi: T, m_max: u32, scan_step: T) -> Result<Vec<TERoot<T>>> {
    check_window(k_lo, k_hi, scan_step)?;
    let needed = required_modes(cfg, k_hi);
    if m_max < needed {
        return Err(Error::InvalidInput(format!("m_max = {m_max} below ceil(k_hi √n R) = {needed}")));
    }
    if m_max < min_mode_for_window(cfg, k_hi) {
        log::warn!("m_max = {m_max} below the recommended {}", min_mode_for_window(cfg, k_hi));
    }
    let det = Determinant::new(cfg, m_max)?;
    let per_mode = (0..=m_max)
        .into_par_iter()
        .map(|m| scan_mode(&det, m, k_lo, k_hi, scan_step).map(|s| s.roots))
        .collect::<Result<Vec<_>>>()?;
    let mut roots: Vec<TERoot<T>> = per_mode.into_iter().flatten().collect();
    roots.sort_by(|a, b| a.k.partial_cmp(&b.k).unwrap().then(a.m.cmp(&b.m)));
    let mut out: Vec<TERoot<T>> = Vec::with_capacity(roots.len());
    for r in roots {
        let duplicate = out
            .iter()
            .rev()
            .take_while(|q| r.k - q.k <= T::lit(DEDUP_TOLERANCE))
            .any(|q| q.m == r.m);
        if !duplicate {
            out.push(r);
        }
    }
    Ok(out)
}
