//! The inside-outside duality on the disk: sweep `k`, track `δ⋆(k)`, read
//! off transmission eigenvalues from the phase resets, and compare with the
//! determinant roots.

use std::sync::atomic::{AtomicUsize, Ordering};

use num_complex::Complex;
use rayon::prelude::*;

use crate::disk_model::{background_table, MediumConfig, ModeSolver, Regime};
use crate::error::{Error, Result};
use crate::scalar::Real;
use crate::spectral::{self, min_mode_count, PhaseRecord, StarTrack};
use crate::te_solver::{bisect, TERoot};

/// Bisection steps used when refining a detected event.
pub const REFINE_STEPS: u32 = 20;
/// Default detection band around 2π (or 0), in radians.
pub const DEFAULT_DETECTION_BAND: f64 = 0.2;
/// Default ladder offsets `k_root - k_j`.
pub const DEFAULT_LADDER: [f64; 3] = [1e-2, 1e-3, 1e-4];

/// The grid a sweep was run on.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepSpec<T> {
    pub medium: MediumConfig<T>,
    pub k_lo: T,
    pub k_hi: T,
    pub n_points: usize,
    pub m_max: u32,
    /// Forces the `δ⋆` selection rule; `None` derives it from `sign(n - n_b(k))`.
    pub regime: Option<Regime>,
}

impl<T: Real> SweepSpec<T> {
    pub fn new(medium: MediumConfig<T>, k_lo: T, k_hi: T, n_points: usize, m_max: u32) -> Result<Self> {
        if !(k_lo > T::zero()) || !(k_hi > k_lo) || !k_hi.is_finite() {
            return Err(Error::InvalidInput(format!("need 0 < k_lo < k_hi, got ({k_lo}, {k_hi})")));
        }
        if n_points < 2 {
            return Err(Error::InvalidInput(format!("need at least 2 grid points, got {n_points}")));
        }
        let needed = min_mode_count(k_hi, medium.radius);
        if m_max < needed {
            return Err(Error::InvalidInput(format!("m_max = {m_max} below ceil(k_hi R) + 40 = {needed}")));
        }
        Ok(Self { medium, k_lo, k_hi, n_points, m_max, regime: None })
    }

    pub fn with_regime(mut self, regime: Option<Regime>) -> Self {
        self.regime = regime;
        self
    }

    /// `k_i = k_lo + i (k_hi - k_lo) / (n_points - 1)`, both ends included.
    pub fn grid(&self) -> Vec<T> {
        let last = self.n_points - 1;
        let span = self.k_hi - self.k_lo;
        (0..self.n_points)
            .map(|i| {
                if i == last {
                    self.k_hi
                } else {
                    self.k_lo + span * T::from_usize(i).unwrap() / T::from_usize(last).unwrap()
                }
            })
            .collect()
    }

    pub fn grid_step(&self) -> T {
        (self.k_hi - self.k_lo) / T::from_usize(self.n_points - 1).unwrap()
    }
}

/// Phases of every mode at every grid wavenumber.
#[derive(Debug, Clone)]
pub struct SweepResult<T> {
    pub spec: SweepSpec<T>,
    pub k_grid: Vec<T>,
    /// `rows[i][m]` belongs to `k_grid[i]`.
    pub rows: Vec<Vec<PhaseRecord<T>>>,
    pub star_track: Vec<StarTrack<T>>,
}

impl<T: Real> SweepResult<T> {
    pub fn grid_step(&self) -> T {
        self.spec.grid_step()
    }
}

/// Runs the sweep in parallel over `k`; the result does not depend on the
/// thread count.
pub fn sweep<T: Real>(spec: &SweepSpec<T>) -> Result<SweepResult<T>> {
    sweep_with_progress(spec, |_, _| {})
}

/// As [`sweep`], calling `progress(done, total)` after each finished row.
/// Calls may arrive from any worker thread.
pub fn sweep_with_progress<T: Real, P>(spec: &SweepSpec<T>, progress: P) -> Result<SweepResult<T>>
where
    P: Fn(usize, usize) + Sync,
{
    let k_grid = spec.grid();
    let total = k_grid.len();
    let done = AtomicUsize::new(0);
    let rows = k_grid
        .par_iter()
        .map(|&k| {
            let records = spectral::phase_records(&spec.medium, k, spec.m_max)?;
            let regime = spec.regime.unwrap_or_else(|| spec.medium.regime(k));
            let star = spectral::delta_star(&records, regime)?;
            progress(done.fetch_add(1, Ordering::Relaxed) + 1, total);
            Ok((records, star))
        })
        .collect::<Result<Vec<_>>>()?;
    let (rows, star_track) = rows.into_iter().unzip();
    Ok(SweepResult { spec: *spec, k_grid, rows, star_track })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ApproachSide {
    /// `δ⋆ → 2π` as `k ↗ k_0`.
    FromBelow,
    /// `δ⋆ → 0` as `k ↘ k_0`.
    FromAbove,
}

impl ApproachSide {
    pub fn as_str(&self) -> &'static str {
        match self {
            ApproachSide::FromBelow => "from_below",
            ApproachSide::FromAbove => "from_above",
        }
    }
}

/// A transmission eigenvalue read off the phase track.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DetectedTE<T> {
    pub k_estimate: T,
    pub approach_side: ApproachSide,
    /// Mode attaining `δ⋆` next to the event.
    pub mode: u32,
    /// `δ⋆` on the grid point next to the event.
    pub peak_phase: T,
    /// Grid points (or refined bracket) enclosing the event.
    pub bracket: (T, T),
    /// Nearest determinant root and `|k_estimate - k_root|`, set by [`cross_validate`].
    pub matched_root: Option<(TERoot<T>, T)>,
}

fn mode_phase<T: Real>(cfg: &MediumConfig<T>, k: T, m: u32) -> Result<T> {
    ModeSolver::new(cfg, k, m)?
        .coefficients(m)
        .map(|c| c.delta_hat)
        .map_err(|e| e.at_mode(k.to_f64().unwrap_or(f64::NAN), m))
}

/// Finds the grid cells where `δ⋆` approaches the end of `[0, 2π)` and the
/// attaining mode's phase then wraps around:
///
/// * regime `n > n_b`: `δ⋆(k_i) >= 2π - band` and the phase of the mode
///   attaining it drops by more than π at `k_{i+1}`;
/// * regime `n_b > n`: `0 < δ⋆(k_{i+1}) <= band` and the phase of its mode
///   exceeds it by more than π at `k_i`.
///
/// Cells touching a regime crossing are skipped. With `refine`, the wrap
/// of that mode's phase (through `γ_p = 1`, the eigenvalue itself) is
/// bisected down to `grid_step / 2^20`.
pub fn detect_tes<T: Real>(sweep: &SweepResult<T>, detection_band: T, refine: bool) -> Result<Vec<DetectedTE<T>>> {
    if !(detection_band > T::zero() && detection_band <= T::one()) {
        return Err(Error::InvalidInput(format!("detection band must lie in (0, 1], got {detection_band}")));
    }
    let tau = T::TAU();
    let pi = T::PI();
    let mut events = Vec::new();
    for i in 0..sweep.k_grid.len().saturating_sub(1) {
        let (a, b) = (&sweep.star_track[i], &sweep.star_track[i + 1]);
        if a.regime != b.regime || a.regime == Regime::Crossing {
            continue;
        }
        let (mode, peak, side) = match a.regime {
            Regime::NAboveNb => {
                let p = a.argmax_mode;
                let after = sweep.rows[i + 1][p as usize].delta_hat;
                if !(a.delta_star >= tau - detection_band && after < a.delta_star - pi) {
                    continue;
                }
                (p, a.delta_star, ApproachSide::FromBelow)
            }
            Regime::NbAboveN => {
                let p = b.argmax_mode;
                let before = sweep.rows[i][p as usize].delta_hat;
                if !(b.delta_star > T::zero() && b.delta_star <= detection_band && before > b.delta_star + pi) {
                    continue;
                }
                (p, b.delta_star, ApproachSide::FromAbove)
            }
            Regime::Crossing => unreachable!(),
        };
        let (mut lo, mut hi) = (sweep.k_grid[i], sweep.k_grid[i + 1]);
        if refine {
            let cfg = &sweep.spec.medium;
            let tol = (hi - lo) / T::lit(f64::from(1u32 << REFINE_STEPS));
            let r = bisect(lo, hi, true, tol, REFINE_STEPS, |k| Ok(mode_phase(cfg, k, mode)? > pi))?;
            lo = r.lo;
            hi = r.hi;
        }
        events.push(DetectedTE {
            k_estimate: (lo + hi) * T::lit(0.5),
            approach_side: side,
            mode,
            peak_phase: peak,
            bracket: (lo, hi),
            matched_root: None,
        });
    }
    Ok(events)
}

/// Outcome of matching detected events against determinant roots.
#[derive(Debug, Clone, PartialEq)]
pub struct CrossValidation<T> {
    /// Every detection, with `matched_root` filled where a partner was found.
    pub detected: Vec<DetectedTE<T>>,
    /// `(index into detected, root, |Δk|)`, sorted by root `k`.
    pub matched: Vec<(usize, TERoot<T>, T)>,
    pub false_positives: Vec<DetectedTE<T>>,
    pub missed: Vec<TERoot<T>>,
    pub n_roots: usize,
}

impl<T: Real> CrossValidation<T> {
    pub fn is_consistent(&self) -> bool {
        self.false_positives.is_empty() && self.missed.is_empty()
    }

    pub fn verdict(&self) -> String {
        format!(
            "{} detected / {} roots, {} matched, {} false positives, {} missed",
            self.detected.len(),
            self.n_roots,
            self.matched.len(),
            self.false_positives.len(),
            self.missed.len()
        )
    }
}

/// One-to-one matching by nearest `k` within `tol`, closest pairs first.
pub fn cross_validate<T: Real>(detected: &[DetectedTE<T>], roots: &[TERoot<T>], tol: T) -> CrossValidation<T> {
    let mut pairs: Vec<(T, usize, usize)> = Vec::new();
    for (i, d) in detected.iter().enumerate() {
        for (j, r) in roots.iter().enumerate() {
            let gap = (d.k_estimate - r.k).abs();
            if gap <= tol {
                pairs.push((gap, i, j));
            }
        }
    }
    pairs.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap().then(a.1.cmp(&b.1)).then(a.2.cmp(&b.2)));
    let mut det_used = vec![false; detected.len()];
    let mut root_used = vec![false; roots.len()];
    let mut annotated = detected.to_vec();
    let mut matched = Vec::new();
    for (gap, i, j) in pairs {
        if det_used[i] || root_used[j] {
            continue;
        }
        det_used[i] = true;
        root_used[j] = true;
        annotated[i].matched_root = Some((roots[j], gap));
        matched.push((i, roots[j], gap));
    }
    matched.sort_by(|a, b| a.1.k.partial_cmp(&b.1.k).unwrap());
    let false_positives = annotated.iter().zip(&det_used).filter(|(_, &u)| !u).map(|(d, _)| *d).collect();
    let missed = roots.iter().zip(&root_used).filter(|(_, &u)| !u).map(|(r, _)| *r).collect();
    CrossValidation { detected: annotated, matched, false_positives, missed, n_roots: roots.len() }
}

/// Samples of a radial profile on `[0, R]`.
#[derive(Debug, Clone, PartialEq)]
pub struct RadialProfile<T> {
    pub r_samples: Vec<T>,
    pub values: Vec<T>,
    pub mode: u32,
    pub k: T,
    /// Discrete norm of `values` (1 after normalization).
    pub norm: T,
}

/// Quadrature weights `w_i` with `Σ w_i f(r_i) ≈ ∫_0^R f(r) 2πr dr` on a
/// uniform grid: composite Simpson, closed with a 3/8 panel when the number
/// of cells is odd.
pub fn area_weights<T: Real>(r: &[T]) -> Result<Vec<T>> {
    let n = r.len();
    if n < 3 {
        return Err(Error::InvalidInput(format!("need at least 3 radial samples, got {n}")));
    }
    let h = r[1] - r[0];
    let mut w = vec![T::zero(); n];
    let cells = n - 1;
    let simpson_cells = if cells.is_multiple_of(2) { cells } else { cells - 3 };
    let third = h / T::lit(3.0);
    for c in (0..simpson_cells).step_by(2) {
        w[c] = w[c] + third;
        w[c + 1] = w[c + 1] + third * T::lit(4.0);
        w[c + 2] = w[c + 2] + third;
    }
    if simpson_cells < cells {
        let s = simpson_cells;
        let eighth = h * T::lit(3.0 / 8.0);
        w[s] = w[s] + eighth;
        w[s + 1] = w[s + 1] + eighth * T::lit(3.0);
        w[s + 2] = w[s + 2] + eighth * T::lit(3.0);
        w[s + 3] = w[s + 3] + eighth;
    }
    Ok(w.into_iter().zip(r).map(|(wi, &ri)| wi * T::TAU() * ri).collect())
}

fn discrete_norm<T: Real>(weights: &[T], values: impl Iterator<Item = T>) -> T {
    weights.iter().zip(values).fold(T::zero(), |acc, (&w, v)| acc + w * v).sqrt()
}

/// One rung of the convergence ladder.
#[derive(Debug, Clone, PartialEq)]
pub struct LadderStep<T> {
    pub offset: T,
    pub k: T,
    /// `arg(i^m B_{b,m}(k))`, the phase of the Herglotz image.
    pub phase: T,
    /// `cos(phase - limit phase) |V_m| / |V_m|`: the real part of the
    /// profile relative to the limit.
    pub values: Vec<T>,
    /// Discrete-norm distance to the limit profile.
    pub distance: T,
}

/// The limit profile at a root together with its approach.
#[derive(Debug, Clone, PartialEq)]
pub struct EigenProfile<T> {
    pub limit: RadialProfile<T>,
    pub limit_phase: T,
    pub ladder: Vec<LadderStep<T>>,
}

/// Recovered radial profile of the invisible incident field at `root`.
///
/// The Herglotz image of `e^{imθ}` is `2π i^m B_{b,m} V_m(r) e^{imθ}`; its
/// normalized modulus is `|V_m(r)| / |V_m|`, which does not depend on `k`.
/// The ladder `k_j = k_root ∓ offset` (from below when `n > n_b`) therefore
/// converges through the phase of `i^m B_{b,m}(k_j)`.
pub fn eigenfunction_profile<T: Real>(cfg: &MediumConfig<T>, root: &TERoot<T>, n_r: usize) -> Result<EigenProfile<T>> {
    let ladder: Vec<T> = DEFAULT_LADDER.iter().map(|&o| T::lit(o)).collect();
    eigenfunction_profile_with_ladder(cfg, root, n_r, &ladder)
}

fn herglotz_phase<T: Real>(cfg: &MediumConfig<T>, k: T, m: u32) -> Result<T> {
    let b = ModeSolver::new(cfg, k, m)?.background_coeffs(m)?.b;
    let quarter_turns = T::from_u32(m % 4).unwrap() * T::FRAC_PI_2();
    Ok(b.arg() + quarter_turns)
}

pub fn eigenfunction_profile_with_ladder<T: Real>(
    cfg: &MediumConfig<T>,
    root: &TERoot<T>,
    n_r: usize,
    offsets: &[T],
) -> Result<EigenProfile<T>> {
    if n_r < 3 {
        return Err(Error::InvalidInput(format!("need at least 3 radial samples, got {n_r}")));
    }
    let m = root.m;
    let last = T::from_usize(n_r - 1).unwrap();
    let r_samples: Vec<T> = (0..n_r)
        .map(|i| if i == n_r - 1 { cfg.radius } else { cfg.radius * T::from_usize(i).unwrap() / last })
        .collect();
    let raw = r_samples
        .iter()
        .map(|&r| background_table(cfg, m, r).map(|t| t.value(m).abs()))
        .collect::<Result<Vec<_>>>()?;
    let peak = raw.iter().fold(crate::scaled::ScaledReal::zero(), |acc, v| acc.max_abs(*v));
    if peak.is_zero() {
        return Err(Error::InvalidInput(format!("mode {m} background profile vanishes on [0, R]")));
    }
    let unscaled: Vec<T> = raw.iter().map(|&v| (v / peak).to_float()).collect();
    let weights = area_weights(&r_samples)?;
    let scale = discrete_norm(&weights, unscaled.iter().map(|&v| v * v));
    let values: Vec<T> = unscaled.iter().map(|&v| v / scale).collect();
    let norm = discrete_norm(&weights, values.iter().map(|&v| v * v));

    let limit_phase = herglotz_phase(cfg, root.k, m)?;
    let sign = match cfg.regime(root.k) {
        Regime::NbAboveN => T::one(),
        _ => -T::one(),
    };
    let limit_unit = Complex::from_polar(T::one(), limit_phase);
    let mut steps = Vec::with_capacity(offsets.len());
    for &offset in offsets {
        let k = root.k + sign * offset;
        let phase = herglotz_phase(cfg, k, m)?;
        let rel = phase - limit_phase;
        let unit = Complex::from_polar(T::one(), phase);
        let distance = discrete_norm(&weights, values.iter().map(|&v| ((unit - limit_unit) * v).norm_sqr()));
        steps.push(LadderStep { offset, k, phase, values: values.iter().map(|&v| rel.cos() * v).collect(), distance });
    }
    Ok(EigenProfile {
        limit: RadialProfile { r_samples, values, mode: m, k: root.k, norm },
        limit_phase,
        ladder: steps,
    })
}
