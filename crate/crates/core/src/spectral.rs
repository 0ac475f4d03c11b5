//! Eigenvalues of the far-field operators and of the modified scattering
//! operator `(S^b)^* S`, mode by mode, in the 2D unitary normalization
//! `S = Id + 2ik e^{-iπ/4} / √(8πk) F`.
//!
//! On the disk every `e^{imθ}` is an eigenfunction of `F`, `F^b` and `S`,
//! with
//!
//! ```text
//! μ_m = √(8π/k) e^{-iπ/4} D_m,      γ_m = (1 + 2 conj(D_{b,m})) (1 + 2 D_m).
//! ```

use num_complex::Complex;

use crate::disk_model::{MediumConfig, ModeCoefficients, ModeSolver, Regime};
use crate::error::{Error, Result};
use crate::scalar::Real;

/// `γ = (1 + 2 conj(D_b)) (1 + 2 D)`.
pub fn gamma_from<T: Real>(d: Complex<T>, d_b: Complex<T>) -> Complex<T> {
    let one = Complex::new(T::one(), T::zero());
    let two = T::lit(2.0);
    (one + d_b.conj() * two) * (one + d * two)
}

/// Eigenvalue of `(S^b)^* S` for the mode described by `coeffs`.
pub fn gamma<T: Real>(coeffs: &ModeCoefficients<T>) -> Complex<T> {
    gamma_from(coeffs.d, coeffs.d_b)
}

/// Largest admissible deviation of `|γ|` from one.
pub const UNIMODULAR_TOLERANCE: f64 = 1e-6;

/// Phase of a unimodular `gamma` in `[0, 2π)`, taken after projecting onto
/// the unit circle. `gamma = 1` maps to exactly `0`.
pub fn phase_in_0_2pi<T: Real>(gamma: Complex<T>) -> Result<T> {
    let modulus = gamma.norm();
    if !modulus.is_finite() || (modulus - T::one()).abs() > T::lit(UNIMODULAR_TOLERANCE) {
        return Err(Error::NotUnimodular { modulus: modulus.to_f64().unwrap_or(f64::NAN) });
    }
    let u = gamma / modulus;
    let mut phase = u.im.atan2(u.re);
    if phase == T::zero() {
        // drop the sign of -0
        return Ok(T::zero());
    }
    if phase < T::zero() {
        phase = phase + T::TAU();
    }
    if phase >= T::TAU() {
        phase = T::below_tau();
    }
    Ok(phase)
}

/// `μ = √(8π/k) e^{-iπ/4} D`, the far-field operator eigenvalue.
pub fn farfield_eigenvalue<T: Real>(k: T, d: Complex<T>) -> Complex<T> {
    let quarter = Complex::from_polar(T::one(), -T::FRAC_PI_4());
    quarter * (T::lit(8.0) * T::PI() / k).sqrt() * d
}

/// `1 + 2ik e^{-iπ/4} / √(8πk) μ`, the scattering-operator eigenvalue
/// belonging to a far-field eigenvalue `μ`; lies on the unit circle.
pub fn scattering_eigenvalue<T: Real>(k: T, mu: Complex<T>) -> Complex<T> {
    let quarter = Complex::from_polar(T::one(), -T::FRAC_PI_4());
    let factor = Complex::new(T::zero(), T::lit(2.0) * k) * quarter / (T::lit(8.0) * T::PI() * k).sqrt();
    Complex::new(T::one(), T::zero()) + factor * mu
}

/// Spectral data of one mode at one wavenumber.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhaseRecord<T> {
    pub k: T,
    pub m: u32,
    pub gamma: Complex<T>,
    pub delta_hat: T,
    /// Eigenvalue of `F`.
    pub mu: Complex<T>,
    /// Eigenvalue of `F^b`.
    pub mu_b: Complex<T>,
}

impl<T: Real> PhaseRecord<T> {
    pub fn from_coefficients(c: &ModeCoefficients<T>) -> Self {
        Self {
            k: c.k,
            m: c.m,
            gamma: c.gamma,
            delta_hat: c.delta_hat,
            mu: farfield_eigenvalue(c.k, c.d),
            mu_b: farfield_eigenvalue(c.k, c.d_b),
        }
    }
}

/// Smallest mode count for which truncation at `M` is admissible.
pub fn min_mode_count<T: Real>(k: T, radius: T) -> u32 {
    (k * radius).ceil().to_u32().unwrap_or(u32::MAX).saturating_add(40)
}

/// `max(300, ceil(kR) + 40)`.
pub fn default_mode_count<T: Real>(k: T, radius: T) -> u32 {
    min_mode_count(k, radius).max(300)
}

/// Phase records for `m = 0..=m_max` at one wavenumber.
pub fn phase_records<T: Real>(cfg: &MediumConfig<T>, k: T, m_max: u32) -> Result<Vec<PhaseRecord<T>>> {
    let solver = ModeSolver::new(cfg, k, m_max)?;
    (0..=m_max)
        .map(|m| {
            solver
                .coefficients(m)
                .map(|c| PhaseRecord::from_coefficients(&c))
                .map_err(|e| e.at_mode(k.to_f64().unwrap_or(f64::NAN), m))
        })
        .collect()
}

/// An extremal phase and the mode attaining it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Extremum<T> {
    pub delta: T,
    pub mode: u32,
}

/// The extremal phase `δ⋆` at one wavenumber.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StarTrack<T> {
    pub k: T,
    pub delta_star: T,
    pub argmax_mode: u32,
    pub regime: Regime,
    /// At a regime crossing `delta_star` holds the largest phase and this
    /// holds the smallest positive one.
    pub alternate: Option<Extremum<T>>,
}

fn largest_phase<T: Real>(records: &[PhaseRecord<T>]) -> Extremum<T> {
    let mut best = Extremum { delta: records[0].delta_hat, mode: records[0].m };
    for r in &records[1..] {
        if r.delta_hat > best.delta {
            best = Extremum { delta: r.delta_hat, mode: r.m };
        }
    }
    best
}

fn smallest_positive_phase<T: Real>(records: &[PhaseRecord<T>]) -> Extremum<T> {
    let mut best: Option<Extremum<T>> = None;
    for r in records.iter().filter(|r| r.delta_hat > T::zero()) {
        if best.is_none_or(|b| r.delta_hat < b.delta) {
            best = Some(Extremum { delta: r.delta_hat, mode: r.m });
        }
    }
    // every mode invisible
    best.unwrap_or(Extremum { delta: T::TAU(), mode: 0 })
}

/// Selects `δ⋆` from the phases of one wavenumber: the largest phase when
/// `n > n_b`, the smallest strictly positive phase when `n_b > n` (2π if
/// none is positive). Ties go to the smaller mode.
///
/// `records` must hold the modes `0..=M` of a single `k`.
pub fn delta_star<T: Real>(records: &[PhaseRecord<T>], regime: Regime) -> Result<StarTrack<T>> {
    let first = records
        .first()
        .ok_or_else(|| Error::InvalidInput("no phase records".into()))?;
    for (i, r) in records.iter().enumerate() {
        if r.k != first.k || r.m as usize != i {
            return Err(Error::InvalidInput(format!(
                "records must cover m = 0..=M of one k; entry {i} has k = {}, m = {}",
                r.k, r.m
            )));
        }
    }
    let (star, alternate) = match regime {
        Regime::NAboveNb => (largest_phase(records), None),
        Regime::NbAboveN => (smallest_positive_phase(records), None),
        Regime::Crossing => (largest_phase(records), Some(smallest_positive_phase(records))),
    };
    Ok(StarTrack {
        k: first.k,
        delta_star: star.delta,
        argmax_mode: star.mode,
        regime,
        alternate,
    })
}

/// `-cot(δ/2)`, the eigenvalue of the Cayley transform belonging to `e^{iδ}`.
pub fn cayley_value<T: Real>(delta_hat: T) -> Result<T> {
    if !(delta_hat > T::zero() && delta_hat < T::TAU()) {
        return Err(Error::PhaseAtBranchPoint { delta: delta_hat.to_f64().unwrap_or(f64::NAN) });
    }
    let half = delta_hat * T::lit(0.5);
    Ok(-half.cos() / half.sin())
}

/// `i (1 + γ) / (1 - γ)`; real for unimodular `γ ≠ 1`.
pub fn cayley_from_gamma<T: Real>(gamma: Complex<T>) -> Complex<T> {
    let one = Complex::new(T::one(), T::zero());
    Complex::<T>::i() * (one + gamma) / (one - gamma)
}

/// Far-field pattern `u∞(θ_s, θ_i)` of the disk, truncated at `|m| <= M`:
///
/// ```text
/// u∞ = √(2/(πk)) e^{-iπ/4} Σ_{|m| <= M} e^{im(θ_s - θ_i)} D_m
///    = √(2/(πk)) e^{-iπ/4} [D_0 + 2 Σ_{m=1}^{M} cos(m(θ_s - θ_i)) D_m]
/// ```
pub fn farfield_kernel<T: Real>(cfg: &MediumConfig<T>, k: T, theta_s: T, theta_i: T, m_max: u32) -> Result<Complex<T>> {
    let needed = min_mode_count(k, cfg.radius);
    if m_max < needed {
        return Err(Error::InvalidInput(format!("M = {m_max} below ceil(kR) + 40 = {needed}")));
    }
    let solver = ModeSolver::new(cfg, k, m_max)?;
    let angle = theta_s - theta_i;
    let mut sum = solver.true_coeffs(0)?.d_flushed();
    for m in 1..=m_max {
        let d = solver.true_coeffs(m)?.d_flushed();
        sum = sum + d * (T::lit(2.0) * (T::from_u32(m).unwrap() * angle).cos());
    }
    let quarter = Complex::from_polar(T::one(), -T::FRAC_PI_4());
    Ok(quarter * (T::lit(2.0) / (T::PI() * k)).sqrt() * sum)
}
