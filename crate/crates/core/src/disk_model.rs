//! The penetrable disk `B_R` with constant index `n`, its artificial
//! background `n_b(k) = ρ/k²`, and the per-mode Mie coefficients of both.
//!
//! The background radial function is
//!
//! * `V_m(r) = J_m(√ρ r)` for `ρ > 0`,
//! * `V_m(r) = r^m` for `ρ = 0`,
//! * `V_m(r) = I_m(√|ρ| r)` for `ρ < 0`.
//!
//! The last case replaces `J_m(i√|ρ| r) = i^m I_m(√|ρ| r)` by its real
//! part-free form; the factor `i^m` cancels in `D_{b,m}` and is absorbed into
//! `B_{b,m}`, so phases and zero sets are unchanged.
//!
//! Only `m >= 0` is exposed. All coefficients are even in `m`: every factor
//! of `J_{-m} = (-1)^m J_m` appears once in a numerator and once in the
//! matching denominator.

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::scalar::Real;
use crate::scaled::{ScaledComplex, ScaledReal};
use crate::spectral;
use crate::specfun::{bessel_i_table, bessel_j_table, bessel_jy_table, BesselTable, JyTable};

/// One experiment: disk index, disk radius and background constant.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MediumConfig<T> {
    /// Refractive index inside the disk.
    pub n: T,
    /// Disk radius `R`.
    pub radius: T,
    /// Background constant, `n_b(k) = rho / k^2` inside the disk.
    pub rho: T,
}

/// Sign of `n - n_b(k)` inside the disk.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Regime {
    /// `n > n_b(k)`: phases accumulate at 0, `δ⋆` is the largest phase.
    NAboveNb,
    /// `n_b(k) > n`: phases accumulate at 2π, `δ⋆` is the smallest positive phase.
    NbAboveN,
    /// `n = n_b(k)` to within `1e-12`.
    Crossing,
}

impl Regime {
    pub fn as_str(&self) -> &'static str {
        match self {
            Regime::NAboveNb => "n_above_nb",
            Regime::NbAboveN => "nb_above_n",
            Regime::Crossing => "crossing",
        }
    }
}

impl std::str::FromStr for Regime {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "n_above_nb" => Ok(Regime::NAboveNb),
            "nb_above_n" => Ok(Regime::NbAboveN),
            "crossing" => Ok(Regime::Crossing),
            other => Err(Error::InvalidInput(format!("unknown regime `{other}`"))),
        }
    }
}

/// Half-width of the band around `n = n_b(k)` labelled [`Regime::Crossing`].
pub const CROSSING_TOLERANCE: f64 = 1e-12;

impl<T: Real> MediumConfig<T> {
    pub fn new(n: T, radius: T, rho: T) -> Result<Self> {
        if !(n > T::zero()) || !n.is_finite() {
            return Err(Error::InvalidInput(format!("refractive index must be positive, got {n}")));
        }
        if !(radius > T::zero()) || !radius.is_finite() {
            return Err(Error::InvalidInput(format!("radius must be positive, got {radius}")));
        }
        if !rho.is_finite() {
            return Err(Error::InvalidInput(format!("rho must be finite, got {rho}")));
        }
        Ok(Self { n, radius, rho })
    }

    /// Background index `ρ/k²` inside the disk.
    pub fn background_index(&self, k: T) -> T {
        self.rho / (k * k)
    }

    pub fn regime(&self, k: T) -> Regime {
        let gap = self.n - self.background_index(k);
        if gap.abs() <= T::lit(CROSSING_TOLERANCE) {
            Regime::Crossing
        } else if gap > T::zero() {
            Regime::NAboveNb
        } else {
            Regime::NbAboveN
        }
    }
}

/// `V_m(r)` and `V'_m(r)` for `m = 0..=m_max` at one radius.
#[derive(Debug, Clone)]
pub struct BackgroundTable<T> {
    values: Vec<ScaledReal<T>>,
    derivatives: Vec<ScaledReal<T>>,
}

impl<T: Real> BackgroundTable<T> {
    pub fn value(&self, m: u32) -> ScaledReal<T> {
        self.values[m as usize]
    }

    pub fn derivative(&self, m: u32) -> ScaledReal<T> {
        self.derivatives[m as usize]
    }
}

/// Tabulates `V_m(r)`, `V'_m(r)` for `0 <= r <= 10 R`.
pub fn background_table<T: Real>(cfg: &MediumConfig<T>, m_max: u32, r: T) -> Result<BackgroundTable<T>> {
    if !(r >= T::zero()) || r > T::lit(10.0) * cfg.radius {
        return Err(Error::InvalidInput(format!("radius {r} outside [0, 10 R]")));
    }
    let len = m_max as usize + 1;
    let scale = cfg.rho.abs().sqrt();
    if r == T::zero() {
        // V_m(0) = δ_{m0}; V'_1(0) = √|ρ|/2 (or 1 when ρ = 0)
        let mut values = vec![ScaledReal::zero(); len];
        let mut derivatives = vec![ScaledReal::zero(); len];
        values[0] = ScaledReal::one();
        if len > 1 {
            derivatives[1] = if cfg.rho == T::zero() {
                ScaledReal::one()
            } else {
                ScaledReal::new(scale * T::lit(0.5))
            };
        }
        return Ok(BackgroundTable { values, derivatives });
    }
    if cfg.rho == T::zero() {
        let rs = ScaledReal::new(r);
        let values: Vec<_> = (0..len).map(|m| rs.powi(m as u32)).collect();
        let derivatives = (0..len)
            .map(|m| {
                if m == 0 {
                    ScaledReal::zero()
                } else {
                    values[m - 1].mul_float(T::from_index(m))
                }
            })
            .collect();
        return Ok(BackgroundTable { values, derivatives });
    }
    let table = if cfg.rho > T::zero() {
        bessel_j_table(m_max, scale * r)?
    } else {
        bessel_i_table(m_max, scale * r)?
    };
    let values = (0..=m_max).map(|m| table.value(m)).collect();
    let derivatives = (0..=m_max).map(|m| table.derivative(m).mul_float(scale)).collect();
    Ok(BackgroundTable { values, derivatives })
}

/// Background radial function `V_m(r)`.
pub fn v_m<T: Real>(cfg: &MediumConfig<T>, m: u32, r: T) -> Result<ScaledReal<T>> {
    Ok(background_table(cfg, m, r)?.value(m))
}

/// `V'_m(r)`.
pub fn v_m_prime<T: Real>(cfg: &MediumConfig<T>, m: u32, r: T) -> Result<ScaledReal<T>> {
    Ok(background_table(cfg, m, r)?.derivative(m))
}

/// Interior coefficient `B` and far-field coefficient `D` for one mode, kept scaled.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CoefficientPair<T> {
    pub b: ScaledComplex<T>,
    pub d: ScaledComplex<T>,
}

impl<T: Real> CoefficientPair<T> {
    /// `D` in plain floating point; magnitudes below `2^T::FLUSH_EXP2` become exact zero.
    pub fn d_flushed(&self) -> Complex<T> {
        self.d.to_complex_flushed()
    }
}

/// The cylinder-function values entering the coefficient formulas for one mode.
#[derive(Debug, Clone, Copy)]
pub struct ModeInputs<T> {
    /// `J_m(kR)`, `J'_m(kR)`.
    pub j_out: ScaledReal<T>,
    pub jp_out: ScaledReal<T>,
    /// `H¹_m(kR)`, `H¹'_m(kR)`.
    pub h_out: ScaledComplex<T>,
    pub hp_out: ScaledComplex<T>,
    /// `J_m(k√n R)`, `J'_m(k√n R)`.
    pub j_in: ScaledReal<T>,
    pub jp_in: ScaledReal<T>,
    /// `V_m(R)`, `V'_m(R)`.
    pub v: ScaledReal<T>,
    pub vp: ScaledReal<T>,
}

fn real<T: Real>(x: ScaledReal<T>) -> ScaledComplex<T> {
    ScaledComplex::from_real(x)
}

/// `B_m`, `D_m` of the true medium, in the exact arrangement
///
/// ```text
/// B_m = [-H'(kR) J(kR) + H(kR) J'(kR)] / [-J(k√n R) H'(kR) + √n J'(k√n R) H(kR)]
/// D_m = [-√n J'(k√n R) J(kR) + J'(kR) J(k√n R)] / [same denominator]
/// ```
pub fn true_from_inputs<T: Real>(inp: &ModeInputs<T>, sqrt_n: T) -> Option<CoefficientPair<T>> {
    let sn = ScaledReal::new(sqrt_n);
    let num_b = -(inp.hp_out * inp.j_out) + inp.h_out * inp.jp_out;
    let den = -(real(inp.j_in) * inp.hp_out) + real(sn * inp.jp_in) * inp.h_out;
    let num_d = -(sn * inp.jp_in * inp.j_out) + inp.jp_out * inp.j_in;
    if den.is_zero() {
        return None;
    }
    Some(CoefficientPair { b: num_b / den, d: real(num_d) / den })
}

/// `B_{b,m}`, `D_{b,m}` of the artificial background:
///
/// ```text
/// B_{b,m} = [-k H'(kR) J(kR) + H(kR) k J'(kR)] / [-k V(R) H'(kR) + V'(R) H(kR)]
/// D_{b,m} = [-V'(R) J(kR) + k J'(kR) V(R)] / [same denominator]
/// ```
pub fn background_from_inputs<T: Real>(inp: &ModeInputs<T>, k: T) -> Option<CoefficientPair<T>> {
    let ks = ScaledReal::new(k);
    let num_b = -(real(ks) * inp.hp_out * inp.j_out) + inp.h_out * (ks * inp.jp_out);
    let den = -(real(ks * inp.v) * inp.hp_out) + real(inp.vp) * inp.h_out;
    let num_d = -(inp.vp * inp.j_out) + ks * inp.jp_out * inp.v;
    if den.is_zero() {
        return None;
    }
    Some(CoefficientPair { b: num_b / den, d: real(num_d) / den })
}

/// Everything computed for one `(k, m)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ModeCoefficients<T> {
    pub k: T,
    pub m: u32,
    pub b: ScaledComplex<T>,
    pub d: Complex<T>,
    pub b_b: ScaledComplex<T>,
    pub d_b: Complex<T>,
    /// Eigenvalue of `(S^b)^* S` for this mode.
    pub gamma: Complex<T>,
    /// Phase of `gamma` in `[0, 2π)`.
    pub delta_hat: T,
    /// `gamma - 1` formed from the unflushed scaled coefficients; its
    /// imaginary part is the signed phase when the phase is below double
    /// resolution.
    pub gamma_minus_one: ScaledComplex<T>,
}

impl<T: Real> ModeCoefficients<T> {
    /// Signed phase offset from the nearest multiple of 2π: `arg(gamma)` where
    /// representable, else `Im(gamma - 1)` in scaled form.
    pub fn signed_phase_offset(&self) -> ScaledReal<T> {
        match self.gamma_minus_one.magnitude_exponent() {
            Some(e) if e < -20 => self.gamma_minus_one.im,
            None => ScaledReal::zero(),
            _ => ScaledReal::new(self.gamma.arg()),
        }
    }
}

/// Cylinder-function tables for every mode `0..=m_max` at one wavenumber.
#[derive(Debug, Clone)]
pub struct ModeSolver<T> {
    cfg: MediumConfig<T>,
    k: T,
    outer: JyTable<T>,
    inner: BesselTable<T>,
    background: BackgroundTable<T>,
}

fn check_wavenumber<T: Real>(k: T) -> Result<()> {
    if !(k > T::zero()) || !k.is_finite() {
        return Err(Error::InvalidInput(format!("wavenumber must be positive, got {k}")));
    }
    Ok(())
}

impl<T: Real> ModeSolver<T> {
    pub fn new(cfg: &MediumConfig<T>, k: T, m_max: u32) -> Result<Self> {
        check_wavenumber(k)?;
        let r = cfg.radius;
        Ok(Self {
            cfg: *cfg,
            k,
            outer: bessel_jy_table(m_max, k * r)?,
            inner: bessel_j_table(m_max, k * cfg.n.sqrt() * r)?,
            background: background_table(cfg, m_max, r)?,
        })
    }

    pub fn k(&self) -> T {
        self.k
    }

    pub fn max_order(&self) -> u32 {
        self.outer.j.max_order()
    }

    fn check_order(&self, m: u32) -> Result<()> {
        if m > self.max_order() {
            return Err(Error::InvalidInput(format!(
                "mode {m} above tabulated maximum {}",
                self.max_order()
            )));
        }
        Ok(())
    }

    pub fn inputs(&self, m: u32) -> ModeInputs<T> {
        ModeInputs {
            j_out: self.outer.j.value(m),
            jp_out: self.outer.j.derivative(m),
            h_out: self.outer.hankel(m),
            hp_out: self.outer.hankel_prime(m),
            j_in: self.inner.value(m),
            jp_in: self.inner.derivative(m),
            v: self.background.value(m),
            vp: self.background.derivative(m),
        }
    }

    fn resonance(&self, m: u32) -> Error {
        Error::ResonanceDenominator { k: self.k.to_f64().unwrap_or(f64::NAN), m }
    }

    pub fn true_coeffs(&self, m: u32) -> Result<CoefficientPair<T>> {
        self.check_order(m)?;
        true_from_inputs(&self.inputs(m), self.cfg.n.sqrt()).ok_or_else(|| self.resonance(m))
    }

    pub fn background_coeffs(&self, m: u32) -> Result<CoefficientPair<T>> {
        self.check_order(m)?;
        background_from_inputs(&self.inputs(m), self.k).ok_or_else(|| self.resonance(m))
    }

    pub fn coefficients(&self, m: u32) -> Result<ModeCoefficients<T>> {
        let tr = self.true_coeffs(m)?;
        let bg = self.background_coeffs(m)?;
        let (d, d_b) = (tr.d_flushed(), bg.d_flushed());
        let gamma = spectral::gamma_from(d, d_b);
        let delta_hat = spectral::phase_in_0_2pi(gamma)?;
        let two = ScaledReal::new(T::lit(2.0));
        let gamma_minus_one =
            bg.d.conj().scale(two) + tr.d.scale(two) + bg.d.conj() * tr.d * ScaledComplex::from_real(two * two);
        Ok(ModeCoefficients { k: self.k, m, b: tr.b, d, b_b: bg.b, d_b, gamma, delta_hat, gamma_minus_one })
    }
}

/// `(B_m, D_m)` for the disk of index `n`.
pub fn true_coeffs<T: Real>(cfg: &MediumConfig<T>, k: T, m: u32) -> Result<CoefficientPair<T>> {
    ModeSolver::new(cfg, k, m)?.true_coeffs(m)
}

/// `(B_{b,m}, D_{b,m})` for the artificial background.
pub fn background_coeffs<T: Real>(cfg: &MediumConfig<T>, k: T, m: u32) -> Result<CoefficientPair<T>> {
    ModeSolver::new(cfg, k, m)?.background_coeffs(m)
}

pub fn mode_coefficients<T: Real>(cfg: &MediumConfig<T>, k: T, m: u32) -> Result<ModeCoefficients<T>> {
    ModeSolver::new(cfg, k, m)?.coefficients(m)
}
