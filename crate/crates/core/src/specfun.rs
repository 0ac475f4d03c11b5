//! Integer-order cylinder functions of real argument in scaled arithmetic.
//!
//! * `J_m` by Miller's backward recurrence, normalized with
//!   `J_0 + 2 Σ J_{2k} = 1`.
//! * `Y_0`, `Y_1` from the Neumann series over the same `J_k`, then `Y_m` by
//!   upward recurrence (stable for the dominant solution).
//! * `I_m` by backward recurrence normalized with `I_0 + 2 Σ I_k = e^x`.
//!
//! Derivatives use `f'_m = f_{m-1} - (m/x) f_m`, with `J'_0 = -J_1`,
//! `Y'_0 = -Y_1` and `I'_0 = I_1`.
//!
//! Only orders `m >= 0` are exposed; callers use `J_{-m} = (-1)^m J_m` (and the
//! same identity for `Y` and `H`, while `I_{-m} = I_m`).

use crate::error::{Error, Result};
use crate::scalar::Real;
use crate::scaled::{ScaledComplex, ScaledReal};

/// Largest supported order.
pub const MAX_ORDER: u32 = 400;
/// Largest supported argument.
pub const MAX_ARGUMENT: f64 = 1.0e3;
/// Arguments below this are evaluated through the leading series term.
pub const SMALL_ARGUMENT: f64 = 1.0e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Kind {
    Ordinary,
    Modified,
}

/// Values `f_0 ..= f_{m_max + 1}` of one cylinder function at a fixed argument.
#[derive(Debug, Clone)]
pub struct BesselTable<T> {
    x: T,
    kind: Kind,
    values: Vec<ScaledReal<T>>,
}

impl<T: Real> BesselTable<T> {
    pub fn argument(&self) -> T {
        self.x
    }

    /// Largest order for which both value and derivative are available.
    pub fn max_order(&self) -> u32 {
        (self.values.len() - 2) as u32
    }

    pub fn value(&self, m: u32) -> ScaledReal<T> {
        self.values[m as usize]
    }

    /// Derivative with respect to the argument.
    pub fn derivative(&self, m: u32) -> ScaledReal<T> {
        if m == 0 {
            match self.kind {
                Kind::Ordinary => -self.values[1],
                Kind::Modified => self.values[1],
            }
        } else {
            let ratio = T::from_u32(m).unwrap() / self.x;
            self.values[m as usize - 1] - self.values[m as usize].mul_float(ratio)
        }
    }
}

/// `J_m` and `Y_m` sharing one argument; gives access to `H¹_m = J_m + i Y_m`.
#[derive(Debug, Clone)]
pub struct JyTable<T> {
    pub j: BesselTable<T>,
    pub y: BesselTable<T>,
}

impl<T: Real> JyTable<T> {
    pub fn hankel(&self, m: u32) -> ScaledComplex<T> {
        ScaledComplex::new(self.j.value(m), self.y.value(m))
    }

    pub fn hankel_prime(&self, m: u32) -> ScaledComplex<T> {
        ScaledComplex::new(self.j.derivative(m), self.y.derivative(m))
    }
}

fn check_domain<T: Real>(function: &'static str, m: u32, x: T) -> Result<()> {
    let xf = x.to_f64().unwrap_or(f64::NAN);
    if !(xf > 0.0) || xf > MAX_ARGUMENT || m > MAX_ORDER {
        return Err(Error::Domain { function, order: m, x: xf });
    }
    Ok(())
}

/// Starting order for the backward recurrences; even, and far enough above
/// both the requested order and the turning point `k ≈ x`.
fn miller_start<T: Real>(top: usize, x: T) -> usize {
    let a = (top as f64).max(x.to_f64().unwrap().ceil());
    let n = (a + 20.0 + 15.0 * a.cbrt()).ceil() as usize;
    (n.max(top + 2) + 1) & !1
}

fn is_tiny<T: Real>(x: T) -> bool {
    x < T::lit(SMALL_ARGUMENT)
}

/// `(x/2)^m / m!` for `m = 0..=top`.
fn leading_series<T: Real>(top: usize, x: T) -> Vec<ScaledReal<T>> {
    let half = ScaledReal::new(x * T::lit(0.5));
    let mut out = Vec::with_capacity(top + 1);
    let mut term = ScaledReal::one();
    out.push(term);
    for m in 1..=top {
        term = term * half / ScaledReal::new(T::from_index(m));
        out.push(term);
    }
    out
}

/// Runs the backward recurrence `f_{k-1} = (2k/x) f_k + sign * f_{k+1}` from
/// `k = start`, returning unnormalized `f_0..=f_start` and the normalization
/// sum `f_0 + 2 Σ_{k ∈ S} f_k`, where `S` is the even orders (ordinary) or
/// all orders (modified).
fn backward_recurrence<T: Real>(start: usize, x: T, kind: Kind) -> (Vec<ScaledReal<T>>, ScaledReal<T>) {
    let big_exp = i64::from(T::MAX_EXP2 / 2);
    let big = T::lit(2.0).powi(big_exp as i32);
    let shrink = big.recip();
    let sign = match kind {
        Kind::Ordinary => -T::one(),
        Kind::Modified => T::one(),
    };
    let two = T::lit(2.0);
    let mut vals = vec![ScaledReal::zero(); start + 1];
    let mut offset = 0i64;
    let mut f_next = T::zero();
    let mut f = T::one();
    let mut sum = T::zero();
    vals[start] = ScaledReal::from_parts(f, offset);
    let weight = |k: usize| -> T {
        match kind {
            Kind::Ordinary if k % 2 == 1 => T::zero(),
            _ if k == 0 => T::one(),
            _ => two,
        }
    };
    sum = sum + weight(start) * f;
    for k in (1..=start).rev() {
        let mut f_prev = two * T::from_index(k) / x * f + sign * f_next;
        if f_prev.abs() > big {
            f_prev = f_prev * shrink;
            f = f * shrink;
            sum = sum * shrink;
            offset += big_exp;
        }
        f_next = f;
        f = f_prev;
        vals[k - 1] = ScaledReal::from_parts(f, offset);
        sum = sum + weight(k - 1) * f;
    }
    (vals, ScaledReal::from_parts(sum, offset))
}

/// Normalized `J_0..=J_start` (start ≥ top), or the leading series for tiny `x`.
fn bessel_j_values<T: Real>(top: usize, x: T) -> Vec<ScaledReal<T>> {
    if is_tiny(x) {
        return leading_series(top, x);
    }
    let start = miller_start(top, x);
    let (mut vals, norm) = backward_recurrence(start, x, Kind::Ordinary);
    for v in vals.iter_mut() {
        *v = *v / norm;
    }
    vals
}

/// `Y_0` and `Y_1` from the Neumann series in the normalized `J_k`.
fn neumann_y01<T: Real>(x: T, j: &[ScaledReal<T>]) -> (T, T) {
    if is_tiny(x) {
        let y0 = T::FRAC_2_PI() * ((x * T::lit(0.5)).ln() + T::EULER_GAMMA);
        let y1 = -T::FRAC_2_PI() / x;
        return (y0, y1);
    }
    let log_term = (x * T::lit(0.5)).ln() + T::EULER_GAMMA;
    let jf = |k: usize| j.get(k).map_or(T::zero(), |v| v.to_float());
    let mut s0 = T::zero();
    let mut s1 = T::zero();
    let mut k = 1usize;
    while 2 * k < j.len() {
        let kf = T::from_index(k);
        let alt = if k.is_multiple_of(2) { T::one() } else { -T::one() };
        s0 = s0 + alt * jf(2 * k) / kf;
        // (-1)^(k+1) (2k+1) / (k (k+1)) J_{2k+1}
        s1 = s1 - alt * (T::lit(2.0) * kf + T::one()) / (kf * (kf + T::one())) * jf(2 * k + 1);
        k += 1;
    }
    let y0 = T::FRAC_2_PI() * log_term * jf(0) - T::lit(2.0) * T::FRAC_2_PI() * s0;
    let y1 = -T::FRAC_2_PI() / x * jf(0) + T::FRAC_2_PI() * (log_term - T::one()) * jf(1) + T::FRAC_2_PI() * s1;
    (y0, y1)
}

/// `Y_0..=Y_top` by upward recurrence with rescaling.
fn bessel_y_values<T: Real>(top: usize, x: T, y0: T, y1: T) -> Vec<ScaledReal<T>> {
    let big_exp = i64::from(T::MAX_EXP2 / 2);
    let big = T::lit(2.0).powi(big_exp as i32);
    let shrink = big.recip();
    let mut out = Vec::with_capacity(top + 1);
    out.push(ScaledReal::new(y0));
    if top == 0 {
        return out;
    }
    out.push(ScaledReal::new(y1));
    let (mut prev, mut cur, mut offset) = (y0, y1, 0i64);
    for k in 1..top {
        let mut next = T::lit(2.0) * T::from_index(k) / x * cur - prev;
        if next.abs() > big {
            next = next * shrink;
            cur = cur * shrink;
            offset += big_exp;
        }
        prev = cur;
        cur = next;
        out.push(ScaledReal::from_parts(cur, offset));
    }
    out
}

/// `J_0 ..= J_{m_max+1}` at `x`.
pub fn bessel_j_table<T: Real>(m_max: u32, x: T) -> Result<BesselTable<T>> {
    check_domain("bessel_j", m_max, x)?;
    let top = m_max as usize + 1;
    let mut values = bessel_j_values(top, x);
    values.truncate(top + 1);
    Ok(BesselTable { x, kind: Kind::Ordinary, values })
}

/// `J_m` and `Y_m` for `m = 0 ..= m_max + 1` at `x`.
pub fn bessel_jy_table<T: Real>(m_max: u32, x: T) -> Result<JyTable<T>> {
    check_domain("bessel_y", m_max, x)?;
    let top = m_max as usize + 1;
    let mut jv = bessel_j_values(top, x);
    let (y0, y1) = neumann_y01(x, &jv);
    let yv = if is_tiny(x) {
        tiny_y_values(top, x, y0)
    } else {
        bessel_y_values(top, x, y0, y1)
    };
    jv.truncate(top + 1);
    Ok(JyTable {
        j: BesselTable { x, kind: Kind::Ordinary, values: jv },
        y: BesselTable { x, kind: Kind::Ordinary, values: yv },
    })
}

/// Leading terms `Y_m ≈ -(m-1)!/π (2/x)^m`, formed in scaled arithmetic.
fn tiny_y_values<T: Real>(top: usize, x: T, y0: T) -> Vec<ScaledReal<T>> {
    let mut out = Vec::with_capacity(top + 1);
    out.push(ScaledReal::new(y0));
    let two_over_x = ScaledReal::new(T::lit(2.0) / x);
    let mut term = ScaledReal::new(-T::FRAC_1_PI()) * two_over_x;
    for m in 1..=top {
        out.push(term);
        term = term * two_over_x * ScaledReal::new(T::from_index(m));
    }
    out
}

/// `I_0 ..= I_{m_max+1}` at `x`.
pub fn bessel_i_table<T: Real>(m_max: u32, x: T) -> Result<BesselTable<T>> {
    check_domain("bessel_i", m_max, x)?;
    let top = m_max as usize + 1;
    let values = if is_tiny(x) {
        leading_series(top, x)
    } else {
        let start = miller_start(top, x);
        let (mut vals, norm) = backward_recurrence(start, x, Kind::Modified);
        let scale = ScaledReal::exp(x) / norm;
        vals.truncate(top + 1);
        for v in vals.iter_mut() {
            *v = *v * scale;
        }
        vals
    };
    Ok(BesselTable { x, kind: Kind::Modified, values })
}

/// Bessel function of the first kind `J_m(x)`.
pub fn bessel_j<T: Real>(m: u32, x: T) -> Result<ScaledReal<T>> {
    Ok(bessel_j_table(m, x)?.value(m))
}

pub fn bessel_j_prime<T: Real>(m: u32, x: T) -> Result<ScaledReal<T>> {
    Ok(bessel_j_table(m, x)?.derivative(m))
}

/// Bessel function of the second kind `Y_m(x)`.
pub fn bessel_y<T: Real>(m: u32, x: T) -> Result<ScaledReal<T>> {
    Ok(bessel_jy_table(m, x)?.y.value(m))
}

pub fn bessel_y_prime<T: Real>(m: u32, x: T) -> Result<ScaledReal<T>> {
    Ok(bessel_jy_table(m, x)?.y.derivative(m))
}

/// Hankel function of the first kind `H¹_m(x) = J_m(x) + i Y_m(x)`.
pub fn hankel1<T: Real>(m: u32, x: T) -> Result<ScaledComplex<T>> {
    Ok(bessel_jy_table(m, x)?.hankel(m))
}

pub fn hankel1_prime<T: Real>(m: u32, x: T) -> Result<ScaledComplex<T>> {
    Ok(bessel_jy_table(m, x)?.hankel_prime(m))
}

/// Modified Bessel function of the first kind `I_m(x)`.
pub fn bessel_i<T: Real>(m: u32, x: T) -> Result<ScaledReal<T>> {
    Ok(bessel_i_table(m, x)?.value(m))
}

pub fn bessel_i_prime<T: Real>(m: u32, x: T) -> Result<ScaledReal<T>> {
    Ok(bessel_i_table(m, x)?.derivative(m))
}
