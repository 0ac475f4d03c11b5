//! Floating-point values with a separately carried binary exponent.
//!
//! Cylinder functions of order a few hundred leave the double-precision
//! range long before the products the scattering coefficients need do:
//! `J_300(5.5)` is about `2^-1603` while `Y_300(5.5)` is about `2^1594`.
//! [`ScaledReal`] keeps a mantissa in `[1, 2)` together with an `i64`
//! exponent, so such products are formed exactly and only descaled at the
//! end.

use std::cmp::Ordering;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_complex::Complex;

use crate::scalar::{ldexp, Real};

/// `value = mantissa * 2^exponent`, with `|mantissa|` in `[1, 2)` or exactly zero.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScaledReal<T> {
    mant: T,
    exp: i64,
}

/// Splits a finite non-zero float into a mantissa in `[1, 2)` (signed) and an exponent.
fn frexp<T: Real>(x: T) -> (T, i64) {
    let (bits, exp, sign) = x.integer_decode();
    let width = 63 - i64::from(bits.leading_zeros());
    let mant = T::from_u64(bits).expect("mantissa fits") * T::lit(2.0).powi(-(width as i32));
    let mant = if sign < 0 { -mant } else { mant };
    (mant, i64::from(exp) + width)
}

impl<T: Real> ScaledReal<T> {
    pub fn zero() -> Self {
        Self { mant: T::zero(), exp: 0 }
    }

    pub fn one() -> Self {
        Self { mant: T::one(), exp: 0 }
    }

    /// Wraps a plain float. Non-finite inputs are carried through unchanged
    /// so that they stay visible downstream.
    pub fn new(x: T) -> Self {
        if x == T::zero() {
            Self::zero()
        } else if !x.is_finite() {
            Self { mant: x, exp: 0 }
        } else {
            let (mant, exp) = frexp(x);
            Self { mant, exp }
        }
    }

    /// Builds `mantissa * 2^exponent` for an arbitrary finite `mantissa`.
    pub fn from_parts(mantissa: T, exponent: i64) -> Self {
        let s = Self::new(mantissa);
        if s.mant == T::zero() || !s.mant.is_finite() {
            s
        } else {
            Self { mant: s.mant, exp: s.exp + exponent }
        }
    }

    /// `2^e`.
    pub fn exp2i(e: i64) -> Self {
        Self { mant: T::one(), exp: e }
    }

    /// `e^x`, valid far beyond the overflow threshold of `T::exp`.
    pub fn exp(x: T) -> Self {
        // chunks small enough that T::exp never overflows
        let chunk = T::from_i32(T::MAX_EXP2 / 2).unwrap() * T::LN_2();
        let mut acc = Self::one();
        let mut rest = x;
        while rest.abs() > chunk {
            let c = chunk.copysign(rest);
            acc = acc * Self::new(c.exp());
            rest = rest - c;
        }
        acc * Self::new(rest.exp())
    }

    pub fn mantissa(&self) -> T {
        self.mant
    }

    pub fn exponent(&self) -> i64 {
        self.exp
    }

    pub fn is_zero(&self) -> bool {
        self.mant == T::zero()
    }

    pub fn is_finite(&self) -> bool {
        self.mant.is_finite()
    }

    /// Sign as -1, 0 or +1.
    pub fn signum(&self) -> T {
        if self.is_zero() {
            T::zero()
        } else {
            self.mant.signum()
        }
    }

    pub fn abs(self) -> Self {
        Self { mant: self.mant.abs(), exp: self.exp }
    }

    /// `log2 |value|`; `-inf` for zero.
    pub fn log2_abs(&self) -> T {
        if self.is_zero() {
            T::neg_infinity()
        } else {
            T::from_i64(self.exp).unwrap() + self.mant.abs().log2()
        }
    }

    /// Descales to a plain float (overflowing to infinity, underflowing
    /// gradually through the subnormals).
    pub fn to_float(self) -> T {
        if self.is_zero() {
            T::zero()
        } else {
            ldexp(self.mant, self.exp)
        }
    }

    pub fn mul_float(self, x: T) -> Self {
        self * Self::new(x)
    }

    /// Multiplies by `2^e` exactly.
    pub fn ldexp(self, e: i64) -> Self {
        if self.is_zero() {
            self
        } else {
            Self { mant: self.mant, exp: self.exp + e }
        }
    }

    pub fn recip(self) -> Self {
        Self::one() / self
    }

    pub fn powi(self, mut n: u32) -> Self {
        let mut base = self;
        let mut acc = Self::one();
        while n > 0 {
            if n & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            n >>= 1;
        }
        acc
    }

    /// Square root of a non-negative value.
    pub fn sqrt(self) -> Self {
        if self.is_zero() {
            return self;
        }
        if self.exp.rem_euclid(2) == 0 {
            Self::from_parts(self.mant.sqrt(), self.exp / 2)
        } else {
            Self::from_parts((self.mant * T::lit(2.0)).sqrt(), (self.exp - 1).div_euclid(2))
        }
    }

    /// Compares magnitudes.
    pub fn cmp_abs(&self, other: &Self) -> Ordering {
        match (self.is_zero(), other.is_zero()) {
            (true, true) => Ordering::Equal,
            (true, false) => Ordering::Less,
            (false, true) => Ordering::Greater,
            (false, false) => self.exp.cmp(&other.exp).then_with(|| {
                self.mant
                    .abs()
                    .partial_cmp(&other.mant.abs())
                    .unwrap_or(Ordering::Equal)
            }),
        }
    }

    /// The larger of two magnitudes.
    pub fn max_abs(self, other: Self) -> Self {
        if self.cmp_abs(&other) == Ordering::Less {
            other.abs()
        } else {
            self.abs()
        }
    }
}

impl<T: Real> Default for ScaledReal<T> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<T: Real> From<T> for ScaledReal<T> {
    fn from(x: T) -> Self {
        Self::new(x)
    }
}

impl<T: Real> Neg for ScaledReal<T> {
    type Output = Self;
    fn neg(self) -> Self {
        Self { mant: -self.mant, exp: self.exp }
    }
}

impl<T: Real> Mul for ScaledReal<T> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let m = self.mant * rhs.mant;
        if m == T::zero() || !m.is_finite() {
            return Self { mant: m, exp: 0 };
        }
        if m.abs() >= T::lit(2.0) {
            Self { mant: m * T::lit(0.5), exp: self.exp + rhs.exp + 1 }
        } else {
            Self { mant: m, exp: self.exp + rhs.exp }
        }
    }
}

impl<T: Real> Div for ScaledReal<T> {
    type Output = Self;
    fn div(self, rhs: Self) -> Self {
        let m = self.mant / rhs.mant;
        if m == T::zero() || !m.is_finite() {
            return Self { mant: m, exp: 0 };
        }
        if m.abs() < T::one() {
            Self { mant: m * T::lit(2.0), exp: self.exp - rhs.exp - 1 }
        } else {
            Self { mant: m, exp: self.exp - rhs.exp }
        }
    }
}

impl<T: Real> Add for ScaledReal<T> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        if rhs.is_zero() {
            return self;
        }
        if self.is_zero() {
            return rhs;
        }
        if !self.mant.is_finite() || !rhs.mant.is_finite() {
            return Self { mant: self.mant + rhs.mant, exp: 0 };
        }
        let (hi, lo) = if self.exp >= rhs.exp { (self, rhs) } else { (rhs, self) };
        let gap = hi.exp - lo.exp;
        // beyond this gap the smaller operand is below half an ulp
        if gap > 66 {
            return hi;
        }
        let sum = hi.mant + lo.mant * T::lit(2.0).powi(-(gap as i32));
        Self::from_parts(sum, hi.exp)
    }
}

impl<T: Real> Sub for ScaledReal<T> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

/// Complex number with independently scaled real and imaginary parts.
///
/// Keeping the two scales apart matters for `H = J + iY` at large order,
/// where the parts differ by thousands of binary orders of magnitude.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScaledComplex<T> {
    pub re: ScaledReal<T>,
    pub im: ScaledReal<T>,
}

impl<T: Real> ScaledComplex<T> {
    pub fn new(re: ScaledReal<T>, im: ScaledReal<T>) -> Self {
        Self { re, im }
    }

    pub fn zero() -> Self {
        Self::new(ScaledReal::zero(), ScaledReal::zero())
    }

    pub fn one() -> Self {
        Self::new(ScaledReal::one(), ScaledReal::zero())
    }

    pub fn from_real(re: ScaledReal<T>) -> Self {
        Self::new(re, ScaledReal::zero())
    }

    pub fn from_complex(z: Complex<T>) -> Self {
        Self::new(ScaledReal::new(z.re), ScaledReal::new(z.im))
    }

    /// `i^m`.
    pub fn i_pow(m: u32) -> Self {
        let one = ScaledReal::one();
        let zero = ScaledReal::zero();
        match m % 4 {
            0 => Self::new(one, zero),
            1 => Self::new(zero, one),
            2 => Self::new(-one, zero),
            _ => Self::new(zero, -one),
        }
    }

    pub fn conj(self) -> Self {
        Self::new(self.re, -self.im)
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_finite(&self) -> bool {
        self.re.is_finite() && self.im.is_finite()
    }

    /// Binary exponent of the larger component, `None` for zero.
    pub fn magnitude_exponent(&self) -> Option<i64> {
        match (self.re.is_zero(), self.im.is_zero()) {
            (true, true) => None,
            (false, true) => Some(self.re.exponent()),
            (true, false) => Some(self.im.exponent()),
            (false, false) => Some(self.re.exponent().max(self.im.exponent())),
        }
    }

    /// `|z|^2`.
    pub fn norm_sqr(self) -> ScaledReal<T> {
        self.re * self.re + self.im * self.im
    }

    pub fn norm(self) -> ScaledReal<T> {
        self.norm_sqr().sqrt()
    }

    /// Principal argument in `(-π, π]`.
    pub fn arg(self) -> T {
        match self.magnitude_exponent() {
            None => T::zero(),
            Some(e) => {
                let re = self.re.ldexp(-e).to_float();
                let im = self.im.ldexp(-e).to_float();
                im.atan2(re)
            }
        }
    }

    pub fn scale(self, s: ScaledReal<T>) -> Self {
        Self::new(self.re * s, self.im * s)
    }

    pub fn scale_float(self, s: T) -> Self {
        self.scale(ScaledReal::new(s))
    }

    /// Descales to plain complex floating point.
    pub fn to_complex(self) -> Complex<T> {
        Complex::new(self.re.to_float(), self.im.to_float())
    }

    /// Descales, returning exact zero when the magnitude is below
    /// `2^T::FLUSH_EXP2`.
    pub fn to_complex_flushed(self) -> Complex<T> {
        match self.magnitude_exponent() {
            Some(e) if e >= T::FLUSH_EXP2 => self.to_complex(),
            _ => Complex::new(T::zero(), T::zero()),
        }
    }
}

impl<T: Real> Default for ScaledComplex<T> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<T: Real> From<ScaledReal<T>> for ScaledComplex<T> {
    fn from(re: ScaledReal<T>) -> Self {
        Self::from_real(re)
    }
}

impl<T: Real> Neg for ScaledComplex<T> {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.re, -self.im)
    }
}

impl<T: Real> Add for ScaledComplex<T> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self::new(self.re + rhs.re, self.im + rhs.im)
    }
}

impl<T: Real> Sub for ScaledComplex<T> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self::new(self.re - rhs.re, self.im - rhs.im)
    }
}

impl<T: Real> Mul for ScaledComplex<T> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Self::new(
            self.re * rhs.re - self.im * rhs.im,
            self.re * rhs.im + self.im * rhs.re,
        )
    }
}

impl<T: Real> Mul<ScaledReal<T>> for ScaledComplex<T> {
    type Output = Self;
    fn mul(self, rhs: ScaledReal<T>) -> Self {
        self.scale(rhs)
    }
}

impl<T: Real> Div for ScaledComplex<T> {
    type Output = Self;
    fn div(self, rhs: Self) -> Self {
        let den = rhs.norm_sqr();
        let num = self * rhs.conj();
        Self::new(num.re / den, num.im / den)
    }
}
