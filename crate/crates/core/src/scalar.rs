//! The floating-point abstraction every numerical routine is generic over.

use std::fmt::{Debug, Display, LowerExp};

use num_traits::{Float, FloatConst, FromPrimitive};

/// A binary floating-point scalar (`f32` or `f64`).
///
/// The associated constants describe the exponent range so that scaled
/// arithmetic can move values in and out of the representable range
/// without intermediate overflow.
pub trait Real:
    Float + FloatConst + FromPrimitive + Debug + Display + LowerExp + Default + Send + Sync + 'static
{
    /// Largest `e` such that `2^e` is finite.
    const MAX_EXP2: i32;
    /// Smallest `e` such that `2^e` is a normal number.
    const MIN_EXP2: i32;
    /// Scaled magnitudes below `2^FLUSH_EXP2` are treated as exact zero when
    /// a scattering coefficient is brought back to plain floating point.
    const FLUSH_EXP2: i64;
    /// Euler-Mascheroni constant.
    const EULER_GAMMA: Self;

    /// Converts an `f64` literal.
    #[inline]
    fn lit(x: f64) -> Self {
        Self::from_f64(x).expect("literal representable")
    }

    /// Converts a mode index or count.
    #[inline]
    fn from_index(i: usize) -> Self {
        Self::from_usize(i).expect("index representable")
    }

    /// Largest value strictly below `2π`.
    fn below_tau() -> Self;
}

impl Real for f64 {
    const MAX_EXP2: i32 = 1023;
    const MIN_EXP2: i32 = -1022;
    const FLUSH_EXP2: i64 = -1000;
    const EULER_GAMMA: Self = 0.577_215_664_901_532_9;

    fn below_tau() -> Self {
        f64::from_bits(std::f64::consts::TAU.to_bits() - 1)
    }
}

impl Real for f32 {
    const MAX_EXP2: i32 = 127;
    const MIN_EXP2: i32 = -126;
    const FLUSH_EXP2: i64 = -120;
    const EULER_GAMMA: Self = 0.577_215_7;

    fn below_tau() -> Self {
        f32::from_bits(std::f32::consts::TAU.to_bits() - 1)
    }
}

/// Multiplies `x` by `2^e`, stepping through the exponent range so that no
/// intermediate power of two overflows or underflows.
pub fn ldexp<T: Real>(mut x: T, mut e: i64) -> T {
    let step = i64::from(T::MAX_EXP2 - 1);
    let two = T::lit(2.0);
    while e > step {
        x = x * two.powi(step as i32);
        e -= step;
        if x.is_infinite() {
            return x;
        }
    }
    while e < -step {
        x = x * two.powi(-step as i32);
        e += step;
        if x == T::zero() {
            return x;
        }
    }
    x * two.powi(e as i32)
}
