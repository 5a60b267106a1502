//! Scalar abstraction. Every numeric routine in the crate is generic over
//! [`Real`], which is implemented for `f32` and `f64`.

use std::fmt::{Debug, Display};
use std::iter::Sum;

use num_traits::{Float, FloatConst, FromPrimitive, ToPrimitive};
use serde::de::DeserializeOwned;
use serde::Serialize;

/// Default tolerance used for normalization, unitarity, ties and phase
/// equality on `f64`.
pub const NORM_TOL: f64 = 1e-9;
pub const UNITARY_TOL: f64 = 1e-9;
pub const TIE_TOL: f64 = 1e-9;

/// Real floating point scalar usable as the component type of complex
/// amplitudes.
pub trait Real:
    Float
    + FloatConst
    + FromPrimitive
    + ToPrimitive
    + Debug
    + Display
    + Default
    + Sum
    + Send
    + Sync
    + Serialize
    + DeserializeOwned
    + 'static
{
    /// Smallest tolerance this precision can honour for the checks above.
    fn default_tol() -> Self;

    #[inline]
    fn lit(x: f64) -> Self {
        Self::from_f64(x).expect("f64 literal representable")
    }
}

impl Real for f64 {
    fn default_tol() -> Self {
        NORM_TOL
    }
}

impl Real for f32 {
    fn default_tol() -> Self {
        1e-4
    }
}

/// Numerical tolerances shared by validation, ranking and state comparison.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, serde::Deserialize)]
pub struct Tolerances<T> {
    pub norm: T,
    pub unitary: T,
    pub tie: T,
    pub phase: T,
}

impl<T: Real> Default for Tolerances<T> {
    fn default() -> Self {
        Self::uniform(T::default_tol())
    }
}

impl<T: Real> Tolerances<T> {
    /// Every tolerance set to `tol`.
    pub fn uniform(tol: T) -> Self {
        Self {
            norm: tol,
            unitary: tol,
            tie: tol,
            phase: tol,
        }
    }
}

/// Clamp a value that should be a probability into `[0, 1]`, absorbing
/// rounding at either end.
pub(crate) fn clamp_unit<T: Real>(x: T) -> T {
    if x < T::zero() {
        T::zero()
    } else if x > T::one() {
        T::one()
    } else {
        x
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults_per_precision() {
        let t64 = Tolerances::<f64>::default();
        assert_eq!(t64.norm, 1e-9);
        assert_eq!(t64.unitary, UNITARY_TOL);
        assert_eq!(t64.tie, TIE_TOL);
        let t32 = Tolerances::<f32>::default();
        assert!(t32.norm > 1e-6);
    }

    #[test]
    fn clamp_unit_bounds() {
        assert_eq!(clamp_unit(1.0 + 1e-14), 1.0);
        assert_eq!(clamp_unit(-1e-14f64), 0.0);
        assert_eq!(clamp_unit(0.25f64), 0.25);
    }
}
