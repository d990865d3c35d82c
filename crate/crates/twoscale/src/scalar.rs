//! Scalar abstraction for the generic numeric kernels.
//!
//! The low-level numerics (test functions, divided differences, grids,
//! Chebyshev recurrences, marching squares) are written against
//! [`Scalar`] so they work for `f32` and `f64` alike; the physics layer
//! pins everything to `f64` through the crate-root aliases.

use num_traits::{Float, FloatConst, FromPrimitive, NumAssign};

/// Floating-point scalar with the constants and conversions the kernels
/// need. Implemented for `f32` and `f64`.
pub trait Scalar: Float + FloatConst + FromPrimitive + NumAssign + std::fmt::Debug + 'static {
    /// Lossless-enough conversion from `f64` literals in formulas.
    fn of(x: f64) -> Self {
        Self::from_f64(x).expect("literal representable in scalar type")
    }
}

impl Scalar for f32 {}
impl Scalar for f64 {}
