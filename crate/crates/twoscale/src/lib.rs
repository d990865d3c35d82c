//! Numerical toolkit for the regularized density of states of 1D
//! incommensurate two-scale Schrödinger operators
//!
//!   H_ε = −½ d²/dx² + v₁(x) + v₂((1+ε)x),
//!
//! with 1-periodic potentials built from Gaussian wells. Two independent
//! routes to the Gaussian-smeared DoS ν_{ε,σ} are provided, each serving
//! as a validation oracle for the other:
//!
//! - [`momentum`]: a momentum-space lattice truncation of the fibered
//!   operator Ĥ_ε(ξ) combined with Chebyshev (kernel polynomial) moment
//!   evaluation of the local spectral density and quadrature over ξ.
//! - [`semiclassical`]: the second-order expansion
//!   ν_{ε,σ} ≈ L₀ + εL₁ + ε²L₂ built from the spectral decomposition of
//!   the Bloch-fiber symbol h(k,X) = ½(−i∇+k)² + V(x, x+X) on the unit
//!   torus ([`bloch`]) and divided differences of the test function
//!   ([`divided`]).
//!
//! Near critical points of the band surfaces E_j(k,X) the DoS develops
//! ε-scale oscillations; [`harmonic`] locates those critical points,
//! builds the quantum-oscillator effective model for the level comb, and
//! [`wigner`] provides the phase-space diagnostics that delimit the
//! model's validity.
//!
//! Generic numeric kernels (test functions, divided differences, grids,
//! Chebyshev machinery, contour extraction) are written over an abstract
//! scalar ([`scalar::Scalar`]); the physics pipeline instantiates them at
//! [`Real`] = `f64`.

pub mod bloch;
pub mod contour;
pub mod curve;
pub mod divided;
pub mod harmonic;
pub mod momentum;
pub mod pipeline;
pub mod potential;
pub mod scalar;
pub mod semiclassical;
pub mod testfn;
pub mod wigner;

mod error;

pub use error::TwoScaleError;

/// Concrete scalar used by the physics pipeline.
pub type Real = f64;
/// Complex scalar matching [`Real`].
pub type Cplx = num_complex::Complex<f64>;

/// Result alias for fallible toolkit operations.
pub type Result<T> = std::result::Result<T, TwoScaleError>;
