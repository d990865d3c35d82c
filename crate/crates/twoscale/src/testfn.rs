//! Gaussian test functions and their analytic derivatives.
//!
//! The regularized DoS is probed with f = δ_σ(E−·), a normalized
//! Gaussian centered at the scan energy E. The semiclassical linear
//! forms need derivatives of f up to fourth order; these are evaluated
//! analytically through probabilists' Hermite polynomials so that no
//! numerical differentiation noise enters L₁/L₂.

use crate::scalar::Scalar;
use crate::{Result, TwoScaleError};

/// Highest derivative order supported by [`SmoothFunction::eval`].
pub const MAX_DERIVATIVE_ORDER: usize = 4;

/// A smooth scalar function together with its first four derivatives.
///
/// Divided-difference kernels are generic over this trait: the Gaussian
/// test function is the production implementation, and polynomial probes
/// are used by tests to exercise exactness properties.
pub trait SmoothFunction<S: Scalar> {
    /// `order`-th derivative at `y`; `order = 0` is the value itself.
    fn eval(&self, y: S, order: usize) -> S;

    /// Characteristic width of the support, used for windowed evaluation.
    /// `None` means "everywhere relevant".
    fn support_radius(&self) -> Option<S> {
        None
    }
}

/// Normalized Gaussian δ_σ(E−y) of center `center` and smearing `sigma`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GaussianTestFunction<S> {
    pub center: S,
    pub sigma: S,
}

impl<S: Scalar> GaussianTestFunction<S> {
    pub fn new(center: S, sigma: S) -> Result<Self> {
        if !(sigma > S::zero()) || !sigma.is_finite() || !center.is_finite() {
            return Err(TwoScaleError::domain(format!(
                "Gaussian test function needs finite center and sigma > 0, got center={center:?} sigma={sigma:?}"
            )));
        }
        Ok(Self { center, sigma })
    }

    /// n-th derivative of y ↦ δ_σ(E−y), exact via Hermite polynomials:
    /// dⁿ/dyⁿ δ_σ(E−y) = σ⁻ⁿ (−1)ⁿ Heₙ(z) δ_σ(E−y), z = (y−E)/σ.
    pub fn derivative(&self, y: S, order: usize) -> Result<S> {
        if order > MAX_DERIVATIVE_ORDER {
            return Err(TwoScaleError::domain(format!(
                "test-function derivative order {order} unsupported (max {MAX_DERIVATIVE_ORDER})"
            )));
        }
        let z = (y - self.center) / self.sigma;
        let base = (-z * z / S::of(2.0)).exp() / (self.sigma * (S::of(2.0) * S::PI()).sqrt());
        let he = match order {
            0 => S::one(),
            1 => z,
            2 => z * z - S::one(),
            3 => z * (z * z - S::of(3.0)),
            4 => (z * z) * (z * z - S::of(6.0)) + S::of(3.0),
            _ => unreachable!(),
        };
        let sign = if order % 2 == 0 { S::one() } else { -S::one() };
        Ok(sign * he * base / self.sigma.powi(order as i32))
    }

    pub fn value(&self, y: S) -> S {
        self.derivative(y, 0).expect("order 0 always valid")
    }
}

impl<S: Scalar> SmoothFunction<S> for GaussianTestFunction<S> {
    fn eval(&self, y: S, order: usize) -> S {
        self.derivative(y, order)
            .expect("divided-difference kernels stay within order 4")
    }

    fn support_radius(&self) -> Option<S> {
        // δ_σ⁗ at 12σ is ~1e−28 of the peak; past that everything is noise.
        Some(self.sigma * S::of(12.0))
    }
}

/// Monomial probe yᵈ used by tests: its d-th divided differences are the
/// constant d!, which pins down every coincidence branch of the kernels.
#[derive(Debug, Clone, Copy)]
pub struct PolynomialProbe {
    pub degree: usize,
}

impl<S: Scalar> SmoothFunction<S> for PolynomialProbe {
    fn eval(&self, y: S, order: usize) -> S {
        if order > self.degree {
            return S::zero();
        }
        // d!/(d−n)! y^{d−n}
        let mut coef = S::one();
        for i in 0..order {
            coef = coef * S::from_usize(self.degree - i).unwrap();
        }
        coef * y.powi((self.degree - order) as i32)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn peak_value_matches_normalization() {
        let f = GaussianTestFunction::new(0.0f64, 1.0).unwrap();
        assert_relative_eq!(f.value(0.0), 1.0 / (2.0 * std::f64::consts::PI).sqrt(), max_relative = 1e-14);
        assert_eq!(f.derivative(0.0, 1).unwrap(), 0.0);
    }

    #[test]
    fn integrates_to_one() {
        let f = GaussianTestFunction::new(2.0f64, 0.4).unwrap();
        // straightforward composite Simpson over ±12σ
        let (a, b, n) = (2.0 - 4.8, 2.0 + 4.8, 4800);
        let h = (b - a) / n as f64;
        let mut s = f.value(a) + f.value(b);
        for i in 1..n {
            s += f.value(a + i as f64 * h) * if i % 2 == 1 { 4.0 } else { 2.0 };
        }
        assert_relative_eq!(s * h / 3.0, 1.0, epsilon = 1e-8);
    }

    #[test]
    fn derivatives_match_central_differences() {
        let f = GaussianTestFunction::new(2.0f64, 0.4).unwrap();
        let y = 1.5;
        let h = 1e-3;
        for order in 1..=4usize {
            // 5-point central stencil applied to the (order−1)-th derivative
            let g = |t: f64| f.derivative(t, order - 1).unwrap();
            let fd = (-g(y + 2.0 * h) + 8.0 * g(y + h) - 8.0 * g(y - h) + g(y - 2.0 * h)) / (12.0 * h);
            assert_relative_eq!(f.derivative(y, order).unwrap(), fd, max_relative = 1e-5);
        }
    }

    #[test]
    fn order_five_rejected() {
        let f = GaussianTestFunction::new(0.0f64, 1.0).unwrap();
        assert!(f.derivative(0.0, 5).is_err());
    }

    #[test]
    fn polynomial_probe_derivatives() {
        let p = PolynomialProbe { degree: 4 };
        let v: f64 = SmoothFunction::<f64>::eval(&p, 2.0, 0);
        assert_eq!(v, 16.0);
        let v: f64 = SmoothFunction::<f64>::eval(&p, 2.0, 4);
        assert_eq!(v, 24.0);
        let v: f64 = SmoothFunction::<f64>::eval(&p, 3.0, 1);
        assert_eq!(v, 4.0 * 27.0);
    }

    #[test]
    fn works_in_f32_too() {
        let f = GaussianTestFunction::new(0.0f32, 1.0).unwrap();
        assert_relative_eq!(f.value(0.0), 0.39894228, max_relative = 1e-6);
    }
}
