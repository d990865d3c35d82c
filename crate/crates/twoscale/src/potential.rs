//! The two-scale model potential.
//!
//! V(x₁,x₂) = Σ_R v₁(x₁−R) + Σ_R v₂(x₂−R) with Gaussian wells
//! v_j(x) = −A_j δ_{σ_j}(x) on the unit lattice; the incommensurate
//! Hamiltonian evaluates it along the line (x, (1+ε)x). Both methods
//! consume the potential exclusively through its closed-form Fourier
//! coefficients v̂_j(G) = −A_j exp(−σ_j² G²/2); real-space evaluation
//! exists for tests only.

use crate::{Real, Result, TwoScaleError};

/// One periodized Gaussian well −A δ_σ(x mod 1).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GaussianWell {
    /// Well amplitude A (energy); positive values mean attractive wells.
    pub amplitude: Real,
    /// Well width σ (length), must be positive.
    pub width: Real,
}

/// The model potential: well 1 lives on the x-lattice, well 2 on the
/// (1+ε)x-lattice. Lattice constant fixed to 1.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PotentialSpec {
    pub wells: [GaussianWell; 2],
}

/// Index of a sublattice well; 1 = layer-x, 2 = layer-(1+ε)x.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WellIndex {
    First,
    Second,
}

impl PotentialSpec {
    pub fn new(a1: Real, sigma1: Real, a2: Real, sigma2: Real) -> Result<Self> {
        for (name, a, s) in [("well 1", a1, sigma1), ("well 2", a2, sigma2)] {
            if !(s > 0.0) || !s.is_finite() {
                return Err(TwoScaleError::domain(format!("{name}: width must be positive and finite, got {s}")));
            }
            if !a.is_finite() {
                return Err(TwoScaleError::domain(format!("{name}: amplitude must be finite, got {a}")));
            }
        }
        Ok(Self {
            wells: [
                GaussianWell { amplitude: a1, width: sigma1 },
                GaussianWell { amplitude: a2, width: sigma2 },
            ],
        })
    }

    /// The paper-model parameters: A₁ = 7, A₂ = 5, σ₁ = σ₂ = 0.05.
    pub fn paper_model() -> Self {
        Self::new(7.0, 0.05, 5.0, 0.05).expect("valid constants")
    }

    /// Potential with both amplitudes zero (free model), widths kept.
    pub fn free_model() -> Self {
        Self::new(0.0, 0.05, 0.0, 0.05).expect("valid constants")
    }

    pub fn well(&self, index: WellIndex) -> GaussianWell {
        match index {
            WellIndex::First => self.wells[0],
            WellIndex::Second => self.wells[1],
        }
    }

    /// Unit-cell Fourier coefficient v̂_j(G) = −A_j exp(−σ_j²G²/2) of the
    /// periodized well. `g` must be a reciprocal lattice vector (2πℤ).
    pub fn fourier_coefficient(&self, index: WellIndex, g: Real) -> Result<Real> {
        let ratio = g / (2.0 * std::f64::consts::PI);
        if (ratio - ratio.round()).abs() > 1e-9 * ratio.abs().max(1.0) {
            return Err(TwoScaleError::domain(format!(
                "G = {g} is not a reciprocal lattice vector (integer multiple of 2π)"
            )));
        }
        Ok(self.fourier_raw(index, g))
    }

    /// Same as [`Self::fourier_coefficient`] without the lattice check;
    /// operator assembly calls this on differences of lattice vectors.
    #[inline]
    pub fn fourier_raw(&self, index: WellIndex, g: Real) -> Real {
        let w = self.well(index);
        -w.amplitude * (-0.5 * w.width * w.width * g * g).exp()
    }

    /// Smallest integer n such that |v̂_j(2πn)| < `threshold` for both
    /// wells; the coupling stencil of both operators is cut there.
    pub fn coupling_reach(&self, threshold: Real) -> usize {
        let mut n = 1usize;
        loop {
            let g = 2.0 * std::f64::consts::PI * n as Real;
            let worst = self
                .wells
                .iter()
                .map(|w| w.amplitude.abs() * (-0.5 * w.width * w.width * g * g).exp())
                .fold(0.0, Real::max);
            if worst < threshold || n > 10_000 {
                return n;
            }
            n += 1;
        }
    }

    /// Σ_j |v̂_j(0)| + 2 Σ_{n≥1} (|v̂₁| + |v̂₂|)(2πn): a bound on the
    /// operator norm of the potential part, used for spectral bounds.
    pub fn coupling_l1_norm(&self) -> Real {
        let reach = self.coupling_reach(1e-16);
        let mut total = self.fourier_raw(WellIndex::First, 0.0).abs()
            + self.fourier_raw(WellIndex::Second, 0.0).abs();
        for n in 1..=reach {
            let g = 2.0 * std::f64::consts::PI * n as Real;
            total += 2.0 * (self.fourier_raw(WellIndex::First, g).abs() + self.fourier_raw(WellIndex::Second, g).abs());
        }
        total
    }

    /// Real-space value of the periodized well j at x (test support).
    /// Image sum truncated at |R − x| ≤ max(8σ_j, 1); doubling the reach
    /// moves the value by less than 1e−12.
    pub fn periodized_well_value(&self, index: WellIndex, x: Real) -> Real {
        let w = self.well(index);
        let reach = (8.0 * w.width).max(1.0).ceil() as i64;
        let base = x.round() as i64;
        let norm = 1.0 / (w.width * (2.0 * std::f64::consts::PI).sqrt());
        let mut v = 0.0;
        for r in (base - reach)..=(base + reach) {
            let t = (x - r as Real) / w.width;
            v += -w.amplitude * norm * (-0.5 * t * t).exp();
        }
        v
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    const TAU: Real = 2.0 * std::f64::consts::PI;

    #[test]
    fn coefficient_at_zero_is_minus_amplitude() {
        let spec = PotentialSpec::paper_model();
        assert_eq!(spec.fourier_coefficient(WellIndex::First, 0.0).unwrap(), -7.0);
        let zero = PotentialSpec::new(0.0, 0.05, 5.0, 0.05).unwrap();
        assert_eq!(zero.fourier_coefficient(WellIndex::First, TAU).unwrap(), 0.0);
    }

    #[test]
    fn coefficient_matches_quadrature_oracle() {
        // oracle: direct ∫₀¹ v_per(x) e^{−iGx} dx of the periodized well
        let spec = PotentialSpec::paper_model();
        let g = TAU;
        let n = 200_000usize;
        let dx = 1.0 / n as Real;
        let (mut re, mut im) = (0.0, 0.0);
        for i in 0..n {
            let x = (i as Real + 0.5) * dx;
            let v = spec.periodized_well_value(WellIndex::First, x);
            re += v * (g * x).cos() * dx;
            im -= v * (g * x).sin() * dx;
        }
        let coef = spec.fourier_coefficient(WellIndex::First, g).unwrap();
        assert_relative_eq!(coef, re, epsilon = 1e-10);
        assert!(im.abs() < 1e-12);
        // frozen value from the oracle
        assert_relative_eq!(coef, -6.662948651584914, epsilon = 1e-10);
    }

    #[test]
    fn non_lattice_g_rejected() {
        let spec = PotentialSpec::paper_model();
        assert!(spec.fourier_coefficient(WellIndex::First, 1.0).is_err());
    }

    #[test]
    fn periodization_is_one_periodic_and_stable() {
        let spec = PotentialSpec::paper_model();
        for &x in &[0.0, 0.13, 0.49, 0.5, 0.77, 3.21, -1.9] {
            let a = spec.periodized_well_value(WellIndex::First, x);
            let b = spec.periodized_well_value(WellIndex::First, x + 1.0);
            assert!((a - b).abs() < 1e-12, "periodicity broke at x={x}: {a} vs {b}");
        }
        // doubling the image reach changes nothing at 1e−12
        let w = spec.well(WellIndex::First);
        let x = 0.31;
        let wide: Real = {
            let reach = (16.0 * w.width).max(2.0).ceil() as i64;
            let norm = 1.0 / (w.width * (2.0 * std::f64::consts::PI).sqrt());
            ((-reach)..=reach)
                .map(|r| -w.amplitude * norm * (-0.5 * ((x - r as Real) / w.width).powi(2)).exp())
                .sum()
        };
        assert!((spec.periodized_well_value(WellIndex::First, x) - wide).abs() < 1e-12);
    }

    #[test]
    fn fourier_round_trip() {
        // reconstruct v_per from coefficients |G| ≤ G_max with
        // e^{−σ²G_max²/2} < 1e−12 and compare to direct summation
        let spec = PotentialSpec::paper_model();
        let reach = spec.coupling_reach(1e-13);
        for &x in &[0.0, 0.1, 0.25, 0.4999, 0.8] {
            let mut v = spec.fourier_raw(WellIndex::Second, 0.0);
            for n in 1..=reach {
                let g = TAU * n as Real;
                v += 2.0 * spec.fourier_raw(WellIndex::Second, g) * (g * x).cos();
            }
            let direct = spec.periodized_well_value(WellIndex::Second, x);
            assert!((v - direct).abs() < 1e-8, "round trip at x={x}: {v} vs {direct}");
        }
    }

    #[test]
    fn invalid_widths_rejected() {
        assert!(PotentialSpec::new(7.0, 0.0, 5.0, 0.05).is_err());
        assert!(PotentialSpec::new(7.0, -0.1, 5.0, 0.05).is_err());
        assert!(PotentialSpec::new(Real::INFINITY, 0.05, 5.0, 0.05).is_err());
    }
}
