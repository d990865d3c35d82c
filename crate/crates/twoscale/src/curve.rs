//! Energy grids and sampled DoS curves with provenance metadata.

use crate::scalar::Scalar;
use crate::{Real, Result, TwoScaleError};

/// Uniform energy grid on [e_min, e_max] with n_points nodes (inclusive).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EnergyGrid<S = Real> {
    pub e_min: S,
    pub e_max: S,
    pub n_points: usize,
}

impl<S: Scalar> EnergyGrid<S> {
    pub fn new(e_min: S, e_max: S, n_points: usize) -> Result<Self> {
        if !(e_min < e_max) {
            return Err(TwoScaleError::domain(format!(
                "energy grid needs e_min < e_max, got [{e_min:?}, {e_max:?}]"
            )));
        }
        if n_points < 2 {
            return Err(TwoScaleError::domain("energy grid needs at least 2 points"));
        }
        Ok(Self { e_min, e_max, n_points })
    }

    pub fn spacing(&self) -> S {
        (self.e_max - self.e_min) / S::from_usize(self.n_points - 1).unwrap()
    }

    pub fn node(&self, i: usize) -> S {
        self.e_min + self.spacing() * S::from_usize(i).unwrap()
    }

    pub fn iter(&self) -> impl Iterator<Item = S> + '_ {
        (0..self.n_points).map(move |i| self.node(i))
    }

    /// Indices whose nodes fall inside [lo, hi] (inclusive).
    pub fn window_indices(&self, lo: S, hi: S) -> std::ops::Range<usize> {
        let h = self.spacing();
        let first = ((lo - self.e_min) / h).ceil().max(S::zero());
        let last = ((hi - self.e_min) / h).floor();
        let first = first.to_usize().unwrap_or(0).min(self.n_points);
        let last = last.to_usize().map_or(0, |l| (l + 1).min(self.n_points));
        first..last.max(first)
    }
}

impl EnergyGrid<Real> {
    /// The default scan window of the model study: [−20, 20] with 801 nodes.
    pub fn default_window() -> Self {
        Self { e_min: -20.0, e_max: 20.0, n_points: 801 }
    }
}

/// Which method produced a curve.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CurveMethod {
    MomentumSpace,
    SemiclassicalOrder0,
    SemiclassicalOrder1,
    SemiclassicalOrder2,
    SemiclassicalCombined,
    HarmonicModel,
    FiniteDifferenceEstimate,
}

impl CurveMethod {
    pub fn tag(self) -> &'static str {
        match self {
            CurveMethod::MomentumSpace => "momentum-space",
            CurveMethod::SemiclassicalOrder0 => "semiclassical-L0",
            CurveMethod::SemiclassicalOrder1 => "semiclassical-L1",
            CurveMethod::SemiclassicalOrder2 => "semiclassical-L2",
            CurveMethod::SemiclassicalCombined => "semiclassical-combined",
            CurveMethod::HarmonicModel => "harmonic-model",
            CurveMethod::FiniteDifferenceEstimate => "fd-estimate",
        }
    }
}

/// Provenance carried by every curve: method, physical parameters and the
/// discretization knobs that affect its values.
#[derive(Debug, Clone, PartialEq)]
pub struct CurveMeta {
    pub method: CurveMethod,
    pub eps: Option<Real>,
    pub sigma: Real,
    /// Discretization parameters as ordered (key, value) pairs.
    pub discretization: Vec<(String, String)>,
}

impl CurveMeta {
    pub fn new(method: CurveMethod, eps: Option<Real>, sigma: Real) -> Self {
        Self { method, eps, sigma, discretization: Vec::new() }
    }

    pub fn with(mut self, key: &str, value: impl std::fmt::Display) -> Self {
        self.discretization.push((key.to_string(), value.to_string()));
        self
    }
}

/// A sampled map E ↦ value on a uniform grid.
///
/// Direct DoS curves are nonnegative up to quadrature noise (−1e−8);
/// expansion-term curves (L₁, L₂, finite-difference estimates) are signed
/// and skip that check.
#[derive(Debug, Clone, PartialEq)]
pub struct DosCurve {
    pub grid: EnergyGrid,
    pub values: Vec<Real>,
    pub meta: CurveMeta,
}

/// Nonnegativity slack for direct DoS curves.
pub const DOS_NEGATIVITY_TOL: Real = 1e-8;

impl DosCurve {
    pub fn new(grid: EnergyGrid, values: Vec<Real>, meta: CurveMeta) -> Result<Self> {
        if values.len() != grid.n_points {
            return Err(TwoScaleError::domain(format!(
                "curve has {} values for a {}-point grid",
                values.len(),
                grid.n_points
            )));
        }
        let signed = matches!(
            meta.method,
            CurveMethod::SemiclassicalOrder1
                | CurveMethod::SemiclassicalOrder2
                | CurveMethod::FiniteDifferenceEstimate
        );
        if !signed {
            if let Some(v) = values.iter().copied().find(|v| *v < -DOS_NEGATIVITY_TOL) {
                return Err(TwoScaleError::numeric(format!(
                    "direct DoS curve dips to {v}, below the {DOS_NEGATIVITY_TOL:e} slack"
                )));
            }
        }
        Ok(Self { grid, values, meta })
    }

    pub fn max_abs(&self) -> Real {
        self.values.iter().fold(0.0, |a, v| a.max(v.abs()))
    }

    /// Indices of strict interior local maxima above `floor`.
    pub fn local_maxima(&self, floor: Real) -> Vec<usize> {
        (1..self.values.len().saturating_sub(1))
            .filter(|&i| {
                self.values[i] > self.values[i - 1]
                    && self.values[i] > self.values[i + 1]
                    && self.values[i] > floor
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_basics() {
        let g = EnergyGrid::new(-20.0, 20.0, 801).unwrap();
        assert_eq!(g.spacing(), 0.05);
        assert_eq!(g.node(0), -20.0);
        assert_eq!(g.node(800), 20.0);
        assert!(EnergyGrid::new(1.0, 1.0, 10).is_err());
        assert!(EnergyGrid::new(0.0, 1.0, 1).is_err());
    }

    #[test]
    fn window_indices_cover_inclusive_range() {
        let g = EnergyGrid::new(0.0, 10.0, 11).unwrap();
        let w = g.window_indices(2.0, 5.0);
        assert_eq!(w, 2..6);
        let all = g.window_indices(-100.0, 100.0);
        assert_eq!(all, 0..11);
    }

    #[test]
    fn negativity_guard_applies_to_direct_curves_only() {
        let g = EnergyGrid::new(0.0, 1.0, 3).unwrap();
        let bad = DosCurve::new(
            g,
            vec![0.0, -1e-3, 0.0],
            CurveMeta::new(CurveMethod::MomentumSpace, Some(0.01), 0.4),
        );
        assert!(bad.is_err());
        let signed = DosCurve::new(
            g,
            vec![0.0, -1e-3, 0.0],
            CurveMeta::new(CurveMethod::SemiclassicalOrder1, None, 0.4),
        );
        assert!(signed.is_ok());
    }

    #[test]
    fn local_maxima_detection() {
        let g = EnergyGrid::new(0.0, 6.0, 7).unwrap();
        let c = DosCurve::new(
            g,
            vec![0.0, 1.0, 0.2, 2.0, 0.1, 3.0, 0.0],
            CurveMeta::new(CurveMethod::HarmonicModel, Some(0.01), 0.04),
        )
        .unwrap();
        assert_eq!(c.local_maxima(0.5), vec![1, 3, 5]);
    }
}
