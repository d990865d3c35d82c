//! Weighted divided differences f₂⁽²⁾, f₃⁽³⁾, f₄⁽⁴⁾ of a test function.
//!
//! These arise from the resolvent expansion behind the semiclassical
//! linear forms: f⁽ⁿ⁾ₙ(λ;λ′,…) = −(n!/π)∫ ∂̄f̃(z) (z−λ)⁻² Π(z−λᵢ)⁻¹ dL(z).
//! Every coincident-argument branch has an explicit formula; raw
//! difference quotients are switched to those branches once arguments
//! come within a relative tolerance τ_c of each other, because the
//! quotients lose roughly half the mantissa at separation √ε_machine.
//!
//! All derivatives of the test function are analytic — no numerical
//! differentiation enters here.

use crate::scalar::Scalar;
use crate::testfn::SmoothFunction;

/// Default coincidence tolerance, relative to max(1, |λ|).
pub const DEFAULT_COINCIDENCE_TOL: f64 = 1e-6;

/// One argument λ together with f(λ), f′(λ), …, f⁗(λ).
#[derive(Debug, Clone, Copy)]
pub struct ArgValues<S> {
    pub lam: S,
    pub f: [S; 5],
}

impl<S: Scalar> ArgValues<S> {
    pub fn evaluate<F: SmoothFunction<S>>(f: &F, lam: S) -> Self {
        Self {
            lam,
            f: [
                f.eval(lam, 0),
                f.eval(lam, 1),
                f.eval(lam, 2),
                f.eval(lam, 3),
                f.eval(lam, 4),
            ],
        }
    }
}

/// Divided-difference kernel over a smooth test function.
#[derive(Debug, Clone)]
pub struct DividedDifferenceKernel<S, F> {
    f: F,
    tau: S,
}

impl<S: Scalar, F: SmoothFunction<S>> DividedDifferenceKernel<S, F> {
    pub fn new(f: F) -> Self {
        Self { f, tau: S::of(DEFAULT_COINCIDENCE_TOL) }
    }

    pub fn with_tolerance(f: F, tau: S) -> Self {
        Self { f, tau }
    }

    pub fn function(&self) -> &F {
        &self.f
    }

    pub fn arg(&self, lam: S) -> ArgValues<S> {
        ArgValues::evaluate(&self.f, lam)
    }

    /// f₂⁽²⁾(λ;λ′): 2[f(λ′)−f(λ)−(λ′−λ)f′(λ)]/(λ′−λ)², or f″(λ) at
    /// coincidence.
    pub fn f2(&self, lam: S, lam1: S) -> S {
        f2_vals(&self.arg(lam), &self.arg(lam1), self.tau)
    }

    /// f₃⁽³⁾(λ;λ′,λ″) with all three branch cases.
    pub fn f3(&self, lam: S, lam1: S, lam2: S) -> S {
        f3_vals(&self.arg(lam), &self.arg(lam1), &self.arg(lam2), self.tau)
    }

    /// f₄⁽⁴⁾(λ;λ′,λ″,λ‴) with all four branch cases.
    pub fn f4(&self, lam: S, lam1: S, lam2: S, lam3: S) -> S {
        f4_vals(&self.arg(lam), &self.arg(lam1), &self.arg(lam2), &self.arg(lam3), self.tau)
    }
}

#[inline]
fn coincident<S: Scalar>(a: S, b: S, tau: S) -> bool {
    (a - b).abs() < tau * S::one().max(a.abs()).max(b.abs())
}

/// Relative separation below which the raw quotients are replaced by
/// Taylor forms around the argument midpoint. The quotient for
/// ∂²f₂/∂λ′² loses ε_machine/s⁴, so it is unusable well before the
/// coincidence tolerance is reached; the midpoint forms are exact for
/// quartic polynomials and carry no cancellation.
const MIDRANGE_SWITCH: f64 = 1e-3;

#[inline]
fn midrange<S: Scalar>(a: S, b: S) -> bool {
    (a - b).abs() < S::of(MIDRANGE_SWITCH) * S::one().max(a.abs()).max(b.abs())
}

/// f₂⁽²⁾ on pre-evaluated arguments.
pub fn f2_vals<S: Scalar>(a: &ArgValues<S>, b: &ArgValues<S>, tau: S) -> S {
    if coincident(a.lam, b.lam, tau) {
        return a.f[2];
    }
    let s = b.lam - a.lam;
    if midrange(a.lam, b.lam) {
        // Euler–Maclaurin form on endpoint derivatives: exact through
        // quartics, remainder O(s³f⁽⁵⁾), no cancellation.
        return S::of(2.0 / 3.0) * a.f[2] + S::of(1.0 / 3.0) * b.f[2]
            - s * (b.f[3] - a.f[3]) / S::of(12.0);
    }
    S::of(2.0) * (b.f[0] - a.f[0] - s * a.f[1]) / (s * s)
}

/// ∂f₂⁽²⁾/∂λ′ on pre-evaluated arguments (`b` is λ′). Expanded form
/// −4[f(λ′)−f(λ)−½(f′(λ′)+f′(λ))(λ′−λ)]/(λ′−λ)³, coincident limit
/// f‴(λ)/3, endpoint-stable midrange form.
fn f2_d1_vals<S: Scalar>(a: &ArgValues<S>, b: &ArgValues<S>, tau: S) -> S {
    if coincident(a.lam, b.lam, tau) {
        return a.f[3] / S::of(3.0);
    }
    let s = b.lam - a.lam;
    if midrange(a.lam, b.lam) {
        return (a.f[3] + b.f[3]) / S::of(6.0) - s * (b.f[4] - a.f[4]) / S::of(30.0);
    }
    S::of(-4.0) * (b.f[0] - a.f[0] - S::of(0.5) * (b.f[1] + a.f[1]) * s) / (s * s * s)
}

/// ∂²f₂⁽²⁾/∂λ′² on pre-evaluated arguments, coincident limit f⁗(λ)/6,
/// endpoint-stable midrange form (exact for quartics).
fn f2_d2_vals<S: Scalar>(a: &ArgValues<S>, b: &ArgValues<S>, tau: S) -> S {
    if coincident(a.lam, b.lam, tau) {
        return a.f[4] / S::of(6.0);
    }
    if midrange(a.lam, b.lam) {
        return a.f[4] / S::of(15.0) + b.f[4] / S::of(10.0);
    }
    let s = b.lam - a.lam;
    let n = b.f[0] - a.f[0] - s * a.f[1];
    S::of(2.0) * b.f[2] / (s * s) - S::of(8.0) * (b.f[1] - a.f[1]) / (s * s * s)
        + S::of(12.0) * n / (s * s * s * s)
}

/// f₃⁽³⁾ on pre-evaluated arguments.
pub fn f3_vals<S: Scalar>(a: &ArgValues<S>, b: &ArgValues<S>, c: &ArgValues<S>, tau: S) -> S {
    if !coincident(b.lam, c.lam, tau) {
        return S::of(3.0) * (f2_vals(a, c, tau) - f2_vals(a, b, tau)) / (c.lam - b.lam);
    }
    if !coincident(a.lam, b.lam, tau) {
        // λ ≠ λ′ = λ″
        return S::of(3.0) * f2_d1_vals(a, b, tau);
    }
    a.f[3]
}

/// f₄⁽⁴⁾ on pre-evaluated arguments.
pub fn f4_vals<S: Scalar>(
    a: &ArgValues<S>,
    b: &ArgValues<S>,
    c: &ArgValues<S>,
    d: &ArgValues<S>,
    tau: S,
) -> S {
    if !coincident(c.lam, d.lam, tau) {
        return S::of(4.0) * (f3_vals(a, b, d, tau) - f3_vals(a, b, c, tau)) / (d.lam - c.lam);
    }
    if !coincident(b.lam, c.lam, tau) {
        // λ′ ≠ λ″ = λ‴: 4 ∂f₃/∂λ″(λ;λ′,λ″)
        let s = c.lam - b.lam;
        return S::of(12.0) * (f2_d1_vals(a, c, tau) * s - (f2_vals(a, c, tau) - f2_vals(a, b, tau)))
            / (s * s);
    }
    if !coincident(a.lam, b.lam, tau) {
        // λ ≠ λ′ = λ″ = λ‴: 6 ∂²f₂/(∂λ′)²(λ;λ′)
        return S::of(6.0) * f2_d2_vals(a, b, tau);
    }
    a.f[4]
}
