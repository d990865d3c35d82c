//! The operator-valued symbol h(k,X) = ½(−i∇+k)² + V(x, x+X) on the unit
//! torus, in a plane-wave basis.
//!
//! For each phase-space point (k,X) the symbol is a compact-resolvent
//! self-adjoint operator; its eigenvalues are the band surfaces E_j(k,X)
//! and the sandwiched operators
//!
//!   𝒦_{mn} = ⟨u_m|−i∇+k|u_n⟩,
//!   𝒳_{mn} = ⟨u_m|∂_X V(·,X)|u_n⟩,
//!   𝒳⁽²⁾_{mn} = ⟨u_m|∂²_X V(·,X)|u_n⟩
//!
//! feed the semiclassical linear forms and the band Hessians. Everything
//! downstream is built from gauge-invariant combinations, so the
//! eigenvector phases are whatever the dense solver returns.

use nalgebra::{DMatrix, DVector};

use crate::potential::{PotentialSpec, WellIndex};
use crate::{Cplx, Real, Result, TwoScaleError};

const TAU: Real = 2.0 * std::f64::consts::PI;

/// Plane-wave basis {e^{iGx} : (G+k)²/2 < E_cut} at quasimomentum k.
#[derive(Debug, Clone, PartialEq)]
pub struct PlanewaveBasis {
    pub k: Real,
    pub e_cut: Real,
    /// Reciprocal vectors G = 2πn, sorted ascending.
    pub g_list: Vec<Real>,
}

impl PlanewaveBasis {
    pub fn new(k: Real, e_cut: Real) -> Result<Self> {
        if !(e_cut > 0.0) {
            return Err(TwoScaleError::domain(format!("E_cut must be positive, got {e_cut}")));
        }
        let q = (2.0 * e_cut).sqrt();
        let n_lo = ((-q - k) / TAU).floor() as i64;
        let n_hi = ((q - k) / TAU).ceil() as i64;
        let g_list: Vec<Real> = (n_lo..=n_hi)
            .map(|n| TAU * n as Real)
            .filter(|g| 0.5 * (g + k) * (g + k) < e_cut)
            .collect();
        if g_list.is_empty() {
            return Err(TwoScaleError::domain(format!(
                "empty plane-wave basis at k={k}, E_cut={e_cut}"
            )));
        }
        Ok(Self { k, e_cut, g_list })
    }

    pub fn len(&self) -> usize {
        self.g_list.len()
    }

    pub fn is_empty(&self) -> bool {
        self.g_list.is_empty()
    }
}

/// Full spectral data of the symbol at one (k,X) point.
#[derive(Debug, Clone)]
pub struct SymbolEigenData {
    pub k: Real,
    pub x: Real,
    /// Ascending eigenvalues λ_n(k,X).
    pub lambdas: Vec<Real>,
    /// Eigenvector coefficients, column n = u_n in the plane-wave basis.
    pub vectors: DMatrix<Cplx>,
    /// 𝒦_{mn} = ⟨u_m|−i∇+k|u_n⟩.
    pub k_elem: DMatrix<Cplx>,
    /// 𝒳_{mn} = ⟨u_m|∂_X V|u_n⟩.
    pub x_elem: DMatrix<Cplx>,
    /// 𝒳⁽²⁾_{mn} = ⟨u_m|∂²_X V|u_n⟩.
    pub x2_elem: DMatrix<Cplx>,
}

/// Band surface E_j sampled on a rectangular (k,X) grid.
#[derive(Debug, Clone)]
pub struct BandSurface {
    pub band: usize,
    pub k_nodes: Vec<Real>,
    pub x_nodes: Vec<Real>,
    /// Row-major samples: `values[ik * x_nodes.len() + ix]`.
    pub values: Vec<Real>,
}

impl BandSurface {
    pub fn value(&self, ik: usize, ix: usize) -> Real {
        self.values[ik * self.x_nodes.len() + ix]
    }

    pub fn min(&self) -> Real {
        self.values.iter().copied().fold(Real::INFINITY, Real::min)
    }

    pub fn max(&self) -> Real {
        self.values.iter().copied().fold(Real::NEG_INFINITY, Real::max)
    }
}

/// Assemble the symbol matrix M_{GG′} = ½(G+k)²δ_{GG′} + v̂₁(G−G′)
/// + v̂₂(G−G′) e^{i(G−G′)X}. Hermitian by construction.
pub fn assemble_symbol_matrix(
    spec: &PotentialSpec,
    basis: &PlanewaveBasis,
    x: Real,
) -> DMatrix<Cplx> {
    let n = basis.len();
    let mut m = DMatrix::<Cplx>::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            let dg = basis.g_list[i] - basis.g_list[j];
            let v1 = spec.fourier_raw(WellIndex::First, dg);
            let v2 = spec.fourier_raw(WellIndex::Second, dg);
            let phase = Cplx::from_polar(1.0, dg * x);
            let mut entry = Cplx::new(v1, 0.0) + phase * v2;
            if i == j {
                let gk = basis.g_list[i] + basis.k;
                entry += Cplx::new(0.5 * gk * gk, 0.0);
            }
            m[(i, j)] = entry;
        }
    }
    m
}

/// Hermitian eigendecomposition sorted ascending. Returns (λ, C) with
/// column n of C the n-th eigenvector.
fn eigh_sorted(m: DMatrix<Cplx>) -> Result<(Vec<Real>, DMatrix<Cplx>)> {
    let n = m.nrows();
    let se = m.symmetric_eigen();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| {
        se.eigenvalues[a]
            .partial_cmp(&se.eigenvalues[b])
            .ok_or(())
            .unwrap_or(std::cmp::Ordering::Equal)
    });
    let lambdas: Vec<Real> = order.iter().map(|&i| se.eigenvalues[i]).collect();
    if lambdas.iter().any(|l| !l.is_finite()) {
        return Err(TwoScaleError::numeric(format!(
            "eigensolver produced non-finite eigenvalues on a {n}×{n} symbol matrix"
        )));
    }
    let mut vectors = DMatrix::<Cplx>::zeros(n, n);
    for (new, &old) in order.iter().enumerate() {
        vectors.set_column(new, &se.eigenvectors.column(old));
    }
    Ok((lambdas, vectors))
}

/// Diagonalize the symbol and compute the matrix elements 𝒦, 𝒳, 𝒳⁽²⁾.
pub fn diagonalize_symbol(
    spec: &PotentialSpec,
    basis: &PlanewaveBasis,
    x: Real,
) -> Result<SymbolEigenData> {
    let n = basis.len();
    let (lambdas, vectors) = eigh_sorted(assemble_symbol_matrix(spec, basis, x))?;

    // 𝒦 in the plane-wave basis is diagonal: (G+k) δ_{GG′}
    let mut k_elem = DMatrix::<Cplx>::zeros(n, n);
    // ∂_X V and ∂²_X V have plane-wave kernels i(G−G′)v̂₂ e^{i(G−G′)X}
    // and −(G−G′)² v̂₂ e^{i(G−G′)X}
    let mut x_op = DMatrix::<Cplx>::zeros(n, n);
    let mut x2_op = DMatrix::<Cplx>::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            let dg = basis.g_list[i] - basis.g_list[j];
            let v2 = spec.fourier_raw(WellIndex::Second, dg);
            let phase = Cplx::from_polar(1.0, dg * x);
            x_op[(i, j)] = Cplx::new(0.0, dg) * v2 * phase;
            x2_op[(i, j)] = Cplx::new(-dg * dg, 0.0) * v2 * phase;
        }
        k_elem[(i, i)] = Cplx::new(basis.g_list[i] + basis.k, 0.0);
    }
    let adj = vectors.adjoint();
    let k_elem = &adj * &k_elem * &vectors;
    let x_elem = &adj * &x_op * &vectors;
    let x2_elem = &adj * &x2_op * &vectors;

    Ok(SymbolEigenData { k: basis.k, x, lambdas, vectors, k_elem, x_elem, x2_elem })
}

/// Sample band j (1-based) on closed uniform grids over [−π,π]×[−½,½].
pub fn band_surface(
    spec: &PotentialSpec,
    band: usize,
    n_k: usize,
    n_x: usize,
    e_cut: Real,
) -> Result<BandSurface> {
    use rayon::prelude::*;

    if band == 0 {
        return Err(TwoScaleError::domain("band index is 1-based"));
    }
    if n_k < 2 || n_x < 2 {
        return Err(TwoScaleError::domain("band surface needs at least a 2×2 grid"));
    }
    let k_nodes: Vec<Real> = (0..n_k)
        .map(|i| -std::f64::consts::PI + TAU * i as Real / (n_k - 1) as Real)
        .collect();
    let x_nodes: Vec<Real> = (0..n_x).map(|i| -0.5 + i as Real / (n_x - 1) as Real).collect();

    let rows: Vec<Vec<Real>> = k_nodes
        .par_iter()
        .map(|&k| -> Result<Vec<Real>> {
            let basis = PlanewaveBasis::new(k, e_cut)?;
            if band > basis.len() {
                return Err(TwoScaleError::domain(format!(
                    "band {band} exceeds basis size {} at k={k}",
                    basis.len()
                )));
            }
            let mut row = Vec::with_capacity(x_nodes.len());
            for &x in &x_nodes {
                let m = assemble_symbol_matrix(spec, &basis, x);
                let (lam, _) = eigh_sorted(m)?;
                row.push(lam[band - 1]);
            }
            Ok(row)
        })
        .collect::<Result<Vec<_>>>()?;

    let mut values = Vec::with_capacity(n_k * n_x);
    for row in rows {
        values.extend(row);
    }
    Ok(BandSurface { band, k_nodes, x_nodes, values })
}

/// Second-order data of band j at (k₀,X₀): gradient and Hessian entries
/// (A = ∂²E/∂k², B = ∂²E/∂k∂X, C = ∂²E/∂X²) from perturbation theory.
#[derive(Debug, Clone, Copy)]
pub struct BandDerivatives {
    pub energy: Real,
    pub grad_k: Real,
    pub grad_x: Real,
    pub a: Real,
    pub b: Real,
    pub c: Real,
    /// Distance to the nearest neighboring band.
    pub gap: Real,
}

/// Gap below which the sum-over-states Hessian is refused.
pub const DEGENERACY_GAP: Real = 1e-6;

/// Analytic gradient and Hessian of E_j(k,X) via second-order
/// perturbation theory over the full computed spectrum:
///
///   ∂E/∂k = 𝒦_jj,  ∂E/∂X = 𝒳_jj,
///   A = 1 + 2Σ_{n≠j} |𝒦_{jn}|²/(λ_j−λ_n),
///   B = 2Σ_{n≠j} Re(𝒦_{jn}𝒳_{nj})/(λ_j−λ_n),
///   C = 𝒳⁽²⁾_jj + 2Σ_{n≠j} |𝒳_{jn}|²/(λ_j−λ_n).
pub fn band_hessian(
    spec: &PotentialSpec,
    band: usize,
    k0: Real,
    x0: Real,
    e_cut: Real,
) -> Result<BandDerivatives> {
    if band == 0 {
        return Err(TwoScaleError::domain("band index is 1-based"));
    }
    let basis = PlanewaveBasis::new(k0, e_cut)?;
    if band > basis.len() {
        return Err(TwoScaleError::domain(format!(
            "band {band} exceeds basis size {}",
            basis.len()
        )));
    }
    let data = diagonalize_symbol(spec, &basis, x0)?;
    band_hessian_from(&data, band)
}

/// Same as [`band_hessian`] on an already-diagonalized symbol.
pub fn band_hessian_from(data: &SymbolEigenData, band: usize) -> Result<BandDerivatives> {
    let j = band - 1;
    let n = data.lambdas.len();
    let lam_j = data.lambdas[j];
    let mut gap = Real::INFINITY;
    for i in 0..n {
        if i != j {
            gap = gap.min((data.lambdas[i] - lam_j).abs());
        }
    }
    if gap < DEGENERACY_GAP {
        return Err(TwoScaleError::numeric(format!(
            "band {band} is degenerate at (k={}, X={}): gap {gap:.3e} < {DEGENERACY_GAP:e}",
            data.k, data.x
        )));
    }
    let (mut a, mut b, mut c) = (1.0, 0.0, data.x2_elem[(j, j)].re);
    for i in 0..n {
        if i == j {
            continue;
        }
        let denom = lam_j - data.lambdas[i];
        let kji = data.k_elem[(j, i)];
        let xij = data.x_elem[(i, j)];
        let xji = data.x_elem[(j, i)];
        a += 2.0 * kji.norm_sqr() / denom;
        b += 2.0 * (kji * xij).re / denom;
        c += 2.0 * xji.norm_sqr() / denom;
    }
    Ok(BandDerivatives {
        energy: lam_j,
        grad_k: data.k_elem[(j, j)].re,
        grad_x: data.x_elem[(j, j)].re,
        a,
        b,
        c,
        gap,
    })
}

/// Projection weights |⟨e_G|u_n⟩|² of the basis vector nearest momentum q.
/// Test support for momentum-density arguments.
pub fn momentum_weight(data: &SymbolEigenData, basis: &PlanewaveBasis, q: Real) -> DVector<Real> {
    let mut best = 0usize;
    let mut dist = Real::INFINITY;
    for (i, g) in basis.g_list.iter().enumerate() {
        let d = (g + basis.k - q).abs();
        if d < dist {
            dist = d;
            best = i;
        }
    }
    DVector::from_iterator(data.lambdas.len(), (0..data.lambdas.len()).map(|n| data.vectors[(best, n)].norm_sqr()))
}
