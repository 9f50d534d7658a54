//! Analytic phase-space kernels and 4×4 Wigner matrices for Landau states,
//! plus a grid-based numerical Weyl-transform oracle for arbitrary
//! 4-component wavefunctions.
//!
//! Conventions. Phase-space points are dimensionless: `s` is the oscillator
//! coordinate, `k` the momentum in units of √(eB). The kernels carry an
//! explicit 1/π relative to their usual textbook prints so that
//! `∫dx ∫dk 𝓛_n = 1` with `ds = √(eB) dx`; the same factor makes
//! `(2π/√(eB)) ∬ Tr[(γ0ω)²] = 1` for every pure state.
//!
//! The diagonal-index kernels `𝓛_n` are real. The kernel pairing Hermite
//! indices n−1 and n (the `𝓜` slots of the matrices) is genuinely complex:
//! `K_n(s,k) = (−1)^n √(2/n) (√(eB)/π) (s − ik) L_n'(2(s²+k²)) e^{−(s²+k²)}`,
//! whose real part is the odd-in-s scalar kernel [`kernel_m`]. Only with the
//! complex entries does the matrix equal the entrywise Weyl transform of the
//! spinor and does the pure-state purity come out exactly 1; the realified
//! matrices (real parts) carry the odd scalar kernel instead.

use crate::clifford::{gamma, ComplexMatrix4};
use crate::error::{Error, Result};
use crate::landau::{spinor_structure, LandauState};
use crate::specfun::{laguerre_deriv, laguerre_unchecked};
use num_complex::Complex64;
use std::f64::consts::PI;

/// A point of the dimensionless phase space.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhasePoint {
    pub s: f64,
    pub k: f64,
}

impl PhasePoint {
    pub fn new(s: f64, k: f64) -> Self {
        PhasePoint { s, k }
    }

    pub fn radius_sq(&self) -> f64 {
        self.s * self.s + self.k * self.k
    }
}

fn check_e_b(e_b: f64) -> Result<()> {
    if !(e_b > 0.0) || !e_b.is_finite() {
        return Err(Error::invalid(format!(
            "eB must be positive and finite, got {e_b}"
        )));
    }
    Ok(())
}

/// Diagonal Wigner kernel
/// `𝓛_n(s,k) = (−1)^n (√(eB)/π) e^{−(s²+k²)} L_n[2(s²+k²)]`,
/// normalized to `∬ dx dk 𝓛_n = 1`. Returns 0 for n = −1.
pub fn kernel_l(n: i32, p: PhasePoint, e_b: f64) -> Result<f64> {
    check_e_b(e_b)?;
    if n < -1 {
        return Err(Error::invalid(format!("kernel_l order {n} < -1")));
    }
    if n == -1 {
        return Ok(0.0);
    }
    let t = 2.0 * p.radius_sq();
    let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
    Ok(sign * e_b.sqrt() / PI * (-0.5 * t).exp() * laguerre_unchecked(n, t))
}

/// Odd cross kernel
/// `𝓜_n(s,k) = (−1)^n (1/π) √(eB/(8n)) e^{−(s²+k²)} d/ds L_n[2(s²+k²)]`,
/// the real part of [`kernel_cross`]; integrates to zero.
pub fn kernel_m(n: i32, p: PhasePoint, e_b: f64) -> Result<f64> {
    check_e_b(e_b)?;
    if n < 1 {
        return Err(Error::invalid(format!("kernel_m needs n >= 1, got {n}")));
    }
    let t = 2.0 * p.radius_sq();
    let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
    let deriv_s = 4.0 * p.s * laguerre_deriv(n, t)?; // chain rule d/ds
    Ok(sign / PI * (e_b / (8.0 * f64::from(n))).sqrt() * (-0.5 * t).exp() * deriv_s)
}

/// Complex cross kernel `K_n = W[F_{n−1}, F_n]`, the Weyl transform pairing
/// Hermite indices n−1 (forward point) and n (backward point):
///
/// `K_n(s,k) = (−1)^n √(2/n) (√(eB)/π) (s − ik) L_n'(2(s²+k²)) e^{−(s²+k²)}`.
///
/// `Re K_n = kernel_m`; `(2π/√(eB)) ∬ |K_n|² dx dk = 1`.
pub fn kernel_cross(n: i32, p: PhasePoint, e_b: f64) -> Result<Complex64> {
    check_e_b(e_b)?;
    if n < 1 {
        return Err(Error::invalid(format!(
            "kernel_cross needs n >= 1, got {n}"
        )));
    }
    let t = 2.0 * p.radius_sq();
    let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
    let scale = sign * (2.0 / f64::from(n)).sqrt() * e_b.sqrt() / PI
        * laguerre_deriv(n, t)?
        * (-0.5 * t).exp();
    Ok(Complex64::new(scale * p.s, -scale * p.k))
}

/// The 4×4 Wigner matrix `ω(s, k)` of a Landau eigenstate, entry for entry
/// the Weyl transform of its spinor: `ω_{ξλ}` pairs component ξ at the
/// forward point with component λ̄ at the backward point, so diagonal-index
/// pairs produce `𝓛` kernels and mixed pairs the complex `K_n`.
pub fn omega_matrix(st: &LandauState, p: PhasePoint) -> ComplexMatrix4 {
    let e_b = st.params().e_b;
    let n = st.n();
    let eta = st.coefficients().eta;
    let (amps, orders) = spinor_structure(st);
    let l_lo = kernel_l(n - 1, p, e_b).expect("validated state");
    let l_hi = kernel_l(n, p, e_b).expect("validated state");
    let cross = kernel_cross(n, p, e_b).expect("validated state");
    // layer the gamma0 signs of psi-bar onto the column amplitudes
    let bar = [amps[0], amps[1], -amps[2], -amps[3]];
    let mut m = ComplexMatrix4::zero();
    for xi in 0..4 {
        if amps[xi] == 0.0 {
            continue;
        }
        for lam in 0..4 {
            if bar[lam] == 0.0 {
                continue;
            }
            let kern = if orders[xi] == orders[lam] {
                Complex64::new(if orders[xi] == n { l_hi } else { l_lo }, 0.0)
            } else if orders[xi] < orders[lam] {
                cross
            } else {
                cross.conj()
            };
            m.entries[xi][lam] = kern * (eta * amps[xi] * bar[lam]);
        }
    }
    m
}

/// Realified Wigner matrix: the entrywise real part of [`omega_matrix`],
/// i.e. the conventional real form with `±𝓜_n` cross entries.
pub fn omega_matrix_re(st: &LandauState, p: PhasePoint) -> ComplexMatrix4 {
    let mut m = omega_matrix(st, p);
    for i in 0..4 {
        for j in 0..4 {
            m.entries[i][j] = Complex64::new(m.entries[i][j].re, 0.0);
        }
    }
    m
}

/// Spin-parity density `ρ = Tr[ω γ0]`, in closed form
/// `η[(1+A²) 𝓛_a + B² 𝓛_b]` where (a, b) = (n−1, n) for the (+,1)/(−,2)
/// states and (n, n−1) for the other two. `∬ dx dk ρ = 1`.
pub fn density(st: &LandauState, p: PhasePoint) -> f64 {
    let e_b = st.params().e_b;
    let n = st.n();
    let c = st.coefficients();
    let l_lo = kernel_l(n - 1, p, e_b).expect("validated state");
    let l_hi = kernel_l(n, p, e_b).expect("validated state");
    let (la, lb) = if st.is_plus_branch() {
        (l_lo, l_hi)
    } else {
        (l_hi, l_lo)
    };
    c.eta * ((1.0 + c.a * c.a) * la + c.b * c.b * lb)
}

/// A lazily evaluated matrix-valued field over phase space: a pure Landau
/// state or a convex mixture of them. Quantifier integrals pick their own
/// grids and call [`WignerMatrixField::eval`] pointwise.
#[derive(Debug, Clone)]
pub struct WignerMatrixField {
    components: Vec<(f64, LandauState)>,
}

impl WignerMatrixField {
    pub fn pure(st: LandauState) -> Self {
        WignerMatrixField {
            components: vec![(1.0, st)],
        }
    }

    /// Convex combination of Landau Wigner fields; weights must be
    /// nonnegative and sum to 1.
    pub fn mixture(components: Vec<(f64, LandauState)>) -> Result<Self> {
        if components.is_empty() {
            return Err(Error::invalid("mixture needs at least one component"));
        }
        let total: f64 = components.iter().map(|(w, _)| *w).sum();
        if components.iter().any(|(w, _)| *w < 0.0) || (total - 1.0).abs() > 1e-12 {
            return Err(Error::invalid(format!(
                "mixture weights must be nonnegative and sum to 1 (sum = {total})"
            )));
        }
        let e_b0 = components[0].1.params().e_b;
        if components
            .iter()
            .any(|(_, st)| (st.params().e_b - e_b0).abs() > 1e-14)
        {
            return Err(Error::invalid("mixture components must share eB"));
        }
        Ok(WignerMatrixField { components })
    }

    pub fn e_b(&self) -> f64 {
        self.components[0].1.params().e_b
    }

    pub fn components(&self) -> &[(f64, LandauState)] {
        &self.components
    }

    pub fn eval(&self, p: PhasePoint) -> ComplexMatrix4 {
        let mut m = ComplexMatrix4::zero();
        for (w, st) in &self.components {
            m = m + omega_matrix(st, p).scale_re(*w);
        }
        m
    }
}

/// A 4-component wavefunction sampled on a uniform x grid.
#[derive(Debug, Clone)]
pub struct SampledSpinor {
    x0: f64,
    h: f64,
    values: Vec<[Complex64; 4]>,
}

impl SampledSpinor {
    /// Samples `psi` on `n` uniformly spaced points spanning `[lo, hi]`.
    pub fn from_fn<F>(psi: F, lo: f64, hi: f64, n: usize) -> Result<Self>
    where
        F: Fn(f64) -> [Complex64; 4],
    {
        if n < 16 || hi <= lo {
            return Err(Error::invalid("sampling needs n >= 16 and hi > lo"));
        }
        let h = (hi - lo) / (n as f64 - 1.0);
        let values = (0..n).map(|i| psi(lo + h * i as f64)).collect();
        Ok(SampledSpinor { x0: lo, h, values })
    }

    /// Wraps externally produced samples; the grid must be uniform.
    pub fn from_samples(xs: &[f64], values: Vec<[Complex64; 4]>) -> Result<Self> {
        if xs.len() != values.len() || xs.len() < 16 {
            return Err(Error::invalid(
                "need matching xs/values with at least 16 samples",
            ));
        }
        let h = xs[1] - xs[0];
        if h <= 0.0 {
            return Err(Error::invalid("sample grid must be increasing"));
        }
        for w in xs.windows(2) {
            if ((w[1] - w[0]) - h).abs() > 1e-9 * h {
                return Err(Error::invalid("sample grid must be uniform"));
            }
        }
        Ok(SampledSpinor {
            x0: xs[0],
            h,
            values,
        })
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn spacing(&self) -> f64 {
        self.h
    }

    fn boundary_magnitude(&self) -> f64 {
        let edge = |v: &[Complex64; 4]| v.iter().map(|z| z.norm()).fold(0.0f64, f64::max);
        edge(&self.values[0]).max(edge(&self.values[self.values.len() - 1]))
    }
}

/// Numerical Weyl transform of a sampled 4-spinor at a dimensionless phase
/// point: the oracle every analytic matrix is checked against.
///
/// Computes `√(eB)·π^{−1} ∫du e^{2i k_phys u} ψ̄_λ(x₀−u) ψ_ξ(x₀+u)` with
/// `x₀ = s/√(eB)`, `k_phys = √(eB)·k`, by trapezoid over the sample grid.
/// Both arguments must land on sample points, which requires `2 x₀` to sit
/// on the sample lattice. Stationary states carry no residual time phase,
/// so none is applied.
pub fn weyl_transform(psi: &SampledSpinor, p: PhasePoint, e_b: f64) -> Result<ComplexMatrix4> {
    check_e_b(e_b)?;
    if psi.boundary_magnitude() > 1e-12 {
        return Err(Error::invalid(format!(
            "sample grid does not cover the wavefunction support (boundary magnitude {:.3e})",
            psi.boundary_magnitude()
        )));
    }
    let x0 = p.s / e_b.sqrt();
    let n = psi.len();
    // mirror index: x0 - u_j = x_{m - j} needs m = (2 x0 - 2 x_first)/h integral
    let m_real = (2.0 * x0 - 2.0 * psi.x0) / psi.h;
    let m_idx = m_real.round();
    if (m_real - m_idx).abs() > 1e-6 {
        return Err(Error::invalid(format!(
            "probe s = {} is not aligned with the sample lattice (2*x0/h fractional part {:.2e})",
            p.s,
            (m_real - m_idx).abs()
        )));
    }
    let m_idx = m_idx as i64;
    let k_phys = e_b.sqrt() * p.k;
    // oscillatory factor advanced by recurrence, re-anchored with a true
    // exponential every 512 steps to stop phase drift
    let rot = Complex64::from_polar(1.0, 2.0 * k_phys * psi.h);
    let u_at = |j: usize| (j as f64 * psi.h) + psi.x0 - x0;
    let mut phase = Complex64::from_polar(1.0, 2.0 * k_phys * u_at(0));
    let mut acc = [Complex64::new(0.0, 0.0); 16];
    for j in 0..n {
        if j % 512 == 0 {
            phase = Complex64::from_polar(1.0, 2.0 * k_phys * u_at(j));
        }
        let jm = m_idx - j as i64;
        if jm >= 0 && jm < n as i64 {
            let fwd = &psi.values[j];
            let bwd = &psi.values[jm as usize];
            let bar = [bwd[0].conj(), bwd[1].conj(), -bwd[2].conj(), -bwd[3].conj()];
            let w = if j == 0 || j == n - 1 { 0.5 } else { 1.0 };
            let pw = phase * w;
            for xi in 0..4 {
                let f = fwd[xi] * pw;
                for lam in 0..4 {
                    acc[xi * 4 + lam] += f * bar[lam];
                }
            }
        }
        phase *= rot;
    }
    let scale = e_b.sqrt() * psi.h / PI;
    let mut out = ComplexMatrix4::zero();
    for xi in 0..4 {
        for lam in 0..4 {
            out.entries[xi][lam] = acc[xi * 4 + lam] * scale;
        }
    }
    Ok(out)
}

/// Samples a Landau eigenspinor on a grid sized for its quantum number:
/// span `±(12 + √(2(2n+1)))/√(eB)` around the orbit center, `points`
/// uniform samples (default 2048 when `points` is None).
pub fn sample_landau_spinor(st: &LandauState, points: Option<usize>) -> Result<SampledSpinor> {
    let n = st.n();
    let e_b = st.params().e_b;
    let half = (12.0 + (2.0 * (2.0 * f64::from(n) + 1.0)).sqrt()) / e_b.sqrt();
    let center = -st.r().sign() * st.params().k_y / e_b;
    let n_pts = points.unwrap_or(2048);
    SampledSpinor::from_fn(
        |x| crate::landau::spinor(st, x),
        center - half,
        center + half,
        n_pts,
    )
}

/// Pseudo-Hermiticity defect `‖γ0 ω γ0 − ω†‖_F` at a point.
pub fn pseudo_hermiticity_defect(m: &ComplexMatrix4) -> f64 {
    let g0 = gamma(0).expect("fixed index");
    (g0 * *m * g0).distance(&m.adjoint())
}
