//! Information-theoretic functionals of the Dirac-Wigner fields: purity by
//! three routes, relative linear entropies, spin-parity/phase-space mutual
//! information, concurrence, entanglement of formation, and Gordon current
//! densities.
//!
//! Measure conventions. Every phase-space functional is written with the
//! physical measure `dx dk = (1/√(eB)) ds dk`; the quoted normalization
//! factor `2π/√(eB)` therefore appears in code as `2π/eB` against the
//! dimensionless grid. Purity of every pure Landau state is exactly 1 in
//! these conventions, and all quantifiers depend on (n, ε, κ) only.

mod concurrence;

pub use concurrence::{
    concurrence_general, concurrence_pure_bloch, concurrence_sq_field, concurrence_sq_prefactor,
    concurrence_sq_trace_route, eof_from_concurrence, hermitian_eigenvalues, spin_flip,
    BlochDecomposition, TwoQubitDensity,
};

use crate::clifford::{decompose, gamma, pauli_i, pauli_kron, pauli_z, ComplexMatrix4};
use crate::error::{Error, Result};
use crate::landau::{spinor, spinor_bar, LandauState};
use crate::numerics::{integrate_1d, integrate_2d, integrate_2d_array, QuadratureGrid};
use crate::wigner::{density, kernel_cross, kernel_l, PhasePoint, WignerMatrixField};
use std::collections::BTreeMap;
use std::f64::consts::PI;

/// `2π/√(eB)` times the physical `∬dx dk`, i.e. `(2π/eB) ∬ds dk`.
fn phase_space_norm(e_b: f64) -> f64 {
    2.0 * PI / e_b
}

/// `Tr[(γ0 M)²]` without forming products: γ0 only flips the sign of the
/// lower-doublet rows, and the trace of a square is a 16-term entry sum.
fn tr_gamma0_square(m: &ComplexMatrix4) -> f64 {
    let row_sign = [1.0, 1.0, -1.0, -1.0];
    let mut acc = 0.0;
    for a in 0..4 {
        for b in 0..4 {
            let prod = m.entries[a][b] * m.entries[b][a];
            acc += row_sign[a] * row_sign[b] * prod.re;
        }
    }
    acc
}

/// Purity from the matrix-trace route:
/// `𝒫 = (2π/√(eB)) ∬dx dk Tr[(γ0 ω)²]`.
pub fn purity_trace(field: &WignerMatrixField, grid: &QuadratureGrid) -> Result<f64> {
    let e_b = field.e_b();
    let val = integrate_2d(|p| tr_gamma0_square(&field.eval(p)), grid)?;
    Ok(phase_space_norm(e_b) * val)
}

/// [`purity_trace`] with a resolution-doubling self-check: errors out when
/// the doubled-grid value moves by more than `tol`.
pub fn purity_trace_checked(
    field: &WignerMatrixField,
    grid: &QuadratureGrid,
    tol: f64,
) -> Result<f64> {
    let coarse = purity_trace(field, grid)?;
    let fine = purity_trace(field, &grid.doubled()?)?;
    let residual = (coarse - fine).abs();
    if residual > tol {
        return Err(Error::NumericalAccuracy {
            check: "purity_trace resolution doubling",
            residual,
            tolerance: tol,
        });
    }
    Ok(fine)
}

/// Purity from the positive-definite Clifford route:
/// `𝒫 = 4 (2π/√(eB)) ∬ [|S|² + |Π|² + Σ|V^μ|² + Σ|A^μ|² + ½Σ|T^{μν}|²]`.
///
/// Identical to [`purity_trace`] by trace-orthonormality of the sixteen
/// generators; the agreement of the two routes is a per-run cross-check.
pub fn purity_clifford(field: &WignerMatrixField, grid: &QuadratureGrid) -> Result<f64> {
    let e_b = field.e_b();
    let val = integrate_2d(|p| decompose(&field.eval(p)).euclidean_square_sum(), grid)?;
    Ok(4.0 * phase_space_norm(e_b) * val)
}

/// Both coordinate-representation purity candidates for a state: the
/// `ψ†ψ` convolution (which matches the phase-space purity) and the `ψ̄ψ`
/// convolution (reported for diagnosis, never adopted).
#[derive(Debug, Clone, Copy)]
pub struct CoordinatePurity {
    /// `∬dx du ϱ̂(x−u/2) ϱ̂(x+u/2)` with `ϱ̂ = ψ†ψ`.
    pub psi_dag_psi: f64,
    /// Same convolution with `ϱ = ψ̄ψ`; evaluates to `(m/E)²` for Landau
    /// states rather than the purity.
    pub psi_bar_psi: f64,
}

/// Coordinate-route purity `𝒫 = ∬dx du ϱ(x−u/2) ϱ(x+u/2)` for a Landau
/// state, computed by literal 2-D quadrature for both density candidates.
pub fn purity_coordinate(st: &LandauState, points_per_axis: usize) -> Result<CoordinatePurity> {
    let n = points_per_axis.max(64);
    let e_b = st.params().e_b;
    let half_s = (2.0 * (2.0 * f64::from(st.n()) + 1.0)).sqrt() + 8.0;
    let half_x = half_s / e_b.sqrt() + st.params().k_y.abs() / e_b;
    let dag = |x: f64| {
        let u = spinor(st, x);
        u.iter().map(|z| z.norm_sqr()).sum::<f64>()
    };
    let bar = |x: f64| {
        let u = spinor(st, x);
        let ub = spinor_bar(&u);
        (0..4).map(|i| (ub[i] * u[i]).re).sum::<f64>()
    };
    Ok(CoordinatePurity {
        psi_dag_psi: convolution_purity(&dag, half_x, n)?,
        psi_bar_psi: convolution_purity(&bar, half_x, n)?,
    })
}

/// `∬dx du ϱ(x−u/2) ϱ(x+u/2)` for an arbitrary density profile supported
/// on `[-half_x, half_x]`, by trapezoid × trapezoid over x ∈ [−X, X] and
/// u ∈ [−2X, 2X].
///
/// Both shifted arguments land on a common lattice of spacing
/// `2X/(n−1)`, so ϱ is tabulated once and the double sum reads exact
/// values; this is still the literal double quadrature, not the factorized
/// `(∫ϱ)²` shortcut.
pub fn convolution_purity<F>(rho: &F, half_x: f64, points_per_axis: usize) -> Result<f64>
where
    F: Fn(f64) -> f64 + Sync,
{
    let n = if points_per_axis % 2 == 0 {
        points_per_axis + 1
    } else {
        points_per_axis
    };
    if n < 17 {
        return Err(Error::invalid(
            "convolution_purity needs at least 17 points per axis",
        ));
    }
    let hx = 2.0 * half_x / (n as f64 - 1.0);
    // table over [-2X, 2X] at spacing hx: indices 0..2n-1
    let table: Vec<f64> = (0..2 * n - 1)
        .map(|t| rho(-2.0 * half_x + hx * t as f64))
        .collect();
    if table.iter().any(|v| !v.is_finite()) {
        return Err(Error::invalid(
            "non-finite density value in convolution_purity",
        ));
    }
    let hu = 2.0 * hx;
    let w = |idx: usize| if idx == 0 || idx == n - 1 { 0.5 } else { 1.0 };
    let mut rows = Vec::with_capacity(n);
    for i in 0..n {
        let mut acc = 0.0;
        for j in 0..n {
            // x_i - u_j/2 and x_i + u_j/2 as exact lattice reads
            let lo = table[i + n - 1 - j];
            let hi = table[i + j];
            acc += w(j) * lo * hi;
        }
        rows.push(w(i) * acc * hx * hu);
    }
    Ok(crate::numerics::pairwise_sum(&rows))
}

/// Pointwise (non-integrated) purity `Tr[(γ0 ω)²](s, k)`, in closed form
/// `η²[(1+A²)² 𝓛_a² + 2B²(1+A²)|K_n|² + B⁴ 𝓛_b²]` with the branch pairing
/// of [`density`]. Integrates to the purity: exactly 1 for pure states.
pub fn local_purity(st: &LandauState, p: PhasePoint) -> f64 {
    let e_b = st.params().e_b;
    let n = st.n();
    let c = st.coefficients();
    let l_lo = kernel_l(n - 1, p, e_b).expect("validated state");
    let l_hi = kernel_l(n, p, e_b).expect("validated state");
    let cross = kernel_cross(n, p, e_b).expect("validated state").norm_sqr();
    let (la, lb) = if st.is_plus_branch() {
        (l_lo, l_hi)
    } else {
        (l_hi, l_lo)
    };
    let one_a2 = 1.0 + c.a * c.a;
    c.eta
        * c.eta
        * (one_a2 * one_a2 * la * la + 2.0 * c.b * c.b * one_a2 * cross + c.b.powi(4) * lb * lb)
}

/// Closed-form spin-parity relative linear entropy
/// `𝓘^{SP} = 1 − η²[(1+A²)² + B⁴]`.
pub fn entropy_sp_closed(st: &LandauState) -> f64 {
    let c = st.coefficients();
    let one_a2 = 1.0 + c.a * c.a;
    1.0 - c.eta * c.eta * (one_a2 * one_a2 + c.b.powi(4))
}

/// Spin-parity entropy from the definition: integrate ω over phase space,
/// then `1 − Tr[(γ0⟨ω⟩)²]`. Cross-checks [`entropy_sp_closed`].
pub fn entropy_sp_quadrature(st: &LandauState, grid: &QuadratureGrid) -> Result<f64> {
    let avg = average_omega(&WignerMatrixField::pure(*st), grid)?;
    let g0 = gamma(0)?;
    let m = g0 * avg;
    Ok(1.0 - (m * m).trace().re)
}

/// Phase-space averaged Wigner matrix `⟨ω⟩ = ∬dx dk ω(s, k)`, the
/// spin-parity reduced density matrix (after γ0) of the field.
pub fn average_omega(field: &WignerMatrixField, grid: &QuadratureGrid) -> Result<ComplexMatrix4> {
    let e_b = field.e_b();
    let flat = integrate_2d_array::<32, _>(
        |p| {
            let m = field.eval(p);
            let mut out = [0.0f64; 32];
            for i in 0..4 {
                for j in 0..4 {
                    out[(i * 4 + j) * 2] = m.entries[i][j].re;
                    out[(i * 4 + j) * 2 + 1] = m.entries[i][j].im;
                }
            }
            out
        },
        grid,
    )?;
    let mut avg = ComplexMatrix4::zero();
    for i in 0..4 {
        for j in 0..4 {
            avg.entries[i][j] =
                num_complex::Complex64::new(flat[(i * 4 + j) * 2], flat[(i * 4 + j) * 2 + 1])
                    / e_b.sqrt();
        }
    }
    Ok(avg)
}

/// Position-momentum relative linear entropy
/// `𝓘_{x,k} = 1 − (2π/√(eB)) ∬ ρ²` by quadrature; coincides with
/// `𝓘^{SP}` for every Landau eigenstate.
pub fn entropy_xk(st: &LandauState, grid: &QuadratureGrid) -> Result<f64> {
    let e_b = st.params().e_b;
    let val = integrate_2d(
        |p| {
            let r = density(st, p);
            r * r
        },
        grid,
    )?;
    Ok(1.0 - phase_space_norm(e_b) * val)
}

/// Closed-form mutual information between the spin-parity doublets and the
/// phase-space degrees of freedom:
///
/// `M = 2nε/(1+κ+2nε) · [1 + κ/((√(1+κ+2nε)+1)²)]`,
///
/// equal to `4η²(1+A²)B²`; zero at n = 0, monotone in n and ε, suppressed
/// by κ.
pub fn mutual_information(n: i32, eps: f64, kappa: f64) -> Result<f64> {
    if n < 0 {
        return Err(Error::invalid(format!(
            "mutual_information needs n >= 0, got {n}"
        )));
    }
    if !(eps > 0.0) || !(kappa >= 0.0) {
        return Err(Error::invalid(
            "mutual_information needs eps > 0 and kappa >= 0",
        ));
    }
    let two_n_eps = 2.0 * f64::from(n) * eps;
    let root = (1.0 + kappa + two_n_eps).sqrt();
    Ok(two_n_eps / (1.0 + kappa + two_n_eps) * (1.0 + kappa / ((root + 1.0) * (root + 1.0))))
}

/// Mutual information assembled from its quadrature-based parts,
/// `M = 𝓘_{x,k} + 𝓘^{SP} − (1 − 𝒫)`; must match [`mutual_information`].
pub fn mutual_information_from_parts(st: &LandauState, grid: &QuadratureGrid) -> Result<f64> {
    let field = WignerMatrixField::pure(*st);
    let i_xk = entropy_xk(st, grid)?;
    let i_sp = entropy_sp_quadrature(st, grid)?;
    let purity = purity_trace(&field, grid)?;
    Ok(i_xk + i_sp - (1.0 - purity))
}

/// Gordon current densities at position x: the charge/vector current
/// `j^μ = 4∫dk 𝒱^μ`, the axial current `j^μ_5 = 4∫dk 𝒜^μ`, and the local
/// spin-z density `∫dk Tr[γ0 Σ^z ω] = ψ†Σ_z ψ(x)`.
#[derive(Debug, Clone, Copy)]
pub struct CurrentDensities {
    pub j0: f64,
    pub j: [f64; 3],
    pub j5: [f64; 4],
    pub sigma_z_density: f64,
}

/// k-integrated Clifford currents at position x with `n_k` quadrature
/// points across the kernel support.
pub fn currents_at(st: &LandauState, x: f64, n_k: usize) -> Result<CurrentDensities> {
    let s = crate::landau::s_coordinate(x, st.r(), st.params());
    let k_half = (2.0 * (2.0 * f64::from(st.n()) + 1.0)).sqrt() + 8.0;
    let g0s = pauli_kron(pauli_z(), pauli_z()); // gamma0 Sigma_z
    let field = WignerMatrixField::pure(*st);
    let j0 = integrate_1d(
        |k| 4.0 * decompose(&field.eval(PhasePoint::new(s, k))).v[0].re,
        -k_half,
        k_half,
        n_k,
    )?;
    let mut j = [0.0; 3];
    for (i, slot) in j.iter_mut().enumerate() {
        *slot = integrate_1d(
            |k| 4.0 * decompose(&field.eval(PhasePoint::new(s, k))).v[i + 1].re,
            -k_half,
            k_half,
            n_k,
        )?;
    }
    let mut j5 = [0.0; 4];
    for (mu, slot) in j5.iter_mut().enumerate() {
        *slot = integrate_1d(
            |k| 4.0 * decompose(&field.eval(PhasePoint::new(s, k))).a[mu].re,
            -k_half,
            k_half,
            n_k,
        )?;
    }
    let sz = integrate_1d(
        |k| (g0s * field.eval(PhasePoint::new(s, k))).trace().re,
        -k_half,
        k_half,
        n_k,
    )?;
    Ok(CurrentDensities {
        j0,
        j,
        j5,
        sigma_z_density: sz,
    })
}

/// The averaged spin component ⟨Σ^z⟩ by two independent routes, plus the
/// literal `∬ 4𝒯^{03}` integral kept as a diagnostic (it vanishes
/// identically for these states).
#[derive(Debug, Clone, Copy)]
pub struct SpinAverage {
    /// `∬dx dk Tr[γ0 Σ^z ω]` (phase-space route, = −∫dx j³_5).
    pub phase_space_route: f64,
    /// `∫dx ψ†Σ_z ψ` (direct spinor quadrature).
    pub direct_route: f64,
    /// the literal `∬dx dk 4𝒯^{03}`; ≈ 0.
    pub tensor_03_integral: f64,
}

/// ⟨Σ^z⟩ for a Landau state; the closed form is `η(1 + A² − B²)`.
pub fn spin_average_z(st: &LandauState, grid: &QuadratureGrid) -> Result<SpinAverage> {
    let e_b = st.params().e_b;
    let field = WignerMatrixField::pure(*st);
    let g0s = pauli_kron(pauli_z(), pauli_z());
    let phase_space = integrate_2d(|p| (g0s * field.eval(p)).trace().re, grid)? / e_b.sqrt();
    let tensor03 = integrate_2d(|p| 4.0 * decompose(&field.eval(p)).t[0][3].re, grid)? / e_b.sqrt();
    let sigma_z = pauli_kron(pauli_i(), pauli_z());
    let half_x = ((2.0 * (2.0 * f64::from(st.n()) + 1.0)).sqrt() + 8.0) / e_b.sqrt()
        + st.params().k_y.abs() / e_b;
    let direct = integrate_1d(
        |x| {
            let u = spinor(st, x);
            let mut acc = 0.0;
            for i in 0..4 {
                acc += (u[i].conj() * sigma_z.entries[i][i] * u[i]).re;
            }
            acc
        },
        -half_x,
        half_x,
        2048,
    )?;
    Ok(SpinAverage {
        phase_space_route: phase_space,
        direct_route: direct,
        tensor_03_integral: tensor03,
    })
}

/// Full per-state quantifier summary with the cross-check residuals that
/// certify it.
#[derive(Debug, Clone)]
pub struct QuantifierReport {
    pub purity_trace: f64,
    pub purity_clifford: f64,
    pub purity_coordinate: f64,
    pub entropy_sp: f64,
    pub entropy_xk: f64,
    pub mutual_info_def: f64,
    pub mutual_info_closed: f64,
    pub concurrence_sq_integral: f64,
    pub residuals: BTreeMap<String, f64>,
}

impl QuantifierReport {
    /// Evaluates every quantifier for one state on the given grid.
    pub fn compute(st: &LandauState, grid: &QuadratureGrid) -> Result<Self> {
        let field = WignerMatrixField::pure(*st);
        let e_b = st.params().e_b;
        let p_trace = purity_trace(&field, grid)?;
        let p_clifford = purity_clifford(&field, grid)?;
        let coord = purity_coordinate(st, 512)?;
        let i_sp_closed = entropy_sp_closed(st);
        let i_sp_quad = entropy_sp_quadrature(st, grid)?;
        let i_xk = entropy_xk(st, grid)?;
        let m_closed = mutual_information(st.n(), st.params().eps(), st.params().kappa())?;
        let m_def = i_xk + i_sp_quad - (1.0 - p_trace);
        let c_sq_int = phase_space_norm(e_b) * integrate_2d(|p| concurrence_sq_field(st, p), grid)?;
        let mut residuals = BTreeMap::new();
        residuals.insert(
            "purity_trace_vs_clifford".into(),
            (p_trace - p_clifford).abs(),
        );
        residuals.insert(
            "purity_trace_vs_coordinate".into(),
            (p_trace - coord.psi_dag_psi).abs(),
        );
        residuals.insert(
            "purity_coordinate_psi_bar_variant".into(),
            coord.psi_bar_psi,
        );
        residuals.insert(
            "entropy_sp_def_vs_closed".into(),
            (i_sp_quad - i_sp_closed).abs(),
        );
        residuals.insert("entropy_coincidence".into(), (i_sp_closed - i_xk).abs());
        residuals.insert(
            "mutual_info_parts_vs_closed".into(),
            (m_def - m_closed).abs(),
        );
        let mut max_trace_delta: f64 = 0.0;
        for &(s, k) in &[(0.0, 0.0), (0.7, -0.4), (-1.1, 0.9), (1.6, 1.2)] {
            let p = PhasePoint::new(s, k);
            max_trace_delta = max_trace_delta
                .max((concurrence_sq_trace_route(st, p) - concurrence_sq_field(st, p)).abs());
        }
        residuals.insert("concurrence_trace_vs_closed_probe".into(), max_trace_delta);
        Ok(QuantifierReport {
            purity_trace: p_trace,
            purity_clifford: p_clifford,
            purity_coordinate: coord.psi_dag_psi,
            entropy_sp: i_sp_closed,
            entropy_xk: i_xk,
            mutual_info_def: m_def,
            mutual_info_closed: m_closed,
            concurrence_sq_integral: c_sq_int,
            residuals,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::landau::{LandauState, ParityBranch, PhysParams, Spin};
    use crate::numerics::{default_grid, DEFAULT_GRID_PAD};

    fn state(n: i32, r: ParityBranch, spin: Spin, eps: f64, kappa: f64) -> LandauState {
        LandauState::new(n, r, spin, PhysParams::dimensionless(eps, kappa).unwrap()).unwrap()
    }

    fn all_rspins() -> [(ParityBranch, Spin); 4] {
        [
            (ParityBranch::R1, Spin::Up),
            (ParityBranch::R1, Spin::Down),
            (ParityBranch::R2, Spin::Up),
            (ParityBranch::R2, Spin::Down),
        ]
    }

    #[test]
    fn pure_state_purity_is_unity_both_routes() {
        let grid = default_grid(3, DEFAULT_GRID_PAD);
        for (r, spin) in all_rspins() {
            let st = state(3, r, spin, 1.0, 1.0);
            let field = WignerMatrixField::pure(st);
            let pt = purity_trace(&field, &grid).unwrap();
            let pc = purity_clifford(&field, &grid).unwrap();
            assert!((pt - 1.0).abs() < 1e-6, "trace {pt}");
            assert!((pc - 1.0).abs() < 1e-6, "clifford {pc}");
            assert!(
                (pt - pc).abs() < 1e-10,
                "routes differ: {}",
                (pt - pc).abs()
            );
        }
    }

    #[test]
    fn purity_scale_free_in_e_b() {
        // same (n, kappa) but eB rescaled by 4 via (m, eB, kz) inputs
        let grid = default_grid(2, DEFAULT_GRID_PAD);
        let p = PhysParams::new(1.0, 4.0, 1.0, 0.0).unwrap();
        let st = LandauState::new(2, ParityBranch::R1, Spin::Up, p).unwrap();
        let val = purity_trace(&WignerMatrixField::pure(st), &grid).unwrap();
        assert!((val - 1.0).abs() < 1e-6, "{val}");
    }

    #[test]
    fn mixture_purity_matches_kernel_integral_oracle() {
        // half/half mixture of the two degenerate r=1 states
        let grid = default_grid(2, DEFAULT_GRID_PAD);
        let up = state(2, ParityBranch::R1, Spin::Up, 1.0, 1.0);
        let down = state(2, ParityBranch::R1, Spin::Down, 1.0, 1.0);
        let mix = WignerMatrixField::mixture(vec![(0.5, up), (0.5, down)]).unwrap();
        let val = purity_trace(&mix, &grid).unwrap();
        // oracle: 1/4 (P_up + P_down + 2 X) with the cross term assembled
        // from quadratures of the kernel products
        let e_b = 1.0;
        let c = up.coefficients();
        let norm = phase_space_norm(e_b);
        let ll = |a: i32, b: i32| {
            norm * integrate_2d(
                |p| kernel_l(a, p, e_b).unwrap() * kernel_l(b, p, e_b).unwrap(),
                &grid,
            )
            .unwrap()
        };
        let kk =
            norm * integrate_2d(|p| kernel_cross(2, p, e_b).unwrap().norm_sqr(), &grid).unwrap();
        let a2 = c.a * c.a;
        let b2 = c.b * c.b;
        let cross = c.eta * c.eta * a2 * b2 * (ll(1, 1) + ll(2, 2) - 2.0 * kk);
        let oracle = 0.25 * (1.0 + 1.0 + 2.0 * cross);
        assert!((val - oracle).abs() < 1e-9, "mix {val} vs oracle {oracle}");
        assert!(val < 1.0);
        assert!(
            (val - 0.5).abs() < 1e-6,
            "orthogonal mixture should sit at 1/2: {val}"
        );
    }

    #[test]
    fn purity_trace_checked_flags_bad_grid() {
        let st = state(5, ParityBranch::R1, Spin::Up, 1.0, 1.0);
        let field = WignerMatrixField::pure(st);
        // absurdly coarse and narrow grid
        let bad = QuadratureGrid::trapezoid(-2.0, 2.0, -2.0, 2.0, 16, 16).unwrap();
        assert!(purity_trace_checked(&field, &bad, 1e-8).is_err());
        let good = default_grid(5, DEFAULT_GRID_PAD);
        assert!(purity_trace_checked(&field, &good, 1e-8).is_ok());
    }

    #[test]
    fn synthetic_scalar_clifford_purity() {
        // a field with only a scalar part g(s,k): P = 4*(2pi/eB) Int g^2
        // realized by hand since Landau fields always carry more structure
        let g = |p: PhasePoint| (-(p.s * p.s + p.k * p.k)).exp();
        let grid = default_grid(0, DEFAULT_GRID_PAD);
        let val = 4.0
            * phase_space_norm(1.0)
            * integrate_2d(
                |p| {
                    let m = ComplexMatrix4::identity().scale_re(g(p));
                    decompose(&m).euclidean_square_sum()
                },
                &grid,
            )
            .unwrap();
        let expect = 4.0 * 2.0 * PI * (PI / 2.0);
        assert!((val - expect).abs() < 1e-9, "{val} vs {expect}");
    }

    #[test]
    fn coordinate_purity_both_variants() {
        let st = state(1, ParityBranch::R1, Spin::Up, 1.0, 1.0);
        let coord = purity_coordinate(&st, 512).unwrap();
        assert!(
            (coord.psi_dag_psi - 1.0).abs() < 1e-6,
            "{}",
            coord.psi_dag_psi
        );
        // psi-bar variant evaluates to (m/E)^2 = 1/4 at n=1, eps=kappa=1
        assert!(
            (coord.psi_bar_psi - 0.25).abs() < 1e-6,
            "{}",
            coord.psi_bar_psi
        );
    }

    #[test]
    fn coordinate_purity_gaussian_oracle() {
        // rho(x) = e^{-x²}/sqrt(pi): Int dx du rho rho = (Int rho)² = 1
        let rho = |x: f64| (-x * x).exp() / PI.sqrt();
        let val = convolution_purity(&rho, 10.0, 512).unwrap();
        assert!((val - 1.0).abs() < 1e-10, "{val}");
    }

    #[test]
    fn coordinate_purity_phase_invariance() {
        // scaling psi by a phase leaves psi-dag-psi untouched by construction;
        // assert on the density level
        let st = state(2, ParityBranch::R2, Spin::Down, 1.0, 1.0);
        let u = spinor(&st, 0.37);
        let phase = num_complex::Complex64::from_polar(1.0, 1.234);
        let rotated: Vec<_> = u.iter().map(|z| z * phase).collect();
        let d0: f64 = u.iter().map(|z| z.norm_sqr()).sum();
        let d1: f64 = rotated.iter().map(|z| z.norm_sqr()).sum();
        assert!((d0 - d1).abs() < 1e-15);
    }

    #[test]
    fn local_purity_properties() {
        let st = state(1, ParityBranch::R1, Spin::Up, 1.0, 1.0);
        // nonnegative everywhere, and equal to the matrix trace pointwise
        let g0 = gamma(0).unwrap();
        for i in 0..1000 {
            let s = -4.0 + 8.0 * ((i % 37) as f64 / 36.0);
            let k = -4.0 + 8.0 * ((i % 41) as f64 / 40.0);
            let p = PhasePoint::new(s, k);
            let lp = local_purity(&st, p);
            assert!(lp >= 0.0);
            let m = g0 * crate::wigner::omega_matrix(&st, p);
            assert!((lp - (m * m).trace().re).abs() < 1e-13);
        }
        // integrates to 1
        let grid = default_grid(1, DEFAULT_GRID_PAD);
        let total = phase_space_norm(1.0) * integrate_2d(|p| local_purity(&st, p), &grid).unwrap();
        assert!((total - 1.0).abs() < 1e-6, "{total}");
        // the odd kernel_m term vanishes on the s = 0 line
        for k in [-2.0, 0.3, 1.9] {
            assert_eq!(
                crate::wigner::kernel_m(1, PhasePoint::new(0.0, k), 1.0).unwrap(),
                0.0
            );
        }
    }

    #[test]
    fn entropy_values_and_coincidence() {
        let grid = default_grid(1, DEFAULT_GRID_PAD);
        let st = state(1, ParityBranch::R1, Spin::Up, 1.0, 1.0);
        let closed = entropy_sp_closed(&st);
        assert!((closed - 5.0 / 18.0).abs() < 1e-14, "{closed}");
        let quad = entropy_sp_quadrature(&st, &grid).unwrap();
        assert!(
            (closed - quad).abs() < 1e-6,
            "def vs closed: {}",
            (closed - quad).abs()
        );
        let xk = entropy_xk(&st, &grid).unwrap();
        assert!((xk - 5.0 / 18.0).abs() < 1e-6, "{xk}");
        assert!((xk - closed).abs() < 1e-6);
    }

    #[test]
    fn entropy_free_limit() {
        // kappa = 0, eps -> 0: A, B -> 0, eta -> 1, entropy -> 0
        let st = state(1, ParityBranch::R1, Spin::Up, 1e-9, 0.0);
        assert!(entropy_sp_closed(&st).abs() < 1e-8);
    }

    #[test]
    fn entropy_monotone_in_eps_at_kappa_zero() {
        let mut last = -1.0;
        for eps in [0.5, 1.0, 2.0, 5.0, 20.0] {
            let st = state(1, ParityBranch::R1, Spin::Up, eps, 0.0);
            let v = entropy_sp_closed(&st);
            assert!(v > last, "eps={eps}");
            last = v;
        }
    }

    #[test]
    fn mutual_information_closed_form_values() {
        assert!((mutual_information(1, 1.0, 1.0).unwrap() - 5.0 / 9.0).abs() < 1e-15);
        assert!((mutual_information(10, 10.0, 0.0).unwrap() - 200.0 / 201.0).abs() < 1e-12);
        let suppressed = mutual_information(1, 0.1, 100.0).unwrap();
        assert!((suppressed - 0.0036).abs() < 5e-5, "{suppressed}");
        assert_eq!(mutual_information(0, 1.0, 1.0).unwrap(), 0.0);
        assert!(mutual_information(-1, 1.0, 1.0).is_err());
        assert!(mutual_information(1, 0.0, 1.0).is_err());
    }

    #[test]
    fn mutual_information_equals_coefficient_form() {
        for (eps, kappa) in [(0.1, 0.0), (1.0, 1.0), (10.0, 100.0)] {
            let p = PhysParams::dimensionless(eps, kappa).unwrap();
            for n in 1..=8 {
                let c = crate::landau::coefficients(n, &p);
                let coeff_form = 4.0 * c.eta * c.eta * (1.0 + c.a * c.a) * c.b * c.b;
                let closed = mutual_information(n, eps, kappa).unwrap();
                assert!(
                    (coeff_form - closed).abs() < 1e-14,
                    "n={n} eps={eps} kappa={kappa}"
                );
            }
        }
    }

    #[test]
    fn mutual_information_parts_match_closed() {
        let grid = default_grid(4, DEFAULT_GRID_PAD);
        for n in 1..=4 {
            let st = state(n, ParityBranch::R1, Spin::Up, 1.0, 1.0);
            let parts = mutual_information_from_parts(&st, &grid).unwrap();
            let closed = mutual_information(n, 1.0, 1.0).unwrap();
            assert!((parts - closed).abs() < 1e-6, "n={n}: {parts} vs {closed}");
        }
    }

    #[test]
    fn mutual_information_monotone_in_n() {
        for (eps, kappa) in [(0.1, 0.01), (1.0, 1.0), (10.0, 100.0)] {
            let mut last = mutual_information(0, eps, kappa).unwrap();
            for n in 1..=20 {
                let v = mutual_information(n, eps, kappa).unwrap();
                assert!(v > last, "n={n} eps={eps} kappa={kappa}");
                last = v;
                assert!((0.0..1.0).contains(&v));
            }
        }
    }

    #[test]
    fn mutual_information_monotone_in_eps_decreasing_in_kappa() {
        for &kappa in &[0.01, 1.0, 100.0] {
            for n in 1..=6 {
                let mut last = 0.0;
                for &eps in &[0.1, 0.5, 1.0, 5.0, 10.0] {
                    let v = mutual_information(n, eps, kappa).unwrap();
                    assert!(v > last, "n={n} eps={eps} kappa={kappa}");
                    last = v;
                }
            }
        }
        for &eps in &[0.1, 1.0, 10.0] {
            for n in 1..=6 {
                let mut last = f64::INFINITY;
                for &kappa in &[0.01, 1.0, 100.0] {
                    let v = mutual_information(n, eps, kappa).unwrap();
                    assert!(v < last, "n={n} eps={eps} kappa={kappa}");
                    last = v;
                }
            }
        }
    }

    #[test]
    fn currents_normalization_and_zero_kz() {
        let st = state(1, ParityBranch::R1, Spin::Up, 1.0, 0.0); // k_z = 0
        let e_b = st.params().e_b;
        let half_x = 12.0 / e_b.sqrt();
        let charge = integrate_1d(
            |x| currents_at(&st, x, 600).unwrap().j0,
            -half_x,
            half_x,
            400,
        )
        .unwrap();
        assert!((charge - 1.0).abs() < 1e-6, "charge {charge}");
        // j_z vanishes identically without longitudinal momentum
        for x in [-1.0, 0.0, 0.8] {
            let c = currents_at(&st, x, 600).unwrap();
            assert!(c.j[2].abs() < 1e-10, "j_z = {}", c.j[2]);
        }
    }

    #[test]
    fn spin_average_two_routes() {
        let grid = default_grid(1, DEFAULT_GRID_PAD);
        let st = state(1, ParityBranch::R1, Spin::Up, 1.0, 1.0);
        let avg = spin_average_z(&st, &grid).unwrap();
        assert!(
            (avg.phase_space_route - 2.0 / 3.0).abs() < 1e-6,
            "{}",
            avg.phase_space_route
        );
        assert!(
            (avg.direct_route - 2.0 / 3.0).abs() < 1e-6,
            "{}",
            avg.direct_route
        );
        assert!(avg.tensor_03_integral.abs() < 1e-10);
    }

    #[test]
    fn quantifier_report_shape() {
        let grid = default_grid(1, DEFAULT_GRID_PAD);
        let st = state(1, ParityBranch::R1, Spin::Up, 1.0, 1.0);
        let rep = QuantifierReport::compute(&st, &grid).unwrap();
        assert!((rep.purity_trace - 1.0).abs() < 1e-6);
        assert!((rep.mutual_info_closed - 5.0 / 9.0).abs() < 1e-14);
        assert!(rep.concurrence_sq_integral.abs() < 1e-8);
        assert!(rep
            .residuals
            .contains_key("purity_coordinate_psi_bar_variant"));
    }
}
