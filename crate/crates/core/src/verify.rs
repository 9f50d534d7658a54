//! The named cross-check suite: every acceptance criterion as an executable
//! check with a measured residual and a pinned tolerance. Shared by the
//! `verify` CLI command and the acceptance test target.

use crate::clifford::{
    decompose, gamma, gamma5, pauli_kron, pauli_y, reconstruct, ComplexMatrix4, METRIC,
};
use crate::error::Result;
use crate::landau::{LandauState, ParityBranch, PhysParams, Spin};
use crate::numerics::{default_grid, integrate_1d, integrate_2d, QuadratureGrid, DEFAULT_GRID_PAD};
use crate::quantifiers::{
    concurrence_general, concurrence_pure_bloch, concurrence_sq_field, concurrence_sq_prefactor,
    concurrence_sq_trace_route, entropy_sp_closed, entropy_sp_quadrature, entropy_xk,
    mutual_information, purity_coordinate, purity_trace, spin_average_z, QuantifierReport,
    TwoQubitDensity,
};
use crate::specfun::{hermite_fn, hermite_poly};
use crate::wigner::{
    kernel_l, kernel_m, omega_matrix, weyl_transform, PhasePoint, SampledSpinor, WignerMatrixField,
};
use num_complex::Complex64;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use std::f64::consts::PI;

/// One named check with its measured residual against a pinned tolerance.
#[derive(Debug, Clone)]
pub struct Check {
    pub name: String,
    pub residual: f64,
    pub tolerance: f64,
    pub pass: bool,
    /// Report-only diagnostics carry a note and never fail the run.
    pub note: Option<String>,
}

impl Check {
    fn gated(name: &str, residual: f64, tolerance: f64) -> Self {
        Check {
            name: name.to_string(),
            residual,
            tolerance,
            pass: residual.abs() <= tolerance,
            note: None,
        }
    }

    fn reported(name: &str, residual: f64, note: &str) -> Self {
        Check {
            name: name.to_string(),
            residual,
            tolerance: f64::INFINITY,
            pass: true,
            note: Some(note.to_string()),
        }
    }
}

/// Verification options: `tolerance_scale` multiplies every gated
/// tolerance (values below 1 tighten), `grid_points` overrides the default
/// 512 per axis.
#[derive(Debug, Clone, Copy)]
pub struct VerifyOptions {
    pub tolerance_scale: f64,
    pub grid_points: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            tolerance_scale: 1.0,
            grid_points: 512,
        }
    }
}

impl VerifyOptions {
    fn tol(&self, base: f64) -> f64 {
        base * self.tolerance_scale
    }

    fn grid_for(&self, n_max: i32) -> QuadratureGrid {
        if self.grid_points == 512 {
            default_grid(n_max, DEFAULT_GRID_PAD)
        } else {
            let l = (2.0 * (2.0 * f64::from(n_max.max(0)) + 1.0)).sqrt() + DEFAULT_GRID_PAD;
            QuadratureGrid::trapezoid(-l, l, -l, l, self.grid_points, self.grid_points)
                .expect("valid grid")
        }
    }
}

/// Per-state quantifier block of the verify report.
#[derive(Debug, Clone)]
pub struct StateReport {
    pub n: i32,
    pub r: u8,
    pub spin: String,
    pub eps: f64,
    pub kappa: f64,
    pub quantifiers: QuantifierReport,
}

/// The full verification outcome.
#[derive(Debug, Clone)]
pub struct VerifyReport {
    pub checks: Vec<Check>,
    pub states: Vec<StateReport>,
}

impl VerifyReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failed(&self) -> Vec<&Check> {
        self.checks.iter().filter(|c| !c.pass).collect()
    }
}

/// The canonical state set of the acceptance criteria:
/// n ∈ 1..=5, both parity branches, both spins,
/// (ε, κ) ∈ {0.1, 1, 10} × {0, 1, 100}.
pub fn acceptance_state_set() -> Vec<LandauState> {
    let mut states = Vec::new();
    for &eps in &[0.1, 1.0, 10.0] {
        for &kappa in &[0.0, 1.0, 100.0] {
            let p = PhysParams::dimensionless(eps, kappa).expect("valid");
            for n in 1..=5 {
                for r in [ParityBranch::R1, ParityBranch::R2] {
                    for spin in [Spin::Up, Spin::Down] {
                        states.push(LandauState::new(n, r, spin, p).expect("valid"));
                    }
                }
            }
        }
    }
    states
}

fn all_rspins() -> [(ParityBranch, Spin); 4] {
    [
        (ParityBranch::R1, Spin::Up),
        (ParityBranch::R1, Spin::Down),
        (ParityBranch::R2, Spin::Up),
        (ParityBranch::R2, Spin::Down),
    ]
}

/// Criterion 1: purity of pure states equals 1 on both routes, and the two
/// routes agree to 1e−10 on the same grid.
pub fn criterion_purity(opts: &VerifyOptions) -> Result<Vec<Check>> {
    let grid = opts.grid_for(5);
    let mut worst_trace: f64 = 0.0;
    let mut worst_clifford: f64 = 0.0;
    let mut worst_gap: f64 = 0.0;
    for st in acceptance_state_set() {
        let field = WignerMatrixField::pure(st);
        let pt = purity_trace(&field, &grid)?;
        let pc = crate::quantifiers::purity_clifford(&field, &grid)?;
        worst_trace = worst_trace.max((pt - 1.0).abs());
        worst_clifford = worst_clifford.max((pc - 1.0).abs());
        worst_gap = worst_gap.max((pt - pc).abs());
    }
    Ok(vec![
        Check::gated("purity_trace_unity", worst_trace, opts.tol(1e-6)),
        Check::gated("purity_clifford_unity", worst_clifford, opts.tol(1e-6)),
        Check::gated("purity_trace_vs_clifford", worst_gap, opts.tol(1e-10)),
    ])
}

/// Criterion 2: the two relative linear entropies coincide, with the
/// n = 1, ε = κ = 1 value pinned at 5/18.
pub fn criterion_entropies(opts: &VerifyOptions) -> Result<Vec<Check>> {
    let grid = opts.grid_for(5);
    let mut worst_gap: f64 = 0.0;
    for st in acceptance_state_set() {
        let xk = entropy_xk(&st, &grid)?;
        worst_gap = worst_gap.max((xk - entropy_sp_closed(&st)).abs());
    }
    let pinned = LandauState::new(
        1,
        ParityBranch::R1,
        Spin::Up,
        PhysParams::dimensionless(1.0, 1.0)?,
    )?;
    let sp = entropy_sp_closed(&pinned);
    let sp_quad = entropy_sp_quadrature(&pinned, &grid)?;
    let xk = entropy_xk(&pinned, &grid)?;
    Ok(vec![
        Check::gated("entropy_sp_vs_xk", worst_gap, opts.tol(1e-6)),
        Check::gated("entropy_sp_value_n1", sp - 5.0 / 18.0, opts.tol(1e-6)),
        Check::gated("entropy_xk_value_n1", xk - 5.0 / 18.0, opts.tol(1e-6)),
        Check::gated("entropy_sp_def_vs_closed_n1", sp_quad - sp, opts.tol(1e-6)),
    ])
}

/// Criterion 3: mutual information — quadrature parts against the closed
/// form, the exact n = 1 value, the κ = 0 reduction, and the κ-regime
/// ordering.
pub fn criterion_mutual_information(opts: &VerifyOptions) -> Result<Vec<Check>> {
    let grid = opts.grid_for(5);
    let mut worst_parts: f64 = 0.0;
    for st in acceptance_state_set() {
        let parts = crate::quantifiers::mutual_information_from_parts(&st, &grid)?;
        let closed = mutual_information(st.n(), st.params().eps(), st.params().kappa())?;
        worst_parts = worst_parts.max((parts - closed).abs());
    }
    let m111 = mutual_information(1, 1.0, 1.0)?;
    let mut worst_kappa0: f64 = 0.0;
    for n in 1..=20 {
        for &eps in &[0.1, 1.0, 10.0] {
            let closed = mutual_information(n, eps, 0.0)?;
            let reduced = 2.0 * f64::from(n) * eps / (1.0 + 2.0 * f64::from(n) * eps);
            worst_kappa0 = worst_kappa0.max((closed - reduced).abs());
        }
    }
    // regime ordering: kappa = 0.01 above kappa = 1 above kappa = 100,
    // pointwise over the swept (n, eps) range; residual is the worst margin
    let mut min_margin = f64::INFINITY;
    for n in 1..=20 {
        for &eps in &[0.1, 1.0, 10.0] {
            let m_nonrel = mutual_information(n, eps, 0.01)?;
            let m_rel = mutual_information(n, eps, 1.0)?;
            let m_ultra = mutual_information(n, eps, 100.0)?;
            min_margin = min_margin.min(m_nonrel - m_rel).min(m_rel - m_ultra);
        }
    }
    let ordering = Check {
        name: "mutual_info_regime_ordering".to_string(),
        residual: min_margin,
        tolerance: 0.0,
        pass: min_margin > 0.0,
        note: Some("residual is the smallest kappa-ordering margin; must stay positive".into()),
    };
    Ok(vec![
        Check::gated("mutual_info_parts_vs_closed", worst_parts, opts.tol(1e-6)),
        Check::gated("mutual_info_value_n1", m111 - 5.0 / 9.0, opts.tol(1e-12)),
        Check::gated("mutual_info_kappa0_form", worst_kappa0, opts.tol(1e-12)),
        ordering,
    ])
}

/// Criterion 4: analytic Wigner matrices against the numerical Weyl oracle,
/// entrywise over a 21×21 probe grid in [−4, 4]² for every n ≤ 5 state.
pub fn criterion_wigner_oracle(opts: &VerifyOptions) -> Result<Vec<Check>> {
    let p = PhysParams::dimensionless(1.0, 1.0)?;
    let mut states = Vec::new();
    for n in 1..=5 {
        for (r, spin) in all_rspins() {
            states.push(LandauState::new(n, r, spin, p)?);
        }
    }
    // sample span [-24, 24] at spacing 1/160 keeps every probe
    // s = -4 + 0.4 j on the half-lattice of the oracle
    let worst_per_state: Vec<f64> = std::thread::scope(|scope| {
        let handles: Vec<_> = states
            .iter()
            .map(|st| {
                scope.spawn(move || {
                    let psi =
                        SampledSpinor::from_fn(|x| crate::landau::spinor(st, x), -24.0, 24.0, 7681)
                            .expect("valid sampling");
                    let mut worst: f64 = 0.0;
                    for i in 0..=20 {
                        for j in 0..=20 {
                            let probe = PhasePoint::new(
                                -4.0 + 0.4 * f64::from(i),
                                -4.0 + 0.4 * f64::from(j),
                            );
                            let oracle = weyl_transform(&psi, probe, 1.0).expect("aligned probe");
                            let analytic = omega_matrix(st, probe);
                            worst = worst.max(oracle.max_abs_diff(&analytic));
                        }
                    }
                    worst
                })
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("no panic"))
            .collect()
    });
    let worst = worst_per_state.into_iter().fold(0.0f64, f64::max);
    Ok(vec![Check::gated(
        "wigner_analytic_vs_weyl_oracle",
        worst,
        opts.tol(1e-7),
    )])
}

/// Criterion 5: kernel normalizations and Hermite orthonormality.
pub fn criterion_kernels(opts: &VerifyOptions) -> Result<Vec<Check>> {
    let e_b = 1.0;
    let mut worst_l: f64 = 0.0;
    let mut worst_m: f64 = 0.0;
    for n in 0..=10 {
        let grid = opts.grid_for(n);
        let l_int = integrate_2d(|p| kernel_l(n, p, e_b).expect("valid"), &grid)?;
        worst_l = worst_l.max((l_int - 1.0).abs());
        if n >= 1 {
            let m_int = integrate_2d(|p| kernel_m(n, p, e_b).expect("valid"), &grid)?;
            worst_m = worst_m.max(m_int.abs());
        }
    }
    let l = (2.0 * (2.0 * 20.0_f64 + 1.0)).sqrt() + 6.0;
    let mut worst_orth: f64 = 0.0;
    for n in 0..=20 {
        for m in 0..=20 {
            let val = integrate_1d(
                |s| hermite_fn(n, s, e_b).expect("valid") * hermite_fn(m, s, e_b).expect("valid"),
                -l,
                l,
                3000,
            )?;
            let expect = if n == m { e_b.sqrt() } else { 0.0 };
            worst_orth = worst_orth.max((val - expect).abs());
        }
    }
    // reported: the symmetrized integral representation of the cross
    // kernel carries twice the closed form
    let ratio = kernel_m_integral_form_ratio()?;
    Ok(vec![
        Check::gated("kernel_l_normalization", worst_l, opts.tol(1e-8)),
        Check::gated("kernel_m_zero_integral", worst_m, opts.tol(1e-10)),
        Check::gated("hermite_orthonormality", worst_orth, opts.tol(1e-8)),
        Check::reported(
            "kernel_m_integral_form_ratio",
            ratio,
            "symmetrized integral-form normalization over the adopted closed form; the \
             factor-2 discrepancy is reported, not rescaled",
        ),
    ])
}

/// Ratio of the symmetrized integral representation of the cross kernel
/// (the Hermite-product form with its usual normalization, under the 1/π
/// convention) to the adopted closed form, at a probe point. Measures ≈ 2.
fn kernel_m_integral_form_ratio() -> Result<f64> {
    let (n, s, k, e_b) = (1, 0.9_f64, 0.4_f64, 1.0_f64);
    let mut log_norm = 0.0; // ln(2^{n-3/2} n! sqrt(pi))
    for j in 1..=n {
        log_norm += f64::from(j).ln();
    }
    log_norm += (f64::from(n) - 1.5) * std::f64::consts::LN_2 + 0.5 * PI.ln();
    let pref = (f64::from(n) * e_b).sqrt() * (-log_norm).exp();
    let integral = integrate_1d(
        |u| {
            let sym = 0.5
                * (hermite_poly(n, s + u).expect("valid")
                    * hermite_poly(n - 1, s - u).expect("valid")
                    + hermite_poly(n - 1, s + u).expect("valid")
                        * hermite_poly(n, s - u).expect("valid"));
            (2.0 * k * u).cos() * (-u * u).exp() * sym
        },
        -10.0,
        10.0,
        4096,
    )?;
    let first_line = pref * (-s * s).exp() * integral / PI;
    let closed = kernel_m(n, PhasePoint::new(s, k), e_b)?;
    Ok(first_line / closed)
}

/// Criterion 6: the concurrence block — flip-sandwich trace against the
/// closed-form field (the identity is measured here; it fails, see the
/// README's known-discrepancy note), the zero integral, reference
/// two-qubit values, and Bloch-vs-eigenvalue agreement.
pub fn criterion_concurrence(opts: &VerifyOptions) -> Result<Vec<Check>> {
    // clause 1: trace route vs closed form at 1000 seeded random points
    let p = PhysParams::dimensionless(1.0, 1.0)?;
    let mut rng = StdRng::seed_from_u64(0x5eed_c0de);
    let mut worst_trace: f64 = 0.0;
    for n in 1..=3 {
        for (r, spin) in all_rspins() {
            let st = LandauState::new(n, r, spin, p)?;
            for _ in 0..84 {
                let point = PhasePoint::new(
                    rng.random::<f64>() * 8.0 - 4.0,
                    rng.random::<f64>() * 8.0 - 4.0,
                );
                let delta =
                    concurrence_sq_trace_route(&st, point) - concurrence_sq_field(&st, point);
                worst_trace = worst_trace.max(delta.abs());
            }
        }
    }
    // clause 1b (green counterpart): the two closed-form coefficient routes
    let mut worst_pref: f64 = 0.0;
    for st in acceptance_state_set() {
        let (a, b) = concurrence_sq_prefactor(&st);
        worst_pref = worst_pref.max((a - b).abs());
    }
    // clause 2: the field averages out to zero
    let grid = opts.grid_for(5);
    let mut worst_int: f64 = 0.0;
    for n in 1..=5 {
        let st = LandauState::new(n, ParityBranch::R1, Spin::Up, p)?;
        let total = 2.0 * PI * integrate_2d(|q| concurrence_sq_field(&st, q), &grid)?;
        worst_int = worst_int.max(total.abs());
    }
    // clause 3: reference two-qubit values
    let inv = Complex64::new(std::f64::consts::FRAC_1_SQRT_2, 0.0);
    let zero = Complex64::new(0.0, 0.0);
    let bell = TwoQubitDensity::from_pure(&[inv, zero, zero, inv])?;
    let product = TwoQubitDensity::from_pure(&[Complex64::new(1.0, 0.0), zero, zero, zero])?;
    let werner = {
        let mut m = bell.matrix().scale_re(0.8);
        for i in 0..4 {
            m.entries[i][i] += Complex64::new(0.05, 0.0);
        }
        TwoQubitDensity::new(m)?
    };
    let bell_res = (concurrence_general(&bell) - 1.0).abs();
    let product_res = concurrence_general(&product).abs();
    let werner_res = (concurrence_general(&werner) - 0.7).abs();
    // clause 4: Bloch route vs eigenvalue route on 1000 random pure states
    let mut rng = StdRng::seed_from_u64(0xb10c);
    let mut worst_bloch: f64 = 0.0;
    for _ in 0..1000 {
        let mut w = [zero; 4];
        for slot in w.iter_mut() {
            *slot = Complex64::new(rng.random::<f64>() - 0.5, rng.random::<f64>() - 0.5);
        }
        let rho = TwoQubitDensity::from_pure(&w)?;
        let (cb, _) = concurrence_pure_bloch(&rho)?;
        worst_bloch = worst_bloch.max((cb - concurrence_general(&rho)).abs());
    }
    Ok(vec![
        Check::gated("concurrence_trace_vs_closed", worst_trace, opts.tol(1e-10)),
        Check::gated("concurrence_prefactor_routes", worst_pref, opts.tol(1e-14)),
        Check::gated("concurrence_sq_zero_integral", worst_int, opts.tol(1e-8)),
        Check::gated("concurrence_bell", bell_res, opts.tol(1e-10)),
        Check::gated("concurrence_product", product_res, opts.tol(1e-10)),
        Check::gated("concurrence_werner", werner_res, opts.tol(1e-10)),
        Check::gated("concurrence_bloch_vs_eigen", worst_bloch, opts.tol(1e-8)),
    ])
}

/// Criterion 7: Clifford anticommutation and decompose/reconstruct
/// round-trips on 1000 seeded random complex matrices.
pub fn criterion_clifford(opts: &VerifyOptions) -> Result<Vec<Check>> {
    let mut worst_anti: f64 = 0.0;
    for mu in 0..4 {
        for nu in 0..4 {
            let gm = gamma(mu)?;
            let gn = gamma(nu)?;
            let anti = gm * gn + gn * gm;
            let expect = if mu == nu {
                ComplexMatrix4::identity().scale_re(2.0 * METRIC[mu])
            } else {
                ComplexMatrix4::zero()
            };
            worst_anti = worst_anti.max(anti.distance(&expect));
        }
        let g5 = gamma5();
        let g = gamma(mu)?;
        worst_anti = worst_anti.max((g5 * g + g * g5).frobenius_norm());
    }
    let mut rng = StdRng::seed_from_u64(0xc11f);
    let mut worst_rt: f64 = 0.0;
    for _ in 0..1000 {
        let mut m = ComplexMatrix4::zero();
        for i in 0..4 {
            for j in 0..4 {
                m.entries[i][j] = Complex64::new(
                    rng.random::<f64>() * 2.0 - 1.0,
                    rng.random::<f64>() * 2.0 - 1.0,
                );
            }
        }
        let back = reconstruct(&decompose(&m))?;
        worst_rt = worst_rt.max(back.distance(&m));
    }
    Ok(vec![
        Check::gated("clifford_anticommutation", worst_anti, opts.tol(1e-14)),
        Check::gated("clifford_roundtrip", worst_rt, opts.tol(1e-12)),
    ])
}

/// Criterion 8: current normalization and the spin average by two routes.
pub fn criterion_currents(opts: &VerifyOptions) -> Result<Vec<Check>> {
    let p = PhysParams::dimensionless(1.0, 1.0)?;
    let grid = opts.grid_for(1);
    let mut worst_charge: f64 = 0.0;
    for (r, spin) in all_rspins() {
        let st = LandauState::new(1, r, spin, p)?;
        let field = WignerMatrixField::pure(st);
        // literal two-stage route: j0(x) = 4 Int dk V^0, then Int dx
        let charge = integrate_1d(
            |x| {
                let s = crate::landau::s_coordinate(x, st.r(), st.params());
                integrate_1d(
                    |k| 4.0 * decompose(&field.eval(PhasePoint::new(s, k))).v[0].re,
                    -12.0,
                    12.0,
                    400,
                )
                .unwrap_or(f64::NAN)
            },
            -12.0,
            12.0,
            400,
        )?;
        worst_charge = worst_charge.max((charge - 1.0).abs());
    }
    let st = LandauState::new(1, ParityBranch::R1, Spin::Up, p)?;
    let avg = spin_average_z(&st, &grid)?;
    Ok(vec![
        Check::gated("current_charge_normalization", worst_charge, opts.tol(1e-6)),
        Check::gated(
            "spin_avg_phase_space_route",
            avg.phase_space_route - 2.0 / 3.0,
            opts.tol(1e-6),
        ),
        Check::gated(
            "spin_avg_direct_route",
            avg.direct_route - 2.0 / 3.0,
            opts.tol(1e-6),
        ),
        Check::reported(
            "spin_avg_tensor03_integral",
            avg.tensor_03_integral,
            "the literal sigma^{03} tensor integral vanishes identically; the operative \
             phase-space route is Tr[gamma0 Sigma_z omega] = -4 A^3",
        ),
    ])
}

/// Criterion 9: the ψ†ψ coordinate-route purity matches the trace route;
/// the ψ̄ψ variant is reported.
pub fn criterion_coordinate_purity(opts: &VerifyOptions) -> Result<Vec<Check>> {
    let grid = opts.grid_for(5);
    let mut worst: f64 = 0.0;
    let mut psibar_min = f64::INFINITY;
    let mut psibar_max = f64::NEG_INFINITY;
    for st in acceptance_state_set() {
        let field = WignerMatrixField::pure(st);
        let pt = purity_trace(&field, &grid)?;
        let coord = purity_coordinate(&st, 512)?;
        worst = worst.max((pt - coord.psi_dag_psi).abs());
        psibar_min = psibar_min.min(coord.psi_bar_psi);
        psibar_max = psibar_max.max(coord.psi_bar_psi);
    }
    Ok(vec![
        Check::gated("purity_coordinate_vs_trace", worst, opts.tol(1e-6)),
        Check::reported(
            "purity_coordinate_psi_bar_variant_range",
            psibar_max - psibar_min,
            &format!(
                "psi-bar-psi convolution spans [{psibar_min:.6}, {psibar_max:.6}] over the state \
                 set (= (m/E)^2, not the purity); reported per the open question"
            ),
        ),
    ])
}

/// Pseudo-Hermiticity of the analytic matrices over probe points.
pub fn check_pseudo_hermiticity(opts: &VerifyOptions) -> Result<Vec<Check>> {
    let p = PhysParams::dimensionless(1.0, 1.0)?;
    let mut worst: f64 = 0.0;
    for n in 1..=5 {
        for (r, spin) in all_rspins() {
            let st = LandauState::new(n, r, spin, p)?;
            for i in 0..5 {
                for j in 0..5 {
                    let q = PhasePoint::new(-3.0 + 1.5 * f64::from(i), -3.0 + 1.5 * f64::from(j));
                    worst = worst.max(crate::wigner::pseudo_hermiticity_defect(&omega_matrix(
                        &st, q,
                    )));
                }
            }
        }
    }
    Ok(vec![Check::gated(
        "wigner_pseudo_hermiticity",
        worst,
        opts.tol(1e-12),
    )])
}

/// Flip involution on random pure densities, plus the operator identity
/// `σ_y ⊗ σ_y = −iγ²`.
pub fn check_flip_involution(opts: &VerifyOptions) -> Result<Vec<Check>> {
    let mut rng = StdRng::seed_from_u64(0xf11b);
    let mut worst: f64 = 0.0;
    for _ in 0..200 {
        let mut w = [Complex64::new(0.0, 0.0); 4];
        for slot in w.iter_mut() {
            *slot = Complex64::new(rng.random::<f64>() - 0.5, rng.random::<f64>() - 0.5);
        }
        let rho = TwoQubitDensity::from_pure(&w)?;
        let twice = crate::quantifiers::spin_flip(&crate::quantifiers::spin_flip(rho.matrix()));
        worst = worst.max(twice.distance(rho.matrix()));
    }
    let mm = ComplexMatrix4::identity().scale_re(0.25);
    worst = worst.max(crate::quantifiers::spin_flip(&mm).distance(&mm));
    let syy = pauli_kron(pauli_y(), pauli_y());
    let minus_i_g2 = gamma(2)?.scale(Complex64::new(0.0, -1.0));
    worst = worst.max(syy.distance(&minus_i_g2));
    Ok(vec![Check::gated(
        "spin_flip_involution",
        worst,
        opts.tol(1e-12),
    )])
}

/// Runs the whole suite and assembles the per-state quantifier blocks.
pub fn run_all(opts: &VerifyOptions) -> Result<VerifyReport> {
    let mut checks = Vec::new();
    checks.extend(criterion_purity(opts)?);
    checks.extend(criterion_entropies(opts)?);
    checks.extend(criterion_mutual_information(opts)?);
    checks.extend(criterion_wigner_oracle(opts)?);
    checks.extend(criterion_kernels(opts)?);
    checks.extend(criterion_concurrence(opts)?);
    checks.extend(criterion_clifford(opts)?);
    checks.extend(criterion_currents(opts)?);
    checks.extend(criterion_coordinate_purity(opts)?);
    checks.extend(check_pseudo_hermiticity(opts)?);
    checks.extend(check_flip_involution(opts)?);
    let grid = opts.grid_for(5);
    let mut states = Vec::new();
    for st in acceptance_state_set() {
        states.push(StateReport {
            n: st.n(),
            r: st.r().index(),
            spin: st.spin().label().to_string(),
            eps: st.params().eps(),
            kappa: st.params().kappa(),
            quantifiers: QuantifierReport::compute(&st, &grid)?,
        });
    }
    Ok(VerifyReport { checks, states })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn state_set_has_180_states() {
        assert_eq!(acceptance_state_set().len(), 180);
    }

    #[test]
    fn quick_criteria_pass() {
        let opts = VerifyOptions {
            tolerance_scale: 1.0,
            grid_points: 128,
        };
        for check in criterion_clifford(&opts).unwrap() {
            assert!(check.pass, "{}: {}", check.name, check.residual);
        }
        for check in check_flip_involution(&opts).unwrap() {
            assert!(check.pass, "{}: {}", check.name, check.residual);
        }
    }

    #[test]
    fn kernel_m_integral_ratio_is_two() {
        let ratio = kernel_m_integral_form_ratio().unwrap();
        assert!((ratio - 2.0).abs() < 1e-6, "ratio = {ratio}");
    }
}
