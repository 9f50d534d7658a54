//! The trapped-fermion eigenproblem: coordinates, spectrum, spinor
//! coefficients, and the four eigenspinors per Landau level.
//!
//! All plane-wave factors in (y, z, t) are dropped: they are unimodular and
//! cancel in every bilinear this crate computes. The transverse momentum
//! `k_y` enters only through the orbit-center shift inside `s_r`.

use crate::error::{Error, Result};
use crate::specfun::hermite_fn;
use num_complex::Complex64;

/// Spin label of an eigenspinor.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Spin {
    Up,
    Down,
}

impl Spin {
    pub fn sign(self) -> f64 {
        match self {
            Spin::Up => 1.0,
            Spin::Down => -1.0,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Spin::Up => "+",
            Spin::Down => "-",
        }
    }
}

/// Intrinsic-parity branch, r = 1 (positive) or r = 2 (negative).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ParityBranch {
    R1,
    R2,
}

impl ParityBranch {
    pub fn index(self) -> u8 {
        match self {
            ParityBranch::R1 => 1,
            ParityBranch::R2 => 2,
        }
    }

    /// (−1)^r
    pub fn sign(self) -> f64 {
        match self {
            ParityBranch::R1 => -1.0,
            ParityBranch::R2 => 1.0,
        }
    }
}

/// Physical parameters of the trapped fermion.
///
/// `m` sets the unit scale; the quantifiers depend only on the dimensionless
/// pair (ε, κ) = (eB/m², k_z²/m²) plus the Landau index.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhysParams {
    pub m: f64,
    pub e_b: f64,
    pub k_y: f64,
    pub k_z: f64,
}

impl PhysParams {
    pub fn new(m: f64, e_b: f64, k_z: f64, k_y: f64) -> Result<Self> {
        if !(m > 0.0) || !m.is_finite() {
            return Err(Error::invalid(format!(
                "mass must be positive and finite, got {m}"
            )));
        }
        if !(e_b > 0.0) || !e_b.is_finite() {
            return Err(Error::invalid(format!(
                "eB must be positive and finite, got {e_b}"
            )));
        }
        if !k_z.is_finite() || !k_y.is_finite() {
            return Err(Error::invalid("momenta must be finite"));
        }
        Ok(PhysParams { m, e_b, k_y, k_z })
    }

    /// Dimensionless inputs (ε, κ) with m = 1 and k_y = 0;
    /// k_z = +√κ (the quantifiers depend on k_z only through κ).
    pub fn dimensionless(eps: f64, kappa: f64) -> Result<Self> {
        if !(eps > 0.0) || !eps.is_finite() {
            return Err(Error::invalid(format!(
                "eps must be positive and finite, got {eps}"
            )));
        }
        if !(kappa >= 0.0) || !kappa.is_finite() {
            return Err(Error::invalid(format!(
                "kappa must be nonnegative and finite, got {kappa}"
            )));
        }
        PhysParams::new(1.0, eps, kappa.sqrt(), 0.0)
    }

    pub fn eps(&self) -> f64 {
        self.e_b / (self.m * self.m)
    }

    pub fn kappa(&self) -> f64 {
        (self.k_z * self.k_z) / (self.m * self.m)
    }
}

/// One Landau eigenstate: index n ≥ 1, parity branch, spin, parameters.
///
/// n = 0 is excluded: the n = 0 spinors degenerate to B_0 = 0 structures the
/// analysis never uses, while `mutual_information(0, ..)` is still exposed
/// through the closed form.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LandauState {
    n: i32,
    r: ParityBranch,
    spin: Spin,
    params: PhysParams,
}

/// The closed-form spinor coefficients (A_n, B_n, η_n).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Coefficients {
    pub a: f64,
    pub b: f64,
    pub eta: f64,
}

impl LandauState {
    pub fn new(n: i32, r: ParityBranch, spin: Spin, params: PhysParams) -> Result<Self> {
        if n < 1 {
            return Err(Error::invalid(format!(
                "Landau index must be >= 1, got {n}"
            )));
        }
        Ok(LandauState { n, r, spin, params })
    }

    pub fn n(&self) -> i32 {
        self.n
    }

    pub fn r(&self) -> ParityBranch {
        self.r
    }

    pub fn spin(&self) -> Spin {
        self.spin
    }

    pub fn params(&self) -> &PhysParams {
        &self.params
    }

    pub fn energy(&self) -> f64 {
        energy(self.n, &self.params)
    }

    pub fn coefficients(&self) -> Coefficients {
        coefficients(self.n, &self.params)
    }

    /// True for the (+, r=1) and (−, r=2) states, whose density weights the
    /// n−1 kernel with (1 + A²); the other two states swap n−1 ↔ n.
    pub fn is_plus_branch(&self) -> bool {
        matches!(
            (self.spin, self.r),
            (Spin::Up, ParityBranch::R1) | (Spin::Down, ParityBranch::R2)
        )
    }
}

/// Dimensionless oscillator coordinate
/// `s_r(x) = √(eB) (x + (−1)^r k_y/(eB))`.
pub fn s_coordinate(x: f64, r: ParityBranch, p: &PhysParams) -> f64 {
    p.e_b.sqrt() * (x + r.sign() * p.k_y / p.e_b)
}

/// Landau level energy `E_n = √(m² + k_z² + 2 n eB)`.
pub fn energy(n: i32, p: &PhysParams) -> f64 {
    (p.m * p.m + p.k_z * p.k_z + 2.0 * f64::from(n.max(0)) * p.e_b).sqrt()
}

/// Energy from the raw level bookkeeping
/// `E² = m² + k_z² + [(2 n_H + 1) ∓ (−1)^r] eB` (upper sign for spin up),
/// where `n_H` is the Hermite index of the large component. The 2-fold
/// degeneracy `E_{n−1,↑} = E_{n,↓}` (r = 1) is an identity between this
/// form and [`energy`].
pub fn level_energy(n_hermite: i32, spin: Spin, r: ParityBranch, p: &PhysParams) -> f64 {
    let shift = (2.0 * f64::from(n_hermite) + 1.0) - spin.sign() * r.sign();
    (p.m * p.m + p.k_z * p.k_z + shift * p.e_b).sqrt()
}

/// The closed-form coefficients
/// `A_n = k_z/(E_n+m)`, `B_n = √(2 n eB)/(E_n+m)`, `η_n = (E_n+m)/(2E_n)`,
/// satisfying `η_n [(1 + A_n²) + B_n²] = 1`.
pub fn coefficients(n: i32, p: &PhysParams) -> Coefficients {
    let e = energy(n, p);
    Coefficients {
        a: p.k_z / (e + p.m),
        b: (2.0 * f64::from(n) * p.e_b).sqrt() / (e + p.m),
        eta: (e + p.m) / (2.0 * e),
    }
}

/// Real structure of an eigenspinor: component amplitudes (the √η factor
/// kept separate) and the Hermite index carried by each component.
///
/// Component layout per state (columns are spinor slots 1..4):
///
/// | state      | amplitudes        | Hermite index |
/// |------------|-------------------|---------------|
/// | u⁺ (r=1)   | (1, 0, A, −B)     | (n−1, ·, n−1, n) |
/// | u⁻ (r=1)   | (0, 1, −B, −A)    | (·, n, n−1, n)   |
/// | u⁻ (r=2)   | (A, B, 1, 0)      | (n−1, n, n−1, ·) |
/// | u⁺ (r=2)   | (B, −A, 0, 1)     | (n−1, n, ·, n)   |
pub(crate) fn spinor_structure(st: &LandauState) -> ([f64; 4], [i32; 4]) {
    let Coefficients { a, b, .. } = st.coefficients();
    let n = st.n;
    match (st.spin, st.r) {
        (Spin::Up, ParityBranch::R1) => ([1.0, 0.0, a, -b], [n - 1, 0, n - 1, n]),
        (Spin::Down, ParityBranch::R1) => ([0.0, 1.0, -b, -a], [0, n, n - 1, n]),
        (Spin::Down, ParityBranch::R2) => ([a, b, 1.0, 0.0], [n - 1, n, n - 1, 0]),
        (Spin::Up, ParityBranch::R2) => ([b, -a, 0.0, 1.0], [n - 1, n, 0, n]),
    }
}

/// Four-component eigenspinor value at position x, in units (eB)^{1/4}.
///
/// Components are real; plane-wave and time phases are omitted.
pub fn spinor(st: &LandauState, x: f64) -> [Complex64; 4] {
    let s = s_coordinate(x, st.r, st.params());
    let eta = st.coefficients().eta;
    let (amps, orders) = spinor_structure(st);
    let mut u = [Complex64::new(0.0, 0.0); 4];
    for i in 0..4 {
        if amps[i] != 0.0 {
            let f = hermite_fn(orders[i], s, st.params().e_b).expect("validated params");
            u[i] = Complex64::new(eta.sqrt() * amps[i] * f, 0.0);
        }
    }
    u
}

/// ψ̄ = ψ†γ0 as a component array (γ0 flips the sign of the lower doublet).
pub fn spinor_bar(u: &[Complex64; 4]) -> [Complex64; 4] {
    [u[0].conj(), u[1].conj(), -u[2].conj(), -u[3].conj()]
}
