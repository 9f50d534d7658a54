//! Phase-space representation of Dirac spinors trapped by a uniform magnetic
//! field, and the elementary quantum-information content carried by it.
//!
//! The library builds the 4×4 Wigner matrices of the Landau eigenspinors in
//! closed form (Laguerre-polynomial kernels), cross-validates them against a
//! numerical Weyl-transform oracle, and evaluates purity (three routes),
//! relative linear entropies, spin-parity/phase-space mutual information,
//! concurrence and Gordon currents.
//!
//! Modules follow the problem structure:
//!
//! - [`clifford`]: exact 4×4 complex matrix algebra in the Dirac
//!   representation (gamma matrices, Clifford decomposition).
//! - [`specfun`]: numerically stable Hermite functions and Laguerre
//!   polynomials.
//! - [`landau`]: the trapped-fermion eigenproblem (spectrum, coefficients,
//!   eigenspinors).
//! - [`numerics`]: grids and deterministic quadrature.
//! - [`wigner`]: analytic phase-space kernels, Wigner matrices, and the
//!   grid-based Weyl-transform oracle.
//! - [`quantifiers`]: purities, entropies, mutual information, concurrence,
//!   entanglement of formation, current densities.
//! - [`verify`]: the named cross-check suite used by the CLI and the
//!   acceptance tests.

pub mod clifford;
pub mod error;
pub mod landau;
pub mod numerics;
pub mod quantifiers;
pub mod specfun;
pub mod verify;
pub mod wigner;

pub use error::{Error, Result};
