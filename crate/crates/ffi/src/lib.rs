//! C ABI surface for the dwl library: opaque state handles, status codes,
//! and flat-array matrix passing so any language with a C FFI can evaluate
//! the phase-space quantifiers.
//!
//! The companion header lives at `include/dwl.h` and is kept in sync with
//! the exported symbols by the smoke tests. Complex 4×4 matrices cross the
//! boundary as 32 doubles: row-major entries, re/im interleaved.

use dwl_core::clifford::ComplexMatrix4;
use dwl_core::landau::{coefficients, energy, LandauState, ParityBranch, PhysParams, Spin};
use dwl_core::numerics::{default_grid, DEFAULT_GRID_PAD};
use dwl_core::quantifiers::{
    concurrence_general, concurrence_sq_field, entropy_sp_closed, eof_from_concurrence,
    local_purity, mutual_information, purity_trace, TwoQubitDensity,
};
use dwl_core::wigner::{density, omega_matrix, PhasePoint, WignerMatrixField};
use libc::{c_char, c_double, c_int};
use num_complex::Complex64;

/// Status codes returned by every fallible entry point.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DwlStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    NumericalError = 3,
}

fn status_of(err: &dwl_core::Error) -> DwlStatus {
    match err {
        dwl_core::Error::InvalidArgument(_) => DwlStatus::InvalidArgument,
        _ => DwlStatus::NumericalError,
    }
}

/// Opaque Landau-state handle.
pub struct DwlState {
    inner: LandauState,
}

fn parse_state(
    n: c_int,
    r: c_int,
    spin: c_int,
    params: PhysParams,
) -> Result<LandauState, DwlStatus> {
    let branch = match r {
        1 => ParityBranch::R1,
        2 => ParityBranch::R2,
        _ => return Err(DwlStatus::InvalidArgument),
    };
    let spin = match spin {
        1 => Spin::Up,
        -1 => Spin::Down,
        _ => return Err(DwlStatus::InvalidArgument),
    };
    LandauState::new(n, branch, spin, params).map_err(|e| status_of(&e))
}

/// Creates a state from dimensionless (eps, kappa); spin is +1 or −1.
///
/// # Safety
/// `out` must point to writable storage for one pointer.
#[no_mangle]
pub unsafe extern "C" fn dwl_state_new(
    n: c_int,
    r: c_int,
    spin: c_int,
    eps: c_double,
    kappa: c_double,
    out: *mut *mut DwlState,
) -> DwlStatus {
    if out.is_null() {
        return DwlStatus::NullPointer;
    }
    let params = match PhysParams::dimensionless(eps, kappa) {
        Ok(p) => p,
        Err(e) => return status_of(&e),
    };
    match parse_state(n, r, spin, params) {
        Ok(st) => {
            *out = Box::into_raw(Box::new(DwlState { inner: st }));
            DwlStatus::Ok
        }
        Err(code) => code,
    }
}

/// Creates a state from physical parameters (m, eB, k_z, k_y).
///
/// # Safety
/// `out` must point to writable storage for one pointer.
#[no_mangle]
pub unsafe extern "C" fn dwl_state_new_physical(
    n: c_int,
    r: c_int,
    spin: c_int,
    m: c_double,
    e_b: c_double,
    kz: c_double,
    ky: c_double,
    out: *mut *mut DwlState,
) -> DwlStatus {
    if out.is_null() {
        return DwlStatus::NullPointer;
    }
    let params = match PhysParams::new(m, e_b, kz, ky) {
        Ok(p) => p,
        Err(e) => return status_of(&e),
    };
    match parse_state(n, r, spin, params) {
        Ok(st) => {
            *out = Box::into_raw(Box::new(DwlState { inner: st }));
            DwlStatus::Ok
        }
        Err(code) => code,
    }
}

/// Frees a state handle; accepts NULL.
///
/// # Safety
/// `state` must come from `dwl_state_new`/`dwl_state_new_physical` and must
/// not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn dwl_state_free(state: *mut DwlState) {
    if !state.is_null() {
        drop(Box::from_raw(state));
    }
}

unsafe fn state_ref<'a>(state: *const DwlState) -> Result<&'a LandauState, DwlStatus> {
    state
        .as_ref()
        .map(|s| &s.inner)
        .ok_or(DwlStatus::NullPointer)
}

unsafe fn write_out(out: *mut c_double, value: f64) -> DwlStatus {
    if out.is_null() {
        return DwlStatus::NullPointer;
    }
    *out = value;
    DwlStatus::Ok
}

/// Landau level energy E_n.
///
/// # Safety
/// `state` must be a live handle; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn dwl_state_energy(state: *const DwlState, out: *mut c_double) -> DwlStatus {
    match state_ref(state) {
        Ok(st) => write_out(out, energy(st.n(), st.params())),
        Err(code) => code,
    }
}

/// Spinor coefficients (A_n, B_n, eta_n).
///
/// # Safety
/// `state` must be a live handle; the three outputs writable.
#[no_mangle]
pub unsafe extern "C" fn dwl_state_coefficients(
    state: *const DwlState,
    a: *mut c_double,
    b: *mut c_double,
    eta: *mut c_double,
) -> DwlStatus {
    let st = match state_ref(state) {
        Ok(st) => st,
        Err(code) => return code,
    };
    if a.is_null() || b.is_null() || eta.is_null() {
        return DwlStatus::NullPointer;
    }
    let c = coefficients(st.n(), st.params());
    *a = c.a;
    *b = c.b;
    *eta = c.eta;
    DwlStatus::Ok
}

/// Closed-form mutual information M(n, eps, kappa); n = 0 allowed.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn dwl_mutual_information(
    n: c_int,
    eps: c_double,
    kappa: c_double,
    out: *mut c_double,
) -> DwlStatus {
    match mutual_information(n, eps, kappa) {
        Ok(v) => write_out(out, v),
        Err(e) => status_of(&e),
    }
}

/// Closed-form spin-parity relative linear entropy of a state.
///
/// # Safety
/// `state` must be a live handle; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn dwl_entropy_sp(state: *const DwlState, out: *mut c_double) -> DwlStatus {
    match state_ref(state) {
        Ok(st) => write_out(out, entropy_sp_closed(st)),
        Err(code) => code,
    }
}

/// Pointwise (non-integrated) purity at the dimensionless point (s, k).
///
/// # Safety
/// `state` must be a live handle; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn dwl_local_purity(
    state: *const DwlState,
    s: c_double,
    k: c_double,
    out: *mut c_double,
) -> DwlStatus {
    match state_ref(state) {
        Ok(st) => write_out(out, local_purity(st, PhasePoint::new(s, k))),
        Err(code) => code,
    }
}

/// Concurrence-squared quasi-distribution at (s, k); sign-indefinite.
///
/// # Safety
/// `state` must be a live handle; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn dwl_concurrence_sq(
    state: *const DwlState,
    s: c_double,
    k: c_double,
    out: *mut c_double,
) -> DwlStatus {
    match state_ref(state) {
        Ok(st) => write_out(out, concurrence_sq_field(st, PhasePoint::new(s, k))),
        Err(code) => code,
    }
}

/// Spin-parity density rho(s, k) = Tr[omega gamma0].
///
/// # Safety
/// `state` must be a live handle; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn dwl_density(
    state: *const DwlState,
    s: c_double,
    k: c_double,
    out: *mut c_double,
) -> DwlStatus {
    match state_ref(state) {
        Ok(st) => write_out(out, density(st, PhasePoint::new(s, k))),
        Err(code) => code,
    }
}

/// The 4×4 Wigner matrix at (s, k) into 32 doubles (row-major, re/im
/// interleaved).
///
/// # Safety
/// `state` must be a live handle; `out` must have room for 32 doubles.
#[no_mangle]
pub unsafe extern "C" fn dwl_omega_matrix(
    state: *const DwlState,
    s: c_double,
    k: c_double,
    out: *mut c_double,
) -> DwlStatus {
    let st = match state_ref(state) {
        Ok(st) => st,
        Err(code) => return code,
    };
    if out.is_null() {
        return DwlStatus::NullPointer;
    }
    let m = omega_matrix(st, PhasePoint::new(s, k));
    let slice = std::slice::from_raw_parts_mut(out, 32);
    for i in 0..4 {
        for j in 0..4 {
            slice[(i * 4 + j) * 2] = m.entries[i][j].re;
            slice[(i * 4 + j) * 2 + 1] = m.entries[i][j].im;
        }
    }
    DwlStatus::Ok
}

/// Quadrature purity on a default-sized trapezoid grid with `grid_points`
/// per axis (>= 16); equals 1 for every pure state.
///
/// # Safety
/// `state` must be a live handle; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn dwl_purity_trace(
    state: *const DwlState,
    grid_points: c_int,
    out: *mut c_double,
) -> DwlStatus {
    let st = match state_ref(state) {
        Ok(st) => st,
        Err(code) => return code,
    };
    if grid_points < 16 {
        return DwlStatus::InvalidArgument;
    }
    let grid = if grid_points == 512 {
        default_grid(st.n(), DEFAULT_GRID_PAD)
    } else {
        let l = (2.0 * (2.0 * f64::from(st.n()) + 1.0)).sqrt() + DEFAULT_GRID_PAD;
        match dwl_core::numerics::QuadratureGrid::trapezoid(
            -l,
            l,
            -l,
            l,
            grid_points as usize,
            grid_points as usize,
        ) {
            Ok(g) => g,
            Err(e) => return status_of(&e),
        }
    };
    match purity_trace(&WignerMatrixField::pure(*st), &grid) {
        Ok(v) => write_out(out, v),
        Err(e) => status_of(&e),
    }
}

/// Wootters concurrence of a two-qubit density matrix passed as 32
/// doubles (row-major, re/im interleaved).
///
/// # Safety
/// `rho` must point to 32 readable doubles; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn dwl_concurrence_general(
    rho: *const c_double,
    out: *mut c_double,
) -> DwlStatus {
    if rho.is_null() {
        return DwlStatus::NullPointer;
    }
    let raw = std::slice::from_raw_parts(rho, 32);
    let mut m = ComplexMatrix4::zero();
    for i in 0..4 {
        for j in 0..4 {
            m.entries[i][j] = Complex64::new(raw[(i * 4 + j) * 2], raw[(i * 4 + j) * 2 + 1]);
        }
    }
    match TwoQubitDensity::new(m) {
        Ok(density) => write_out(out, concurrence_general(&density)),
        Err(e) => status_of(&e),
    }
}

/// Entanglement of formation from a concurrence in [0, 1].
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn dwl_eof_from_concurrence(c: c_double, out: *mut c_double) -> DwlStatus {
    match eof_from_concurrence(c) {
        Ok(v) => write_out(out, v),
        Err(e) => status_of(&e),
    }
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn dwl_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr() as *const c_char
}
