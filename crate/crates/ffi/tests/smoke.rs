//! Exercises every exported C symbol through the Rust side of the ABI and
//! cross-checks the header stays in step with the surface.

use dwl_ffi::*;
use std::ptr;

fn new_state(n: i32, r: i32, spin: i32, eps: f64, kappa: f64) -> *mut DwlState {
    let mut handle: *mut DwlState = ptr::null_mut();
    let status = unsafe { dwl_state_new(n, r, spin, eps, kappa, &mut handle) };
    assert_eq!(status, DwlStatus::Ok);
    assert!(!handle.is_null());
    handle
}

#[test]
fn state_lifecycle_and_scalars() {
    let state = new_state(1, 1, 1, 1.0, 1.0);
    unsafe {
        let mut e = 0.0;
        assert_eq!(dwl_state_energy(state, &mut e), DwlStatus::Ok);
        assert!((e - 2.0).abs() < 1e-14);

        let (mut a, mut b, mut eta) = (0.0, 0.0, 0.0);
        assert_eq!(
            dwl_state_coefficients(state, &mut a, &mut b, &mut eta),
            DwlStatus::Ok
        );
        assert!((a - 1.0 / 3.0).abs() < 1e-14);
        assert!((b - 2.0_f64.sqrt() / 3.0).abs() < 1e-14);
        assert!((eta - 0.75).abs() < 1e-14);

        let mut sp = 0.0;
        assert_eq!(dwl_entropy_sp(state, &mut sp), DwlStatus::Ok);
        assert!((sp - 5.0 / 18.0).abs() < 1e-14);

        dwl_state_free(state);
    }
}

#[test]
fn physical_parameter_route_matches_dimensionless() {
    let a = new_state(2, 2, -1, 1.0, 1.0);
    let mut b: *mut DwlState = ptr::null_mut();
    unsafe {
        assert_eq!(
            dwl_state_new_physical(2, 2, -1, 2.0, 4.0, 2.0, 0.0, &mut b),
            DwlStatus::Ok
        );
        let (mut ea, mut eb) = (0.0, 0.0);
        dwl_state_energy(a, &mut ea);
        dwl_state_energy(b, &mut eb);
        // same (eps, kappa): energies scale with m
        assert!((2.0 * ea - eb).abs() < 1e-12);
        let (mut sa, mut sb) = (0.0, 0.0);
        dwl_entropy_sp(a, &mut sa);
        dwl_entropy_sp(b, &mut sb);
        assert!((sa - sb).abs() < 1e-14);
        dwl_state_free(a);
        dwl_state_free(b);
    }
}

#[test]
fn invalid_arguments_are_reported() {
    let mut handle: *mut DwlState = ptr::null_mut();
    unsafe {
        assert_eq!(
            dwl_state_new(0, 1, 1, 1.0, 1.0, &mut handle),
            DwlStatus::InvalidArgument
        );
        assert_eq!(
            dwl_state_new(1, 3, 1, 1.0, 1.0, &mut handle),
            DwlStatus::InvalidArgument
        );
        assert_eq!(
            dwl_state_new(1, 1, 0, 1.0, 1.0, &mut handle),
            DwlStatus::InvalidArgument
        );
        assert_eq!(
            dwl_state_new(1, 1, 1, -1.0, 1.0, &mut handle),
            DwlStatus::InvalidArgument
        );
        assert_eq!(
            dwl_state_new(1, 1, 1, 1.0, 1.0, ptr::null_mut()),
            DwlStatus::NullPointer
        );
        let mut out = 0.0;
        assert_eq!(
            dwl_state_energy(ptr::null(), &mut out),
            DwlStatus::NullPointer
        );
        assert_eq!(
            dwl_mutual_information(-1, 1.0, 1.0, &mut out),
            DwlStatus::InvalidArgument
        );
        assert_eq!(
            dwl_eof_from_concurrence(1.5, &mut out),
            DwlStatus::InvalidArgument
        );
        // state_free accepts NULL
        dwl_state_free(ptr::null_mut());
    }
}

#[test]
fn pointwise_fields_and_matrix() {
    let state = new_state(1, 1, 1, 1.0, 1.0);
    let pi = std::f64::consts::PI;
    unsafe {
        let mut rho = 0.0;
        assert_eq!(dwl_density(state, 0.0, 0.0, &mut rho), DwlStatus::Ok);
        assert!((rho - 2.0 / (3.0 * pi)).abs() < 1e-14);

        let mut csq = 0.0;
        assert_eq!(dwl_concurrence_sq(state, 0.0, 0.0, &mut csq), DwlStatus::Ok);
        assert!((csq - 1.0 / (4.0 * pi * pi)).abs() < 1e-14);

        let mut lp = 0.0;
        assert_eq!(dwl_local_purity(state, 0.3, -0.6, &mut lp), DwlStatus::Ok);
        assert!(lp >= 0.0);

        let mut m = [0.0_f64; 32];
        assert_eq!(
            dwl_omega_matrix(state, 0.0, 0.0, m.as_mut_ptr()),
            DwlStatus::Ok
        );
        // entry (4,4) = 1/(6 pi) at the origin; row 2 all zeros
        let e44 = m[(3 * 4 + 3) * 2];
        assert!((e44 - 1.0 / (6.0 * pi)).abs() < 1e-14);
        for j in 0..4 {
            assert_eq!(m[(4 + j) * 2], 0.0);
            assert_eq!(m[(4 + j) * 2 + 1], 0.0);
        }
        dwl_state_free(state);
    }
}

#[test]
fn quadrature_purity_through_the_abi() {
    let state = new_state(2, 1, -1, 1.0, 1.0);
    unsafe {
        let mut p = 0.0;
        assert_eq!(dwl_purity_trace(state, 256, &mut p), DwlStatus::Ok);
        assert!((p - 1.0).abs() < 1e-6, "purity {p}");
        assert_eq!(
            dwl_purity_trace(state, 4, &mut p),
            DwlStatus::InvalidArgument
        );
        dwl_state_free(state);
    }
}

#[test]
fn concurrence_and_eof_through_the_abi() {
    // Bell state |Phi+>
    let inv = std::f64::consts::FRAC_1_SQRT_2;
    let mut rho = [0.0_f64; 32];
    let set = |rho: &mut [f64; 32], i: usize, j: usize, re: f64| {
        rho[(i * 4 + j) * 2] = re;
    };
    set(&mut rho, 0, 0, 0.5);
    set(&mut rho, 0, 3, 0.5);
    set(&mut rho, 3, 0, 0.5);
    set(&mut rho, 3, 3, 0.5);
    let _ = inv;
    unsafe {
        let mut c = 0.0;
        assert_eq!(dwl_concurrence_general(rho.as_ptr(), &mut c), DwlStatus::Ok);
        assert!((c - 1.0).abs() < 1e-10);
        let mut e = 0.0;
        assert_eq!(dwl_eof_from_concurrence(c, &mut e), DwlStatus::Ok);
        assert!((e - 1.0).abs() < 1e-10);
        // non-PSD input refused
        let mut bad = [0.0_f64; 32];
        set(&mut bad, 0, 0, 1.2);
        set(&mut bad, 1, 1, -0.2);
        assert_eq!(
            dwl_concurrence_general(bad.as_ptr(), &mut c),
            DwlStatus::InvalidArgument
        );
    }
}

#[test]
fn version_string_is_static_and_nul_terminated() {
    let ptr = dwl_version();
    assert!(!ptr.is_null());
    let s = unsafe { std::ffi::CStr::from_ptr(ptr) };
    assert_eq!(s.to_str().unwrap(), env!("CARGO_PKG_VERSION"));
}

#[test]
fn header_lists_every_exported_symbol() {
    let header = include_str!("../include/dwl.h");
    for symbol in [
        "dwl_state_new",
        "dwl_state_new_physical",
        "dwl_state_free",
        "dwl_state_energy",
        "dwl_state_coefficients",
        "dwl_mutual_information",
        "dwl_entropy_sp",
        "dwl_local_purity",
        "dwl_concurrence_sq",
        "dwl_density",
        "dwl_omega_matrix",
        "dwl_purity_trace",
        "dwl_concurrence_general",
        "dwl_eof_from_concurrence",
        "dwl_version",
    ] {
        assert!(header.contains(symbol), "header must declare {symbol}");
    }
}
