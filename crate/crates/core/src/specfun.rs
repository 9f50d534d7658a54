//! Numerically stable Hermite and Laguerre evaluation.
//!
//! Everything downstream (kernels, spinors, densities) is built from the
//! oscillator eigenfunctions `F_n` and the Laguerre polynomials `L_n`, so the
//! recurrences here are normalized to avoid the `n! 2^n` overflow that kills
//! the textbook formulas near n ≈ 150.

use crate::error::{Error, Result};

/// Physicists' Hermite polynomial `H_n(s)` via
/// `H_{n+1} = 2 s H_n − 2 n H_{n−1}`.
///
/// Overflows for large n at large |s| like the polynomials themselves do;
/// use [`hermite_fn`] when a Gaussian envelope is present.
pub fn hermite_poly(n: i32, s: f64) -> Result<f64> {
    if n < 0 {
        return Err(Error::invalid(format!("hermite_poly order {n} < 0")));
    }
    let mut hm = 1.0;
    if n == 0 {
        return Ok(hm);
    }
    let mut h = 2.0 * s;
    for k in 1..n {
        let next = 2.0 * s * h - 2.0 * f64::from(k) * hm;
        hm = h;
        h = next;
    }
    Ok(h)
}

/// Oscillator eigenfunction
/// `F_n(s) = (√(eB)/(n! 2^n √π))^{1/2} e^{−s²/2} H_n(s)`.
///
/// `n = −1` denotes the identically-zero function, the convention used by
/// the spinors that reference `F_{n−1}` at n = 0. Evaluation runs the
/// normalized recurrence `√(2(n+1)) F̂_{n+1} = 2 s F̂_n − √(2n) F̂_{n−1}`
/// on `F̂_n = F_n/(eB)^{1/4}`, which stays O(1) for any order.
pub fn hermite_fn(n: i32, s: f64, e_b: f64) -> Result<f64> {
    if e_b <= 0.0 {
        return Err(Error::invalid(format!(
            "hermite_fn requires eB > 0, got {e_b}"
        )));
    }
    if n < -1 {
        return Err(Error::invalid(format!("hermite_fn order {n} < -1")));
    }
    Ok(e_b.powf(0.25) * hermite_fn_normalized(n, s))
}

/// `F̂_n(s) = F_n(s)/(eB)^{1/4}`, the unit-norm (∫F̂² ds = 1) eigenfunction.
pub(crate) fn hermite_fn_normalized(n: i32, s: f64) -> f64 {
    if n < 0 {
        return 0.0;
    }
    let f0 = std::f64::consts::PI.powf(-0.25) * (-0.5 * s * s).exp();
    if n == 0 {
        return f0;
    }
    let mut fm = 0.0;
    let mut f = f0;
    for k in 0..n {
        let kf = f64::from(k);
        let next = (2.0 * s * f - (2.0 * kf).sqrt() * fm) / (2.0 * (kf + 1.0)).sqrt();
        fm = f;
        f = next;
    }
    f
}

/// Laguerre polynomial `L_n(t)` via
/// `(n+1) L_{n+1} = (2n+1−t) L_n − n L_{n−1}`.
pub fn laguerre(n: i32, t: f64) -> Result<f64> {
    if n < 0 {
        return Err(Error::invalid(format!("laguerre order {n} < 0")));
    }
    Ok(laguerre_unchecked(n, t))
}

pub(crate) fn laguerre_unchecked(n: i32, t: f64) -> f64 {
    let mut lm = 1.0;
    if n == 0 {
        return lm;
    }
    let mut l = 1.0 - t;
    for k in 1..n {
        let kf = f64::from(k);
        let next = ((2.0 * kf + 1.0 - t) * l - kf * lm) / (kf + 1.0);
        lm = l;
        l = next;
    }
    l
}

/// `dL_n/dt` through `t L_n'(t) = n L_n(t) − n L_{n−1}(t)`, with the t → 0
/// limit `L_n'(0) = −n`.
pub fn laguerre_deriv(n: i32, t: f64) -> Result<f64> {
    if n < 0 {
        return Err(Error::invalid(format!("laguerre_deriv order {n} < 0")));
    }
    if n == 0 {
        return Ok(0.0);
    }
    // The identity degrades near t = 0 (0/0); switch to the Taylor form
    // L_n'(t) = -n + n(n-1)/2 t + O(t²) below a small threshold.
    if t.abs() < 1e-7 {
        let nf = f64::from(n);
        return Ok(-nf + 0.5 * nf * (nf - 1.0) * t);
    }
    let nf = f64::from(n);
    Ok(nf * (laguerre_unchecked(n, t) - laguerre_unchecked(n - 1, t)) / t)
}
