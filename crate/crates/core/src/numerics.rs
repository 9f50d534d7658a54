//! Grids and deterministic quadrature shared by `wigner` and `quantifiers`.
//!
//! Every integrand in this crate decays like exp(−(s²+k²)), for which a
//! uniform trapezoid rule is spectrally accurate, so trapezoid is the
//! default; Gauss–Hermite is available as a validation option. Reductions
//! use pairwise (cascade) summation in a fixed order, so results are
//! bit-identical across runs and thread counts.

use crate::error::{Error, Result};
use crate::wigner::PhasePoint;

/// Quadrature rule choices for [`QuadratureGrid`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Rule {
    Trapezoid,
    GaussHermite,
}

/// A rectangular (s, k) product grid with per-axis nodes and weights.
///
/// `s` is the dimensionless oscillator coordinate, `k` the momentum in units
/// of √(eB); conversion factors to physical measures are applied by the
/// callers, never stored here.
#[derive(Debug, Clone)]
pub struct QuadratureGrid {
    pub s_min: f64,
    pub s_max: f64,
    pub k_min: f64,
    pub k_max: f64,
    pub n_s: usize,
    pub n_k: usize,
    pub rule: Rule,
    s_nodes: Vec<f64>,
    s_weights: Vec<f64>,
    k_nodes: Vec<f64>,
    k_weights: Vec<f64>,
}

impl QuadratureGrid {
    pub fn trapezoid(
        s_min: f64,
        s_max: f64,
        k_min: f64,
        k_max: f64,
        n_s: usize,
        n_k: usize,
    ) -> Result<Self> {
        if n_s < 16 || n_k < 16 {
            return Err(Error::invalid(format!(
                "grid needs at least 16 points per axis, got {n_s}x{n_k}"
            )));
        }
        if !(s_min.is_finite() && s_max.is_finite() && k_min.is_finite() && k_max.is_finite())
            || s_max <= s_min
            || k_max <= k_min
        {
            return Err(Error::invalid("grid bounds must be finite with max > min"));
        }
        let (s_nodes, s_weights) = trapezoid_rule(s_min, s_max, n_s);
        let (k_nodes, k_weights) = trapezoid_rule(k_min, k_max, n_k);
        Ok(QuadratureGrid {
            s_min,
            s_max,
            k_min,
            k_max,
            n_s,
            n_k,
            rule: Rule::Trapezoid,
            s_nodes,
            s_weights,
            k_nodes,
            k_weights,
        })
    }

    /// Gauss–Hermite grid: nodes of the n-point rule on each axis, with the
    /// e^{+x²}-compensated weights, so it integrates plain functions (the
    /// Gaussian envelope lives in the integrand, not the rule). Bounds are
    /// the extreme nodes.
    pub fn gauss_hermite(n_s: usize, n_k: usize) -> Result<Self> {
        if n_s < 16 || n_k < 16 {
            return Err(Error::invalid(format!(
                "grid needs at least 16 points per axis, got {n_s}x{n_k}"
            )));
        }
        let (s_nodes, s_weights) = gauss_hermite_rule(n_s)?;
        let (k_nodes, k_weights) = gauss_hermite_rule(n_k)?;
        Ok(QuadratureGrid {
            s_min: s_nodes[0],
            s_max: s_nodes[n_s - 1],
            k_min: k_nodes[0],
            k_max: k_nodes[n_k - 1],
            n_s,
            n_k,
            rule: Rule::GaussHermite,
            s_nodes,
            s_weights,
            k_nodes,
            k_weights,
        })
    }

    pub fn s_nodes(&self) -> &[f64] {
        &self.s_nodes
    }

    pub fn k_nodes(&self) -> &[f64] {
        &self.k_nodes
    }

    pub fn s_weights(&self) -> &[f64] {
        &self.s_weights
    }

    pub fn k_weights(&self) -> &[f64] {
        &self.k_weights
    }

    /// Same bounds and rule, twice the points per axis.
    pub fn doubled(&self) -> Result<Self> {
        match self.rule {
            Rule::Trapezoid => Self::trapezoid(
                self.s_min,
                self.s_max,
                self.k_min,
                self.k_max,
                2 * self.n_s,
                2 * self.n_k,
            ),
            Rule::GaussHermite => Self::gauss_hermite(2 * self.n_s, 2 * self.n_k),
        }
    }
}

/// Square trapezoid grid sized for Landau index `n_max`: half-width
/// `L = √(2(2 n_max + 1)) + pad` (classical turning point plus Gaussian tail
/// margin), 512 points per axis.
pub fn default_grid(n_max: i32, pad: f64) -> QuadratureGrid {
    let nm = n_max.max(0) as f64;
    let l = (2.0 * (2.0 * nm + 1.0)).sqrt() + pad;
    QuadratureGrid::trapezoid(-l, l, -l, l, 512, 512).expect("valid by construction")
}

pub const DEFAULT_GRID_PAD: f64 = 6.0;

fn trapezoid_rule(lo: f64, hi: f64, n: usize) -> (Vec<f64>, Vec<f64>) {
    let h = (hi - lo) / (n as f64 - 1.0);
    let nodes: Vec<f64> = (0..n).map(|i| lo + h * i as f64).collect();
    let weights: Vec<f64> = (0..n)
        .map(|i| if i == 0 || i == n - 1 { 0.5 * h } else { h })
        .collect();
    (nodes, weights)
}

/// Gauss–Hermite nodes/weights by Newton iteration on the orthonormal
/// Hermite recurrence, with the weights multiplied by e^{+x_i²} so the rule
/// applies to integrands that already contain their Gaussian factor.
fn gauss_hermite_rule(n: usize) -> Result<(Vec<f64>, Vec<f64>)> {
    let nn = n as f64;
    // (h_n(x), h_{n-1}(x)) with h_m = H_m / sqrt(2^m m! sqrt(pi))
    let h_tilde = |x: f64| -> (f64, f64) {
        let mut hm = 0.0;
        let mut h = std::f64::consts::PI.powf(-0.25);
        for k in 0..n {
            let kf = k as f64;
            let next = (2.0f64 / (kf + 1.0)).sqrt() * x * h - (kf / (kf + 1.0)).sqrt() * hm;
            hm = h;
            h = next;
        }
        (h, hm)
    };
    let half = n / 2 + n % 2;
    let mut roots = vec![0.0f64; half]; // positive roots, descending
    for i in 0..half {
        let mut x = match i {
            0 => (2.0 * nn + 1.0).sqrt() - 1.85575 * (2.0 * nn + 1.0).powf(-1.0 / 6.0),
            1 => roots[0] - 1.14 * nn.powf(0.426) / roots[0],
            2 => 1.86 * roots[1] - 0.86 * roots[0],
            3 => 1.91 * roots[2] - 0.91 * roots[1],
            _ => 2.0 * roots[i - 1] - roots[i - 2],
        };
        let mut converged = false;
        for _ in 0..100 {
            let (h, hm) = h_tilde(x);
            let dh = (2.0 * nn).sqrt() * hm; // polynomial derivative
            let dx = h / dh;
            x -= dx;
            if dx.abs() < 1e-15 * x.abs().max(1e-3) {
                converged = true;
                break;
            }
        }
        if !converged || !x.is_finite() {
            return Err(Error::invalid(format!(
                "gauss-hermite nodes failed to converge for n = {n}"
            )));
        }
        roots[i] = x;
    }
    let mut nodes = Vec::with_capacity(n);
    let mut weights = Vec::with_capacity(n);
    let weight_at = |x: f64| -> f64 {
        let (_, hm) = h_tilde(x);
        (x * x).exp() / (nn * hm * hm)
    };
    for &x in roots.iter() {
        // descending positive roots -> ascending negative nodes
        if x > 1e-10 {
            nodes.push(-x);
            weights.push(weight_at(x));
        }
    }
    if n % 2 == 1 {
        nodes.push(0.0);
        weights.push(weight_at(0.0));
    }
    for &x in roots.iter().rev() {
        if x > 1e-10 {
            nodes.push(x);
            weights.push(weight_at(x));
        }
    }
    if nodes.len() != n {
        return Err(Error::invalid(format!(
            "gauss-hermite rule assembly failed for n = {n}"
        )));
    }
    Ok((nodes, weights))
}

/// Pairwise (cascade) summation; deterministic for a fixed input order.
pub fn pairwise_sum(values: &[f64]) -> f64 {
    if values.len() <= 32 {
        let mut acc = 0.0;
        for v in values {
            acc += v;
        }
        return acc;
    }
    let mid = values.len() / 2;
    pairwise_sum(&values[..mid]) + pairwise_sum(&values[mid..])
}

/// Worker count, capped by `DWL_THREADS` (0 or unset = all available
/// cores).
pub fn thread_count() -> usize {
    let avail = std::thread::available_parallelism()
        .map(|n| n.get())
        .unwrap_or(1);
    match std::env::var("DWL_THREADS")
        .ok()
        .and_then(|v| v.parse::<usize>().ok())
    {
        Some(0) | None => avail,
        Some(n) => n.min(avail),
    }
}

/// Evaluates `f(i)` for `i` in `0..n` into a vector, splitting the index
/// range across threads. Output order is by index, so reductions over the
/// result do not depend on the thread count.
pub fn parallel_map<F>(n: usize, f: F) -> Vec<f64>
where
    F: Fn(usize) -> f64 + Sync,
{
    let threads = thread_count().max(1).min(n.max(1));
    let mut values = vec![0.0f64; n];
    if threads <= 1 || n < 4096 {
        for (i, slot) in values.iter_mut().enumerate() {
            *slot = f(i);
        }
        return values;
    }
    let chunk = n.div_ceil(threads);
    std::thread::scope(|scope| {
        for (c, slice) in values.chunks_mut(chunk).enumerate() {
            let f = &f;
            scope.spawn(move || {
                let base = c * chunk;
                for (j, slot) in slice.iter_mut().enumerate() {
                    *slot = f(base + j);
                }
            });
        }
    });
    values
}

/// Weighted 2-D quadrature of `f` over the grid with pairwise summation.
///
/// Points are evaluated in row-major (s outer, k inner) order concurrently;
/// the reduction order is fixed. A NaN or infinity anywhere aborts with the
/// offending location.
pub fn integrate_2d<F>(f: F, grid: &QuadratureGrid) -> Result<f64>
where
    F: Fn(PhasePoint) -> f64 + Sync,
{
    let n = grid.n_s * grid.n_k;
    let values = parallel_map(n, |idx| {
        let i = idx / grid.n_k;
        let j = idx % grid.n_k;
        let s = grid.s_nodes[i];
        let k = grid.k_nodes[j];
        f(PhasePoint { s, k }) * grid.s_weights[i] * grid.k_weights[j]
    });
    if let Some(idx) = values.iter().position(|v| !v.is_finite()) {
        let i = idx / grid.n_k;
        let j = idx % grid.n_k;
        return Err(Error::NonFinite {
            s: grid.s_nodes[i],
            k: grid.k_nodes[j],
        });
    }
    Ok(pairwise_sum(&values))
}

/// Integrates an array-valued function in a single pass over the grid: one
/// evaluation of `f` per point and a pairwise reduction per component.
///
/// Work is split over fixed 8192-point blocks (pairwise within a block,
/// then pairwise over the ordered block results), so the reduction tree —
/// and hence the bit pattern of the result — does not depend on the thread
/// count.
pub fn integrate_2d_array<const M: usize, F>(f: F, grid: &QuadratureGrid) -> Result<[f64; M]>
where
    F: Fn(PhasePoint) -> [f64; M] + Sync,
{
    const BLOCK: usize = 8192;
    let n = grid.n_s * grid.n_k;
    let n_blocks = n.div_ceil(BLOCK);
    let mut partials: Vec<([f64; M], Option<usize>)> = vec![([0.0; M], None); n_blocks];
    let threads = thread_count().max(1).min(n_blocks.max(1));
    let blocks_per_thread = n_blocks.div_ceil(threads);
    std::thread::scope(|scope| {
        for (t, chunk) in partials.chunks_mut(blocks_per_thread).enumerate() {
            let f = &f;
            scope.spawn(move || {
                let mut scratch: Vec<[f64; M]> = Vec::with_capacity(BLOCK);
                let mut buf = vec![0.0f64; BLOCK];
                for (off, (part, bad)) in chunk.iter_mut().enumerate() {
                    let lo = (t * blocks_per_thread + off) * BLOCK;
                    let hi = (lo + BLOCK).min(n);
                    scratch.clear();
                    for idx in lo..hi {
                        let i = idx / grid.n_k;
                        let j = idx % grid.n_k;
                        let w = grid.s_weights[i] * grid.k_weights[j];
                        let mut vals = f(PhasePoint {
                            s: grid.s_nodes[i],
                            k: grid.k_nodes[j],
                        });
                        for v in vals.iter_mut() {
                            *v *= w;
                        }
                        if bad.is_none() && vals.iter().any(|v| !v.is_finite()) {
                            *bad = Some(idx);
                        }
                        scratch.push(vals);
                    }
                    for (m, slot) in part.iter_mut().enumerate() {
                        for (row_idx, row) in scratch.iter().enumerate() {
                            buf[row_idx] = row[m];
                        }
                        *slot = pairwise_sum(&buf[..scratch.len()]);
                    }
                }
            });
        }
    });
    if let Some(idx) = partials.iter().filter_map(|(_, bad)| *bad).min() {
        return Err(Error::NonFinite {
            s: grid.s_nodes[idx / grid.n_k],
            k: grid.k_nodes[idx % grid.n_k],
        });
    }
    let mut result = [0.0f64; M];
    let mut column = vec![0.0f64; n_blocks];
    for (m, slot) in result.iter_mut().enumerate() {
        for (b, (part, _)) in partials.iter().enumerate() {
            column[b] = part[m];
        }
        *slot = pairwise_sum(&column);
    }
    Ok(result)
}

/// [`integrate_2d`] plus a resolution-doubling self-check; returns
/// `(value, residual)` where `residual = |value − value_on_doubled_grid|`.
pub fn integrate_2d_checked<F>(f: F, grid: &QuadratureGrid) -> Result<(f64, f64)>
where
    F: Fn(PhasePoint) -> f64 + Sync,
{
    let coarse = integrate_2d(&f, grid)?;
    let fine = integrate_2d(&f, &grid.doubled()?)?;
    Ok((coarse, (coarse - fine).abs()))
}

/// 1-D trapezoid with pairwise summation over `n` nodes on `[lo, hi]`.
pub fn integrate_1d<F>(f: F, lo: f64, hi: f64, n: usize) -> Result<f64>
where
    F: Fn(f64) -> f64 + Sync,
{
    if n < 16 {
        return Err(Error::invalid(format!(
            "integrate_1d needs n >= 16, got {n}"
        )));
    }
    if !(lo.is_finite() && hi.is_finite()) || hi <= lo {
        return Err(Error::invalid(
            "integrate_1d bounds must be finite with hi > lo",
        ));
    }
    let h = (hi - lo) / (n as f64 - 1.0);
    let values = parallel_map(n, |i| {
        let x = lo + h * i as f64;
        let w = if i == 0 || i == n - 1 { 0.5 * h } else { h };
        f(x) * w
    });
    if let Some(idx) = values.iter().position(|v| !v.is_finite()) {
        return Err(Error::NonFinite {
            s: lo + h * idx as f64,
            k: f64::NAN,
        });
    }
    Ok(pairwise_sum(&values))
}
