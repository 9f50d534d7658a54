//! Exact 4×4 complex matrix algebra for the Dirac representation.
//!
//! Provides the gamma matrices built from Pauli Kronecker products
//! (`β = σ_z ⊗ I`, `α_i = σ_x ⊗ σ_i`), the spin tensor `σ_{μν}`, and the
//! decomposition of an arbitrary 4×4 matrix over the 16 Clifford generators
//! `{I, iγ5, γ_μ, γ_μγ5, σ_{μν}}` together with its inverse.
//!
//! Metric signature is (+,−,−,−); `gamma(mu)` returns the raised-index
//! matrix `γ^μ`, so `γ^0 = γ_0` and `γ^j = −γ_j`.

use crate::error::{Error, Result};
use num_complex::Complex64;
use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

pub const C_ZERO: Complex64 = Complex64::new(0.0, 0.0);
pub const C_ONE: Complex64 = Complex64::new(1.0, 0.0);
pub const C_I: Complex64 = Complex64::new(0.0, 1.0);

/// Metric tensor diagonal, signature (+,−,−,−).
pub const METRIC: [f64; 4] = [1.0, -1.0, -1.0, -1.0];

/// Dense 4×4 complex matrix with value semantics.
///
/// Carrier of gamma matrices, Wigner matrices at a phase-space point, and
/// two-qubit density operators. Row-major storage.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ComplexMatrix4 {
    pub entries: [[Complex64; 4]; 4],
}

impl ComplexMatrix4 {
    pub const fn zero() -> Self {
        ComplexMatrix4 {
            entries: [[C_ZERO; 4]; 4],
        }
    }

    pub fn identity() -> Self {
        let mut m = Self::zero();
        for i in 0..4 {
            m.entries[i][i] = C_ONE;
        }
        m
    }

    pub fn from_rows(rows: [[Complex64; 4]; 4]) -> Self {
        ComplexMatrix4 { entries: rows }
    }

    /// Builds a matrix from real entries.
    pub fn from_real(rows: [[f64; 4]; 4]) -> Self {
        let mut m = Self::zero();
        for i in 0..4 {
            for j in 0..4 {
                m.entries[i][j] = Complex64::new(rows[i][j], 0.0);
            }
        }
        m
    }

    pub fn scale(&self, c: Complex64) -> Self {
        let mut m = *self;
        for i in 0..4 {
            for j in 0..4 {
                m.entries[i][j] *= c;
            }
        }
        m
    }

    pub fn scale_re(&self, c: f64) -> Self {
        self.scale(Complex64::new(c, 0.0))
    }

    pub fn trace(&self) -> Complex64 {
        self.entries[0][0] + self.entries[1][1] + self.entries[2][2] + self.entries[3][3]
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        let mut m = Self::zero();
        for i in 0..4 {
            for j in 0..4 {
                m.entries[i][j] = self.entries[j][i].conj();
            }
        }
        m
    }

    pub fn transpose(&self) -> Self {
        let mut m = Self::zero();
        for i in 0..4 {
            for j in 0..4 {
                m.entries[i][j] = self.entries[j][i];
            }
        }
        m
    }

    /// Entrywise complex conjugate (no transpose).
    pub fn conj(&self) -> Self {
        let mut m = *self;
        for i in 0..4 {
            for j in 0..4 {
                m.entries[i][j] = m.entries[i][j].conj();
            }
        }
        m
    }

    pub fn frobenius_norm(&self) -> f64 {
        let mut s = 0.0;
        for i in 0..4 {
            for j in 0..4 {
                s += self.entries[i][j].norm_sqr();
            }
        }
        s.sqrt()
    }

    /// Frobenius norm of the difference.
    pub fn distance(&self, other: &Self) -> f64 {
        (*self - *other).frobenius_norm()
    }

    /// Largest entrywise modulus of the difference.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        let mut d: f64 = 0.0;
        for i in 0..4 {
            for j in 0..4 {
                d = d.max((self.entries[i][j] - other.entries[i][j]).norm());
            }
        }
        d
    }

    pub fn max_imag(&self) -> f64 {
        let mut d: f64 = 0.0;
        for i in 0..4 {
            for j in 0..4 {
                d = d.max(self.entries[i][j].im.abs());
            }
        }
        d
    }

    pub fn is_hermitian(&self, tol: f64) -> bool {
        self.distance(&self.adjoint()) < tol
    }
}

impl Index<(usize, usize)> for ComplexMatrix4 {
    type Output = Complex64;
    fn index(&self, (i, j): (usize, usize)) -> &Complex64 {
        &self.entries[i][j]
    }
}

impl IndexMut<(usize, usize)> for ComplexMatrix4 {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex64 {
        &mut self.entries[i][j]
    }
}

impl Add for ComplexMatrix4 {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let mut m = self;
        for i in 0..4 {
            for j in 0..4 {
                m.entries[i][j] += rhs.entries[i][j];
            }
        }
        m
    }
}

impl Sub for ComplexMatrix4 {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        let mut m = self;
        for i in 0..4 {
            for j in 0..4 {
                m.entries[i][j] -= rhs.entries[i][j];
            }
        }
        m
    }
}

impl Neg for ComplexMatrix4 {
    type Output = Self;
    fn neg(self) -> Self {
        self.scale_re(-1.0)
    }
}

impl Mul for ComplexMatrix4 {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let mut m = Self::zero();
        for i in 0..4 {
            for k in 0..4 {
                let a = self.entries[i][k];
                if a == C_ZERO {
                    continue;
                }
                for j in 0..4 {
                    m.entries[i][j] += a * rhs.entries[k][j];
                }
            }
        }
        m
    }
}

/// 2×2 complex matrix, used only to feed [`pauli_kron`].
pub type Matrix2 = [[Complex64; 2]; 2];

pub fn pauli_i() -> Matrix2 {
    [[C_ONE, C_ZERO], [C_ZERO, C_ONE]]
}

pub fn pauli_x() -> Matrix2 {
    [[C_ZERO, C_ONE], [C_ONE, C_ZERO]]
}

pub fn pauli_y() -> Matrix2 {
    [[C_ZERO, -C_I], [C_I, C_ZERO]]
}

pub fn pauli_z() -> Matrix2 {
    [[C_ONE, C_ZERO], [C_ZERO, -C_ONE]]
}

/// Kronecker product `p ⊗ s`, the first factor acting on the parity doublet
/// (block index) and the second on the spin doublet (index within a block).
pub fn pauli_kron(p: Matrix2, s: Matrix2) -> ComplexMatrix4 {
    let mut m = ComplexMatrix4::zero();
    for a in 0..2 {
        for b in 0..2 {
            for i in 0..2 {
                for j in 0..2 {
                    m.entries[2 * a + i][2 * b + j] = p[a][b] * s[i][j];
                }
            }
        }
    }
    m
}

/// Dirac-representation gamma matrix `γ^μ` (raised index).
///
/// `γ^0 = β = σ_z ⊗ I`, `γ^j = β α_j` with `α_j = σ_x ⊗ σ_j`; the set
/// satisfies `{γ^μ, γ^ν} = 2 g^{μν} I` with signature (+,−,−,−).
pub fn gamma(mu: usize) -> Result<ComplexMatrix4> {
    let beta = pauli_kron(pauli_z(), pauli_i());
    let m = match mu {
        0 => beta,
        1 => beta * pauli_kron(pauli_x(), pauli_x()),
        2 => beta * pauli_kron(pauli_x(), pauli_y()),
        3 => beta * pauli_kron(pauli_x(), pauli_z()),
        _ => {
            return Err(Error::invalid(format!(
                "gamma index {mu} out of range 0..=3"
            )))
        }
    };
    Ok(m)
}

/// `γ5 = i γ^0 γ^1 γ^2 γ^3`; anticommutes with every `γ^μ` and squares to I.
pub fn gamma5() -> ComplexMatrix4 {
    let g = |mu| gamma(mu).expect("fixed index");
    (g(0) * g(1) * g(2) * g(3)).scale(C_I)
}

/// Spin tensor `σ^{μν} = (i/2)[γ^μ, γ^ν]`, antisymmetric in (μ, ν).
pub fn sigma(mu: usize, nu: usize) -> Result<ComplexMatrix4> {
    let gm = gamma(mu)?;
    let gn = gamma(nu)?;
    Ok((gm * gn - gn * gm).scale(C_I.scale(0.5)))
}

/// The 16 Clifford coefficients of a 4×4 matrix.
///
/// `M = S·I + iγ5·Π + γ_μ V^μ + γ_μγ5 A^μ + (1/2) σ_{μν} T^{μν}` with raised
/// components extracted by traces and the tensor part antisymmetric.
#[derive(Debug, Clone, PartialEq)]
pub struct CliffordComponents {
    pub s: Complex64,
    pub pi: Complex64,
    pub v: [Complex64; 4],
    pub a: [Complex64; 4],
    pub t: [[Complex64; 4]; 4],
}

impl CliffordComponents {
    pub fn zero() -> Self {
        CliffordComponents {
            s: C_ZERO,
            pi: C_ZERO,
            v: [C_ZERO; 4],
            a: [C_ZERO; 4],
            t: [[C_ZERO; 4]; 4],
        }
    }

    /// Largest `|T[μ][ν] + T[ν][μ]|`; zero for a valid tensor part.
    pub fn antisymmetry_defect(&self) -> f64 {
        let mut d: f64 = 0.0;
        for mu in 0..4 {
            for nu in 0..4 {
                d = d.max((self.t[mu][nu] + self.t[nu][mu]).norm());
            }
        }
        d
    }

    /// Largest imaginary part across all 16 coefficients. The Landau states
    /// of this crate decompose into purely real components; generic matrices
    /// do not.
    pub fn max_imag(&self) -> f64 {
        let mut d = self.s.im.abs().max(self.pi.im.abs());
        for mu in 0..4 {
            d = d.max(self.v[mu].im.abs()).max(self.a[mu].im.abs());
            for nu in 0..4 {
                d = d.max(self.t[mu][nu].im.abs());
            }
        }
        d
    }

    /// Euclidean (all-plus) sum of absolute squares,
    /// `|S|² + |Π|² + Σ_μ |V^μ|² + Σ_μ |A^μ|² + (1/2) Σ_{μν} |T^{μν}|²`.
    ///
    /// Equals `Tr[M M†]/4` for the decomposed matrix; for real components it
    /// reduces to the sum of plain squares.
    pub fn euclidean_square_sum(&self) -> f64 {
        let mut s = self.s.norm_sqr() + self.pi.norm_sqr();
        for mu in 0..4 {
            s += self.v[mu].norm_sqr() + self.a[mu].norm_sqr();
            for nu in 0..4 {
                s += 0.5 * self.t[mu][nu].norm_sqr();
            }
        }
        s
    }
}

/// The 16 basis elements used by [`decompose`]/[`reconstruct`]:
/// lowered-index partners `(Γ_i)` paired with the raised-index trace probes.
/// Nonzero entries of a trace probe; every Clifford generator has exactly
/// four.
type SparseProbe = [(usize, usize, Complex64); 4];

struct Basis {
    gamma_down: [ComplexMatrix4; 4],
    g5: ComplexMatrix4,
    sigma_down: [[ComplexMatrix4; 4]; 4],
    // sparse raised-index probes for decompose
    probe_g5: SparseProbe,
    probe_gamma: [SparseProbe; 4],
    probe_g5_gamma: [SparseProbe; 4],
    probe_sigma: [[SparseProbe; 4]; 4],
}

fn sparsify(m: &ComplexMatrix4) -> SparseProbe {
    let mut out = [(0usize, 0usize, C_ZERO); 4];
    let mut slot = 0;
    for i in 0..4 {
        for j in 0..4 {
            if m.entries[i][j] != C_ZERO {
                assert!(slot < 4, "Clifford generators carry exactly four nonzeros");
                out[slot] = (i, j, m.entries[i][j]);
                slot += 1;
            }
        }
    }
    assert_eq!(slot, 4);
    out
}

fn basis() -> &'static Basis {
    use std::sync::OnceLock;
    static BASIS: OnceLock<Basis> = OnceLock::new();
    BASIS.get_or_init(|| {
        let gamma_up = [0, 1, 2, 3].map(|mu| gamma(mu).expect("fixed index"));
        let gamma_down = [0, 1, 2, 3].map(|mu| gamma_up[mu].scale_re(METRIC[mu]));
        let mut sigma_up = [[ComplexMatrix4::zero(); 4]; 4];
        let mut sigma_down = [[ComplexMatrix4::zero(); 4]; 4];
        for mu in 0..4 {
            for nu in 0..4 {
                sigma_up[mu][nu] = sigma(mu, nu).expect("fixed index");
                sigma_down[mu][nu] = sigma_up[mu][nu].scale_re(METRIC[mu] * METRIC[nu]);
            }
        }
        let g5 = gamma5();
        let mut probe_sigma = [[[(0usize, 0usize, C_ZERO); 4]; 4]; 4];
        for mu in 0..4 {
            for nu in 0..4 {
                if mu != nu {
                    probe_sigma[mu][nu] = sparsify(&sigma_up[mu][nu]);
                }
            }
        }
        Basis {
            gamma_down,
            g5,
            sigma_down,
            probe_g5: sparsify(&g5),
            probe_gamma: [0, 1, 2, 3].map(|mu| sparsify(&gamma_up[mu])),
            probe_g5_gamma: [0, 1, 2, 3].map(|mu| sparsify(&(g5 * gamma_up[mu]))),
            probe_sigma,
        }
    })
}

#[inline]
fn sparse_trace(probe: &SparseProbe, m: &ComplexMatrix4) -> Complex64 {
    let mut acc = C_ZERO;
    for &(i, j, val) in probe {
        acc += val * m.entries[j][i];
    }
    acc
}

/// Projects a matrix onto the 16 Clifford generators.
///
/// `S = Tr[M]/4`, `Π = −(i/4)Tr[γ5 M]`, `V^μ = Tr[γ^μ M]/4`,
/// `A^μ = Tr[γ5 γ^μ M]/4`, `T^{μν} = Tr[σ^{μν} M]/4`.
pub fn decompose(m: &ComplexMatrix4) -> CliffordComponents {
    let b = basis();
    let quarter = 0.25;
    let mut c = CliffordComponents::zero();
    c.s = m.trace().scale(quarter);
    c.pi = (-C_I * sparse_trace(&b.probe_g5, m)).scale(quarter);
    for mu in 0..4 {
        c.v[mu] = sparse_trace(&b.probe_gamma[mu], m).scale(quarter);
        c.a[mu] = sparse_trace(&b.probe_g5_gamma[mu], m).scale(quarter);
        for nu in (mu + 1)..4 {
            let t = sparse_trace(&b.probe_sigma[mu][nu], m).scale(quarter);
            c.t[mu][nu] = t;
            c.t[nu][mu] = -t;
        }
    }
    c
}

/// Rebuilds the matrix from its Clifford coefficients; inverse of
/// [`decompose`]. The tensor part must be antisymmetric.
pub fn reconstruct(c: &CliffordComponents) -> Result<ComplexMatrix4> {
    if c.antisymmetry_defect() > 1e-12 {
        return Err(Error::invalid(format!(
            "tensor components not antisymmetric (defect {:.3e})",
            c.antisymmetry_defect()
        )));
    }
    let b = basis();
    let mut m = ComplexMatrix4::identity().scale(c.s);
    m = m + b.g5.scale(C_I * c.pi);
    for mu in 0..4 {
        m = m + b.gamma_down[mu].scale(c.v[mu]);
        m = m + (b.gamma_down[mu] * b.g5).scale(c.a[mu]);
        for nu in 0..4 {
            m = m + b.sigma_down[mu][nu].scale(c.t[mu][nu].scale(0.5));
        }
    }
    Ok(m)
}
