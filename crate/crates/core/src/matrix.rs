//! Dense complex matrices for 2-, 4- and 8-dimensional qubit operators.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Index, IndexMut};

use num_complex::Complex64;

use crate::{Error, Result};

/// Largest tolerated `max |m[i,j] - conj(m[j,i])|` for Hermitian inputs.
pub const HERMITICITY_TOLERANCE: f64 = 1e-10;

/// Eigenvalues in `(NEGATIVE_EIGENVALUE_THRESHOLD, 0)` count as round-off zeros.
pub const NEGATIVE_EIGENVALUE_THRESHOLD: f64 = -1e-9;

const JACOBI_MAX_SWEEPS: usize = 64;

/// One of the three qubits of the register.
///
/// Qubit `A` is the most significant bit of a basis index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Qubit {
    A,
    B,
    C,
}

impl Qubit {
    pub const ALL: [Qubit; 3] = [Qubit::A, Qubit::B, Qubit::C];

    /// Bit position of this qubit inside a three-qubit basis index.
    pub const fn shift(self) -> u32 {
        match self {
            Qubit::A => 2,
            Qubit::B => 1,
            Qubit::C => 0,
        }
    }

    pub const fn position(self) -> usize {
        match self {
            Qubit::A => 0,
            Qubit::B => 1,
            Qubit::C => 2,
        }
    }

    pub const fn label(self) -> char {
        match self {
            Qubit::A => 'a',
            Qubit::B => 'b',
            Qubit::C => 'c',
        }
    }

    pub fn from_label(c: char) -> Option<Qubit> {
        match c.to_ascii_lowercase() {
            'a' => Some(Qubit::A),
            'b' => Some(Qubit::B),
            'c' => Some(Qubit::C),
            _ => None,
        }
    }
}

impl fmt::Display for Qubit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.label())
    }
}

/// Square matrix of complex amplitudes stored row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexMatrix {
    dim: usize,
    entries: Vec<Complex64>,
}

impl ComplexMatrix {
    pub fn zeros(dim: usize) -> Self {
        ComplexMatrix {
            dim,
            entries: vec![Complex64::new(0.0, 0.0); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m[(i, i)] = Complex64::new(1.0, 0.0);
        }
        m
    }

    /// Builds a matrix from `dim²` row-major entries.
    pub fn from_row_major(dim: usize, entries: Vec<Complex64>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::InvalidDimension(0));
        }
        if entries.len() != dim * dim {
            return Err(Error::DimensionMismatch {
                expected: dim * dim,
                found: entries.len(),
            });
        }
        Ok(ComplexMatrix { dim, entries })
    }

    pub fn from_real_diagonal(diagonal: &[f64]) -> Self {
        let mut m = Self::zeros(diagonal.len());
        for (i, &d) in diagonal.iter().enumerate() {
            m[(i, i)] = Complex64::new(d, 0.0);
        }
        m
    }

    /// Outer product `|u⟩⟨v|`.
    pub fn outer(u: &[Complex64], v: &[Complex64]) -> Result<Self> {
        if u.len() != v.len() {
            return Err(Error::DimensionMismatch {
                expected: u.len(),
                found: v.len(),
            });
        }
        let dim = u.len();
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            for j in 0..dim {
                m[(i, j)] = u[i] * v[j].conj();
            }
        }
        Ok(m)
    }

    pub fn pauli_x() -> Self {
        let (o, l) = (Complex64::new(0.0, 0.0), Complex64::new(1.0, 0.0));
        ComplexMatrix {
            dim: 2,
            entries: vec![o, l, l, o],
        }
    }

    pub fn pauli_y() -> Self {
        let (o, i) = (Complex64::new(0.0, 0.0), Complex64::new(0.0, 1.0));
        ComplexMatrix {
            dim: 2,
            entries: vec![o, -i, i, o],
        }
    }

    pub fn pauli_z() -> Self {
        Self::from_real_diagonal(&[1.0, -1.0])
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entries(&self) -> &[Complex64] {
        &self.entries
    }

    /// Kronecker product: `(a ⊗ b)[(i·db + k, j·db + l)] = a[i,j]·b[k,l]`.
    pub fn kron(&self, other: &ComplexMatrix) -> ComplexMatrix {
        let db = other.dim;
        let mut out = Self::zeros(self.dim * db);
        for i in 0..self.dim {
            for j in 0..self.dim {
                let aij = self[(i, j)];
                if aij == Complex64::new(0.0, 0.0) {
                    continue;
                }
                for k in 0..db {
                    for l in 0..db {
                        out[(i * db + k, j * db + l)] = aij * other[(k, l)];
                    }
                }
            }
        }
        out
    }

    /// Conjugate transpose.
    pub fn dagger(&self) -> ComplexMatrix {
        let mut out = Self::zeros(self.dim);
        for i in 0..self.dim {
            for j in 0..self.dim {
                out[(i, j)] = self[(j, i)].conj();
            }
        }
        out
    }

    pub fn matmul(&self, other: &ComplexMatrix) -> Result<ComplexMatrix> {
        self.check_same_dim(other)?;
        let n = self.dim;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let aik = self[(i, k)];
                if aik == Complex64::new(0.0, 0.0) {
                    continue;
                }
                for j in 0..n {
                    out.entries[i * n + j] += aik * other.entries[k * n + j];
                }
            }
        }
        Ok(out)
    }

    pub fn add(&self, other: &ComplexMatrix) -> Result<ComplexMatrix> {
        self.check_same_dim(other)?;
        let mut out = self.clone();
        out.add_assign(other)?;
        Ok(out)
    }

    pub fn add_assign(&mut self, other: &ComplexMatrix) -> Result<()> {
        self.check_same_dim(other)?;
        for (x, y) in self.entries.iter_mut().zip(&other.entries) {
            *x += *y;
        }
        Ok(())
    }

    pub fn sub(&self, other: &ComplexMatrix) -> Result<ComplexMatrix> {
        self.check_same_dim(other)?;
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(x, y)| x - y)
            .collect();
        Ok(ComplexMatrix {
            dim: self.dim,
            entries,
        })
    }

    pub fn scale(&self, factor: f64) -> ComplexMatrix {
        ComplexMatrix {
            dim: self.dim,
            entries: self.entries.iter().map(|x| x * factor).collect(),
        }
    }

    pub fn trace(&self) -> Complex64 {
        (0..self.dim).map(|i| self[(i, i)]).sum()
    }

    pub fn frobenius_norm(&self) -> f64 {
        libm::sqrt(self.entries.iter().map(|x| x.norm_sqr()).sum())
    }

    /// `max |m[i,j] - conj(m[j,i])|`.
    pub fn hermiticity_defect(&self) -> f64 {
        let mut worst = 0.0f64;
        for i in 0..self.dim {
            for j in i..self.dim {
                worst = worst.max((self[(i, j)] - self[(j, i)].conj()).norm());
            }
        }
        worst
    }

    /// `(m + m†)/2`.
    pub fn hermitian_part(&self) -> ComplexMatrix {
        let mut out = Self::zeros(self.dim);
        for i in 0..self.dim {
            for j in 0..self.dim {
                out[(i, j)] = (self[(i, j)] + self[(j, i)].conj()) * 0.5;
            }
        }
        out
    }

    /// Largest entrywise modulus of `a - b`.
    pub fn distance_max_abs(&self, other: &ComplexMatrix) -> Result<f64> {
        self.check_same_dim(other)?;
        Ok(self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(x, y)| (x - y).norm())
            .fold(0.0, f64::max))
    }

    /// Entry `(row, col)` where `|a - b|` is largest, with that modulus.
    pub fn worst_entry(&self, other: &ComplexMatrix) -> Result<((usize, usize), f64)> {
        self.check_same_dim(other)?;
        let mut best = ((0, 0), 0.0f64);
        for i in 0..self.dim {
            for j in 0..self.dim {
                let d = (self[(i, j)] - other[(i, j)]).norm();
                if d > best.1 {
                    best = ((i, j), d);
                }
            }
        }
        Ok(best)
    }

    /// Transposes the index pair of one qubit of an 8×8 three-qubit operator.
    ///
    /// Entry `((a,b,c),(a',b',c'))` moves to `((a',b,c),(a,b',c'))` for qubit
    /// `a`, and analogously for `b` and `c`.
    pub fn partial_transpose(&self, qubit: Qubit) -> Result<ComplexMatrix> {
        if self.dim != 8 {
            return Err(Error::InvalidDimension(self.dim));
        }
        let mask = 1usize << qubit.shift();
        let mut out = Self::zeros(8);
        for r in 0..8 {
            for c in 0..8 {
                let r2 = (r & !mask) | (c & mask);
                let c2 = (c & !mask) | (r & mask);
                out[(r2, c2)] = self[(r, c)];
            }
        }
        Ok(out)
    }

    /// Reduced 2×2 operator of one qubit, tracing out the other two.
    pub fn partial_trace_keep(&self, keep: Qubit) -> Result<ComplexMatrix> {
        if self.dim != 8 {
            return Err(Error::InvalidDimension(self.dim));
        }
        let shift = keep.shift();
        let mut out = Self::zeros(2);
        for r in 0..8 {
            for c in 0..8 {
                if (r & !(1 << shift)) == (c & !(1 << shift)) {
                    out[((r >> shift) & 1, (c >> shift) & 1)] += self[(r, c)];
                }
            }
        }
        Ok(out)
    }

    /// Eigenvalues of a Hermitian matrix, ascending.
    pub fn hermitian_eigenvalues(&self) -> Result<Spectrum> {
        Ok(Spectrum {
            eigenvalues: self.hermitian_eigen()?.values,
        })
    }

    /// Full eigendecomposition of a Hermitian matrix by cyclic complex Jacobi
    /// rotations. Eigenvectors are the columns of [`Eigen::vectors`], in the
    /// same (ascending) order as the eigenvalues.
    pub fn hermitian_eigen(&self) -> Result<Eigen> {
        let defect = self.hermiticity_defect();
        if !(defect <= HERMITICITY_TOLERANCE) {
            return Err(Error::NotHermitian { defect });
        }
        let n = self.dim;
        let mut a = self.hermitian_part();
        let mut v = Self::identity(n);
        let scale = a.frobenius_norm();

        for _ in 0..JACOBI_MAX_SWEEPS {
            let off: f64 = (0..n)
                .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
                .map(|(i, j)| a[(i, j)].norm_sqr())
                .sum();
            if libm::sqrt(off) <= 1e-17 * scale.max(f64::MIN_POSITIVE) {
                break;
            }
            for p in 0..n {
                for q in (p + 1)..n {
                    jacobi_rotate(&mut a, &mut v, p, q);
                }
            }
        }

        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&i, &j| a[(i, i)].re.total_cmp(&a[(j, j)].re));
        let values = order.iter().map(|&i| a[(i, i)].re).collect();
        let mut vectors = Self::zeros(n);
        for (col, &src) in order.iter().enumerate() {
            for row in 0..n {
                vectors[(row, col)] = v[(row, src)];
            }
        }
        Ok(Eigen { values, vectors })
    }

    fn check_same_dim(&self, other: &ComplexMatrix) -> Result<()> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: other.dim,
            });
        }
        Ok(())
    }
}

/// Zeroes `a[p,q]` with the unitary `G = diag(1, e^{-iφ}) · R(θ)` on the
/// `(p, q)` plane, where `φ = arg a[p,q]`, and accumulates `V ← V·G`.
fn jacobi_rotate(a: &mut ComplexMatrix, v: &mut ComplexMatrix, p: usize, q: usize) {
    let apq = a[(p, q)];
    let r = apq.norm();
    if r == 0.0 {
        return;
    }
    let phase = apq / r;
    let app = a[(p, p)].re;
    let aqq = a[(q, q)].re;
    let tau = (aqq - app) / (2.0 * r);
    let t = if tau >= 0.0 {
        1.0 / (tau + libm::sqrt(1.0 + tau * tau))
    } else {
        -1.0 / (-tau + libm::sqrt(1.0 + tau * tau))
    };
    let c = 1.0 / libm::sqrt(1.0 + t * t);
    let s = t * c;
    let phase_conj = phase.conj();

    // G = [[c, s], [-s·e^{-iφ}, c·e^{-iφ}]] on rows/cols (p, q).
    let g_pp = Complex64::new(c, 0.0);
    let g_pq = Complex64::new(s, 0.0);
    let g_qp = phase_conj * (-s);
    let g_qq = phase_conj * c;

    let n = a.dim;
    // A ← A·G
    for k in 0..n {
        let akp = a[(k, p)];
        let akq = a[(k, q)];
        a[(k, p)] = akp * g_pp + akq * g_qp;
        a[(k, q)] = akp * g_pq + akq * g_qq;
    }
    // A ← G†·A
    for k in 0..n {
        let apk = a[(p, k)];
        let aqk = a[(q, k)];
        a[(p, k)] = g_pp.conj() * apk + g_qp.conj() * aqk;
        a[(q, k)] = g_pq.conj() * apk + g_qq.conj() * aqk;
    }
    a[(p, q)] = Complex64::new(0.0, 0.0);
    a[(q, p)] = Complex64::new(0.0, 0.0);
    a[(p, p)] = Complex64::new(a[(p, p)].re, 0.0);
    a[(q, q)] = Complex64::new(a[(q, q)].re, 0.0);
    // V ← V·G
    for k in 0..n {
        let vkp = v[(k, p)];
        let vkq = v[(k, q)];
        v[(k, p)] = vkp * g_pp + vkq * g_qp;
        v[(k, q)] = vkp * g_pq + vkq * g_qq;
    }
}

impl Index<(usize, usize)> for ComplexMatrix {
    type Output = Complex64;

    fn index(&self, (i, j): (usize, usize)) -> &Complex64 {
        &self.entries[i * self.dim + j]
    }
}

impl IndexMut<(usize, usize)> for ComplexMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex64 {
        &mut self.entries[i * self.dim + j]
    }
}

/// Real eigenvalues sorted ascending.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    pub eigenvalues: Vec<f64>,
}

impl Spectrum {
    pub fn min(&self) -> f64 {
        self.eigenvalues.first().copied().unwrap_or(f64::NAN)
    }

    pub fn max(&self) -> f64 {
        self.eigenvalues.last().copied().unwrap_or(f64::NAN)
    }

    pub fn sum(&self) -> f64 {
        self.eigenvalues.iter().sum()
    }

    /// Sum of the eigenvalues below [`NEGATIVE_EIGENVALUE_THRESHOLD`].
    pub fn negative_sum(&self) -> f64 {
        self.eigenvalues
            .iter()
            .filter(|&&x| x < NEGATIVE_EIGENVALUE_THRESHOLD)
            .sum()
    }

    /// Sum of absolute eigenvalues (the trace norm of a Hermitian matrix).
    pub fn trace_norm(&self) -> f64 {
        self.eigenvalues.iter().map(|x| x.abs()).sum()
    }
}

#[derive(Debug, Clone)]
pub struct Eigen {
    pub values: Vec<f64>,
    pub vectors: ComplexMatrix,
}

impl Eigen {
    /// Column `k` of the eigenvector matrix.
    pub fn vector(&self, k: usize) -> Vec<Complex64> {
        (0..self.vectors.dim)
            .map(|r| self.vectors[(r, k)])
            .collect()
    }
}
