//! Complex linear algebra for small dense square matrices.
//!
//! Everything here is sized for qubit work: 2x2 operators and states, and W
//! matrices whose dimension is the number of Kraus operators. Storage is a
//! flat row-major `Vec`.

use num_complex::Complex64;

use crate::error::{Error, Result};

pub type ComplexScalar = Complex64;

/// Max absolute deviation of `M - M†` tolerated for a Hermitian matrix.
pub const HERMITIAN_TOL: f64 = 1e-12;

/// Eigenvalues (and radicands) in `[-EIGEN_CLAMP_TOL, 0)` are treated as 0.
pub const EIGEN_CLAMP_TOL: f64 = 1e-12;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);
const I: Complex64 = Complex64::new(0.0, 1.0);

#[derive(Debug, Clone, PartialEq)]
pub struct ComplexMatrix {
    dim: usize,
    entries: Vec<Complex64>,
}

impl ComplexMatrix {
    /// Builds a `dim x dim` matrix from row-major entries.
    pub fn new(dim: usize, entries: Vec<Complex64>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::EmptyMatrix);
        }
        if entries.len() != dim * dim {
            return Err(Error::EntryCount {
                dim,
                expected: dim * dim,
                actual: entries.len(),
            });
        }
        if entries
            .iter()
            .any(|z| !z.re.is_finite() || !z.im.is_finite())
        {
            return Err(Error::NonFinite("matrix entries"));
        }
        Ok(Self { dim, entries })
    }

    pub fn from_2x2(rows: [[Complex64; 2]; 2]) -> Result<Self> {
        Self::new(2, rows.iter().flatten().copied().collect())
    }

    /// Real-valued 2x2 convenience constructor.
    pub fn real_2x2(rows: [[f64; 2]; 2]) -> Result<Self> {
        Self::new(
            2,
            rows.iter()
                .flatten()
                .map(|&r| Complex64::new(r, 0.0))
                .collect(),
        )
    }

    pub fn identity(dim: usize) -> Self {
        let mut entries = vec![ZERO; dim * dim];
        for i in 0..dim {
            entries[i * dim + i] = ONE;
        }
        Self { dim, entries }
    }

    pub fn zeros(dim: usize) -> Self {
        Self {
            dim,
            entries: vec![ZERO; dim * dim],
        }
    }

    pub fn pauli_x() -> Self {
        Self {
            dim: 2,
            entries: vec![ZERO, ONE, ONE, ZERO],
        }
    }

    pub fn pauli_y() -> Self {
        Self {
            dim: 2,
            entries: vec![ZERO, -I, I, ZERO],
        }
    }

    pub fn pauli_z() -> Self {
        Self {
            dim: 2,
            entries: vec![ONE, ZERO, ZERO, -ONE],
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entries(&self) -> &[Complex64] {
        &self.entries
    }

    #[inline]
    pub fn get(&self, row: usize, col: usize) -> Complex64 {
        self.entries[row * self.dim + col]
    }

    pub fn adjoint(&self) -> Self {
        let n = self.dim;
        let mut entries = vec![ZERO; n * n];
        for r in 0..n {
            for c in 0..n {
                entries[c * n + r] = self.entries[r * n + c].conj();
            }
        }
        Self { dim: n, entries }
    }

    pub fn scale(&self, s: Complex64) -> Self {
        Self {
            dim: self.dim,
            entries: self.entries.iter().map(|z| z * s).collect(),
        }
    }

    pub fn scale_real(&self, s: f64) -> Self {
        self.scale(Complex64::new(s, 0.0))
    }

    fn check_same_dim(&self, other: &Self) -> Result<()> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch {
                left: self.dim,
                right: other.dim,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same_dim(other)?;
        Ok(Self {
            dim: self.dim,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_same_dim(other)?;
        Ok(Self {
            dim: self.dim,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    pub fn matmul(&self, other: &Self) -> Result<Self> {
        self.check_same_dim(other)?;
        let n = self.dim;
        let mut entries = vec![ZERO; n * n];
        for r in 0..n {
            for k in 0..n {
                let a = self.entries[r * n + k];
                if a == ZERO {
                    continue;
                }
                for c in 0..n {
                    entries[r * n + c] += a * other.entries[k * n + c];
                }
            }
        }
        Ok(Self { dim: n, entries })
    }

    pub fn trace(&self) -> Complex64 {
        (0..self.dim).map(|i| self.get(i, i)).sum()
    }

    /// Determinant of a 2x2 matrix.
    pub fn det_2x2(&self) -> Result<Complex64> {
        if self.dim != 2 {
            return Err(Error::WrongDimension {
                expected: 2,
                actual: self.dim,
            });
        }
        Ok(self.get(0, 0) * self.get(1, 1) - self.get(0, 1) * self.get(1, 0))
    }

    /// Largest absolute entry of `self - other`.
    pub fn max_abs_diff(&self, other: &Self) -> Result<f64> {
        self.check_same_dim(other)?;
        Ok(self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max))
    }

    pub fn is_hermitian(&self) -> bool {
        hermiticity_residual(self) <= HERMITIAN_TOL
    }
}

/// `Tr(A† B)`, the Hilbert-Schmidt inner product.
pub fn inner_product(a: &ComplexMatrix, b: &ComplexMatrix) -> Result<Complex64> {
    a.check_same_dim(b)?;
    Ok(a.entries
        .iter()
        .zip(&b.entries)
        .map(|(x, y)| x.conj() * y)
        .sum())
}

/// Max absolute entry of `M - M†`; zero for exactly Hermitian input.
pub fn hermiticity_residual(m: &ComplexMatrix) -> f64 {
    let n = m.dim;
    let mut worst = 0.0_f64;
    for r in 0..n {
        for c in r..n {
            worst = worst.max((m.get(r, c) - m.get(c, r).conj()).norm());
        }
    }
    worst
}

/// A pair of real eigenvalues held in descending order.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpectrumPair {
    pub hi: f64,
    pub lo: f64,
}

impl SpectrumPair {
    pub fn new(a: f64, b: f64) -> Self {
        if a >= b {
            Self { hi: a, lo: b }
        } else {
            Self { hi: b, lo: a }
        }
    }

    pub fn sum(&self) -> f64 {
        self.hi + self.lo
    }

    pub fn product(&self) -> f64 {
        self.hi * self.lo
    }

    pub fn to_array(self) -> [f64; 2] {
        [self.hi, self.lo]
    }

    /// Larger of the two componentwise absolute differences.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        (self.hi - other.hi).abs().max((self.lo - other.lo).abs())
    }

    /// Von Neumann entropy in bits, treating the pair as a probability spectrum.
    pub fn entropy_bits(&self) -> Result<f64> {
        entropy_bits(&self.to_array())
    }
}

/// `sqrt(v)` for a radicand that is non-negative up to rounding.
pub(crate) fn guarded_sqrt(v: f64) -> Result<f64> {
    if v < -EIGEN_CLAMP_TOL {
        return Err(Error::NegativeDiscriminant(v));
    }
    Ok(v.max(0.0).sqrt())
}

/// Eigenvalues of a 2x2 Hermitian matrix from `(t ± sqrt(t² - 4d)) / 2`.
pub fn hermitian_eigenvalues_2x2(m: &ComplexMatrix) -> Result<SpectrumPair> {
    if m.dim() != 2 {
        return Err(Error::WrongDimension {
            expected: 2,
            actual: m.dim(),
        });
    }
    let residual = hermiticity_residual(m);
    if residual > HERMITIAN_TOL {
        return Err(Error::NotHermitian(residual));
    }
    let t = m.trace().re;
    let d = m.det_2x2()?.re;
    let root = guarded_sqrt(t * t - 4.0 * d)?;
    Ok(SpectrumPair {
        hi: (t + root) / 2.0,
        lo: (t - root) / 2.0,
    })
}

/// `-Σ p log₂ p` with `0 log 0 = 0`.
///
/// Values in `[-EIGEN_CLAMP_TOL, 0)` are clamped to zero; anything more
/// negative is reported as an error.
pub fn entropy_bits(spectrum: &[f64]) -> Result<f64> {
    let mut h = 0.0;
    for &p in spectrum {
        if !p.is_finite() {
            return Err(Error::NonFinite("spectrum"));
        }
        if p < -EIGEN_CLAMP_TOL {
            return Err(Error::NegativeEigenvalue(p));
        }
        if p > 0.0 {
            h -= p * p.log2();
        }
    }
    Ok(h)
}
