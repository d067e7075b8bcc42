//! Bloch vectors and qubit density matrices, `ρ = (I + a·σ)/2`.

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::math::{self, ComplexMatrix, SpectrumPair, EIGEN_CLAMP_TOL, HERMITIAN_TOL};

/// Slack allowed on `|a| <= 1`.
pub const BLOCH_LENGTH_TOL: f64 = 1e-12;

/// Tolerance on `Tr ρ = 1`.
pub const TRACE_TOL: f64 = 1e-12;

/// A real 3-vector of length at most one.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BlochVector {
    a: [f64; 3],
}

impl BlochVector {
    pub fn new(a1: f64, a2: f64, a3: f64) -> Result<Self> {
        Self::from_array([a1, a2, a3])
    }

    pub fn from_array(a: [f64; 3]) -> Result<Self> {
        if a.iter().any(|v| !v.is_finite()) {
            return Err(Error::NonFinite("Bloch vector"));
        }
        let length = a.iter().map(|v| v * v).sum::<f64>().sqrt();
        if length > 1.0 + BLOCH_LENGTH_TOL {
            return Err(Error::BlochTooLong {
                length,
                excess: length - 1.0,
            });
        }
        Ok(Self { a })
    }

    pub fn zero() -> Self {
        Self { a: [0.0; 3] }
    }

    pub fn a1(&self) -> f64 {
        self.a[0]
    }

    pub fn a2(&self) -> f64 {
        self.a[1]
    }

    pub fn a3(&self) -> f64 {
        self.a[2]
    }

    pub fn to_array(self) -> [f64; 3] {
        self.a
    }

    /// Component `i` in 0-based order.
    pub fn component(&self, i: usize) -> f64 {
        self.a[i]
    }

    pub fn norm_squared(&self) -> f64 {
        self.a.iter().map(|v| v * v).sum()
    }

    pub fn norm(&self) -> f64 {
        self.norm_squared().sqrt()
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        self.a
            .iter()
            .zip(&other.a)
            .map(|(x, y)| (x - y).abs())
            .fold(0.0, f64::max)
    }
}

impl fmt::Display for BlochVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{},{}", self.a[0], self.a[1], self.a[2])
    }
}

/// Parses `"a1,a2,a3"`.
impl FromStr for BlochVector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split(',').map(str::trim).collect();
        if parts.len() != 3 {
            return Err(Error::Parse(format!(
                "expected three comma-separated components, got {}",
                parts.len()
            )));
        }
        let mut a = [0.0; 3];
        for (slot, part) in a.iter_mut().zip(&parts) {
            *slot = part
                .parse::<f64>()
                .map_err(|_| Error::Parse(format!("'{part}' is not a decimal number")))?;
        }
        Self::from_array(a)
    }
}

/// A validated 2x2 qubit state: Hermitian, unit trace, positive semidefinite.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix {
    m: ComplexMatrix,
}

impl DensityMatrix {
    pub fn new(m: ComplexMatrix) -> Result<Self> {
        if m.dim() != 2 {
            return Err(Error::InvalidDensity(format!(
                "qubit states are 2x2, got {0}x{0}",
                m.dim()
            )));
        }
        let residual = math::hermiticity_residual(&m);
        if residual > HERMITIAN_TOL {
            return Err(Error::InvalidDensity(format!(
                "not Hermitian (residual {residual:e})"
            )));
        }
        let tr = m.trace();
        if (tr - Complex64::new(1.0, 0.0)).norm() > TRACE_TOL {
            return Err(Error::InvalidDensity(format!("trace {tr} is not 1")));
        }
        let spectrum = math::hermitian_eigenvalues_2x2(&m)?;
        if spectrum.lo < -EIGEN_CLAMP_TOL {
            return Err(Error::InvalidDensity(format!(
                "negative eigenvalue {:e}",
                spectrum.lo
            )));
        }
        Ok(Self { m })
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.m
    }

    pub fn into_matrix(self) -> ComplexMatrix {
        self.m
    }

    pub fn eigenvalues(&self) -> SpectrumPair {
        // validated at construction
        math::hermitian_eigenvalues_2x2(&self.m).expect("density matrix is Hermitian 2x2")
    }

    /// Von Neumann entropy in bits.
    pub fn entropy(&self) -> f64 {
        self.eigenvalues()
            .entropy_bits()
            .expect("density matrix spectrum is non-negative")
    }
}

pub fn bloch_to_density(a: &BlochVector) -> DensityMatrix {
    let [a1, a2, a3] = a.to_array();
    let half = |re: f64, im: f64| Complex64::new(re / 2.0, im / 2.0);
    let m = ComplexMatrix::from_2x2([
        [half(1.0 + a3, 0.0), half(a1, -a2)],
        [half(a1, a2), half(1.0 - a3, 0.0)],
    ])
    .expect("finite entries");
    DensityMatrix { m }
}

/// Inverse of [`bloch_to_density`]: `a_k = Tr(ρ σ_k)`.
pub fn density_to_bloch(rho: &DensityMatrix) -> Result<BlochVector> {
    let m = rho.matrix();
    let a1 = 2.0 * m.get(1, 0).re;
    let a2 = 2.0 * m.get(1, 0).im;
    let a3 = (m.get(0, 0) - m.get(1, 1)).re;
    BlochVector::new(a1, a2, a3)
}

/// Entropy of `(I + a·σ)/2` from its eigenvalues `(1 ± |a|)/2`.
pub fn state_entropy(a: &BlochVector) -> f64 {
    let r = a.norm().min(1.0);
    let theta = SpectrumPair::new((1.0 + r) / 2.0, (1.0 - r) / 2.0);
    theta.entropy_bits().expect("eigenvalues are non-negative")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn bloch_to_density_examples() {
        let rho = bloch_to_density(&BlochVector::zero());
        assert_eq!(*rho.matrix(), ComplexMatrix::identity(2).scale_real(0.5));

        let rho = bloch_to_density(&BlochVector::new(0.0, 0.0, 1.0).unwrap());
        assert_eq!(
            *rho.matrix(),
            ComplexMatrix::real_2x2([[1.0, 0.0], [0.0, 0.0]]).unwrap()
        );

        let rho = bloch_to_density(&BlochVector::new(1.0, 0.0, 0.0).unwrap());
        assert_eq!(
            *rho.matrix(),
            ComplexMatrix::real_2x2([[0.5, 0.5], [0.5, 0.5]]).unwrap()
        );
    }

    #[test]
    fn too_long_bloch_vector_names_its_length() {
        let err = BlochVector::new(0.0, 0.0, 2.0).unwrap_err();
        assert!(matches!(err, Error::BlochTooLong { length, .. } if length == 2.0));
        assert!(err.to_string().contains("length 2"));
        assert!(BlochVector::new(0.0, 0.0, 1.0 + 5e-13).is_ok());
    }

    #[test]
    fn density_to_bloch_examples() {
        let half = DensityMatrix::new(ComplexMatrix::identity(2).scale_real(0.5)).unwrap();
        assert_eq!(density_to_bloch(&half).unwrap(), BlochVector::zero());

        let up =
            DensityMatrix::new(ComplexMatrix::real_2x2([[1.0, 0.0], [0.0, 0.0]]).unwrap()).unwrap();
        assert_eq!(density_to_bloch(&up).unwrap().to_array(), [0.0, 0.0, 1.0]);

        let m =
            ComplexMatrix::from_2x2([[c(0.5, 0.0), c(0.25, -0.3)], [c(0.25, 0.3), c(0.5, 0.0)]])
                .unwrap();
        let a = density_to_bloch(&DensityMatrix::new(m).unwrap()).unwrap();
        assert!(a.max_abs_diff(&BlochVector::new(0.5, 0.6, 0.0).unwrap()) < 1e-15);
    }

    #[test]
    fn density_validation_rejects_bad_states() {
        let not_herm = ComplexMatrix::real_2x2([[0.5, 1.0], [0.0, 0.5]]).unwrap();
        assert!(matches!(
            DensityMatrix::new(not_herm),
            Err(Error::InvalidDensity(_))
        ));
        let bad_trace = ComplexMatrix::identity(2);
        assert!(matches!(
            DensityMatrix::new(bad_trace),
            Err(Error::InvalidDensity(_))
        ));
        let negative = ComplexMatrix::real_2x2([[1.5, 0.0], [0.0, -0.5]]).unwrap();
        assert!(matches!(
            DensityMatrix::new(negative),
            Err(Error::InvalidDensity(_))
        ));
        assert!(matches!(
            DensityMatrix::new(ComplexMatrix::identity(3)),
            Err(Error::InvalidDensity(_))
        ));
    }

    // Independent binary entropy: natural log divided by ln 2.
    fn h2(p: f64) -> f64 {
        [p, 1.0 - p]
            .iter()
            .filter(|&&q| q > 0.0)
            .map(|&q| -q * q.ln() / std::f64::consts::LN_2)
            .sum()
    }

    #[test]
    fn state_entropy_examples() {
        assert!((state_entropy(&BlochVector::zero()) - 1.0).abs() < 1e-15);
        assert_eq!(
            state_entropy(&BlochVector::new(1.0, 0.0, 0.0).unwrap()),
            0.0
        );

        let a = BlochVector::new(0.5, 0.6, 0.6).unwrap();
        let oracle = h2((1.0 + 0.97_f64.sqrt()) / 2.0);
        // frozen from the oracle above (cross-checked at 30 digits with mpmath)
        assert!((oracle - 0.064_123_435_097_933_66).abs() < 1e-15);
        assert!((state_entropy(&a) - oracle).abs() < 1e-13);
    }

    #[test]
    fn parse_cli_form() {
        let a: BlochVector = "0.5,0.6,0.6".parse().unwrap();
        assert_eq!(a.to_array(), [0.5, 0.6, 0.6]);
        let a: BlochVector = "-0.5, 1e-1 ,0".parse().unwrap();
        assert_eq!(a.to_array(), [-0.5, 0.1, 0.0]);
        assert!(matches!(
            "0.5,0.6".parse::<BlochVector>(),
            Err(Error::Parse(_))
        ));
        assert!(matches!(
            "0.5,x,0".parse::<BlochVector>(),
            Err(Error::Parse(_))
        ));
        assert!(matches!(
            "0,0,2".parse::<BlochVector>(),
            Err(Error::BlochTooLong { .. })
        ));
        assert!(matches!(
            "nan,0,0".parse::<BlochVector>(),
            Err(Error::NonFinite(_))
        ));
    }
}
