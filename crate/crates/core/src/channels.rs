//! Kraus-operator channels on a single qubit.

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;

use crate::bloch::DensityMatrix;
use crate::error::{Error, Result};
use crate::math::ComplexMatrix;

/// Largest completeness residual accepted before a channel is applied.
pub const COMPLETENESS_TOL: f64 = 1e-13;

/// Which Pauli operator the channel applies on error.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PauliAxis {
    /// Bit flip.
    Sigma1,
    /// Bit and phase flip.
    Sigma2,
    /// Phase flip.
    Sigma3,
}

impl PauliAxis {
    pub const ALL: [PauliAxis; 3] = [PauliAxis::Sigma1, PauliAxis::Sigma2, PauliAxis::Sigma3];

    /// 0-based index into a Bloch vector.
    pub fn index(self) -> usize {
        match self {
            PauliAxis::Sigma1 => 0,
            PauliAxis::Sigma2 => 1,
            PauliAxis::Sigma3 => 2,
        }
    }

    pub fn from_index(i: usize) -> Option<Self> {
        Self::ALL.get(i).copied()
    }

    pub fn matrix(self) -> ComplexMatrix {
        match self {
            PauliAxis::Sigma1 => ComplexMatrix::pauli_x(),
            PauliAxis::Sigma2 => ComplexMatrix::pauli_y(),
            PauliAxis::Sigma3 => ComplexMatrix::pauli_z(),
        }
    }

    pub fn token(self) -> &'static str {
        match self {
            PauliAxis::Sigma1 => "sigma1",
            PauliAxis::Sigma2 => "sigma2",
            PauliAxis::Sigma3 => "sigma3",
        }
    }
}

impl fmt::Display for PauliAxis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

impl FromStr for PauliAxis {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "sigma1" => Ok(PauliAxis::Sigma1),
            "sigma2" => Ok(PauliAxis::Sigma2),
            "sigma3" => Ok(PauliAxis::Sigma3),
            other => Err(Error::Parse(format!(
                "unknown channel '{other}' (expected sigma1, sigma2 or sigma3)"
            ))),
        }
    }
}

/// How a channel was built.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChannelMeta {
    pub axis: PauliAxis,
    /// Retention rate in `[0, 1]`.
    pub x: f64,
}

/// An ordered Kraus set. The order indexes the rows and columns of W.
#[derive(Debug, Clone, PartialEq)]
pub struct KrausChannel {
    ops: Vec<ComplexMatrix>,
    meta: Option<ChannelMeta>,
}

pub(crate) fn check_retention(x: f64) -> Result<()> {
    if !(0.0..=1.0).contains(&x) {
        return Err(Error::RetentionOutOfRange(x));
    }
    Ok(())
}

impl KrausChannel {
    /// Wraps an arbitrary set of qubit operators. Completeness is not
    /// enforced here; see [`KrausChannel::completeness_residual`].
    pub fn new(ops: Vec<ComplexMatrix>) -> Result<Self> {
        if ops.is_empty() {
            return Err(Error::EmptyChannel);
        }
        if let Some(bad) = ops.iter().find(|op| op.dim() != 2) {
            return Err(Error::WrongDimension {
                expected: 2,
                actual: bad.dim(),
            });
        }
        Ok(Self { ops, meta: None })
    }

    /// `[√x I, √(1-x) σ_k]`, with the σ₂ operator carrying an extra `-i`.
    pub fn one_pauli(axis: PauliAxis, x: f64) -> Result<Self> {
        check_retention(x)?;
        let keep = ComplexMatrix::identity(2).scale_real(x.sqrt());
        let flip_amp = (1.0 - x).sqrt();
        let prefactor = match axis {
            PauliAxis::Sigma2 => Complex64::new(0.0, -flip_amp),
            _ => Complex64::new(flip_amp, 0.0),
        };
        let flip = axis.matrix().scale(prefactor);
        Ok(Self {
            ops: vec![keep, flip],
            meta: Some(ChannelMeta { axis, x }),
        })
    }

    pub fn ops(&self) -> &[ComplexMatrix] {
        &self.ops
    }

    pub fn meta(&self) -> Option<ChannelMeta> {
        self.meta
    }

    /// Max absolute entry of `Σ A†A - I`.
    pub fn completeness_residual(&self) -> f64 {
        let mut sum = ComplexMatrix::zeros(2);
        for op in &self.ops {
            let term = op.adjoint().matmul(op).expect("2x2 operators");
            sum = sum.add(&term).expect("2x2 operators");
        }
        sum.max_abs_diff(&ComplexMatrix::identity(2))
            .expect("2x2 operators")
    }

    /// Errors unless the completeness residual is within [`COMPLETENESS_TOL`].
    pub fn ensure_complete(&self) -> Result<()> {
        let residual = self.completeness_residual();
        if residual > COMPLETENESS_TOL {
            return Err(Error::IncompleteChannel(residual));
        }
        Ok(())
    }

    /// `Σ A ρ A†`.
    pub fn apply(&self, rho: &DensityMatrix) -> Result<DensityMatrix> {
        self.ensure_complete()?;
        let mut out = ComplexMatrix::zeros(2);
        for op in &self.ops {
            let term = op.matmul(rho.matrix())?.matmul(&op.adjoint())?;
            out = out.add(&term)?;
        }
        DensityMatrix::new(out)
    }
}

pub fn make_one_pauli(axis: PauliAxis, x: f64) -> Result<KrausChannel> {
    KrausChannel::one_pauli(axis, x)
}

pub fn completeness_residual(ch: &KrausChannel) -> f64 {
    ch.completeness_residual()
}

pub fn apply_channel(ch: &KrausChannel, rho: &DensityMatrix) -> Result<DensityMatrix> {
    ch.apply(rho)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bloch::{bloch_to_density, density_to_bloch, BlochVector};

    #[test]
    fn noiseless_endpoint_is_identity_and_zero() {
        let ch = make_one_pauli(PauliAxis::Sigma1, 1.0).unwrap();
        assert_eq!(ch.ops()[0], ComplexMatrix::identity(2));
        assert_eq!(ch.ops()[1], ComplexMatrix::zeros(2));
        assert_eq!(
            ch.meta(),
            Some(ChannelMeta {
                axis: PauliAxis::Sigma1,
                x: 1.0
            })
        );
    }

    #[test]
    fn sigma1_at_three_quarters() {
        let ch = make_one_pauli(PauliAxis::Sigma1, 0.75).unwrap();
        let keep = ComplexMatrix::identity(2).scale_real(0.75_f64.sqrt());
        assert_eq!(ch.ops()[0], keep);
        assert_eq!(ch.ops()[1], ComplexMatrix::pauli_x().scale_real(0.5));
    }

    #[test]
    fn sigma2_flip_operator_is_real() {
        let ch = make_one_pauli(PauliAxis::Sigma2, 0.5).unwrap();
        let s = 0.5_f64.sqrt();
        let expected = ComplexMatrix::real_2x2([[0.0, -s], [s, 0.0]]).unwrap();
        assert!(ch.ops()[1].max_abs_diff(&expected).unwrap() < 1e-16);
        assert!(ch.ops()[1].entries().iter().all(|z| z.im == 0.0));
    }

    #[test]
    fn retention_outside_unit_interval_rejected() {
        for x in [-0.1, 1.5, f64::NAN] {
            assert!(matches!(
                make_one_pauli(PauliAxis::Sigma3, x),
                Err(Error::RetentionOutOfRange(_))
            ));
        }
    }

    #[test]
    fn completeness_residual_examples() {
        let ch = make_one_pauli(PauliAxis::Sigma1, 0.3).unwrap();
        assert!(completeness_residual(&ch) <= 1e-15);

        let id = KrausChannel::new(vec![ComplexMatrix::identity(2)]).unwrap();
        assert_eq!(completeness_residual(&id), 0.0);

        let half =
            KrausChannel::new(vec![ComplexMatrix::identity(2).scale_real(0.5_f64.sqrt())]).unwrap();
        assert!((completeness_residual(&half) - 0.5).abs() < 1e-15);
    }

    #[test]
    fn constructor_rejects_empty_and_wrong_size() {
        assert!(matches!(
            KrausChannel::new(vec![]),
            Err(Error::EmptyChannel)
        ));
        assert!(matches!(
            KrausChannel::new(vec![ComplexMatrix::identity(3)]),
            Err(Error::WrongDimension { .. })
        ));
    }

    #[test]
    fn incomplete_channel_refuses_to_apply() {
        let half =
            KrausChannel::new(vec![ComplexMatrix::identity(2).scale_real(0.5_f64.sqrt())]).unwrap();
        let rho = bloch_to_density(&BlochVector::zero());
        match half.apply(&rho) {
            Err(Error::IncompleteChannel(r)) => assert!((r - 0.5).abs() < 1e-15),
            other => panic!("expected incomplete channel error, got {other:?}"),
        }
    }

    #[test]
    fn apply_examples() {
        let a = BlochVector::new(0.5, 0.6, 0.6).unwrap();
        let ch = make_one_pauli(PauliAxis::Sigma1, 0.5).unwrap();
        let b = density_to_bloch(&ch.apply(&bloch_to_density(&a)).unwrap()).unwrap();
        assert!(b.max_abs_diff(&BlochVector::new(0.5, 0.0, 0.0).unwrap()) < 1e-15);

        for axis in PauliAxis::ALL {
            let rho = bloch_to_density(&a);
            let out = make_one_pauli(axis, 1.0).unwrap().apply(&rho).unwrap();
            assert_eq!(out, rho);
        }

        let a = BlochVector::new(0.6, 0.6, 0.5).unwrap();
        let ch = make_one_pauli(PauliAxis::Sigma3, 0.2).unwrap();
        let b = density_to_bloch(&ch.apply(&bloch_to_density(&a)).unwrap()).unwrap();
        assert!(b.max_abs_diff(&BlochVector::new(-0.36, -0.36, 0.5).unwrap()) < 1e-15);
    }

    #[test]
    fn axis_tokens() {
        for axis in PauliAxis::ALL {
            assert_eq!(axis.token().parse::<PauliAxis>().unwrap(), axis);
            assert_eq!(PauliAxis::from_index(axis.index()), Some(axis));
        }
        assert!("sigma4".parse::<PauliAxis>().is_err());
    }
}
