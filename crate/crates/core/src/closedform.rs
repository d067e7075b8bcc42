//! Per-axis analytic expressions for the one-Pauli channels.
//!
//! These are transcribed term by term from the published formulas and are
//! deliberately not simplified, so that any transcription slip shows up as
//! a residual against [`crate::measures`]. Writing `a_k` for the Bloch
//! component along the channel axis and `t_k` for the squared length of the
//! two transverse components:
//!
//! | quantity | expression |
//! |---|---|
//! | output Bloch vector | `a_k` kept, transverse components times `(2x - 1)` |
//! | W eigenvalues λ | `[1 ± sqrt(1 - 4x(x-1)(a_k² - 1))] / 2` |
//! | output eigenvalues θ | `[1 ± sqrt(a_k² + t_k (1-2x)²)] / 2` |
//! | fidelity (σ₁, σ₃) | `a_k² (1-x) + x` |
//! | fidelity (σ₂) | `-a₂² (1-x) + x` |
//!
//! The σ₂ fidelity keeps its printed minus sign. The numeric fidelity is
//! `x + (1-x) a₂²`, so the two differ by exactly `2(1-x) a₂²`.

use crate::bloch::BlochVector;
use crate::channels::{check_retention, PauliAxis};
use crate::error::Result;
use crate::math::{guarded_sqrt, SpectrumPair};

#[derive(Debug, Clone, PartialEq)]
pub struct ClosedFormPoint {
    pub axis: PauliAxis,
    pub x: f64,
    pub a: BlochVector,
    pub b: BlochVector,
    pub lambda: SpectrumPair,
    pub theta: SpectrumPair,
    pub noise_n: f64,
    pub coherent_c: f64,
    pub fidelity_paper: f64,
}

/// Axis component and the squared transverse length.
fn split(axis: PauliAxis, a: &BlochVector) -> (f64, f64) {
    let k = axis.index();
    let along = a.component(k);
    let transverse = (0..3)
        .filter(|&i| i != k)
        .map(|i| a.component(i).powi(2))
        .sum();
    (along, transverse)
}

pub fn bloch_out_closed(axis: PauliAxis, x: f64, a: &BlochVector) -> Result<BlochVector> {
    check_retention(x)?;
    let scale = 2.0 * x - 1.0;
    let mut b = a.to_array();
    for (i, v) in b.iter_mut().enumerate() {
        if i != axis.index() {
            *v *= scale;
        }
    }
    BlochVector::from_array(b)
}

pub fn lambdas_closed(axis: PauliAxis, x: f64, a: &BlochVector) -> Result<SpectrumPair> {
    check_retention(x)?;
    let (ak, _) = split(axis, a);
    let root = guarded_sqrt(1.0 - 4.0 * x * (x - 1.0) * (ak * ak - 1.0))?;
    Ok(SpectrumPair::new((1.0 + root) / 2.0, (1.0 - root) / 2.0))
}

pub fn thetas_closed(axis: PauliAxis, x: f64, a: &BlochVector) -> Result<SpectrumPair> {
    check_retention(x)?;
    let (ak, transverse) = split(axis, a);
    let root = guarded_sqrt(ak * ak + transverse * (1.0 - 2.0 * x).powi(2))?;
    Ok(SpectrumPair::new((1.0 + root) / 2.0, (1.0 - root) / 2.0))
}

pub fn noise_closed(axis: PauliAxis, x: f64, a: &BlochVector) -> Result<f64> {
    lambdas_closed(axis, x, a)?.entropy_bits()
}

pub fn coherent_closed(axis: PauliAxis, x: f64, a: &BlochVector) -> Result<f64> {
    Ok(thetas_closed(axis, x, a)?.entropy_bits()? - noise_closed(axis, x, a)?)
}

pub fn fidelity_paper_closed(axis: PauliAxis, x: f64, a: &BlochVector) -> Result<f64> {
    check_retention(x)?;
    Ok(match axis {
        PauliAxis::Sigma1 => a.a1().powi(2) * (1.0 - x) + x,
        PauliAxis::Sigma2 => -a.a2().powi(2) * (1.0 - x) + x,
        PauliAxis::Sigma3 => a.a3().powi(2) * (1.0 - x) + x,
    })
}

pub fn closed_point(axis: PauliAxis, x: f64, a: &BlochVector) -> Result<ClosedFormPoint> {
    let lambda = lambdas_closed(axis, x, a)?;
    let theta = thetas_closed(axis, x, a)?;
    let noise_n = lambda.entropy_bits()?;
    Ok(ClosedFormPoint {
        axis,
        x,
        a: *a,
        b: bloch_out_closed(axis, x, a)?,
        lambda,
        theta,
        noise_n,
        coherent_c: theta.entropy_bits()? - noise_n,
        fidelity_paper: fidelity_paper_closed(axis, x, a)?,
    })
}
