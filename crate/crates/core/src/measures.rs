//! Information measures evaluated numerically from a Kraus set and an input state.
//!
//! Everything here works from the operators themselves, never from the
//! per-axis closed forms. The one exception is `fidelity_paper` in
//! [`ChannelReport`], which is taken from [`crate::closedform`] so both
//! fidelity values travel together.
//!
//! [`environment_entropy_oracle`] is a second, independent route to the
//! entropy exchange. It dilates the channel into system ⊗ environment,
//! traces out the system and takes the entropy of what is left. It uses
//! only scalar arithmetic and its own eigen-solver.

use num_complex::Complex64;

use crate::bloch::{density_to_bloch, BlochVector, DensityMatrix, TRACE_TOL};
use crate::channels::KrausChannel;
use crate::closedform;
use crate::error::{Error, Result};
use crate::math::{self, ComplexMatrix, SpectrumPair, EIGEN_CLAMP_TOL, HERMITIAN_TOL};

/// The entropy-exchange matrix `W_ij = Tr(A_i ρ A_j†)`.
#[derive(Debug, Clone, PartialEq)]
pub struct WMatrix {
    m: ComplexMatrix,
}

impl WMatrix {
    fn new(m: ComplexMatrix) -> Result<Self> {
        let residual = math::hermiticity_residual(&m);
        if residual > HERMITIAN_TOL {
            return Err(Error::NotHermitian(residual));
        }
        let tr = m.trace();
        if (tr - Complex64::new(1.0, 0.0)).norm() > TRACE_TOL {
            return Err(Error::Unsupported(format!("W has trace {tr}")));
        }
        let w = Self { m };
        let spectrum = w.eigenvalues()?;
        if spectrum.lo < -EIGEN_CLAMP_TOL {
            return Err(Error::NegativeEigenvalue(spectrum.lo));
        }
        Ok(w)
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.m
    }

    /// Spectrum of W, padded with a zero for single-operator channels.
    pub fn eigenvalues(&self) -> Result<SpectrumPair> {
        match self.m.dim() {
            1 => Ok(SpectrumPair::new(self.m.get(0, 0).re, 0.0)),
            2 => math::hermitian_eigenvalues_2x2(&self.m),
            n => Err(Error::Unsupported(format!(
                "W spectra are computed for at most two Kraus operators, got {n}"
            ))),
        }
    }

    pub fn entropy(&self) -> Result<f64> {
        self.eigenvalues()?.entropy_bits()
    }
}

pub fn w_matrix(ch: &KrausChannel, rho: &DensityMatrix) -> Result<WMatrix> {
    ch.ensure_complete()?;
    let ops = ch.ops();
    let n = ops.len();
    let left: Vec<ComplexMatrix> = ops
        .iter()
        .map(|a| a.matmul(rho.matrix()))
        .collect::<Result<_>>()?;
    let mut entries = Vec::with_capacity(n * n);
    for a_rho in &left {
        for a_j in ops {
            entries.push(a_rho.matmul(&a_j.adjoint())?.trace());
        }
    }
    WMatrix::new(ComplexMatrix::new(n, entries)?)
}

/// Entropy of the W spectrum in bits. This is the quantum noise N.
pub fn entropy_exchange(ch: &KrausChannel, rho: &DensityMatrix) -> Result<f64> {
    w_matrix(ch, rho)?.entropy()
}

/// `H(N(ρ)) - N`.
pub fn coherent_information(ch: &KrausChannel, rho: &DensityMatrix) -> Result<f64> {
    let out = ch.apply(rho)?;
    Ok(out.entropy() - entropy_exchange(ch, rho)?)
}

/// `Σ_μ (Tr ρA_μ)(Tr ρA_μ†)`, which for Hermitian ρ is `Σ_μ |Tr ρA_μ|²`.
pub fn entangled_fidelity(ch: &KrausChannel, rho: &DensityMatrix) -> Result<f64> {
    ch.ensure_complete()?;
    let mut f = 0.0;
    for op in ch.ops() {
        f += rho.matrix().matmul(op)?.trace().norm_sqr();
    }
    Ok(f)
}

/// `H(ρ) + H(N(ρ)) - N`.
pub fn mutual_information(ch: &KrausChannel, rho: &DensityMatrix) -> Result<f64> {
    let out = ch.apply(rho)?;
    Ok(rho.entropy() + out.entropy() - entropy_exchange(ch, rho)?)
}

/// Entropy of the environment after the dilated interaction.
///
/// Each eigenvector `ψ` of ρ is mapped through `V|ψ⟩ = Σ_i A_i|ψ⟩ ⊗ |i⟩`,
/// the system is traced out, and the environment states are mixed with the
/// eigenvalue weights.
pub fn environment_entropy_oracle(ch: &KrausChannel, rho: &DensityMatrix) -> Result<f64> {
    ch.ensure_complete()?;
    let ops = ch.ops();
    let env = ops.len();
    if env > 2 {
        return Err(Error::Unsupported(format!(
            "dilation oracle handles at most two Kraus operators, got {env}"
        )));
    }

    let r = rho.matrix();
    let (p, q, s) = (r.get(0, 0).re, r.get(0, 1), r.get(1, 1).re);

    let mut env_state = vec![Complex64::new(0.0, 0.0); env * env];
    for (weight, psi) in qubit_eigenpairs(p, q, s) {
        if weight <= 0.0 {
            continue;
        }
        // joint amplitude, system index major: joint[sys * env + e]
        let mut joint = vec![Complex64::new(0.0, 0.0); 2 * env];
        for (e, op) in ops.iter().enumerate() {
            for sys in 0..2 {
                joint[sys * env + e] = op.get(sys, 0) * psi[0] + op.get(sys, 1) * psi[1];
            }
        }
        for e in 0..env {
            for f in 0..env {
                let mut acc = Complex64::new(0.0, 0.0);
                for sys in 0..2 {
                    acc += joint[sys * env + e] * joint[sys * env + f].conj();
                }
                env_state[e * env + f] += acc * weight;
            }
        }
    }

    let spectrum: Vec<f64> = match env {
        1 => vec![env_state[0].re],
        _ => {
            let (hi, lo) = hermitian_pair_by_radius(env_state[0].re, env_state[1], env_state[3].re);
            vec![hi, lo]
        }
    };
    let mut h = 0.0;
    for lam in spectrum {
        if lam < -EIGEN_CLAMP_TOL {
            return Err(Error::NegativeEigenvalue(lam));
        }
        if lam > 0.0 {
            h -= lam * lam.ln();
        }
    }
    Ok(h / std::f64::consts::LN_2)
}

/// Eigenvalues of `[[p, q], [q*, s]]` as `mean ± sqrt(half_gap² + |q|²)`.
fn hermitian_pair_by_radius(p: f64, q: Complex64, s: f64) -> (f64, f64) {
    let mean = 0.5 * (p + s);
    let radius = (0.5 * (p - s)).hypot(q.norm());
    (mean + radius, mean - radius)
}

/// Eigenpairs of `[[p, q], [q*, s]]` with unit eigenvectors.
fn qubit_eigenpairs(p: f64, q: Complex64, s: f64) -> [(f64, [Complex64; 2]); 2] {
    let (hi, lo) = hermitian_pair_by_radius(p, q, s);
    let one = Complex64::new(1.0, 0.0);
    let zero = Complex64::new(0.0, 0.0);
    if q.norm() == 0.0 {
        // already diagonal
        return if p >= s {
            [(p, [one, zero]), (s, [zero, one])]
        } else {
            [(s, [zero, one]), (p, [one, zero])]
        };
    }
    let vector_for = |lam: f64| {
        // (M - λ)v = 0 gives v ∝ (q, λ - p) and v ∝ (λ - s, q*); take the better conditioned one
        let u = [q, Complex64::new(lam - p, 0.0)];
        let w = [Complex64::new(lam - s, 0.0), q.conj()];
        let nu = (u[0].norm_sqr() + u[1].norm_sqr()).sqrt();
        let nw = (w[0].norm_sqr() + w[1].norm_sqr()).sqrt();
        if nu >= nw {
            [u[0] / nu, u[1] / nu]
        } else {
            [w[0] / nw, w[1] / nw]
        }
    };
    [(hi, vector_for(hi)), (lo, vector_for(lo))]
}

/// Every measure at one operating point.
#[derive(Debug, Clone, PartialEq)]
pub struct ChannelReport {
    /// Retention rate, when the channel carries construction metadata.
    pub x: Option<f64>,
    pub bloch_in: BlochVector,
    pub bloch_out: BlochVector,
    pub h_in: f64,
    pub h_out: f64,
    pub noise_n: f64,
    pub coherent_c: f64,
    pub fidelity_numeric: f64,
    /// The printed closed-form fidelity; absent for channels without metadata.
    pub fidelity_paper: Option<f64>,
    pub lambda: SpectrumPair,
    pub theta: SpectrumPair,
    pub mutual_info: f64,
}

pub fn full_report(ch: &KrausChannel, rho: &DensityMatrix) -> Result<ChannelReport> {
    let out = ch.apply(rho)?;
    let w = w_matrix(ch, rho)?;
    let lambda = w.eigenvalues()?;
    let noise_n = lambda.entropy_bits()?;
    let theta = out.eigenvalues();
    let h_in = rho.entropy();
    let h_out = theta.entropy_bits()?;
    let bloch_in = density_to_bloch(rho)?;
    let bloch_out = density_to_bloch(&out)?;
    let fidelity_paper = match ch.meta() {
        Some(meta) => Some(closedform::fidelity_paper_closed(
            meta.axis, meta.x, &bloch_in,
        )?),
        None => None,
    };
    Ok(ChannelReport {
        x: ch.meta().map(|m| m.x),
        bloch_in,
        bloch_out,
        h_in,
        h_out,
        noise_n,
        coherent_c: h_out - noise_n,
        fidelity_numeric: entangled_fidelity(ch, rho)?,
        fidelity_paper,
        lambda,
        theta,
        mutual_info: h_in + h_out - noise_n,
    })
}
