//! Cross-validation of the closed forms against the numeric Kraus path.
//!
//! For every axis the x-grid is crossed with a batch of seeded random Bloch
//! vectors. At each point the closed-form output vector, λ, θ, N and C are
//! compared with their numeric counterparts, the W-spectrum entropy with the
//! dilation oracle, and the numeric fidelity with `x + (1-x) a_k²`. The σ₂
//! fidelity gap against the printed closed form is measured and compared
//! with its predicted size `2(1-x) a₂²`. Points with positive coherent
//! information are counted, both for the random batch and for the three
//! reference inputs.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bloch::{bloch_to_density, density_to_bloch, BlochVector};
use crate::channels::{KrausChannel, PauliAxis};
use crate::closedform;
use crate::error::{Error, Result};
use crate::format::format_sig;
use crate::math;
use crate::measures;
use crate::par::Execution;
use crate::sweep::{figure_inputs, retention_grid};

/// Every cross-path residual must be at or below this.
pub const VERIFY_TOL: f64 = 1e-10;

/// Coherent information above this counts as positive.
pub const C_POSITIVE_TOL: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyConfig {
    pub grid_steps: usize,
    pub samples: usize,
    pub seed: u64,
}

impl VerifyConfig {
    pub fn new(grid_steps: usize, samples: usize, seed: u64) -> Result<Self> {
        if grid_steps < 2 {
            return Err(Error::InvalidArgument("grid must be ≥ 2".into()));
        }
        if samples < 1 {
            return Err(Error::InvalidArgument("samples must be ≥ 1".into()));
        }
        Ok(Self {
            grid_steps,
            samples,
            seed,
        })
    }
}

/// Uniform components in `[-1, 1]`, redrawn until `|a| <= 1`.
pub fn sample_bloch_vectors(count: usize, seed: u64) -> Vec<BlochVector> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let a = [
            rng.random_range(-1.0..=1.0),
            rng.random_range(-1.0..=1.0),
            rng.random_range(-1.0..=1.0),
        ];
        if a.iter().map(|v: &f64| v * v).sum::<f64>() <= 1.0 {
            out.push(BlochVector::from_array(a).expect("inside the unit ball"));
        }
    }
    out
}

/// Residuals at one (axis, x, a) point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PointCheck {
    pub x: f64,
    pub a: BlochVector,
    pub bloch_out: f64,
    pub lambda: f64,
    pub theta: f64,
    pub noise: f64,
    pub coherent: f64,
    pub oracle: f64,
    pub fidelity_identity: f64,
    /// `|F_numeric - F_paper - gap|` where gap is `2(1-x)a₂²` on σ₂ and 0 otherwise.
    pub fidelity_gap_identity: f64,
    pub completeness: f64,
    pub fidelity_gap: f64,
    pub predicted_gap: f64,
    pub coherent_c: f64,
}

pub fn check_point(axis: PauliAxis, x: f64, a: &BlochVector) -> Result<PointCheck> {
    let ch = KrausChannel::one_pauli(axis, x)?;
    let rho = bloch_to_density(a);
    let out = ch.apply(&rho)?;
    let w = measures::w_matrix(&ch, &rho)?;
    let lambda = w.eigenvalues()?;
    let theta = out.eigenvalues();
    let noise = lambda.entropy_bits()?;
    let coherent = measures::coherent_information(&ch, &rho)?;
    let oracle = measures::environment_entropy_oracle(&ch, &rho)?;
    let fidelity = measures::entangled_fidelity(&ch, &rho)?;

    let closed = closedform::closed_point(axis, x, a)?;
    let ak = a.component(axis.index());
    let predicted_gap = match axis {
        PauliAxis::Sigma2 => 2.0 * (1.0 - x) * ak * ak,
        _ => 0.0,
    };

    Ok(PointCheck {
        x,
        a: *a,
        bloch_out: closed.b.max_abs_diff(&density_to_bloch(&out)?),
        lambda: closed
            .lambda
            .max_abs_diff(&math::hermitian_eigenvalues_2x2(w.matrix())?),
        theta: closed.theta.max_abs_diff(&theta),
        noise: (closed.noise_n - noise).abs(),
        coherent: (closed.coherent_c - coherent).abs(),
        oracle: (oracle - noise).abs(),
        fidelity_identity: (fidelity - (x + (1.0 - x) * ak * ak)).abs(),
        fidelity_gap_identity: (fidelity - closed.fidelity_paper - predicted_gap).abs(),
        completeness: ch.completeness_residual(),
        fidelity_gap: (fidelity - closed.fidelity_paper).abs(),
        predicted_gap,
        coherent_c: coherent,
    })
}

/// Named residual maxima, in report order.
pub const RESIDUAL_NAMES: [&str; 9] = [
    "b",
    "lambda",
    "theta",
    "N",
    "C",
    "oracle-vs-W entropy",
    "fidelity identity",
    "fidelity gap identity",
    "completeness",
];

#[derive(Debug, Clone, PartialEq)]
pub struct AxisSummary {
    pub axis: PauliAxis,
    pub points: usize,
    /// Maxima in the order of [`RESIDUAL_NAMES`].
    pub residuals: [f64; 9],
    /// Largest `|F_numeric - F_paper|` and the predicted gap at that point.
    pub max_gap: f64,
    pub predicted_at_max_gap: f64,
    pub c_positive: usize,
}

impl AxisSummary {
    fn from_checks(axis: PauliAxis, checks: &[PointCheck]) -> Self {
        let mut residuals = [0.0_f64; 9];
        let mut max_gap = 0.0;
        let mut predicted_at_max_gap = 0.0;
        let mut c_positive = 0;
        for p in checks {
            let r = [
                p.bloch_out,
                p.lambda,
                p.theta,
                p.noise,
                p.coherent,
                p.oracle,
                p.fidelity_identity,
                p.fidelity_gap_identity,
                p.completeness,
            ];
            for (acc, v) in residuals.iter_mut().zip(r) {
                *acc = acc.max(v);
            }
            if p.fidelity_gap > max_gap {
                max_gap = p.fidelity_gap;
                predicted_at_max_gap = p.predicted_gap;
            }
            if p.coherent_c > C_POSITIVE_TOL {
                c_positive += 1;
            }
        }
        Self {
            axis,
            points: checks.len(),
            residuals,
            max_gap,
            predicted_at_max_gap,
            c_positive,
        }
    }

    pub fn worst_residual(&self) -> f64 {
        self.residuals.iter().copied().fold(0.0, f64::max)
    }
}

/// Sign of C along the grid for one reference input.
#[derive(Debug, Clone, PartialEq)]
pub struct FigureSummary {
    pub axis: PauliAxis,
    pub bloch: BlochVector,
    pub points: usize,
    pub c_positive: usize,
    pub endpoints_positive: bool,
    pub max_c: f64,
    pub min_c: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct VerifyReport {
    pub config: VerifyConfig,
    pub axes: Vec<AxisSummary>,
    pub figure: Vec<FigureSummary>,
}

impl VerifyReport {
    pub fn passes(&self) -> bool {
        self.axes.iter().all(|a| a.worst_residual() <= VERIFY_TOL)
    }
}

pub fn run_verify(config: &VerifyConfig, exec: Execution) -> Result<VerifyReport> {
    let grid = retention_grid(config.grid_steps);
    let samples = sample_bloch_vectors(config.samples, config.seed);

    let mut axes = Vec::with_capacity(3);
    for axis in PauliAxis::ALL {
        let work: Vec<(f64, BlochVector)> = samples
            .iter()
            .flat_map(|a| grid.iter().map(move |&x| (x, *a)))
            .collect();
        let checks = exec
            .map(&work, |(x, a)| check_point(axis, *x, a))
            .into_iter()
            .collect::<Result<Vec<_>>>()?;
        axes.push(AxisSummary::from_checks(axis, &checks));
    }

    let mut figure = Vec::with_capacity(3);
    for (axis, bloch) in figure_inputs() {
        let rho = bloch_to_density(&bloch);
        let cs = exec
            .map(&grid, |&x| {
                let ch = KrausChannel::one_pauli(axis, x)?;
                measures::coherent_information(&ch, &rho)
            })
            .into_iter()
            .collect::<Result<Vec<_>>>()?;
        let positive = |c: f64| c > C_POSITIVE_TOL;
        figure.push(FigureSummary {
            axis,
            bloch,
            points: cs.len(),
            c_positive: cs.iter().filter(|&&c| positive(c)).count(),
            endpoints_positive: positive(cs[0]) && positive(cs[cs.len() - 1]),
            max_c: cs.iter().copied().fold(f64::NEG_INFINITY, f64::max),
            min_c: cs.iter().copied().fold(f64::INFINITY, f64::min),
        });
    }

    Ok(VerifyReport {
        config: *config,
        axes,
        figure,
    })
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = &self.config;
        let g = |v: f64| format_sig(v, 6);
        writeln!(
            f,
            "verify: grid {} x {} samples (seed {}), tolerance {}",
            c.grid_steps,
            c.samples,
            c.seed,
            g(VERIFY_TOL)
        )?;
        for axis in &self.axes {
            let tag = axis.axis.token();
            writeln!(f, "[{tag}] points = {}", axis.points)?;
            for (name, v) in RESIDUAL_NAMES.iter().zip(axis.residuals) {
                let mark = if v <= VERIFY_TOL { "ok" } else { "FAIL" };
                writeln!(f, "[{tag}] max residual {name} = {} {mark}", g(v))?;
            }
            writeln!(
                f,
                "[{tag}] max fidelity gap |F_numeric - F_paper| = {} (predicted 2(1-x)a2^2 = {})",
                g(axis.max_gap),
                g(axis.predicted_at_max_gap)
            )?;
            writeln!(
                f,
                "[{tag}] C>0 points = {} / {}",
                axis.c_positive, axis.points
            )?;
        }
        for fig in &self.figure {
            writeln!(
                f,
                "[{} figure input {}] C>0 points = {} / {} (both endpoints positive: {}), C range [{}, {}]",
                fig.axis.token(),
                fig.bloch,
                fig.c_positive,
                fig.points,
                if fig.endpoints_positive { "yes" } else { "no" },
                g(fig.min_c),
                g(fig.max_c)
            )?;
        }
        if self.axes.iter().any(|a| a.max_gap > VERIFY_TOL) {
            writeln!(
                f,
                "note: the printed sigma2 fidelity -a2^2(1-x) + x differs from the Kraus-trace fidelity x + (1-x)a2^2 by 2(1-x)a2^2"
            )?;
        }
        if self.figure.iter().any(|fig| fig.c_positive > 0) {
            writeln!(
                f,
                "note: coherent information is positive at some grid points, so it is not non-positive for every amount of noise"
            )?;
        }
        writeln!(f, "result: {}", if self.passes() { "PASS" } else { "FAIL" })
    }
}
