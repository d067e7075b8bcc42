//! One-Pauli qubit noise channels.
//!
//! A one-Pauli channel keeps a qubit untouched with probability `x` (the
//! retention rate) and applies a single Pauli operator otherwise. This crate
//! builds those channels as Kraus sets and evaluates their information
//! measures two ways: through a generic numeric path (W matrix, von Neumann
//! entropies, Kraus sums, plus an environment-dilation oracle) and through
//! per-channel closed forms. The two paths are compared by [`verify`].
//!
//! Module map:
//!
//! - [`math`]: small complex matrices and the 2x2 Hermitian eigen-solver
//! - [`bloch`]: Bloch vectors and qubit density matrices
//! - [`channels`]: Kraus channels and their action on states
//! - [`measures`]: entropy exchange, coherent information, fidelity
//! - [`closedform`]: analytic per-axis expressions
//! - [`sweep`]: x-grid sweeps and their CSV form
//! - [`verify`]: cross-validation of the closed forms against the numeric path
//! - [`cli`]: the `onepauli` command line

pub mod bloch;
pub mod channels;
pub mod cli;
pub mod closedform;
mod error;
pub mod format;
pub mod math;
pub mod measures;
pub mod par;
pub mod sweep;
pub mod verify;

pub use bloch::{BlochVector, DensityMatrix};
pub use channels::{ChannelMeta, KrausChannel, PauliAxis};
pub use closedform::ClosedFormPoint;
pub use error::{Error, Result};
pub use math::{ComplexMatrix, ComplexScalar, SpectrumPair};
pub use measures::{ChannelReport, WMatrix};
pub use par::Execution;
pub use sweep::{SweepSpec, SweepTable};
