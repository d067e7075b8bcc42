//! Sweeps over the retention rate and their CSV form.
//!
//! A sweep evaluates [`full_report`] on the grid `x_i = i / (steps - 1)`,
//! endpoints included. The CSV carries `x` next to every plotted series so
//! x–N, C–N and F–N curves can be drawn parametrically.

use std::io::{Read, Write};

use crate::bloch::{bloch_to_density, BlochVector};
use crate::channels::{KrausChannel, PauliAxis};
use crate::error::{Error, Result};
use crate::format::format_sig;
use crate::measures::{full_report, ChannelReport};
use crate::par::Execution;

pub const DEFAULT_STEPS: usize = 201;
pub const DEFAULT_PRECISION: usize = 12;

pub const CSV_HEADER: [&str; 11] = [
    "x",
    "N",
    "C",
    "F_numeric",
    "F_paper",
    "H_out",
    "lambda_hi",
    "theta_hi",
    "b1",
    "b2",
    "b3",
];

/// The three reference inputs: for each axis, 0.5 along the axis and 0.6
/// on both transverse components.
pub fn figure_inputs() -> [(PauliAxis, BlochVector); 3] {
    PauliAxis::ALL.map(|axis| {
        let mut a = [0.6; 3];
        a[axis.index()] = 0.5;
        (axis, BlochVector::from_array(a).expect("|a| < 1"))
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepSpec {
    pub axis: PauliAxis,
    pub bloch: BlochVector,
    pub steps: usize,
    pub precision: usize,
}

impl SweepSpec {
    pub fn new(axis: PauliAxis, bloch: BlochVector, steps: usize) -> Result<Self> {
        if steps < 2 {
            return Err(Error::InvalidArgument(format!(
                "steps must be ≥ 2, got {steps}"
            )));
        }
        Ok(Self {
            axis,
            bloch,
            steps,
            precision: DEFAULT_PRECISION,
        })
    }

    pub fn with_precision(mut self, precision: usize) -> Result<Self> {
        if precision == 0 {
            return Err(Error::InvalidArgument("precision must be ≥ 1".into()));
        }
        self.precision = precision;
        Ok(self)
    }

    pub fn grid(&self) -> Vec<f64> {
        retention_grid(self.steps)
    }
}

/// `i / (steps - 1)` for `i = 0..steps`.
pub fn retention_grid(steps: usize) -> Vec<f64> {
    let last = (steps.max(2) - 1) as f64;
    (0..steps).map(|i| i as f64 / last).collect()
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepTable {
    pub spec: SweepSpec,
    pub rows: Vec<ChannelReport>,
}

impl SweepTable {
    /// Writes the header and one row per grid point, `\n` terminated.
    pub fn write_csv<W: Write>(&self, out: W) -> Result<()> {
        let mut w = csv::WriterBuilder::new()
            .terminator(csv::Terminator::Any(b'\n'))
            .quote_style(csv::QuoteStyle::Never)
            .from_writer(out);
        w.write_record(CSV_HEADER)?;
        let p = self.spec.precision;
        for row in &self.rows {
            let b = row.bloch_out.to_array();
            let values = [
                row.x.unwrap_or(f64::NAN),
                row.noise_n,
                row.coherent_c,
                row.fidelity_numeric,
                row.fidelity_paper.unwrap_or(f64::NAN),
                row.h_out,
                row.lambda.hi,
                row.theta.hi,
                b[0],
                b[1],
                b[2],
            ];
            w.write_record(values.iter().map(|&v| format_sig(v, p)))?;
        }
        w.flush()?;
        Ok(())
    }
}

pub fn run_sweep(spec: &SweepSpec, exec: Execution) -> Result<SweepTable> {
    let rho = bloch_to_density(&spec.bloch);
    let rows = exec
        .map(&spec.grid(), |&x| {
            let ch = KrausChannel::one_pauli(spec.axis, x)?;
            full_report(&ch, &rho)
        })
        .into_iter()
        .collect::<Result<Vec<_>>>()?;
    Ok(SweepTable {
        spec: spec.clone(),
        rows,
    })
}

/// One parsed CSV row, columns in header order.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CsvRow {
    pub x: f64,
    pub noise_n: f64,
    pub coherent_c: f64,
    pub fidelity_numeric: f64,
    pub fidelity_paper: f64,
    pub h_out: f64,
    pub lambda_hi: f64,
    pub theta_hi: f64,
    pub b: [f64; 3],
}

impl CsvRow {
    pub fn values(&self) -> [f64; 11] {
        [
            self.x,
            self.noise_n,
            self.coherent_c,
            self.fidelity_numeric,
            self.fidelity_paper,
            self.h_out,
            self.lambda_hi,
            self.theta_hi,
            self.b[0],
            self.b[1],
            self.b[2],
        ]
    }
}

/// Reads a sweep CSV, checking the header.
pub fn read_csv<R: Read>(input: R) -> Result<Vec<CsvRow>> {
    let mut r = csv::ReaderBuilder::new()
        .has_headers(true)
        .terminator(csv::Terminator::Any(b'\n'))
        .from_reader(input);
    let header = r.headers()?.clone();
    if header.iter().ne(CSV_HEADER.iter().copied()) {
        return Err(Error::Parse(format!("unexpected CSV header: {header:?}")));
    }
    let mut rows = Vec::new();
    for record in r.records() {
        let record = record?;
        let mut v = [0.0; 11];
        for (slot, field) in v.iter_mut().zip(record.iter()) {
            *slot = field
                .parse()
                .map_err(|_| Error::Parse(format!("'{field}' is not a number")))?;
        }
        rows.push(CsvRow {
            x: v[0],
            noise_n: v[1],
            coherent_c: v[2],
            fidelity_numeric: v[3],
            fidelity_paper: v[4],
            h_out: v[5],
            lambda_hi: v[6],
            theta_hi: v[7],
            b: [v[8], v[9], v[10]],
        });
    }
    Ok(rows)
}
