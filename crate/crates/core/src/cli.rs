//! The `onepauli` command line: `analyze`, `sweep` and `verify`.

use std::ffi::OsString;
use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use crate::bloch::{bloch_to_density, BlochVector};
use crate::channels::{check_retention, KrausChannel, PauliAxis};
use crate::error::{Error, Result};
use crate::format::format_sig;
use crate::measures::{full_report, ChannelReport};
use crate::par::Execution;
use crate::sweep::{run_sweep, SweepSpec, DEFAULT_PRECISION, DEFAULT_STEPS};
use crate::verify::{run_verify, VerifyConfig};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VALIDATION: i32 = 1;
pub const EXIT_VERIFY_FAILED: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "onepauli", version, about = "One-Pauli qubit channel analysis")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print every measure at one retention rate.
    Analyze(AnalyzeArgs),
    /// Sweep x over [0, 1] and write the curves as CSV.
    Sweep(SweepArgs),
    /// Compare the closed forms with the numeric path on a grid of random inputs.
    Verify(VerifyArgs),
}

#[derive(Debug, Args)]
pub struct ChannelArgs {
    /// sigma1 | sigma2 | sigma3
    #[arg(long, value_parser = parse_axis)]
    pub channel: PauliAxis,

    /// Input Bloch vector "a1,a2,a3"
    #[arg(long, allow_hyphen_values = true, value_parser = parse_bloch)]
    pub bloch: BlochVector,

    /// Significant digits in the output
    #[arg(long, default_value_t = DEFAULT_PRECISION, value_parser = parse_precision)]
    pub precision: usize,
}

#[derive(Debug, Args)]
pub struct AnalyzeArgs {
    #[command(flatten)]
    pub channel: ChannelArgs,

    /// Retention rate in [0, 1]
    #[arg(long, allow_hyphen_values = true, value_parser = parse_retention)]
    pub x: f64,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    #[command(flatten)]
    pub channel: ChannelArgs,

    /// Number of grid points, endpoints included
    #[arg(long, default_value_t = DEFAULT_STEPS, value_parser = parse_steps)]
    pub steps: usize,

    /// Output CSV path
    #[arg(long)]
    pub out: PathBuf,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Number of x grid points
    #[arg(long, default_value_t = 101)]
    pub grid: usize,

    /// Number of random Bloch vectors
    #[arg(long, default_value_t = 100)]
    pub samples: usize,

    #[arg(long, default_value_t = 1)]
    pub seed: u64,
}

fn parse_axis(s: &str) -> std::result::Result<PauliAxis, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_bloch(s: &str) -> std::result::Result<BlochVector, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_retention(s: &str) -> std::result::Result<f64, String> {
    let x: f64 = s
        .parse()
        .map_err(|_| format!("'{s}' is not a decimal number"))?;
    check_retention(x).map_err(|e| e.to_string())?;
    Ok(x)
}

fn parse_steps(s: &str) -> std::result::Result<usize, String> {
    match s.parse::<usize>() {
        Ok(n) if n >= 2 => Ok(n),
        _ => Err("steps must be an integer ≥ 2".into()),
    }
}

fn parse_precision(s: &str) -> std::result::Result<usize, String> {
    match s.parse::<usize>() {
        Ok(n) if (1..=17).contains(&n) => Ok(n),
        _ => Err("precision must be an integer in 1..=17".into()),
    }
}

/// Parses `args` (program name first) and runs the chosen command.
/// Returns the process exit status.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp
                | ErrorKind::DisplayVersion
                | ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand => {
                    let _ = write!(stdout, "{text}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(stderr, "{text}");
                    EXIT_VALIDATION
                }
            };
        }
    };

    let outcome = match cli.command {
        Command::Analyze(args) => cmd_analyze(&args, stdout).map(|_| EXIT_OK),
        Command::Sweep(args) => cmd_sweep(&args, stdout).map(|_| EXIT_OK),
        Command::Verify(args) => cmd_verify(&args, stdout),
    };
    match outcome {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            EXIT_VALIDATION
        }
    }
}

/// `name = value` lines for every report field.
pub fn format_report(axis: PauliAxis, report: &ChannelReport, precision: usize) -> String {
    let g = |v: f64| format_sig(v, precision);
    let vec3 = |b: &BlochVector| {
        let [a, b, c] = b.to_array();
        format!("{},{},{}", g(a), g(b), g(c))
    };
    let opt = |v: Option<f64>| v.map(g).unwrap_or_else(|| "absent".into());
    let fields = [
        ("channel", axis.token().to_string()),
        ("x", opt(report.x)),
        ("bloch_in", vec3(&report.bloch_in)),
        ("bloch_out", vec3(&report.bloch_out)),
        ("h_in", g(report.h_in)),
        ("h_out", g(report.h_out)),
        ("noise_n", g(report.noise_n)),
        ("coherent_c", g(report.coherent_c)),
        ("mutual_info", g(report.mutual_info)),
        ("fidelity_numeric", g(report.fidelity_numeric)),
        ("fidelity_paper", opt(report.fidelity_paper)),
        ("lambda_hi", g(report.lambda.hi)),
        ("lambda_lo", g(report.lambda.lo)),
        ("theta_hi", g(report.theta.hi)),
        ("theta_lo", g(report.theta.lo)),
    ];
    fields
        .iter()
        .map(|(name, value)| format!("{name} = {value}\n"))
        .collect()
}

pub fn cmd_analyze(args: &AnalyzeArgs, out: &mut dyn Write) -> Result<ChannelReport> {
    let c = &args.channel;
    let ch = KrausChannel::one_pauli(c.channel, args.x)?;
    let report = full_report(&ch, &bloch_to_density(&c.bloch))?;
    out.write_all(format_report(c.channel, &report, c.precision).as_bytes())?;
    Ok(report)
}

pub fn cmd_sweep(args: &SweepArgs, out: &mut dyn Write) -> Result<()> {
    let c = &args.channel;
    let spec = SweepSpec::new(c.channel, c.bloch, args.steps)?.with_precision(c.precision)?;
    let table = run_sweep(&spec, Execution::default())?;
    let file = File::create(&args.out).map_err(|e| {
        Error::InvalidArgument(format!("--out: cannot write '{}': {e}", args.out.display()))
    })?;
    let mut writer = BufWriter::new(file);
    table.write_csv(&mut writer)?;
    writer.flush()?;
    writeln!(
        out,
        "wrote {} rows for {} with a = {} to {}",
        table.rows.len(),
        c.channel,
        c.bloch,
        args.out.display()
    )?;
    Ok(())
}

pub fn cmd_verify(args: &VerifyArgs, out: &mut dyn Write) -> Result<i32> {
    let config = VerifyConfig::new(args.grid, args.samples, args.seed)?;
    let report = run_verify(&config, Execution::default())?;
    write!(out, "{report}")?;
    Ok(if report.passes() {
        EXIT_OK
    } else {
        EXIT_VERIFY_FAILED
    })
}
