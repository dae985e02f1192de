//! `unruh-coding` command-line interface.
//!
//! Exit codes: 0 success, 1 runtime or tolerance failure, 2 usage or
//! validation error.

use std::f64::consts::FRAC_PI_4;
use std::io::{self, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::coding::InfoReport;
use crate::sweep::{
    emit_csv, format_significant, run_sweep, ConfigLoadError, SweepConfig, ORACLE_TOL,
};
use crate::unruh::{
    channel_closed_form, oracle_discrepancy, rindler_angle_from_accel, AccelerationSpec,
    RegionPair, RindlerAngle,
};
use crate::xstate::{XCoefficients, XStateParams};
use crate::Error;

pub const DEFAULT_ORACLE_GRID: usize = 9;
pub const DEFAULT_ORACLE_SEED: u64 = 0x5eed;
pub const DEFAULT_ORACLE_RANDOM_STATES: usize = 20;

#[derive(Debug, Parser)]
#[command(
    name = "unruh-coding",
    version,
    about = "Dense-coding capacity of X-state channels between accelerated observers"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate capacity, decoded information and negativity at one point.
    Capacity(CapacityArgs),
    /// Run a sweep described by a JSON config and write CSV.
    Sweep(SweepArgs),
    /// Compare the closed-form region channels against the dilation oracle.
    OracleCheck(OracleCheckArgs),
}

#[derive(Debug, Args)]
pub struct CapacityArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub cx: f64,
    #[arg(long, allow_hyphen_values = true)]
    pub cy: f64,
    #[arg(long, allow_hyphen_values = true)]
    pub cz: f64,
    /// Alice's Rindler angle in radians, in [0, pi/4].
    #[arg(
        long,
        allow_hyphen_values = true,
        required_unless_present = "accel_ratio_a"
    )]
    pub ra: Option<f64>,
    /// Bob's Rindler angle in radians, in [0, pi/4].
    #[arg(
        long,
        allow_hyphen_values = true,
        required_unless_present = "accel_ratio_b"
    )]
    pub rb: Option<f64>,
    /// Alice's omega*c/a; converted with tan r = exp(-pi x).
    #[arg(long, allow_hyphen_values = true, conflicts_with = "ra")]
    pub accel_ratio_a: Option<f64>,
    /// Bob's omega*c/a; converted with tan r = exp(-pi x).
    #[arg(long, allow_hyphen_values = true, conflicts_with = "rb")]
    pub accel_ratio_b: Option<f64>,
    /// One of I-I, II-II, I-II, II-I.
    #[arg(long)]
    pub region: RegionPair,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    #[arg(long)]
    pub config: PathBuf,
    #[arg(long)]
    pub output: PathBuf,
}

#[derive(Debug, Args)]
pub struct OracleCheckArgs {
    /// Points per acceleration axis (endpoints included).
    #[arg(long, default_value_t = DEFAULT_ORACLE_GRID)]
    pub grid: usize,
    #[arg(long, default_value_t = DEFAULT_ORACLE_SEED)]
    pub seed: u64,
    /// Number of random valid correlation triples added to MES and PES.
    #[arg(long, default_value_t = DEFAULT_ORACLE_RANDOM_STATES)]
    pub random: usize,
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Runtime(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            Self::Usage(_) => 2,
            Self::Runtime(_) => 1,
        }
    }
}

fn usage(flag: &str, err: impl std::fmt::Display) -> CliError {
    CliError::Usage(format!("invalid {flag}: {err}"))
}

pub fn run(cli: Cli, out: &mut dyn Write) -> Result<(), CliError> {
    match cli.command {
        Command::Capacity(args) => cmd_capacity(&args, out),
        Command::Sweep(args) => cmd_sweep(&args, out),
        Command::OracleCheck(args) => cmd_oracle_check(&args, out),
    }
}

fn io_err(e: io::Error) -> CliError {
    CliError::Runtime(format!("cannot write output: {e}"))
}

fn resolve_angle(
    flag: &str,
    ratio_flag: &str,
    r: Option<f64>,
    ratio: Option<f64>,
) -> Result<RindlerAngle, CliError> {
    match (r, ratio) {
        (Some(r), None) => RindlerAngle::new(r).map_err(|e| usage(flag, e)),
        (None, Some(x)) => AccelerationSpec::new(x)
            .map(rindler_angle_from_accel)
            .map_err(|e| usage(ratio_flag, e)),
        _ => Err(CliError::Usage(format!(
            "exactly one of {flag} and {ratio_flag} is required"
        ))),
    }
}

fn parse_params(cx: f64, cy: f64, cz: f64) -> Result<XStateParams, CliError> {
    XStateParams::new(cx, cy, cz).map_err(|e| match e {
        Error::CorrelationOutOfRange { name, .. } => {
            let flag = match name {
                "c_x" => "--cx",
                "c_y" => "--cy",
                _ => "--cz",
            };
            usage(
                flag,
                format!("{e} (each of c_x, c_y, c_z must lie in [-1, 1])"),
            )
        }
        other => usage("--cx/--cy/--cz", other),
    })
}

pub fn cmd_capacity(args: &CapacityArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let params = parse_params(args.cx, args.cy, args.cz)?;
    let ra = resolve_angle("--ra", "--accel-ratio-a", args.ra, args.accel_ratio_a)?;
    let rb = resolve_angle("--rb", "--accel-ratio-b", args.rb, args.accel_ratio_b)?;

    let coeffs = XCoefficients::from_params(&params);
    let channel = channel_closed_form(&coeffs, ra, rb, args.region);
    let report = InfoReport::for_channel(&channel);
    writeln!(
        out,
        "region={} capacity_bits={} decoded_bits={} negativity={}",
        args.region,
        format_significant(report.capacity_bits, 10),
        format_significant(report.decoded_bits, 10),
        format_significant(report.negativity, 10),
    )
    .map_err(io_err)
}

pub fn cmd_sweep(args: &SweepArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let cfg = SweepConfig::load(&args.config).map_err(|e| match e {
        ConfigLoadError::Io(_) => usage("--config", format!("{}: {e}", args.config.display())),
        ConfigLoadError::Invalid(_) => usage("--config", e),
    })?;
    let records = run_sweep(&cfg).map_err(|e| CliError::Runtime(e.to_string()))?;

    // write beside the destination, then rename, so failures leave nothing
    let dir = match args.output.parent() {
        Some(p) if !p.as_os_str().is_empty() => p.to_path_buf(),
        _ => PathBuf::from("."),
    };
    let write_failed = |e: &dyn std::fmt::Display| {
        CliError::Runtime(format!("cannot write {}: {e}", args.output.display()))
    };
    let mut tmp = tempfile::NamedTempFile::new_in(&dir).map_err(|e| write_failed(&e))?;
    emit_csv(&records, io::BufWriter::new(tmp.as_file_mut())).map_err(|e| write_failed(&e))?;
    tmp.persist(&args.output).map_err(|e| write_failed(&e))?;

    writeln!(
        out,
        "wrote {} records to {}",
        records.len(),
        args.output.display()
    )
    .map_err(io_err)
}

/// MES, PES, then `n_random` seeded random physical triples.
pub fn oracle_states(seed: u64, n_random: usize) -> Vec<XStateParams> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut states = vec![XStateParams::MES, XStateParams::PES];
    states.extend((0..n_random).map(|_| XStateParams::random(&mut rng)));
    states
}

/// `n` evenly spaced angles on `[0, pi/4]`, endpoints exact.
pub fn angle_grid(n: usize) -> Vec<RindlerAngle> {
    (0..n)
        .map(|i| {
            let r = if i + 1 == n {
                FRAC_PI_4
            } else {
                FRAC_PI_4 * i as f64 / (n - 1) as f64
            };
            RindlerAngle::new(r).expect("on [0, pi/4]")
        })
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Offender {
    pub params: XStateParams,
    pub ra: f64,
    pub rb: f64,
    pub region: RegionPair,
    pub coefficient: &'static str,
    pub discrepancy: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct OracleReport {
    pub grid: usize,
    pub states: usize,
    /// Max |closed form - oracle| per region pair with a closed form.
    pub per_region: Vec<(RegionPair, f64)>,
    pub worst: Option<Offender>,
}

impl OracleReport {
    pub fn max_discrepancy(&self) -> f64 {
        self.worst.map_or(0.0, |w| w.discrepancy)
    }

    pub fn passed(&self) -> bool {
        self.max_discrepancy() <= ORACLE_TOL
    }
}

pub fn oracle_check(grid: usize, seed: u64, n_random: usize) -> OracleReport {
    let states = oracle_states(seed, n_random);
    let angles = angle_grid(grid);
    let mut per_region = Vec::new();
    let mut worst: Option<Offender> = None;

    for region in RegionPair::CLOSED_FORM {
        let mut region_max = 0.0_f64;
        for params in &states {
            let coeffs = XCoefficients::from_params(params);
            for &ra in &angles {
                for &rb in &angles {
                    let (d, coefficient) = oracle_discrepancy(&coeffs, ra, rb, region);
                    region_max = region_max.max(d);
                    if worst.is_none_or(|w| d > w.discrepancy) {
                        worst = Some(Offender {
                            params: *params,
                            ra: ra.radians(),
                            rb: rb.radians(),
                            region,
                            coefficient,
                            discrepancy: d,
                        });
                    }
                }
            }
        }
        per_region.push((region, region_max));
    }

    OracleReport {
        grid,
        states: states.len(),
        per_region,
        worst,
    }
}

pub fn cmd_oracle_check(args: &OracleCheckArgs, out: &mut dyn Write) -> Result<(), CliError> {
    if args.grid < 2 {
        return Err(usage(
            "--grid",
            format!("{} is below the minimum of 2", args.grid),
        ));
    }
    let report = oracle_check(args.grid, args.seed, args.random);
    writeln!(
        out,
        "grid={g}x{g} states={} seed={} tolerance={:e}",
        report.states,
        args.seed,
        ORACLE_TOL,
        g = report.grid
    )
    .map_err(io_err)?;
    for (region, d) in &report.per_region {
        writeln!(out, "{region} max_abs_discrepancy={d:e}").map_err(io_err)?;
    }
    if report.passed() {
        writeln!(out, "PASS").map_err(io_err)
    } else {
        let w = report.worst.expect("failure has an offender");
        let [cx, cy, cz] = w.params.as_array();
        let msg = format!(
            "FAIL worst: c=({cx}, {cy}, {cz}) r_a={} r_b={} region={} coefficient={} discrepancy={:e}",
            w.ra, w.rb, w.region, w.coefficient, w.discrepancy
        );
        writeln!(out, "{msg}").map_err(io_err)?;
        Err(CliError::Runtime(msg))
    }
}
