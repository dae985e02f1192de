//! Acceleration sweeps and their CSV output.

use std::f64::consts::FRAC_PI_4;
use std::io::{self, Write};
use std::path::Path;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::coding::InfoReport;
use crate::unruh::{channel_closed_form, oracle_discrepancy, RegionPair, RindlerAngle};
use crate::xstate::{XCoefficients, XStateParams};
use crate::{Error, Result};

pub const DEFAULT_STEPS: usize = 33;

/// Largest tolerated closed-form vs. oracle coefficient gap.
pub const ORACLE_TOL: f64 = 1e-12;

pub const CSV_HEADER: &str = "r_a,r_b,region,capacity_bits,decoded_bits,negativity";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SweepMode {
    /// `r_a = r_b = r`.
    Diagonal,
    /// Independent `r_a` and `r_b`, `r_a` outermost.
    Grid,
}

/// On-disk JSON shape of a sweep configuration.
#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct ConfigFile {
    c: [f64; 3],
    #[serde(default)]
    r_min: Option<f64>,
    #[serde(default)]
    r_max: Option<f64>,
    #[serde(default)]
    steps: Option<usize>,
    #[serde(default)]
    mode: Option<SweepMode>,
    #[serde(default)]
    regions: Option<Vec<String>>,
    #[serde(default)]
    oracle_check: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SweepConfig {
    pub params: XStateParams,
    pub r_min: RindlerAngle,
    pub r_max: RindlerAngle,
    pub steps: usize,
    pub mode: SweepMode,
    pub regions: Vec<RegionPair>,
    /// Compare every closed-form channel against the dilation oracle.
    pub oracle_check: bool,
}

impl SweepConfig {
    /// Diagonal sweep over `[0, pi/4]` for the three regions with closed forms.
    pub fn diagonal(params: XStateParams, steps: usize) -> Self {
        Self {
            params,
            r_min: RindlerAngle::ZERO,
            r_max: RindlerAngle::MAX,
            steps,
            mode: SweepMode::Diagonal,
            regions: RegionPair::CLOSED_FORM.to_vec(),
            oracle_check: false,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.steps < 2 {
            return Err(Error::InvalidConfig(format!(
                "steps must be at least 2, got {}",
                self.steps
            )));
        }
        if self.r_min >= self.r_max {
            return Err(Error::InvalidConfig(format!(
                "r_min ({}) must be below r_max ({})",
                self.r_min.radians(),
                self.r_max.radians()
            )));
        }
        if self.regions.is_empty() {
            return Err(Error::InvalidConfig("no regions listed".into()));
        }
        Ok(())
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let raw: ConfigFile =
            serde_json::from_str(text).map_err(|e| Error::InvalidConfig(e.to_string()))?;
        let [cx, cy, cz] = raw.c;
        let regions = match raw.regions {
            Some(tokens) => tokens
                .iter()
                .map(|t| t.parse())
                .collect::<Result<Vec<_>>>()?,
            None => RegionPair::CLOSED_FORM.to_vec(),
        };
        let cfg = Self {
            params: XStateParams::new(cx, cy, cz)?,
            r_min: RindlerAngle::new(raw.r_min.unwrap_or(0.0))?,
            r_max: RindlerAngle::new(raw.r_max.unwrap_or(FRAC_PI_4))?,
            steps: raw.steps.unwrap_or(DEFAULT_STEPS),
            mode: raw.mode.unwrap_or(SweepMode::Diagonal),
            regions,
            oracle_check: raw.oracle_check,
        };
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn load(path: &Path) -> std::result::Result<Self, ConfigLoadError> {
        let text = std::fs::read_to_string(path).map_err(ConfigLoadError::Io)?;
        Self::from_json(&text).map_err(ConfigLoadError::Invalid)
    }

    /// Inclusive, evenly spaced angles; the endpoints are exact.
    pub fn angles(&self) -> Vec<RindlerAngle> {
        let (lo, hi) = (self.r_min.radians(), self.r_max.radians());
        let last = self.steps - 1;
        (0..self.steps)
            .map(|i| {
                let r = if i == last {
                    hi
                } else {
                    lo + (hi - lo) * i as f64 / last as f64
                };
                RindlerAngle::new(r).expect("inside [r_min, r_max]")
            })
            .collect()
    }

    fn points(&self) -> Vec<(RindlerAngle, RindlerAngle)> {
        let angles = self.angles();
        match self.mode {
            SweepMode::Diagonal => angles.iter().map(|&r| (r, r)).collect(),
            SweepMode::Grid => angles
                .iter()
                .flat_map(|&ra| angles.iter().map(move |&rb| (ra, rb)))
                .collect(),
        }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum ConfigLoadError {
    #[error("cannot read config: {0}")]
    Io(#[source] io::Error),
    #[error(transparent)]
    Invalid(Error),
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SweepRecord {
    pub r_a: f64,
    pub r_b: f64,
    pub region: RegionPair,
    pub capacity_bits: f64,
    pub decoded_bits: f64,
    pub negativity: f64,
}

/// One record per (region, grid point), region-major in config order, then
/// by ascending `r_a`, then `r_b`.
pub fn run_sweep(cfg: &SweepConfig) -> Result<Vec<SweepRecord>> {
    cfg.validate()?;
    let coeffs = XCoefficients::from_params(&cfg.params);
    let points = cfg.points();
    let jobs: Vec<(RegionPair, RindlerAngle, RindlerAngle)> = cfg
        .regions
        .iter()
        .flat_map(|&region| points.iter().map(move |&(ra, rb)| (region, ra, rb)))
        .collect();

    jobs.par_iter()
        .map(|&(region, ra, rb)| {
            if cfg.oracle_check {
                let (discrepancy, coefficient) = oracle_discrepancy(&coeffs, ra, rb, region);
                if discrepancy > ORACLE_TOL {
                    return Err(Error::OracleMismatch {
                        region: region.token(),
                        ra: ra.radians(),
                        rb: rb.radians(),
                        coefficient,
                        discrepancy,
                    });
                }
            }
            let channel = channel_closed_form(&coeffs, ra, rb, region);
            let report = InfoReport::for_channel(&channel);
            Ok(SweepRecord {
                r_a: ra.radians(),
                r_b: rb.radians(),
                region,
                capacity_bits: report.capacity_bits,
                decoded_bits: report.decoded_bits,
                negativity: report.negativity,
            })
        })
        .collect()
}

/// Formats `value` with `digits` significant digits, keeping trailing zeros.
/// Magnitudes outside `[1e-5, 10^digits)` use exponent notation.
pub fn format_significant(value: f64, digits: usize) -> String {
    assert!(digits >= 1);
    if !value.is_finite() {
        return value.to_string();
    }
    if value == 0.0 {
        return format!("{:.*}", digits - 1, 0.0);
    }
    // round once in scientific form so the exponent reflects any carry
    let sci = format!("{:.*e}", digits - 1, value);
    let exp: i32 = sci[sci.find('e').expect("exponent") + 1..]
        .parse()
        .expect("integer exponent");
    if exp < -5 || exp >= digits as i32 {
        return sci;
    }
    let decimals = (digits as i32 - 1 - exp).max(0) as usize;
    format!("{:.*}", decimals, value)
}

fn csv_number(value: f64) -> String {
    if value == 0.0 {
        "0".to_owned()
    } else {
        format_significant(value, 12)
    }
}

/// Writes records as LF-terminated CSV with a header line. Zero prints as
/// `0`; every other value carries 12 significant digits.
pub fn emit_csv<W: Write>(records: &[SweepRecord], mut out: W) -> io::Result<()> {
    writeln!(out, "{CSV_HEADER}")?;
    for r in records {
        writeln!(
            out,
            "{},{},{},{},{},{}",
            csv_number(r.r_a),
            csv_number(r.r_b),
            r.region,
            csv_number(r.capacity_bits),
            csv_number(r.decoded_bits),
            csv_number(r.negativity),
        )?;
    }
    out.flush()
}
