//! Single-mode fermionic Unruh transformation.
//!
//! A Minkowski qubit seen by a uniformly accelerated observer splits into a
//! region-I particle mode and a region-II antiparticle mode:
//!
//! ```text
//! |0>_M -> cos r |0>_I |0>_II + sin r |1>_I |1>_II
//! |1>_M -> |1>_I |0>_II
//! ```
//!
//! Applying this isometry to both qubits of a two-qubit state gives a
//! 16-dimensional state over (A_I, A_II, B_I, B_II). Tracing out two of the
//! four modes gives one of four observer channels. [`accelerate_pair`] and
//! [`reduce_to_region`] compute these by brute force; [`channel_closed_form`]
//! evaluates the same reductions from closed-form coefficients.

use std::f64::consts::{FRAC_PI_4, PI};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::hilbert::{kron, partial_trace, ComplexMatrix, DensityMatrix, QubitLabel, C64};
use crate::xstate::XCoefficients;
use crate::{Error, Result};

/// Acceleration parameter `r` in `[0, pi/4]`; 0 is inertial, `pi/4` is the
/// infinite-acceleration limit.
#[derive(Clone, Copy, Debug, PartialEq, PartialOrd)]
pub struct RindlerAngle(f64);

impl RindlerAngle {
    pub const ZERO: Self = Self(0.0);
    pub const MAX: Self = Self(FRAC_PI_4);

    pub fn new(r: f64) -> Result<Self> {
        if (0.0..=FRAC_PI_4).contains(&r) {
            Ok(Self(r))
        } else {
            Err(Error::AngleOutOfRange(r))
        }
    }

    pub fn radians(self) -> f64 {
        self.0
    }
}

/// The ratio `omega * c / a` of mode frequency times the speed of light to the
/// proper acceleration.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct AccelerationSpec(f64);

impl AccelerationSpec {
    pub fn new(ratio: f64) -> Result<Self> {
        if ratio >= 0.0 {
            Ok(Self(ratio))
        } else {
            Err(Error::NegativeAccelRatio(ratio))
        }
    }

    pub fn ratio(self) -> f64 {
        self.0
    }
}

/// `tan r = exp(-pi * omega c / a)`.
pub fn rindler_angle_from_accel(spec: AccelerationSpec) -> RindlerAngle {
    RindlerAngle((-PI * spec.0).exp().atan())
}

/// Which pair of modes is kept: Alice's region first, then Bob's.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum RegionPair {
    #[serde(rename = "I-I")]
    IxI,
    #[serde(rename = "II-II")]
    IIxII,
    #[serde(rename = "I-II")]
    IxII,
    #[serde(rename = "II-I")]
    IIxI,
}

impl RegionPair {
    pub const ALL: [Self; 4] = [Self::IxI, Self::IIxII, Self::IxII, Self::IIxI];

    /// The three pairs with a closed-form channel.
    pub const CLOSED_FORM: [Self; 3] = [Self::IxI, Self::IIxII, Self::IxII];

    pub fn token(self) -> &'static str {
        match self {
            Self::IxI => "I-I",
            Self::IIxII => "II-II",
            Self::IxII => "I-II",
            Self::IIxI => "II-I",
        }
    }

    pub fn kept_modes(self) -> [QubitLabel; 2] {
        use QubitLabel as Q;
        match self {
            Self::IxI => [Q::A_I, Q::B_I],
            Self::IIxII => [Q::A_II, Q::B_II],
            Self::IxII => [Q::A_I, Q::B_II],
            Self::IIxI => [Q::A_II, Q::B_I],
        }
    }
}

impl fmt::Display for RegionPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

impl FromStr for RegionPair {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|p| p.token() == s)
            .ok_or_else(|| Error::UnknownRegion(s.to_owned()))
    }
}

/// 4x2 isometry from a Minkowski qubit into (region I, region II) modes.
pub fn unruh_isometry(r: RindlerAngle) -> ComplexMatrix {
    let (s, c) = r.0.sin_cos();
    let mut v = ComplexMatrix::zeros(4, 2);
    v[(0, 0)] = C64::new(c, 0.0);
    v[(3, 0)] = C64::new(s, 0.0);
    v[(2, 1)] = C64::new(1.0, 0.0);
    v
}

/// Dilates a two-qubit state to the 16-dimensional (A_I, A_II, B_I, B_II)
/// space.
pub fn accelerate_pair(
    rho: &DensityMatrix,
    ra: RindlerAngle,
    rb: RindlerAngle,
) -> Result<DensityMatrix> {
    if rho.dim() != 4 {
        return Err(Error::DimensionMismatch {
            expected: 4,
            actual: rho.dim(),
        });
    }
    // kron(V_a, V_b) already emits rows in (A_I, A_II, B_I, B_II) order
    let w = kron(&unruh_isometry(ra), &unruh_isometry(rb));
    Ok(DensityMatrix::from_trusted(rho.matrix().conjugate_by(&w)))
}

/// Reduced two-mode state for a region pair.
pub fn reduce_to_region(full: &DensityMatrix, pair: RegionPair) -> Result<DensityMatrix> {
    if full.dim() != 16 {
        return Err(Error::DimensionMismatch {
            expected: 16,
            actual: full.dim(),
        });
    }
    partial_trace(full, &pair.kept_modes())
}

/// Region channel computed by explicit dilation and partial trace.
pub fn channel_oracle(
    coeffs: &XCoefficients,
    ra: RindlerAngle,
    rb: RindlerAngle,
    pair: RegionPair,
) -> XCoefficients {
    let rho = DensityMatrix::from_trusted(coeffs.to_matrix());
    let full = accelerate_pair(&rho, ra, rb).expect("input is 4x4");
    let reduced = reduce_to_region(&full, pair).expect("dilation is 16x16");
    XCoefficients::read_unchecked(reduced.matrix())
}

/// Region channel from closed-form coefficients. The II-I pair has no closed
/// form and is evaluated by [`channel_oracle`].
pub fn channel_closed_form(
    coeffs: &XCoefficients,
    ra: RindlerAngle,
    rb: RindlerAngle,
    pair: RegionPair,
) -> XCoefficients {
    let a = coeffs;
    let (sa, ca) = ra.0.sin_cos();
    let (sb, cb) = rb.0.sin_cos();
    let (sa2, ca2, sb2, cb2) = (sa * sa, ca * ca, sb * sb, cb * cb);

    match pair {
        RegionPair::IxI => XCoefficients {
            a11: a.a11 * ca2 * cb2,
            a22: ca2 * (a.a11 * sb2 + a.a22),
            a33: cb2 * (a.a11 * sa2 + a.a33),
            a44: sa2 * (a.a11 * sb2 + a.a22) + a.a33 * sb2 + a.a44,
            a14: a.a14 * ca * cb,
            a23: a.a23 * ca * cb,
        },
        RegionPair::IIxII => XCoefficients {
            a11: (a.a22 + a.a11 * cb2) * ca2 + a.a33 * cb2 + a.a44,
            a22: (a.a33 + a.a11 * ca2) * sb2,
            a33: (a.a22 + a.a11 * cb2) * sa2,
            a44: a.a11 * sa2 * sb2,
            a14: a.a14 * sa * sb,
            a23: a.a23 * sa * sb,
        },
        RegionPair::IxII => XCoefficients {
            a11: (a.a22 + a.a11 * cb2) * ca2,
            a22: a.a11 * ca2 * sb2,
            a33: (a.a22 + a.a11 * cb2) * sa2 + a.a33 * cb2 + a.a44,
            a44: (a.a33 + a.a11 * sa2) * sb2,
            // coherences swap blocks: the Bob-side mode flips parity
            a14: a.a23 * ca * sb,
            a23: a.a14 * ca * sb,
        },
        RegionPair::IIxI => channel_oracle(coeffs, ra, rb, pair),
    }
}

/// Largest coefficient gap between the closed form and the oracle, with the
/// coefficient name.
pub fn oracle_discrepancy(
    coeffs: &XCoefficients,
    ra: RindlerAngle,
    rb: RindlerAngle,
    pair: RegionPair,
) -> (f64, &'static str) {
    channel_closed_form(coeffs, ra, rb, pair).max_abs_diff(&channel_oracle(coeffs, ra, rb, pair))
}
