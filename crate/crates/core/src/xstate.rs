//! Two-qubit X-states.
//!
//! An X-state has non-zero entries only on the diagonal and anti-diagonal of
//! the computational basis `|00>, |01>, |10>, |11>`. The initial states used
//! here are the Bell-diagonal family fixed by a correlation triple
//! `(c_x, c_y, c_z)`.

use rand::Rng;

use crate::hilbert::{ComplexMatrix, DensityMatrix, C64};
use crate::{Error, Result};

/// Slack on the physicality inequalities so boundary states pass.
pub const PHYSICALITY_SLACK: f64 = 1e-12;

/// Tolerance for reading a matrix as X-form with real symmetric coherences.
pub const X_FORM_TOL: f64 = 1e-12;

/// Correlation triple of a Bell-diagonal state.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct XStateParams {
    cx: f64,
    cy: f64,
    cz: f64,
}

impl XStateParams {
    /// The singlet, `c = (-1, -1, -1)`.
    pub const MES: Self = Self {
        cx: -1.0,
        cy: -1.0,
        cz: -1.0,
    };

    /// The partially entangled reference state `c = (-0.9, -0.8, -0.7)`.
    pub const PES: Self = Self {
        cx: -0.9,
        cy: -0.8,
        cz: -0.7,
    };

    pub fn new(cx: f64, cy: f64, cz: f64) -> Result<Self> {
        for (name, value) in [("c_x", cx), ("c_y", cy), ("c_z", cz)] {
            if !value.is_finite() || value.abs() > 1.0 + PHYSICALITY_SLACK {
                return Err(Error::CorrelationOutOfRange { name, value });
            }
        }
        if 1.0 + cz + PHYSICALITY_SLACK < (cx - cy).abs() {
            return Err(Error::Unphysical {
                inequality: "1 + c_z >= |c_x - c_y|",
            });
        }
        if 1.0 - cz + PHYSICALITY_SLACK < (cx + cy).abs() {
            return Err(Error::Unphysical {
                inequality: "1 - c_z >= |c_x + c_y|",
            });
        }
        Ok(Self { cx, cy, cz })
    }

    /// Uniform rejection sample over the physical tetrahedron.
    pub fn random<R: Rng + ?Sized>(rng: &mut R) -> Self {
        loop {
            let cx = rng.gen_range(-1.0..=1.0);
            let cy = rng.gen_range(-1.0..=1.0);
            let cz = rng.gen_range(-1.0..=1.0);
            if let Ok(p) = Self::new(cx, cy, cz) {
                return p;
            }
        }
    }

    pub fn cx(&self) -> f64 {
        self.cx
    }

    pub fn cy(&self) -> f64 {
        self.cy
    }

    pub fn cz(&self) -> f64 {
        self.cz
    }

    pub fn as_array(&self) -> [f64; 3] {
        [self.cx, self.cy, self.cz]
    }
}

/// Populations and real coherences of an X-state with `a41 = a14` and
/// `a32 = a23`.
///
/// The fields are independent so that region-reduced channels, which break
/// the Bell-diagonal symmetries, share this representation.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct XCoefficients {
    pub a11: f64,
    pub a22: f64,
    pub a33: f64,
    pub a44: f64,
    pub a14: f64,
    pub a23: f64,
}

impl XCoefficients {
    pub fn from_params(p: &XStateParams) -> Self {
        Self {
            a11: 0.25 * (1.0 + p.cz),
            a44: 0.25 * (1.0 + p.cz),
            a22: 0.25 * (1.0 - p.cz),
            a33: 0.25 * (1.0 - p.cz),
            a23: 0.25 * (p.cx + p.cy),
            a14: 0.25 * (p.cx - p.cy),
        }
    }

    /// Reads the coefficients of a 4x4 X-form matrix with real symmetric
    /// coherences.
    pub fn from_matrix(m: &ComplexMatrix) -> Result<Self> {
        check_x_form(m)?;
        for (i, j) in [(0, 3), (1, 2)] {
            let (u, l) = (m[(i, j)], m[(j, i)]);
            let bad = u.im.abs().max(l.im.abs()).max((u.re - l.re).abs());
            if bad > X_FORM_TOL {
                return Err(Error::NotXForm {
                    row: i,
                    col: j,
                    magnitude: bad,
                });
            }
        }
        Ok(Self::read_unchecked(m))
    }

    /// Reads diagonal and upper anti-diagonal entries without checking the
    /// rest of the matrix.
    pub(crate) fn read_unchecked(m: &ComplexMatrix) -> Self {
        Self {
            a11: m[(0, 0)].re,
            a22: m[(1, 1)].re,
            a33: m[(2, 2)].re,
            a44: m[(3, 3)].re,
            a14: m[(0, 3)].re,
            a23: m[(1, 2)].re,
        }
    }

    pub fn to_matrix(&self) -> ComplexMatrix {
        let mut m = ComplexMatrix::from_real_diagonal(&[self.a11, self.a22, self.a33, self.a44]);
        m[(0, 3)] = C64::new(self.a14, 0.0);
        m[(3, 0)] = C64::new(self.a14, 0.0);
        m[(1, 2)] = C64::new(self.a23, 0.0);
        m[(2, 1)] = C64::new(self.a23, 0.0);
        m
    }

    pub fn to_density(&self) -> Result<DensityMatrix> {
        DensityMatrix::new(self.to_matrix())
    }

    pub fn trace(&self) -> f64 {
        self.a11 + self.a22 + self.a33 + self.a44
    }

    pub fn as_array(&self) -> [f64; 6] {
        [self.a11, self.a22, self.a33, self.a44, self.a14, self.a23]
    }

    pub const FIELD_NAMES: [&'static str; 6] = ["b11", "b22", "b33", "b44", "b14", "b23"];

    /// Largest absolute coefficient difference and the offending field name.
    pub fn max_abs_diff(&self, other: &Self) -> (f64, &'static str) {
        self.as_array()
            .iter()
            .zip(other.as_array())
            .zip(Self::FIELD_NAMES)
            .map(|((a, b), name)| ((a - b).abs(), name))
            .fold((0.0, Self::FIELD_NAMES[0]), |acc, x| {
                if x.0 > acc.0 {
                    x
                } else {
                    acc
                }
            })
    }

    /// Closed-form spectrum, see [`x_form_eigenvalues`].
    pub fn eigenvalues(&self) -> [f64; 4] {
        block_eigenvalues(
            self.a11,
            self.a44,
            self.a14 * self.a14,
            self.a22,
            self.a33,
            self.a23 * self.a23,
        )
    }
}

/// Bell-diagonal X-state for a correlation triple.
pub fn x_state_from_c(p: &XStateParams) -> DensityMatrix {
    DensityMatrix::from_trusted(XCoefficients::from_params(p).to_matrix())
}

fn check_x_form(m: &ComplexMatrix) -> Result<()> {
    if m.rows() != 4 || m.cols() != 4 {
        return Err(Error::DimensionMismatch {
            expected: 4,
            actual: m.rows().max(m.cols()),
        });
    }
    let (magnitude, row, col) = m.x_form_violation();
    if magnitude > X_FORM_TOL {
        return Err(Error::NotXForm {
            row,
            col,
            magnitude,
        });
    }
    Ok(())
}

/// Eigenvalues of an X-form 4x4 matrix from its two 2x2 blocks:
/// `{(m11, m44), m14 m41}` and `{(m22, m33), m23 m32}`.
///
/// Returned as `[l1, l2, l3, l4]` with `l1 >= l2` and `l3 >= l4`.
pub fn x_form_eigenvalues(m: &ComplexMatrix) -> Result<[f64; 4]> {
    check_x_form(m)?;
    Ok(block_eigenvalues(
        m[(0, 0)].re,
        m[(3, 3)].re,
        (m[(3, 0)] * m[(0, 3)]).re,
        m[(1, 1)].re,
        m[(2, 2)].re,
        (m[(1, 2)] * m[(2, 1)]).re,
    ))
}

fn block_eigenvalues(
    m11: f64,
    m44: f64,
    outer_coupling: f64,
    m22: f64,
    m33: f64,
    inner_coupling: f64,
) -> [f64; 4] {
    let outer = ((m11 - m44).powi(2) + 4.0 * outer_coupling).max(0.0).sqrt();
    let inner = ((m22 - m33).powi(2) + 4.0 * inner_coupling).max(0.0).sqrt();
    [
        0.5 * (m11 + m44 + outer),
        0.5 * (m11 + m44 - outer),
        0.5 * (m22 + m33 + inner),
        0.5 * (m22 + m33 - inner),
    ]
}

/// Closed-form eigenvalues of the X-state built from a correlation triple.
pub fn x_state_eigenvalues(coeffs: &XCoefficients) -> [f64; 4] {
    coeffs.eigenvalues()
}
