//! Dense-coding information quantities for two-qubit channels.
//!
//! Alice holds the first qubit, Bob the second. Alice encodes by applying one
//! of the four Paulis to her qubit and sends it to Bob, who measures both.

use crate::hilbert::{
    entropy_of_spectrum, partial_trace, ComplexMatrix, DensityMatrix, QubitLabel, C64,
};
use crate::xstate::{x_form_eigenvalues, XCoefficients, X_FORM_TOL};
use crate::{Error, Result};

/// Slack on ensemble probability sums.
pub const PROBABILITY_TOL: f64 = 1e-12;

/// Negative values of this size are rounding, not information.
const CLAMP_TOL: f64 = 1e-10;

const NEGATIVITY_CUTOFF: f64 = 1e-14;

fn clamp_noise(x: f64) -> f64 {
    if (-CLAMP_TOL..0.0).contains(&x) {
        0.0
    } else {
        x
    }
}

fn require_two_qubits(rho: &DensityMatrix) -> Result<()> {
    if rho.dim() == 4 {
        Ok(())
    } else {
        Err(Error::DimensionMismatch {
            expected: 4,
            actual: rho.dim(),
        })
    }
}

/// Bob's marginal (trace over Alice's factor).
pub fn bob_marginal(rho: &DensityMatrix) -> Result<DensityMatrix> {
    require_two_qubits(rho)?;
    partial_trace(rho, &[QubitLabel::new(1)?])
}

/// Joint entropy; uses the block closed form when `rho` is X-form.
pub fn joint_entropy(rho: &DensityMatrix) -> f64 {
    let m = rho.matrix();
    if m.rows() == 4 && m.x_form_violation().0 <= X_FORM_TOL {
        if let Ok(eig) = x_form_eigenvalues(m) {
            return entropy_of_spectrum(&eig);
        }
    }
    entropy_of_spectrum(&rho.eigenvalues())
}

/// Dense-coding capacity in bits, `1 + S(rho_B) - S(rho_AB)`.
pub fn capacity(rho: &DensityMatrix) -> Result<f64> {
    let s_b = entropy_of_spectrum(&bob_marginal(rho)?.eigenvalues());
    Ok(clamp_noise(1.0 + s_b - joint_entropy(rho)))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Pauli {
    I,
    X,
    Y,
    Z,
}

impl Pauli {
    pub const ALL: [Self; 4] = [Self::I, Self::X, Self::Y, Self::Z];

    pub fn matrix(self) -> ComplexMatrix {
        let (o, l, i) = (C64::new(0.0, 0.0), C64::new(1.0, 0.0), C64::new(0.0, 1.0));
        let rows = match self {
            Self::I => [[l, o], [o, l]],
            Self::X => [[o, l], [l, o]],
            Self::Y => [[o, -i], [i, o]],
            Self::Z => [[l, o], [o, -l]],
        };
        ComplexMatrix::from_rows(&rows.map(|r| r.to_vec()))
    }
}

/// Probabilities for the encoders `I, sigma_x, sigma_y, sigma_z`, in that
/// order.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EncodingEnsemble {
    probabilities: [f64; 4],
}

impl EncodingEnsemble {
    pub fn new(probabilities: [f64; 4]) -> Result<Self> {
        let sum: f64 = probabilities.iter().sum();
        if probabilities.iter().any(|p| p.is_nan() || *p < 0.0)
            || (sum - 1.0).abs() > PROBABILITY_TOL
        {
            return Err(Error::InvalidProbabilities { sum });
        }
        Ok(Self { probabilities })
    }

    pub fn uniform() -> Self {
        Self {
            probabilities: [0.25; 4],
        }
    }

    pub fn probabilities(&self) -> [f64; 4] {
        self.probabilities
    }
}

impl Default for EncodingEnsemble {
    fn default() -> Self {
        Self::uniform()
    }
}

/// The four states `(U_i x I) rho (U_i x I)^dagger` with their probabilities.
pub fn pauli_encode(
    rho: &DensityMatrix,
    ensemble: &EncodingEnsemble,
) -> Result<Vec<(f64, DensityMatrix)>> {
    require_two_qubits(rho)?;
    let id = ComplexMatrix::identity(2);
    Ok(Pauli::ALL
        .iter()
        .zip(ensemble.probabilities)
        .map(|(u, p)| {
            let local = crate::hilbert::kron(&u.matrix(), &id);
            (
                p,
                DensityMatrix::from_trusted(rho.matrix().conjugate_by(&local)),
            )
        })
        .collect())
}

/// `sum_i p_i rho_i`.
pub fn average_coded_state(encoded: &[(f64, DensityMatrix)]) -> Result<DensityMatrix> {
    let Some((_, first)) = encoded.first() else {
        return Err(Error::InvalidProbabilities { sum: 0.0 });
    };
    let dim = first.dim();
    let sum: f64 = encoded.iter().map(|(p, _)| p).sum();
    if encoded.iter().any(|(p, _)| p.is_nan() || *p < 0.0) || (sum - 1.0).abs() > PROBABILITY_TOL {
        return Err(Error::InvalidProbabilities { sum });
    }
    let mut acc = ComplexMatrix::zeros(dim, dim);
    for (p, rho) in encoded {
        if rho.dim() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                actual: rho.dim(),
            });
        }
        acc = acc.add(&rho.matrix().scale(*p));
    }
    Ok(DensityMatrix::from_trusted(acc))
}

/// Holevo quantity `S(sum p_i rho_i) - sum p_i S(rho_i)` by explicit
/// eigendecomposition of every state.
pub fn holevo_information(encoded: &[(f64, DensityMatrix)]) -> Result<f64> {
    let avg = average_coded_state(encoded)?;
    let s_avg = entropy_of_spectrum(&avg.eigenvalues());
    let s_members: f64 = encoded
        .iter()
        .filter(|(p, _)| *p > 0.0)
        .map(|(p, rho)| p * entropy_of_spectrum(&rho.eigenvalues()))
        .sum();
    Ok(clamp_noise(s_avg - s_members))
}

/// Decoded information for uniform Pauli encoding of an X-form channel.
///
/// The averaged state is `I/2 x rho_B`, whose eigenvalues are
/// `(1 +- |(b11 + b33) - (b22 + b44)|) / 4`, each twice. Every encoded state
/// shares the spectrum of the channel itself.
pub fn decoded_information_closed_form(coeffs: &XCoefficients) -> f64 {
    let b = coeffs;
    let imbalance = ((b.a11 + b.a33) - (b.a22 + b.a44)).abs();
    let lambda_plus = 0.25 * (1.0 + imbalance);
    let lambda_minus = 0.25 * (1.0 - imbalance);
    let s_coded = entropy_of_spectrum(&[lambda_plus, lambda_plus, lambda_minus, lambda_minus]);
    clamp_noise(s_coded - entropy_of_spectrum(&b.eigenvalues()))
}

/// Partial transpose over the second qubit.
pub fn partial_transpose_bob(m: &ComplexMatrix) -> ComplexMatrix {
    let mut out = ComplexMatrix::zeros(4, 4);
    for a in 0..2 {
        for b in 0..2 {
            for a2 in 0..2 {
                for b2 in 0..2 {
                    out[(2 * a + b, 2 * a2 + b2)] = m[(2 * a + b2, 2 * a2 + b)];
                }
            }
        }
    }
    out
}

/// Sum of the magnitudes of the negative eigenvalues of the partial transpose.
pub fn negativity(rho: &DensityMatrix) -> Result<f64> {
    require_two_qubits(rho)?;
    let pt = DensityMatrix::from_trusted(partial_transpose_bob(rho.matrix()));
    Ok(pt
        .eigenvalues()
        .into_iter()
        .filter(|&l| l < -NEGATIVITY_CUTOFF)
        .map(|l| -l)
        .sum())
}

/// All information quantities for one channel.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct InfoReport {
    pub capacity_bits: f64,
    pub decoded_bits: f64,
    pub entropy_joint_bits: f64,
    pub entropy_bob_bits: f64,
    pub negativity: f64,
}

impl InfoReport {
    /// Closed-form evaluation for an X-form channel.
    pub fn for_channel(coeffs: &XCoefficients) -> Self {
        let rho = DensityMatrix::from_trusted(coeffs.to_matrix());
        let entropy_joint_bits = entropy_of_spectrum(&coeffs.eigenvalues());
        let p0 = coeffs.a11 + coeffs.a33;
        let p1 = coeffs.a22 + coeffs.a44;
        let entropy_bob_bits = entropy_of_spectrum(&[p0, p1]);
        Self {
            capacity_bits: capacity(&rho).expect("4x4"),
            decoded_bits: decoded_information_closed_form(coeffs),
            entropy_joint_bits,
            entropy_bob_bits,
            negativity: negativity(&rho).expect("4x4"),
        }
    }
}
