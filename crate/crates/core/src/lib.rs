//! Dense-coding capacity of two-qubit X-state channels observed from
//! uniformly accelerated (Rindler) frames.
//!
//! The crate is organised bottom-up:
//!
//! - [`hilbert`]: dense complex matrices, partial traces, a Jacobi Hermitian
//!   eigensolver and von Neumann entropy.
//! - [`xstate`]: the Bell-diagonal X-state family and its closed-form spectrum.
//! - [`unruh`]: the single-mode fermionic Unruh isometry, the 16-dimensional
//!   dilation of a two-qubit state and the closed-form region channels.
//! - [`coding`]: dense-coding capacity, Pauli encoding, Holevo information and
//!   negativity.
//! - [`sweep`]: acceleration sweeps and CSV output.
//! - [`cli`]: the `unruh-coding` command-line front end.

pub mod cli;
pub mod coding;
mod error;
pub mod hilbert;
pub mod sweep;
pub mod unruh;
pub mod xstate;

pub use error::{Error, Result};
pub use hilbert::{ComplexMatrix, DensityMatrix, QubitLabel};
pub use unruh::{RegionPair, RindlerAngle};
pub use xstate::{XCoefficients, XStateParams};
