//! Exact arithmetic for hyperfibonacci sequences.
//!
//! The r-th generation hyperfibonacci sequence is the r-fold partial-sum
//! iterate of the Fibonacci numbers. This crate evaluates those sequences
//! over every integer index, builds their order-(r+2) companion matrix and
//! checks the generalized Cassini determinant identities by direct exact
//! computation.
//!
//! - [`sequences`]: Fibonacci, polytopic and hyperfibonacci terms by three
//!   independent evaluation strategies.
//! - [`linalg`]: dense [`BigInt`](num_bigint::BigInt) matrices with
//!   fraction-free determinants, adjugate inverses and characteristic
//!   polynomials.
//! - [`qmatrix`]: the companion matrix `Q_{r+2}` and recurrence inference.
//! - [`cassini`]: Hankel windows and the determinant identities.
//! - [`verify`] and [`bench`]: sweep drivers used by the `hyperfib` binary.

pub mod bench;
pub mod cassini;
pub mod cli;
mod error;
pub mod linalg;
pub mod output;
pub mod qmatrix;
pub mod sequences;
pub mod verify;

pub use error::{Error, Result};
pub use linalg::{DetMethod, IntMatrix, Polynomial};
pub use qmatrix::{QMatrix, StateVector};
pub use sequences::{HyperfibSequence, Strategy};
