//! Dense symmetric eigensolver and exact integer rank.

mod jacobi;
mod rank;

pub use jacobi::{symmetric_eigen, EigenDecomposition, JACOBI_MAX_SWEEPS, JACOBI_OFF_TOLERANCE};
pub use rank::{integer_rank, integer_rank_bigint};
