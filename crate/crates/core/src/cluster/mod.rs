//! Cluster seeds, their x-, y- and matrix mutations, the quiver Γ and the
//! explicit two-strand operators built from it.

mod matrix;
mod n2;
mod quiver;
mod seed;

pub use matrix::ExchangeMatrix;
pub use n2::{phi_n2, phi_y_n2, psi_n2, psi_y_n2};
pub use quiver::build_quiver;
pub use seed::{parse_script, y_from_x, Seed, SeedFile, YSeed};

use thiserror::Error;

use crate::algebra::AlgebraError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClusterError {
    #[error("vertex {k} out of range 1..={n}")]
    IndexOutOfRange { k: usize, n: usize },
    #[error("exchange matrix is not antisymmetric at ({i}, {j})")]
    NotAntisymmetric { i: usize, j: usize },
    #[error("expected {expected} values, found {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("entry {0} of the seed is zero")]
    ZeroEntry(usize),
    #[error("quiver needs at least 2 strands, got {0}")]
    InvalidStrandCount(usize),
    #[error("malformed input: {0}")]
    Malformed(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}
