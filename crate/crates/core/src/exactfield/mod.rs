//! Exact arithmetic: rationals, cyclotomic numbers, roots of unity and prime fields.

pub mod arith;
mod cyclotomic;
mod fp;
mod rational;
mod root;

pub use cyclotomic::{cyclotomic_poly, CycNum};
pub use fp::{primitive_root, Fp};
pub use rational::{format_rational, parse_rational};
pub use root::RootOfUnity;

/// Serde adapter for rationals in `"num/den"` string form.
pub mod rational_str {
    pub use super::rational::{deserialize, serialize};
}

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactFieldError {
    #[error("conductor {to} is not a multiple of {from}")]
    ConductorNotMultiple { from: u64, to: u64 },
    #[error("conductor must be positive")]
    ZeroConductor,
    #[error("conductor {conductor} needs {expected} coordinates, got {got}")]
    CoordsLength { conductor: u64, expected: usize, got: usize },
    #[error("zero has no multiplicative order")]
    ZeroInput,
    #[error("not a rational number: {0:?}")]
    BadRational(String),
}
