//! Multivariate Laurent polynomials over cyclotomic coefficients.
//!
//! Monomials are integer exponent vectors over a named [`VarAlphabet`] and are
//! ordered graded-lexicographically, so term iteration and printing are
//! deterministic. On top of the ring operations this module provides exact
//! division, μ_d-norms, rewriting of torus-invariant functions into trace
//! coordinates, and a factor test against `s^κ − s'^κ'`.

mod coprime;
mod division;
mod invariant;
mod norm;
mod poly;
mod text;

pub use coprime::{coprimality_vs_binomial, BinomialFactor};
pub use division::exact_div;
pub use invariant::{check_invariance, rewrite_invariant_pair, torus_coordinates, Symmetry};
pub use norm::{mu_norm, MuNorm};
pub use poly::{poly_arith, ArithOp, LaurentPoly, Monomial, VarAlphabet, CANONICAL_VARS};
pub use text::coefficient_text;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LaurentError {
    #[error("invalid alphabet: duplicate variable {0:?}")]
    BadAlphabet(String),
    #[error("unknown variable {0:?}")]
    UnknownVariable(String),
    #[error("variable {0:?} is not allowed here")]
    UnexpectedVariable(String),
    #[error("polynomials are over different alphabets")]
    AlphabetMismatch,
    #[error("polynomial is not invertible")]
    NotInvertible,
    #[error("substitution image has zero scalar")]
    ZeroScalarImage,
    #[error("coefficient is not representable in the target domain")]
    CoefficientNotRepresentable,
    #[error("division by zero polynomial")]
    DivisionByZero,
    #[error("not divisible")]
    NotDivisible,
    #[error("zero polynomial input")]
    ZeroInput,
    #[error("degree must be positive")]
    NonPositiveDegree,
    #[error("not invariant under {0}")]
    NotInvariant(Symmetry),
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("internal consistency check failed: {0}")]
    Internal(String),
}
