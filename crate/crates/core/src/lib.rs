//! Exact Hecke-data transforms and relation testing for pairs of Siegel modular forms.
//!
//! The crate is organised bottom-up:
//!
//! * [`exactfield`]: rationals, cyclotomic numbers `Q(ζ_M)`, roots of unity, prime fields.
//! * [`laurent`]: multivariate Laurent polynomials over cyclotomic coefficients,
//!   μ_d-norms, invariant rewriting into trace coordinates and the coprimality
//!   test against `s^κ − s'^κ'`.
//! * [`characters`]: Dirichlet characters and the similitude-compatibility pair `(κ, κ')`.
//! * [`heckedata`]: Siegel/elliptic eigenvalue tables, Euler factors, `b_p`,
//!   Satake parameters and representation coefficients `r_p`.
//! * [`gsp4`]: the similitude-symplectic group, components of `G_{κ,κ'}`,
//!   invariant functions and non-vanishing witnesses.
//! * [`relations`]: relation tests over shared prime samples and twist search.
//!
//! Linear algebra and evaluation are generic over [`Scalar`]; the aliases below
//! fix the concrete types used by the data path.

pub mod characters;
pub mod exactfield;
pub mod gsp4;
pub mod heckedata;
pub mod laurent;
pub mod relations;
mod scalar;

pub use scalar::Scalar;

pub use exactfield::{CycNum, Fp, RootOfUnity};

/// Arbitrary-precision rational numbers.
pub type Rational = num_rational::BigRational;
/// Laurent polynomials with cyclotomic coefficients, the carrier for all relations.
pub type Poly = laurent::LaurentPoly<CycNum>;
/// Similitude-symplectic matrices over Q.
pub type GSpMatrixQ = gsp4::GSpMatrix<Rational>;
/// Similitude-symplectic matrices over cyclotomic fields.
pub type GSpMatrixCyc = gsp4::GSpMatrix<CycNum>;
/// Similitude-symplectic matrices over a prime field.
pub type GSpMatrixFp = gsp4::GSpMatrix<Fp>;
