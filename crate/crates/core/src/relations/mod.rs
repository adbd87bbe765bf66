//! Relation tests between two forms' eigenvalue tables, the polynomial
//! transforms behind them and twist search.

mod builders;
mod evaluate;
mod lift;
mod twist;

use num_rational::Ratio;
use serde::ser::SerializeStruct;
use serde::Serialize;
use thiserror::Error;

use crate::characters::CharError;
use crate::exactfield::arith::gcd;
use crate::heckedata::{HeckeError, SiegelForm};
use crate::laurent::{BinomialFactor, LaurentError};

pub use builders::{distance_polynomial, height_polynomial, lambda_p2_polynomial, pairwise_distinct_factors};
pub use evaluate::{
    angle_relation_test, exact_value, satake_numeric_value, satake_product_test, satake_relation_test, test_relation,
    test_trace_relation, DEFAULT_ANGLE_TOL,
};
pub use lift::{lift_absolute_relation, lift_normalized_relation};
pub use twist::{root_of_unity_ratio_scan, twist_search, RatioScan, RatioScanEntry, TwistCertificate};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum RelationError {
    #[error("the prime sample is empty")]
    EmptySample,
    #[error("the zero polynomial is not a relation")]
    ZeroInput,
    #[error("polynomial is not coprime to s^kappa - s'^kappa' ({} common factor(s))", .0.len())]
    NotCoprime(Vec<BinomialFactor>),
    #[error("prime {0} is not usable for both forms")]
    BadPrime(u64),
    #[error(transparent)]
    Laurent(#[from] LaurentError),
    #[error(transparent)]
    Hecke(#[from] HeckeError),
    #[error(transparent)]
    Char(#[from] CharError),
}

/// Primes present in both tables and coprime to both levels, ascending.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PrimeSample {
    primes: Vec<u64>,
}

impl PrimeSample {
    /// All primes shared by the two tables.
    pub fn shared(f: &SiegelForm, f2: &SiegelForm) -> Self {
        let nn = f.level() * f2.level();
        let primes = f.primes().filter(|p| f2.eigen().contains_key(p) && gcd(*p, nn) == 1).collect();
        PrimeSample { primes }
    }

    /// An explicit list, validated against both forms.
    pub fn from_primes(mut primes: Vec<u64>, f: &SiegelForm, f2: &SiegelForm) -> Result<Self, RelationError> {
        primes.sort_unstable();
        primes.dedup();
        let shared = PrimeSample::shared(f, f2);
        if let Some(&bad) = primes.iter().find(|p| shared.primes.binary_search(p).is_err()) {
            return Err(RelationError::BadPrime(bad));
        }
        Ok(PrimeSample { primes })
    }

    /// The first `n` primes of the sample.
    pub fn truncate(mut self, n: usize) -> Self {
        self.primes.truncate(n);
        self
    }

    pub fn primes(&self) -> &[u64] {
        &self.primes
    }

    pub fn len(&self) -> usize {
        self.primes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.primes.is_empty()
    }
}

/// How a relation was decided at each prime.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Mode {
    Exact,
    Numeric(f64),
}

/// Vanishing counts of a relation over a prime sample.
#[derive(Debug, Clone, PartialEq)]
pub struct RelationReport {
    pub relation: String,
    /// The trace-coordinate form, for relations given in Satake variables.
    pub rewritten: Option<String>,
    pub total: u64,
    pub vanishing: u64,
    pub vanishing_primes: Vec<u64>,
    pub mode: Mode,
    pub warnings: Vec<String>,
}

impl RelationReport {
    /// `vanishing / total` in lowest terms.
    pub fn density(&self) -> Ratio<u64> {
        Ratio::new(self.vanishing, self.total.max(1))
    }

    /// The density as `"num/den"`.
    pub fn density_text(&self) -> String {
        let r = self.density();
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl Serialize for RelationReport {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("RelationReport", 9)?;
        st.serialize_field("relation", &self.relation)?;
        st.serialize_field("rewritten", &self.rewritten)?;
        st.serialize_field("total", &self.total)?;
        st.serialize_field("vanishing", &self.vanishing)?;
        st.serialize_field("density", &self.density_text())?;
        st.serialize_field("vanishing_primes", &self.vanishing_primes)?;
        match self.mode {
            Mode::Exact => st.serialize_field("mode", "exact")?,
            Mode::Numeric(_) => st.serialize_field("mode", "numeric")?,
        }
        let tol = match self.mode {
            Mode::Exact => None,
            Mode::Numeric(t) => Some(t),
        };
        st.serialize_field("tol", &tol)?;
        st.serialize_field("warnings", &self.warnings)?;
        st.end()
    }
}
