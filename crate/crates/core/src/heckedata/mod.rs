//! Hecke eigenvalue data for Siegel and elliptic newforms and the local
//! transforms built from it: Euler factors, `b_p`, Hecke polynomials, Satake
//! parameters, normalized eigenvalues, angles and representation coefficients.
//!
//! Eigenvalues are exact rationals; character values make the similitude
//! `s_p = ε(p²)p^u` a cyclotomic number in general.

mod elliptic;
mod repchar;
mod satake;
mod siegel;
pub mod synthetic;

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::characters::{CharError, DirichletChar};
use crate::exactfield::arith::{gcd, is_prime};
use crate::exactfield::{format_rational, parse_rational};
use crate::laurent::LaurentError;
use crate::Rational;

pub use elliptic::EllipticForm;
pub use repchar::RepChar;
pub use satake::{satake_from_quartic, SatakeSet, DEFAULT_TOL};
pub use siegel::Theta;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum HeckeError {
    #[error("prime {0} is not in the eigenvalue table")]
    MissingPrime(u64),
    #[error("prime {0} divides the level")]
    RamifiedPrime(u64),
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("invalid weights {0:?}")]
    InvalidWeights(Vec<i64>),
    #[error("level must be positive")]
    BadLevel,
    #[error("character modulus {modulus} does not divide the level {level}")]
    CharacterModulus { modulus: u64, level: u64 },
    #[error("a_(p^{0}) is not part of the data model")]
    UnsupportedIndex(u32),
    #[error("Satake roots cannot be paired within tolerance (best relative error {best:e})")]
    PairingFailure { best: f64 },
    #[error("invalid form data: {0}")]
    Schema(String),
    #[error(transparent)]
    Char(#[from] CharError),
    #[error(transparent)]
    Laurent(#[from] LaurentError),
}

/// `a_p` and `a_{p²}` at one prime.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SiegelEigen {
    pub ap: Rational,
    pub ap2: Rational,
}

/// A Siegel newform's weights, level, character and eigenvalue table.
#[derive(Debug, Clone, PartialEq)]
pub struct SiegelForm {
    k1: i64,
    k2: i64,
    level: u64,
    eps: DirichletChar,
    eigen: BTreeMap<u64, SiegelEigen>,
}

pub(crate) fn check_level(level: u64, eps: &DirichletChar) -> Result<(), HeckeError> {
    if level == 0 {
        return Err(HeckeError::BadLevel);
    }
    if level % eps.modulus() != 0 {
        return Err(HeckeError::CharacterModulus { modulus: eps.modulus(), level });
    }
    Ok(())
}

pub(crate) fn check_prime(p: u64, level: u64) -> Result<(), HeckeError> {
    if !is_prime(p) {
        return Err(HeckeError::NotPrime(p));
    }
    if gcd(p, level) != 1 {
        return Err(HeckeError::RamifiedPrime(p));
    }
    Ok(())
}

impl SiegelForm {
    pub fn new(
        weights: (i64, i64),
        level: u64,
        eps: DirichletChar,
        eigen: BTreeMap<u64, SiegelEigen>,
    ) -> Result<Self, HeckeError> {
        let (k1, k2) = weights;
        if k1 < k2 || k2 < 2 {
            return Err(HeckeError::InvalidWeights(vec![k1, k2]));
        }
        check_level(level, &eps)?;
        for &p in eigen.keys() {
            check_prime(p, level)?;
        }
        Ok(SiegelForm { k1, k2, level, eps, eigen })
    }

    pub fn weights(&self) -> (i64, i64) {
        (self.k1, self.k2)
    }

    /// `u = k1 + k2 − 3`.
    pub fn u(&self) -> i64 {
        self.k1 + self.k2 - 3
    }

    pub fn level(&self) -> u64 {
        self.level
    }

    pub fn character(&self) -> &DirichletChar {
        &self.eps
    }

    pub fn eigen(&self) -> &BTreeMap<u64, SiegelEigen> {
        &self.eigen
    }

    /// Table primes in ascending order.
    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.eigen.keys().copied()
    }
}

/// A parsed form file.
#[derive(Debug, Clone, PartialEq)]
pub enum Form {
    Siegel(SiegelForm),
    Elliptic(EllipticForm),
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct EigenJson {
    ap: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    ap2: Option<String>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct FormJson {
    #[serde(rename = "type")]
    kind: String,
    weights: Vec<i64>,
    level: u64,
    character: DirichletChar,
    eigenvalues: BTreeMap<String, EigenJson>,
}

fn rat(s: &str) -> Result<Rational, HeckeError> {
    parse_rational(s).map_err(|e| HeckeError::Schema(e.to_string()))
}

impl Form {
    /// Parses and validates form JSON.
    pub fn from_json(src: &str) -> Result<Form, HeckeError> {
        let raw: FormJson = serde_json::from_str(src).map_err(|e| HeckeError::Schema(e.to_string()))?;
        let mut primes = Vec::new();
        for (key, ev) in &raw.eigenvalues {
            let p: u64 = key.parse().map_err(|_| HeckeError::Schema(format!("bad prime key {key:?}")))?;
            primes.push((p, ev));
        }
        match raw.kind.as_str() {
            "siegel" => {
                let [k1, k2] = raw.weights[..] else {
                    return Err(HeckeError::Schema("siegel forms need two weights".into()));
                };
                let mut eigen = BTreeMap::new();
                for (p, ev) in primes {
                    let ap2 = ev
                        .ap2
                        .as_deref()
                        .ok_or_else(|| HeckeError::Schema(format!("prime {p}: missing ap2")))?;
                    eigen.insert(p, SiegelEigen { ap: rat(&ev.ap)?, ap2: rat(ap2)? });
                }
                Ok(Form::Siegel(SiegelForm::new((k1, k2), raw.level, raw.character, eigen)?))
            }
            "elliptic" => {
                let [k] = raw.weights[..] else {
                    return Err(HeckeError::Schema("elliptic forms need one weight".into()));
                };
                let mut eigen = BTreeMap::new();
                for (p, ev) in primes {
                    if ev.ap2.is_some() {
                        return Err(HeckeError::Schema(format!("prime {p}: ap2 is not allowed for elliptic forms")));
                    }
                    eigen.insert(p, rat(&ev.ap)?);
                }
                Ok(Form::Elliptic(EllipticForm::new(k, raw.level, raw.character, eigen)?))
            }
            other => Err(HeckeError::Schema(format!("unknown form type {other:?}"))),
        }
    }

    pub fn to_json(&self) -> String {
        let raw = match self {
            Form::Siegel(f) => FormJson {
                kind: "siegel".into(),
                weights: vec![f.k1, f.k2],
                level: f.level,
                character: f.eps.clone(),
                eigenvalues: f
                    .eigen
                    .iter()
                    .map(|(p, e)| {
                        (p.to_string(), EigenJson { ap: format_rational(&e.ap), ap2: Some(format_rational(&e.ap2)) })
                    })
                    .collect(),
            },
            Form::Elliptic(f) => FormJson {
                kind: "elliptic".into(),
                weights: vec![f.weight()],
                level: f.level(),
                character: f.character().clone(),
                eigenvalues: f
                    .eigen()
                    .iter()
                    .map(|(p, a)| (p.to_string(), EigenJson { ap: format_rational(a), ap2: None }))
                    .collect(),
            },
        };
        serde_json::to_string_pretty(&raw).expect("form serializes")
    }

    pub fn as_siegel(&self) -> Option<&SiegelForm> {
        match self {
            Form::Siegel(f) => Some(f),
            Form::Elliptic(_) => None,
        }
    }
}
