use std::collections::BTreeMap;

use num_traits::Zero;
use serde::Serialize;

use crate::characters::{enumerate_chars, DirichletChar};
use crate::exactfield::arith::{gcd, lcm};
use crate::heckedata::SiegelForm;
use crate::CycNum;

use super::{PrimeSample, RelationError};

/// A character `χ` with `a_p = χ(p)·a'_p` at every checked prime.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TwistCertificate {
    pub chi: DirichletChar,
    pub checked_primes: u64,
    pub relation_verified: bool,
    /// Whether `ε(p) = ε'(p)χ(p)²` at every checked prime.
    pub eps_compatible: bool,
}

fn ap(f: &SiegelForm, p: u64) -> CycNum {
    CycNum::from_rational(&f.eigen()[&p].ap)
}

/// Characters of modulus `≤ modulus_bound` and order `≤ order_bound` that
/// relate the two `a_p` tables on the shared sample, by increasing modulus.
pub fn twist_search(
    f: &SiegelForm,
    f2: &SiegelForm,
    modulus_bound: u64,
    order_bound: u64,
) -> Result<Vec<TwistCertificate>, RelationError> {
    let sample = PrimeSample::shared(f, f2);
    if sample.is_empty() {
        return Err(RelationError::EmptySample);
    }
    let exponent = (1..=order_bound.max(1)).fold(1, lcm);
    let mut out = Vec::new();
    for n in 1..=modulus_bound {
        let primes: Vec<u64> = sample.primes().iter().copied().filter(|&p| gcd(p, n) == 1).collect();
        if primes.is_empty() {
            continue;
        }
        for chi in enumerate_chars(n, exponent)? {
            if chi.order() > order_bound {
                continue;
            }
            let mut verified = true;
            for &p in &primes {
                if ap(f, p) != chi.eval(p as i64)? * ap(f2, p) {
                    verified = false;
                    break;
                }
            }
            if !verified {
                continue;
            }
            let mut eps_compatible = true;
            for &p in &primes {
                let c = chi.eval_root(p as i64)?;
                let rhs = f2.character().eval_root(p as i64)?.mul(c.mul(c));
                eps_compatible &= f.character().eval_root(p as i64)? == rhs;
            }
            out.push(TwistCertificate {
                chi,
                checked_primes: primes.len() as u64,
                relation_verified: true,
                eps_compatible,
            });
        }
    }
    Ok(out)
}

/// Classification of `a_p / a'_p` at one prime.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RatioScanEntry {
    Order(u64),
    NotRootOfUnity,
    /// `a'_p = 0`.
    ZeroDenominator,
}

/// Per-prime orders of `a_p / a'_p` and their tally.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RatioScan {
    pub entries: BTreeMap<u64, RatioScanEntry>,
    /// Number of primes per root-of-unity order.
    pub orders: BTreeMap<u64, u64>,
    /// The order covering the most primes, if any prime has a root-of-unity ratio.
    pub dominant: Option<u64>,
}

/// Whether `a_p / a'_p` is a root of unity at each sampled prime, and of which order.
pub fn root_of_unity_ratio_scan(f: &SiegelForm, f2: &SiegelForm, sample: &PrimeSample) -> Result<RatioScan, RelationError> {
    let mut entries = BTreeMap::new();
    let mut orders = BTreeMap::new();
    for &p in sample.primes() {
        let (a, a2) = (ap(f, p), ap(f2, p));
        let entry = if a2.is_zero() {
            RatioScanEntry::ZeroDenominator
        } else if a.is_zero() {
            RatioScanEntry::NotRootOfUnity
        } else {
            match (a / a2).order_of_unity().expect("nonzero ratio") {
                Some(n) => {
                    *orders.entry(n).or_insert(0) += 1;
                    RatioScanEntry::Order(n)
                }
                None => RatioScanEntry::NotRootOfUnity,
            }
        };
        entries.insert(p, entry);
    }
    let dominant = orders.iter().max_by_key(|(n, c)| (**c, std::cmp::Reverse(**n))).map(|(n, _)| *n);
    Ok(RatioScan { entries, orders, dominant })
}
