//! Dirichlet characters with exact root-of-unity values, and the
//! similitude-compatibility pair `(κ, κ')` of two forms.
//!
//! A character mod `N` is stored by its images on the canonical generators of
//! `(Z/NZ)*`: the CRT factors are taken in ascending prime order, `2^2` is
//! generated by `-1`, `2^e` (`e ≥ 3`) by `-1` and `5`, and an odd `p^e` by its
//! smallest primitive root, each lifted to be `1` on the other factors.

mod group;
mod kappa;

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exactfield::arith::{gcd, lcm};
use crate::{CycNum, RootOfUnity};

use group::CharGroup;
pub use kappa::{kappa_pair, KappaPair, PROBE_PRIMES};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CharError {
    #[error("modulus must be positive")]
    ZeroModulus,
    #[error("{n} is not coprime to the modulus {modulus}")]
    NonCoprime { n: i64, modulus: u64 },
    #[error("generators {got:?} are not the canonical generators {expected:?}")]
    NonCanonicalGenerators { expected: Vec<u64>, got: Vec<u64> },
    #[error("expected {expected} generator images, got {got}")]
    ImageCount { expected: usize, got: usize },
    #[error("image {index} has order {order}, which does not divide the generator order {gen_order}")]
    BadImage { index: usize, order: u64, gen_order: u64 },
    #[error("modulus {to} is not a multiple of {from}")]
    NotAMultiple { from: u64, to: u64 },
    #[error("characters have different moduli {0} and {1}")]
    ModulusMismatch(u64, u64),
    #[error("invalid weights ({k1}, {k2}): need k1 >= k2 >= 2")]
    InvalidWeights { k1: i64, k2: i64 },
    #[error("compatibility identity fails at probe prime {0}")]
    ProbeFailure(u64),
}

/// A Dirichlet character modulo `N`.
#[derive(Clone)]
pub struct DirichletChar {
    group: Arc<CharGroup>,
    images: Vec<RootOfUnity>,
}

impl DirichletChar {
    /// The character with the given images on the canonical generators.
    pub fn new(modulus: u64, images: Vec<RootOfUnity>) -> Result<Self, CharError> {
        if modulus == 0 {
            return Err(CharError::ZeroModulus);
        }
        let group = CharGroup::get(modulus);
        if images.len() != group.gens.len() {
            return Err(CharError::ImageCount { expected: group.gens.len(), got: images.len() });
        }
        for (index, (r, &o)) in images.iter().zip(&group.orders).enumerate() {
            if o % r.order() != 0 {
                return Err(CharError::BadImage { index, order: r.order(), gen_order: o });
            }
        }
        Ok(DirichletChar { group, images })
    }

    pub fn trivial(modulus: u64) -> Result<Self, CharError> {
        if modulus == 0 {
            return Err(CharError::ZeroModulus);
        }
        let k = CharGroup::get(modulus).gens.len();
        DirichletChar::new(modulus, vec![RootOfUnity::ONE; k])
    }

    pub fn modulus(&self) -> u64 {
        self.group.modulus
    }

    /// Canonical generators of `(Z/NZ)*`.
    pub fn generators(&self) -> &[u64] {
        &self.group.gens
    }

    /// Orders of the canonical generators.
    pub fn generator_orders(&self) -> &[u64] {
        &self.group.orders
    }

    pub fn images(&self) -> &[RootOfUnity] {
        &self.images
    }

    pub fn is_trivial(&self) -> bool {
        self.images.iter().all(|r| r.is_one())
    }

    /// `χ(n)` as a root of unity.
    pub fn eval_root(&self, n: i64) -> Result<RootOfUnity, CharError> {
        let ex = self
            .group
            .log(n)
            .ok_or(CharError::NonCoprime { n, modulus: self.modulus() })?;
        Ok(self
            .images
            .iter()
            .zip(ex)
            .fold(RootOfUnity::ONE, |acc, (r, k)| acc.mul(r.pow(k as i64))))
    }

    /// `χ(n)` as a cyclotomic number.
    pub fn eval(&self, n: i64) -> Result<CycNum, CharError> {
        self.eval_root(n).map(RootOfUnity::to_cyc)
    }

    /// Least `m ≥ 1` with `χ^m` trivial.
    pub fn order(&self) -> u64 {
        self.images.iter().fold(1, |acc, r| lcm(acc, r.order()))
    }

    pub fn pow(&self, e: i64) -> DirichletChar {
        DirichletChar { group: self.group.clone(), images: self.images.iter().map(|r| r.pow(e)).collect() }
    }

    /// Product of two characters of the same modulus.
    pub fn mul(&self, other: &DirichletChar) -> Result<DirichletChar, CharError> {
        if self.modulus() != other.modulus() {
            return Err(CharError::ModulusMismatch(self.modulus(), other.modulus()));
        }
        Ok(DirichletChar {
            group: self.group.clone(),
            images: self.images.iter().zip(&other.images).map(|(a, b)| a.mul(*b)).collect(),
        })
    }

    /// The induced character modulo a multiple `l` of `N`.
    pub fn lift(&self, l: u64) -> Result<DirichletChar, CharError> {
        if l == 0 || l % self.modulus() != 0 {
            return Err(CharError::NotAMultiple { from: self.modulus(), to: l });
        }
        let group = CharGroup::get(l);
        let images = group
            .gens
            .iter()
            .map(|&g| self.eval_root(g as i64))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(DirichletChar { group, images })
    }

    /// Product after lifting both characters to the lcm of the moduli.
    pub fn mul_lifted(&self, other: &DirichletChar) -> DirichletChar {
        let l = lcm(self.modulus(), other.modulus());
        self.lift(l).unwrap().mul(&other.lift(l).unwrap()).unwrap()
    }
}

impl PartialEq for DirichletChar {
    fn eq(&self, other: &Self) -> bool {
        self.modulus() == other.modulus() && self.images == other.images
    }
}

impl Eq for DirichletChar {}

impl fmt::Debug for DirichletChar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("DirichletChar")
            .field("modulus", &self.modulus())
            .field("gens", &self.group.gens)
            .field("images", &self.images)
            .finish()
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct CharJson {
    modulus: u64,
    gens: Vec<u64>,
    images: Vec<RootOfUnity>,
}

impl Serialize for DirichletChar {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        CharJson { modulus: self.modulus(), gens: self.group.gens.clone(), images: self.images.clone() }
            .serialize(s)
    }
}

impl<'de> Deserialize<'de> for DirichletChar {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = CharJson::deserialize(d)?;
        DirichletChar::from_parts(raw.modulus, raw.gens, raw.images).map_err(serde::de::Error::custom)
    }
}

impl DirichletChar {
    /// Validates generators against the canonical choice and builds the character.
    pub fn from_parts(modulus: u64, gens: Vec<u64>, images: Vec<RootOfUnity>) -> Result<Self, CharError> {
        if modulus == 0 {
            return Err(CharError::ZeroModulus);
        }
        let expected = CharGroup::get(modulus).gens.clone();
        if gens != expected {
            return Err(CharError::NonCanonicalGenerators { expected, got: gens });
        }
        DirichletChar::new(modulus, images)
    }
}

/// All characters mod `n` whose order divides `order_divides`, in lexicographic
/// order of their generator exponents.
pub fn enumerate_chars(n: u64, order_divides: u64) -> Result<Vec<DirichletChar>, CharError> {
    if n == 0 {
        return Err(CharError::ZeroModulus);
    }
    let group = CharGroup::get(n);
    let choices: Vec<(u64, u64)> = group
        .orders
        .iter()
        .map(|&o| {
            let g = gcd(order_divides, o);
            (o, g)
        })
        .collect();
    let mut out = Vec::new();
    let mut idx = vec![0u64; choices.len()];
    loop {
        let images = idx
            .iter()
            .zip(&choices)
            .map(|(&t, &(o, g))| RootOfUnity::new(o, (t * (o / g)) as i64))
            .collect();
        out.push(DirichletChar { group: group.clone(), images });
        let mut pos = choices.len();
        loop {
            if pos == 0 {
                return Ok(out);
            }
            pos -= 1;
            idx[pos] += 1;
            if idx[pos] < choices[pos].1 {
                break;
            }
            idx[pos] = 0;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chi5() -> DirichletChar {
        DirichletChar::new(5, vec![RootOfUnity::new(4, 1)]).unwrap()
    }

    #[test]
    fn evaluation() {
        let t = DirichletChar::trivial(1).unwrap();
        assert_eq!(t.eval(17).unwrap(), CycNum::from(1));
        let q4 = DirichletChar::new(4, vec![RootOfUnity::new(2, 1)]).unwrap();
        assert_eq!(q4.eval(3).unwrap(), CycNum::from(-1));
        assert_eq!(q4.eval(-1).unwrap(), CycNum::from(-1));
        assert_eq!(chi5().eval(4).unwrap(), CycNum::from(-1));
        assert_eq!(chi5().eval(2).unwrap(), CycNum::zeta(4, 1));
        assert_eq!(chi5().eval(10), Err(CharError::NonCoprime { n: 10, modulus: 5 }));
    }

    #[test]
    fn orders() {
        assert_eq!(DirichletChar::trivial(7).unwrap().order(), 1);
        assert_eq!(DirichletChar::new(4, vec![RootOfUnity::new(2, 1)]).unwrap().order(), 2);
        assert_eq!(chi5().order(), 4);
        assert_eq!(chi5().pow(2).order(), 2);
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_chars(1, 2).unwrap().len(), 1);
        assert_eq!(enumerate_chars(8, 2).unwrap().len(), 4);
        assert_eq!(enumerate_chars(5, 2).unwrap().len(), 2);
        assert_eq!(enumerate_chars(5, 4).unwrap().len(), 4);
        assert_eq!(enumerate_chars(15, 2).unwrap().len(), 4);
        let all = enumerate_chars(8, 2).unwrap();
        assert!(all[0].is_trivial());
        for i in 0..all.len() {
            for j in 0..i {
                assert_ne!(all[i], all[j]);
            }
        }
    }

    #[test]
    fn lift_preserves_values() {
        let c = chi5();
        let l = c.lift(20).unwrap();
        for n in 1..60 {
            if gcd(n, 20) == 1 {
                assert_eq!(l.eval_root(n as i64).unwrap(), c.eval_root(n as i64).unwrap());
            }
        }
        assert!(c.lift(12).is_err());
    }

    #[test]
    fn json_round_trip_and_validation() {
        let c = DirichletChar::new(8, vec![RootOfUnity::new(2, 1), RootOfUnity::ONE]).unwrap();
        let s = serde_json::to_string(&c).unwrap();
        assert_eq!(s, r#"{"modulus":8,"gens":[7,5],"images":[{"M":2,"k":1},{"M":1,"k":0}]}"#);
        let back: DirichletChar = serde_json::from_str(&s).unwrap();
        assert_eq!(back, c);
        let bad = r#"{"modulus":8,"gens":[3,5],"images":[{"M":2,"k":1},{"M":1,"k":0}]}"#;
        assert!(serde_json::from_str::<DirichletChar>(bad).is_err());
        let bad = r#"{"modulus":5,"gens":[2],"images":[{"M":3,"k":1}]}"#;
        assert!(serde_json::from_str::<DirichletChar>(bad).is_err());
        let bad = r#"{"modulus":5,"gens":[2],"images":[{"M":1,"k":0}],"x":1}"#;
        assert!(serde_json::from_str::<DirichletChar>(bad).is_err());
    }
}
