use std::collections::BTreeMap;

use num_complex::Complex64;
use num_traits::ToPrimitive;

use crate::characters::DirichletChar;
use crate::{CycNum, Rational};

use super::siegel::{int_pow, Theta};
use super::{check_level, check_prime, HeckeError};

/// An elliptic newform's weight, level, character and `a_p` table.
#[derive(Debug, Clone, PartialEq)]
pub struct EllipticForm {
    k: i64,
    level: u64,
    eps: DirichletChar,
    eigen: BTreeMap<u64, Rational>,
}

impl EllipticForm {
    pub fn new(k: i64, level: u64, eps: DirichletChar, eigen: BTreeMap<u64, Rational>) -> Result<Self, HeckeError> {
        if k < 2 {
            return Err(HeckeError::InvalidWeights(vec![k]));
        }
        check_level(level, &eps)?;
        for &p in eigen.keys() {
            check_prime(p, level)?;
        }
        Ok(EllipticForm { k, level, eps, eigen })
    }

    pub fn weight(&self) -> i64 {
        self.k
    }

    pub fn level(&self) -> u64 {
        self.level
    }

    pub fn character(&self) -> &DirichletChar {
        &self.eps
    }

    pub fn eigen(&self) -> &BTreeMap<u64, Rational> {
        &self.eigen
    }

    fn ap(&self, p: u64) -> Result<&Rational, HeckeError> {
        check_prime(p, self.level)?;
        self.eigen.get(&p).ok_or(HeckeError::MissingPrime(p))
    }

    /// `ε(p)p^{k−1}`.
    pub fn s_p(&self, p: u64) -> Result<CycNum, HeckeError> {
        check_prime(p, self.level)?;
        Ok(self.eps.eval(p as i64)? * CycNum::from_rational(&int_pow(p, self.k - 1)))
    }

    /// `[1, −a_p, ε(p)p^{k−1}]`, coefficients of `X^0, X^1, X^2` with `X = p^{-s}`.
    pub fn euler_factor(&self, p: u64) -> Result<[CycNum; 3], HeckeError> {
        let a = CycNum::from_rational(self.ap(p)?);
        Ok([CycNum::from(1), -a, self.s_p(p)?])
    }

    /// `a_{p^n}` from `a_{p^{n+1}} = a_p a_{p^n} − ε(p)p^{k−1} a_{p^{n−1}}`.
    pub fn a_pn(&self, p: u64, n: u32) -> Result<CycNum, HeckeError> {
        let a = CycNum::from_rational(self.ap(p)?);
        let s = self.s_p(p)?;
        let (mut prev, mut cur) = (CycNum::from(1), a.clone());
        if n == 0 {
            return Ok(prev);
        }
        for _ in 1..n {
            let next = &a * &cur - &s * &prev;
            prev = cur;
            cur = next;
        }
        Ok(cur)
    }

    /// `λ_p = a_p / p^{(k−1)/2}`.
    pub fn lambda(&self, p: u64) -> Result<f64, HeckeError> {
        let a = self.ap(p)?.to_f64().unwrap_or(f64::NAN);
        Ok(a / (p as f64).powf((self.k - 1) as f64 / 2.0))
    }

    /// `θ_p ∈ [0, π]` with `2 cos θ_p = λ_p`.
    pub fn theta(&self, p: u64) -> Result<Theta, HeckeError> {
        let l = self.lambda(p)?;
        Ok(if l.abs() <= 2.0 { Theta::Angle((l / 2.0).acos()) } else { Theta::OutOfRange(l) })
    }

    /// Roots of `x² − a_p x + ε(p)p^{k−1}`.
    pub fn satake(&self, p: u64) -> Result<[Complex64; 2], HeckeError> {
        let a = Complex64::new(self.ap(p)?.to_f64().unwrap_or(f64::NAN), 0.0);
        let s = self.s_p(p)?.to_complex();
        let disc = (a * a - 4.0 * s).sqrt();
        let (r1, r2) = ((a + disc) / 2.0, (a - disc) / 2.0);
        Ok(if r1.norm() >= r2.norm() { [r1, r2] } else { [r2, r1] })
    }
}
