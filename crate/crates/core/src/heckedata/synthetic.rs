//! Synthetic eigenvalue data built from chosen Satake parameters, for tests,
//! examples and the acceptance suite.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::Rng;

use crate::characters::DirichletChar;
use crate::Rational;

use super::siegel::int_pow;
use super::{HeckeError, SiegelEigen, SiegelForm};

/// `(a_p, a_{p²})` of the Hecke quartic with roots `β1, β2, s/β2, s/β1`,
/// where `s = η·p^u` and `η = ε(p²) = ±1`.
pub fn eigen_from_satake(p: u64, u: i64, eta: &Rational, b1: &Rational, b2: &Rational) -> SiegelEigen {
    let s = eta * int_pow(p, u);
    let betas = [b1.clone(), b2.clone(), &s / b2, &s / b1];
    let e1: Rational = betas.iter().sum();
    let mut e2 = Rational::zero();
    for i in 0..4 {
        for j in 0..i {
            e2 += &betas[i] * &betas[j];
        }
    }
    let ap2 = &e1 * &e1 - e2 - eta * int_pow(p, u - 1);
    SiegelEigen { ap: e1, ap2 }
}

/// A nonzero rational with numerator in `[-bound, bound]` and denominator in `[1, den]`.
pub fn random_rational<R: Rng + ?Sized>(rng: &mut R, bound: i64, den: i64) -> Rational {
    loop {
        let n = rng.random_range(-bound..=bound);
        if n != 0 {
            return Rational::new(BigInt::from(n), BigInt::from(rng.random_range(1..=den)));
        }
    }
}

/// `ε(p²)` as a rational, when it is `±1`.
fn eta(eps: &DirichletChar, p: u64) -> Result<Rational, HeckeError> {
    let r = eps.eval((p * p) as i64)?;
    r.to_rational()
        .ok_or_else(|| HeckeError::Schema(format!("ε(p²) is not rational at p = {p}")))
}

/// A Siegel form whose table at each prime comes from random rational Satake
/// parameters. `ε(p²)` must be `±1` at every listed prime.
pub fn random_siegel_form<R: Rng + ?Sized>(
    rng: &mut R,
    weights: (i64, i64),
    level: u64,
    eps: DirichletChar,
    primes: &[u64],
) -> Result<SiegelForm, HeckeError> {
    let u = weights.0 + weights.1 - 3;
    let mut eigen = BTreeMap::new();
    for &p in primes {
        super::check_prime(p, level)?;
        let h = eta(&eps, p)?;
        let b1 = random_rational(rng, 30, 4);
        let b2 = random_rational(rng, 30, 4);
        eigen.insert(p, eigen_from_satake(p, u, &h, &b1, &b2));
    }
    SiegelForm::new(weights, level, eps, eigen)
}

/// A Siegel form with `a_p` uniform in the Ramanujan range `|λ_p| ≤ 4` (as a
/// rational with denominator 1000) and `a_{p²}` a random integer.
pub fn random_ramanujan_form<R: Rng + ?Sized>(
    rng: &mut R,
    weights: (i64, i64),
    primes: &[u64],
) -> Result<SiegelForm, HeckeError> {
    let u = weights.0 + weights.1 - 3;
    let mut eigen = BTreeMap::new();
    for &p in primes {
        let bound = 4.0 * (p as f64).powf(u as f64 / 2.0);
        let x: f64 = rng.random_range(-1.0..1.0) * bound;
        let ap = Rational::new(BigInt::from((x * 1000.0).trunc() as i64), BigInt::from(1000));
        let ap2 = Rational::from_integer(BigInt::from(rng.random_range(-1000i64..=1000)));
        eigen.insert(p, SiegelEigen { ap, ap2 });
    }
    SiegelForm::new(weights, 1, DirichletChar::trivial(1)?, eigen)
}

/// The twist `a_p ↦ χ(p)a_p`, `a_{p²} ↦ χ(p²)a_{p²}` by a character with
/// values `±1`. Primes dividing the modulus of `χ` are dropped and the level
/// becomes `lcm(N, mod χ)`.
pub fn quadratic_twist(f: &SiegelForm, chi: &DirichletChar) -> Result<SiegelForm, HeckeError> {
    let m = chi.modulus();
    let level = crate::exactfield::arith::lcm(f.level(), m);
    let mut eigen = BTreeMap::new();
    for (&p, ev) in f.eigen() {
        if m % p == 0 {
            continue;
        }
        let c = chi
            .eval(p as i64)?
            .to_rational()
            .ok_or_else(|| HeckeError::Schema("twisting character must be quadratic".into()))?;
        let c2 = &c * &c;
        eigen.insert(p, SiegelEigen { ap: &c * &ev.ap, ap2: if c2.is_one() { ev.ap2.clone() } else { c2 * &ev.ap2 } });
    }
    let eps = f.character().lift(level).map_err(HeckeError::from)?;
    SiegelForm::new(f.weights(), level, eps, eigen)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactfield::arith::primes;
    use crate::CycNum;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn satake_data_reproduces_euler_factor() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let ps: Vec<u64> = primes().take(10).collect();
        let f = random_siegel_form(&mut rng, (4, 3), 1, DirichletChar::trivial(1).unwrap(), &ps).unwrap();
        for p in ps {
            assert!(f.bp_identity_holds(p).unwrap());
            let c = f.spin_euler_factor(p).unwrap();
            assert_eq!(c[3], &c[1] * &f.s_p(p).unwrap());
        }
    }

    #[test]
    fn twist_keeps_bp() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let ps: Vec<u64> = primes().take(12).collect();
        let f = random_siegel_form(&mut rng, (3, 3), 1, DirichletChar::trivial(1).unwrap(), &ps).unwrap();
        let chi = DirichletChar::new(4, vec![crate::RootOfUnity::new(2, 1)]).unwrap();
        let g = quadratic_twist(&f, &chi).unwrap();
        assert!(!g.eigen().contains_key(&2));
        for p in g.primes() {
            assert_eq!(g.bp(p).unwrap(), f.bp(p).unwrap());
            let sign = if p % 4 == 1 { 1 } else { -1 };
            assert_eq!(CycNum::from_rational(&g.eigen()[&p].ap), CycNum::from(sign) * CycNum::from_rational(&f.eigen()[&p].ap));
        }
    }
}
