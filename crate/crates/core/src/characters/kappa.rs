use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::exactfield::arith::primes;

use super::{CharError, DirichletChar};

/// Number of primes used to confirm the compatibility identity.
pub const PROBE_PRIMES: usize = 20;

/// The pair `(κ, κ')` with `d = gcd(κ, κ')` and `n = gcd(u, u')`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct KappaPair {
    pub kappa: u64,
    pub kappa_prime: u64,
    pub d: u64,
    pub n: u64,
}

fn weight_sum(k: (i64, i64)) -> Result<u64, CharError> {
    let (k1, k2) = k;
    if k1 < k2 || k2 < 2 {
        return Err(CharError::InvalidWeights { k1, k2 });
    }
    Ok((k1 + k2 - 3) as u64)
}

/// Smallest positive `(κ, κ')` with `(ε(p²)p^u)^κ = (ε'(p²)p^{u'})^{κ'}` for all
/// unramified `p`, where `u = k1 + k2 − 3`.
pub fn kappa_pair(
    weights: (i64, i64),
    eps: &DirichletChar,
    weights2: (i64, i64),
    eps2: &DirichletChar,
) -> Result<KappaPair, CharError> {
    let u = weight_sum(weights)?;
    let u2 = weight_sum(weights2)?;
    let n = u.gcd(&u2);
    let psi = eps.pow((2 * u2 / n) as i64).mul_lifted(&eps2.pow(-((2 * u / n) as i64)));
    let ord = psi.order();
    let (kappa, kappa_prime) = (ord * u2 / n, ord * u / n);
    let out = KappaPair { kappa, kappa_prime, d: kappa.gcd(&kappa_prime), n };

    let level = psi.modulus();
    for p in primes().filter(|p| level % p != 0).take(PROBE_PRIMES) {
        let p2 = (p * p) as i64;
        let lhs = eps.eval_root(p2)?.pow(kappa as i64);
        let rhs = eps2.eval_root(p2)?.pow(kappa_prime as i64);
        if lhs != rhs || u * kappa != u2 * kappa_prime {
            return Err(CharError::ProbeFailure(p));
        }
    }
    Ok(out)
}
