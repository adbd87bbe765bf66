use std::collections::HashMap;

use num_integer::Integer;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::exactfield::arith::is_prime;
use crate::{Fp, GSpMatrixFp, Poly, Scalar};

use super::{eval_invariant, torus, transvection, ComponentLabel, GSpMatrix, Gsp4Error};

/// Number of random factors in each sampled Sp4 element.
pub const SAMPLER_STEPS: usize = 20;

/// Vanishing statistics of `φ` on sampled pairs.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SampleStats {
    pub q: u64,
    pub trials: u64,
    pub vanishing: u64,
    pub fraction: f64,
}

fn random_unit<R: Rng>(rng: &mut R, q: u64) -> Fp {
    Fp::new(rng.random_range(1..q) as i64, q)
}

/// A random element of Sp4(F_q): a product of random symplectic transvections
/// and torus elements `diag(x1, x2, 1/x2, 1/x1)`. Not uniform.
pub fn random_sp4<R: Rng>(rng: &mut R, q: u64) -> GSpMatrixFp {
    let mut g = GSpMatrix::<Fp>::identity();
    let one = Fp::new(1, q);
    for _ in 0..SAMPLER_STEPS {
        let h = if rng.random_bool(0.75) {
            let v = loop {
                let v: [Fp; 4] = std::array::from_fn(|_| Fp::new(rng.random_range(0..q) as i64, q));
                if v.iter().any(|x| !x.is_zero()) {
                    break v;
                }
            };
            transvection(&v, &random_unit(rng, q))
        } else {
            torus(&random_unit(rng, q), &random_unit(rng, q), &one).expect("units")
        };
        g = g.mul(&h);
    }
    g
}

/// All `(ν, ν')` in `F_q^× × F_q^×` with `ν^{κ/d} = ζ·ν'^{κ'/d}`.
fn similitude_pairs(q: u64, ka: u64, kb: u64, zeta: Fp) -> Vec<(Fp, Fp)> {
    let mut by_power: HashMap<u64, Vec<u64>> = HashMap::new();
    for x in 1..q {
        by_power.entry(Fp::new(x as i64, q).pow(ka).value() as u64).or_default().push(x);
    }
    let mut out = Vec::new();
    for y in 1..q {
        let target = (zeta * Fp::new(y as i64, q).pow(kb)).value() as u64;
        for &x in by_power.get(&target).into_iter().flatten() {
            out.push((Fp::new(x as i64, q), Fp::new(y as i64, q)));
        }
    }
    out
}

/// Samples pairs in `G^ζ(F_q)` and counts those where `φ` vanishes.
///
/// Each side is a random Sp4 element times `diag(1, 1, ν, ν)`, with `(ν, ν')`
/// drawn uniformly from the solutions of the component equation.
pub fn sample_component(
    phi: &Poly,
    q: u64,
    kappa: u64,
    kappa_prime: u64,
    label: ComponentLabel,
    trials: u64,
    seed: u64,
) -> Result<SampleStats, Gsp4Error> {
    if !is_prime(q) {
        return Err(Gsp4Error::NotPrime(q));
    }
    if q == 2 {
        return Err(Gsp4Error::EvenField);
    }
    let d = kappa.gcd(&kappa_prime);
    if kappa == 0 || kappa_prime == 0 || label.d != d {
        return Err(Gsp4Error::BadComponent { d: label.d, expected: d });
    }
    if (q - 1) % d != 0 {
        return Err(Gsp4Error::BadField { q, d });
    }
    let like = Fp::new(1, q);
    let zeta = Fp::from_cyc_like(&label.zeta.to_cyc(), &like).ok_or(Gsp4Error::BadField { q, d })?;
    let pairs = similitude_pairs(q, kappa / d, kappa_prime / d, zeta);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut vanishing = 0;
    for _ in 0..trials {
        let (nu, nu2) = pairs[rng.random_range(0..pairs.len())];
        let g = random_sp4(&mut rng, q).mul(&torus(&like, &like, &nu)?);
        let g2 = random_sp4(&mut rng, q).mul(&torus(&like, &like, &nu2)?);
        if eval_invariant(phi, &g, &g2)?.is_zero() {
            vanishing += 1;
        }
    }
    let fraction = if trials == 0 { 0.0 } else { vanishing as f64 / trials as f64 };
    Ok(SampleStats { q, trials, vanishing, fraction })
}
