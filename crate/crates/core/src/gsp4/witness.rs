use num_integer::Integer;
use num_traits::Zero;
use serde::Serialize;

use crate::laurent::{coprimality_vs_binomial, LaurentError, Monomial};
use crate::{CycNum, GSpMatrixCyc, Poly};

use super::{companion_for, eval_invariant, ComponentLabel, Gsp4Error};

/// Search limits for [`nonvanishing_witness`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WitnessBudget {
    /// Largest `w` tried, with `t = w²`.
    pub max_w: u64,
    /// Largest max-norm of the grid point `(a, b, a', b')`.
    pub max_radius: i64,
}

impl Default for WitnessBudget {
    fn default() -> Self {
        WitnessBudget { max_w: 6, max_radius: 4 }
    }
}

/// A pair of companion matrices in `G^ζ` on which `φ` does not vanish.
#[derive(Debug, Clone, Serialize)]
pub struct Witness {
    pub w: u64,
    pub t: u64,
    /// Companion parameters `(a, b, a', b')`.
    pub params: [i64; 4],
    pub gamma: GSpMatrixCyc,
    pub gamma_prime: GSpMatrixCyc,
    pub value: CycNum,
    /// `(s, s', tr γ, tr std γ, tr γ', tr std γ')`.
    pub invariants: [CycNum; 6],
}

fn zigzag_rank(v: i64) -> u64 {
    if v > 0 {
        2 * v as u64 - 1
    } else {
        2 * v.unsigned_abs()
    }
}

/// Grid points of max-norm exactly `r`, ordered colexicographically by the
/// value order `0, 1, −1, 2, −2, …`.
fn shell(r: i64) -> Vec<[i64; 4]> {
    let range: Vec<i64> = (-r..=r).collect();
    let mut out = Vec::new();
    for &a in &range {
        for &b in &range {
            for &c in &range {
                for &d in &range {
                    let p = [a, b, c, d];
                    if p.iter().map(|x| x.abs()).max() == Some(r) {
                        out.push(p);
                    }
                }
            }
        }
    }
    out.sort_by_key(|p| [3, 2, 1, 0].map(|i| zigzag_rank(p[i])));
    out
}

/// Searches for `(γ, γ') ∈ G^ζ` with `φ(γ, γ') ≠ 0`, where `φ` is built from `P`.
///
/// For `w = 1, 2, …` the pair is `γ = companion(a, b, v)`, `γ' = companion(a', b', v')`
/// with `v = ζ_{2κ}^k w^{κ'}` and `v' = w^κ`, so `ν(γ) = ζ_κ^k t^{κ'}` and
/// `ν(γ') = t^κ` with `t = w²` and `ζ = ζ_d^k`.
pub fn nonvanishing_witness(
    p: &Poly,
    kappa: u64,
    kappa_prime: u64,
    label: ComponentLabel,
    budget: WitnessBudget,
) -> Result<Witness, Gsp4Error> {
    let factors = coprimality_vs_binomial(p, kappa as i64, kappa_prime as i64)?;
    if !factors.is_empty() {
        return Err(Gsp4Error::NotCoprime(factors));
    }
    let d = kappa.gcd(&kappa_prime);
    if label.d != d {
        return Err(Gsp4Error::BadComponent { d: label.d, expected: d });
    }
    let alphabet = p.alphabet();
    let slots = ["s", "s'", "a", "b", "a'", "b'"].map(|n| alphabet.index(n));
    if let Some(bad) = p.used_vars().into_iter().find(|i| !slots.contains(&Some(*i))) {
        return Err(LaurentError::UnexpectedVariable(alphabet.name(bad).to_string()).into());
    }
    let k = label.exponent() as i64;
    let one = CycNum::from(1);
    for w in 1..=budget.max_w {
        let wc = CycNum::from(w as i64);
        let v = CycNum::zeta(2 * kappa, k) * wc.pow_u(kappa_prime);
        let v2 = wc.pow_u(kappa);
        let (s, s2) = (&v * &v, &v2 * &v2);
        let (sinv, s2inv) = (s.inverse().unwrap(), s2.inverse().unwrap());
        let n = alphabet.len();
        let fixed: Vec<_> = slots[..2]
            .iter()
            .zip([&s, &s2])
            .filter_map(|(i, c)| i.map(|i| (i, c.clone(), Monomial::one(n))))
            .collect();
        if p.substitute(&fixed)?.is_zero() {
            continue;
        }
        let mut values = vec![one.clone(); n];
        for r in 0..=budget.max_radius {
            for g in shell(r) {
                let [a, b, a2, b2] = g.map(|x| CycNum::from(x));
                let inv = [
                    s.clone(),
                    s2.clone(),
                    -a.clone(),
                    &b * &sinv - &one,
                    -a2.clone(),
                    &b2 * &s2inv - &one,
                ];
                for (slot, val) in slots.iter().zip(&inv) {
                    if let Some(i) = slot {
                        values[*i] = val.clone();
                    }
                }
                if p.eval(&values)?.is_zero() {
                    continue;
                }
                let gamma = companion_for(&a, &b, &v)?;
                let gamma_prime = companion_for(&a2, &b2, &v2)?;
                let value = eval_invariant(p, &gamma, &gamma_prime)?;
                if value.is_zero() {
                    return Err(Gsp4Error::Laurent(LaurentError::Internal("witness check disagrees".into())));
                }
                let invariants = [
                    gamma.similitude().clone(),
                    gamma_prime.similitude().clone(),
                    gamma.trace(),
                    gamma.std_trace(),
                    gamma_prime.trace(),
                    gamma_prime.std_trace(),
                ];
                return Ok(Witness { w, t: w * w, params: g, gamma, gamma_prime, value, invariants });
            }
        }
    }
    Err(Gsp4Error::BudgetExhausted { w: budget.max_w, radius: budget.max_radius })
}
