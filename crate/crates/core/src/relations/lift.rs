use crate::laurent::{coprimality_vs_binomial, exact_div, mu_norm, LaurentError, Monomial, VarAlphabet};
use crate::{CycNum, Poly};

use super::RelationError;

/// μ_k-norm in `var`, or `p` itself when it already depends on `var^k` only.
fn norm_in(p: &Poly, var: usize, k: u64) -> Result<Poly, LaurentError> {
    if k <= 1 || p.is_function_of_power(var, k as i32) {
        return Ok(p.clone());
    }
    Ok(mu_norm(p, var, k)?.norm)
}

fn ensure_coprime(p: &Poly, kappa: (u64, u64)) -> Result<(), RelationError> {
    let factors = coprimality_vs_binomial(p, kappa.0 as i64, kappa.1 as i64)?;
    if factors.is_empty() {
        Ok(())
    } else {
        Err(RelationError::NotCoprime(factors))
    }
}

/// From `P(x, y)` builds `𝒫 = Q(a^{2d}/s^d, a'^{2d}/s'^d)`, where `Q(x^{2d}, y^{2d})`
/// is the μ_{2d}-norm of `P` taken in `x` and then in `y`. If `P(λ_p, λ'_p) = 0`
/// and `ε(p²)^d = ε'(p²)^d = 1` then `𝒫` vanishes at the trace data of `p`.
///
/// The result is checked to be coprime to `s^κ − s'^κ'` for the given `(κ, κ')`.
pub fn lift_normalized_relation(p: &Poly, d: u64, kappa: (u64, u64)) -> Result<Poly, RelationError> {
    if p.is_zero() {
        return Err(RelationError::ZeroInput);
    }
    if d == 0 {
        return Err(LaurentError::NonPositiveDegree.into());
    }
    let alphabet = p.alphabet();
    let x = alphabet.require("x")?;
    let y = alphabet.require("y")?;
    if let Some(bad) = p.used_vars().into_iter().find(|&i| i != x && i != y) {
        return Err(LaurentError::UnexpectedVariable(alphabet.name(bad).to_string()).into());
    }
    let k = 2 * d;
    let f = norm_in(&norm_in(p, x, k)?, y, k)?;
    let q = f
        .deflate(x, k as i32)
        .and_then(|g| g.deflate(y, k as i32))
        .ok_or_else(|| LaurentError::Internal("norm does not deflate".into()))?;
    let target = VarAlphabet::canonical();
    let n = target.len();
    let mono = |a: &str, s: &str| {
        let mut m = Monomial::one(n);
        m.0[target.index(a).unwrap()] = k as i32;
        m.0[target.index(s).unwrap()] = -(d as i32);
        m
    };
    let mut images = vec![(CycNum::from(1), Monomial::one(n)); alphabet.len()];
    images[x] = (CycNum::from(1), mono("a", "s"));
    images[y] = (CycNum::from(1), mono("a'", "s'"));
    let out = q.substitute_into(&target, &images)?;
    ensure_coprime(&out, kappa)?;
    Ok(out)
}

/// From `P(s, s', a, b, a', b')` coprime to `s^κ − s'^κ'` builds
/// `𝒫 = Q(s^d, s'^d, a^{2m}, b^{2m}, a'^{2m}, b'^{2m})`, the μ-norm of `P` in
/// `a, b, a', b'` (order `2m`) and `s, s'` (order `d`), then divides out any
/// common factor with `s^κ − s'^κ'`. On real data with `ε^{2d} = ε'^{2d} = 1`,
/// `𝒫` vanishes at the trace data of `p` whenever
/// `P(p^u, p^{u'}, |a_p|, |b_p|, |a'_p|, |b'_p|) = 0`.
pub fn lift_absolute_relation(p: &Poly, d: u64, m: u64, kappa: (u64, u64)) -> Result<Poly, RelationError> {
    if p.is_zero() {
        return Err(RelationError::ZeroInput);
    }
    if d == 0 || m == 0 {
        return Err(LaurentError::NonPositiveDegree.into());
    }
    let alphabet = p.alphabet();
    let names = ["a", "b", "a'", "b'", "s", "s'"];
    let vars: Vec<Option<usize>> = names.iter().map(|n| alphabet.index(n)).collect();
    if let Some(bad) = p.used_vars().into_iter().find(|i| !vars.contains(&Some(*i))) {
        return Err(LaurentError::UnexpectedVariable(alphabet.name(bad).to_string()).into());
    }
    ensure_coprime(p, kappa)?;
    let mut out = p.clone();
    for (i, var) in vars.iter().enumerate() {
        if let Some(v) = var {
            out = norm_in(&out, *v, if i < 4 { 2 * m } else { d })?;
        }
    }
    loop {
        let factors = coprimality_vs_binomial(&out, kappa.0 as i64, kappa.1 as i64)?;
        let Some(b) = factors.first() else {
            break;
        };
        out = exact_div(&out, &b.factor)?;
    }
    Ok(out)
}
