use num_complex::Complex64;
use num_traits::Zero;

use crate::characters::kappa_pair;
use crate::heckedata::{SiegelForm, Theta};
use crate::laurent::{coprimality_vs_binomial, rewrite_invariant_pair, LaurentError};
use crate::{CycNum, Poly};

use super::{Mode, PrimeSample, RelationError, RelationReport};

/// Default tolerance of [`angle_relation_test`].
pub const DEFAULT_ANGLE_TOL: f64 = 1e-6;

/// Alphabet slots of the named variables; fails if `p` uses any other variable.
fn slots<const N: usize>(p: &Poly, names: [&str; N]) -> Result<[Option<usize>; N], LaurentError> {
    let alphabet = p.alphabet();
    let slots = names.map(|n| alphabet.index(n));
    if let Some(bad) = p.used_vars().into_iter().find(|i| !slots.contains(&Some(*i))) {
        return Err(LaurentError::UnexpectedVariable(alphabet.name(bad).to_string()));
    }
    Ok(slots)
}

fn eval_at<T: crate::Scalar>(p: &Poly, slots: &[Option<usize>], vals: Vec<T>) -> Result<T, LaurentError> {
    let mut values = vec![T::one(); p.alphabet().len()];
    for (slot, v) in slots.iter().zip(vals) {
        if let Some(i) = slot {
            values[*i] = v;
        }
    }
    p.eval(&values)
}

/// `P(s_p, s'_p, a_p, b_p, a'_p, b'_p)`, exactly.
pub fn exact_value(p: &Poly, f: &SiegelForm, f2: &SiegelForm, prime: u64) -> Result<CycNum, RelationError> {
    let slots = slots(p, ["s", "s'", "a", "b", "a'", "b'"])?;
    let ap = |g: &SiegelForm| -> Result<CycNum, RelationError> {
        let ev = g.eigen().get(&prime).ok_or(RelationError::BadPrime(prime))?;
        Ok(CycNum::from_rational(&ev.ap))
    };
    let vals = vec![f.s_p(prime)?, f2.s_p(prime)?, ap(f)?, f.bp(prime)?, ap(f2)?, f2.bp(prime)?];
    Ok(eval_at(p, &slots, vals)?)
}

/// `P(s_p, s'_p, β1, β2, β1', β2')` at the numeric Satake parameters.
pub fn satake_numeric_value(
    p: &Poly,
    f: &SiegelForm,
    f2: &SiegelForm,
    prime: u64,
    tol: f64,
) -> Result<Complex64, RelationError> {
    let slots = slots(p, ["s", "s'", "x1", "x2", "x1'", "x2'"])?;
    let (b, b2) = (f.satake_numeric(prime, tol)?, f2.satake_numeric(prime, tol)?);
    let vals = vec![b.s_p, b2.s_p, b.betas[0], b.betas[1], b2.betas[0], b2.betas[1]];
    Ok(eval_at(p, &slots, vals)?)
}

fn count(
    relation: String,
    sample: &PrimeSample,
    mode: Mode,
    mut vanishes: impl FnMut(u64) -> Result<bool, RelationError>,
) -> Result<RelationReport, RelationError> {
    if sample.is_empty() {
        return Err(RelationError::EmptySample);
    }
    let mut vanishing_primes = Vec::new();
    for &p in sample.primes() {
        if vanishes(p)? {
            vanishing_primes.push(p);
        }
    }
    Ok(RelationReport {
        relation,
        rewritten: None,
        total: sample.len() as u64,
        vanishing: vanishing_primes.len() as u64,
        vanishing_primes,
        mode,
        warnings: Vec::new(),
    })
}

fn exact_report(p: &Poly, f: &SiegelForm, f2: &SiegelForm, sample: &PrimeSample) -> Result<RelationReport, RelationError> {
    slots(p, ["s", "s'", "a", "b", "a'", "b'"])?;
    count(p.to_string(), sample, Mode::Exact, |q| Ok(exact_value(p, f, f2, q)?.is_zero()))
}

/// Evaluates `P(s, s', a, b, a', b')` exactly at every sampled prime.
///
/// A warning is attached when `P` is not coprime to `s^κ − s'^κ'`.
pub fn test_relation(p: &Poly, f: &SiegelForm, f2: &SiegelForm, sample: &PrimeSample) -> Result<RelationReport, RelationError> {
    let mut report = exact_report(p, f, f2, sample)?;
    report.warnings.extend(coprime_warning(p, f, f2)?);
    Ok(report)
}

fn coprime_warning(p: &Poly, f: &SiegelForm, f2: &SiegelForm) -> Result<Option<String>, RelationError> {
    let k = kappa_pair(f.weights(), f.character(), f2.weights(), f2.character())?;
    let factors = coprimality_vs_binomial(p, k.kappa as i64, k.kappa_prime as i64)?;
    if factors.is_empty() {
        return Ok(None);
    }
    let list: Vec<String> = factors.iter().map(|b| b.factor.to_string()).collect();
    Ok(Some(format!(
        "relation is not coprime to s^{} - s'^{}; common factors: {}",
        k.kappa,
        k.kappa_prime,
        list.join(", ")
    )))
}

/// [`test_relation`] for a polynomial in `a, a'` only.
pub fn test_trace_relation(p: &Poly, f: &SiegelForm, f2: &SiegelForm, sample: &PrimeSample) -> Result<RelationReport, RelationError> {
    slots(p, ["a", "a'"])?;
    exact_report(p, f, f2, sample)
}

/// Counts primes with `|mθ_p + nθ'_p − α| ≤ tol`. Primes where either angle is
/// undefined are skipped with a warning.
pub fn angle_relation_test(
    m: i64,
    n: i64,
    alpha: f64,
    f: &SiegelForm,
    f2: &SiegelForm,
    sample: &PrimeSample,
    tol: f64,
) -> Result<RelationReport, RelationError> {
    let mut kept = Vec::new();
    let mut skipped = Vec::new();
    for &p in sample.primes() {
        match (f.theta(p)?, f2.theta(p)?) {
            (Theta::Angle(t), Theta::Angle(t2)) => kept.push((p, t, t2)),
            _ => skipped.push(p),
        }
    }
    if kept.is_empty() {
        return Err(RelationError::EmptySample);
    }
    let vanishing_primes: Vec<u64> = kept
        .iter()
        .filter(|(_, t, t2)| (m as f64 * t + n as f64 * t2 - alpha).abs() <= tol)
        .map(|(p, _, _)| *p)
        .collect();
    let mut warnings = Vec::new();
    if !skipped.is_empty() {
        warnings.push(format!("skipped primes with |lambda_p| > 4: {skipped:?}"));
    }
    Ok(RelationReport {
        relation: format!("{m}*theta {} {}*theta' = {alpha}", if n < 0 { '-' } else { '+' }, n.abs()),
        rewritten: None,
        total: kept.len() as u64,
        vanishing: vanishing_primes.len() as u64,
        vanishing_primes,
        mode: Mode::Numeric(tol),
        warnings,
    })
}

/// Tests a relation in the Satake variables `s, s', x1, x2, x1', x2'` by
/// rewriting it into trace coordinates and evaluating exactly.
pub fn satake_relation_test(
    p: &Poly,
    f: &SiegelForm,
    f2: &SiegelForm,
    sample: &PrimeSample,
) -> Result<RelationReport, RelationError> {
    slots(p, ["s", "s'", "x1", "x2", "x1'", "x2'"])?;
    let r = rewrite_invariant_pair(p)?;
    let mut report = test_relation(&r, f, f2, sample)?;
    report.relation = p.to_string();
    report.rewritten = Some(r.to_string());
    Ok(report)
}

/// [`satake_relation_test`] for a relation given as a product of invariant
/// factors. Each factor is rewritten separately and a prime counts as
/// vanishing when some factor vanishes there.
pub fn satake_product_test(
    factors: &[Poly],
    f: &SiegelForm,
    f2: &SiegelForm,
    sample: &PrimeSample,
) -> Result<RelationReport, RelationError> {
    let mut rewritten = Vec::new();
    let mut warnings = Vec::new();
    for p in factors {
        slots(p, ["s", "s'", "x1", "x2", "x1'", "x2'"])?;
        let r = rewrite_invariant_pair(p)?;
        warnings.extend(coprime_warning(&r, f, f2)?);
        rewritten.push(r);
    }
    let join = |ps: &[Poly]| ps.iter().map(|p| format!("({p})")).collect::<Vec<_>>().join(" * ");
    let mut report = count(join(factors), sample, Mode::Exact, |q| {
        for r in &rewritten {
            if exact_value(r, f, f2, q)?.is_zero() {
                return Ok(true);
            }
        }
        Ok(false)
    })?;
    report.rewritten = Some(join(&rewritten));
    report.warnings = warnings;
    Ok(report)
}
