use std::path::Path;

use hecketwist::characters::kappa_pair;
use hecketwist::exactfield::arith::gcd;
use hecketwist::gsp4::{nonvanishing_witness, sample_component, ComponentLabel, WitnessBudget};
use hecketwist::heckedata::{Form, SiegelForm, DEFAULT_TOL};
use hecketwist::laurent::{coprimality_vs_binomial, mu_norm, rewrite_invariant_pair, VarAlphabet};
use hecketwist::relations::{
    angle_relation_test, lambda_p2_polynomial, pairwise_distinct_factors, satake_product_test, satake_relation_test,
    test_relation, test_trace_relation, twist_search, PrimeSample, DEFAULT_ANGLE_TOL,
};
use hecketwist::{CycNum, Poly};
use serde_json::{json, Value};

use crate::report::{failed, invalid, CliError, Outcome};
use crate::SatakeBuiltin;

pub fn load_form(path: &Path) -> Result<Form, CliError> {
    let src = std::fs::read_to_string(path).map_err(|e| invalid(format!("cannot read {}: {e}", path.display())))?;
    Form::from_json(&src).map_err(|e| invalid(format!("{}: {e}", path.display())))
}

fn load_siegel(path: &Path) -> Result<SiegelForm, CliError> {
    match load_form(path)? {
        Form::Siegel(f) => Ok(f),
        Form::Elliptic(_) => Err(invalid(format!("{}: a Siegel form is required", path.display()))),
    }
}

fn parse_poly(src: &str) -> Result<Poly, CliError> {
    Poly::parse_canonical(src).map_err(|e| invalid(format!("polynomial {src:?}: {e}")))
}

fn sample(f: &SiegelForm, f2: &SiegelForm, primes: &[u64]) -> Result<PrimeSample, CliError> {
    if primes.is_empty() {
        Ok(PrimeSample::shared(f, f2))
    } else {
        PrimeSample::from_primes(primes.to_vec(), f, f2).map_err(invalid)
    }
}

fn table_primes(f: &Form, primes: &[u64]) -> Vec<u64> {
    if !primes.is_empty() {
        return primes.to_vec();
    }
    match f {
        Form::Siegel(f) => f.primes().collect(),
        Form::Elliptic(f) => f.eigen().keys().copied().collect(),
    }
}

fn cyc(x: &CycNum) -> Value {
    json!({ "text": x.to_string(), "value": x })
}

fn path_text(p: &Path) -> String {
    p.display().to_string()
}

pub fn bp(form: &Path, primes: &[u64]) -> Result<Outcome, CliError> {
    let f = load_siegel(form)?;
    let mut out = Vec::new();
    for p in table_primes(&Form::Siegel(f.clone()), primes) {
        let b = f.bp(p).map_err(failed)?;
        out.push(json!({ "p": p, "bp": cyc(&b) }));
    }
    Outcome::new(json!({ "form": path_text(form), "primes": primes }), json!({ "bp": out }))
}

pub fn euler(form: &Path, primes: &[u64]) -> Result<Outcome, CliError> {
    let f = load_form(form)?;
    let mut out = Vec::new();
    for p in table_primes(&f, primes) {
        let coeffs: Vec<Value> = match &f {
            Form::Siegel(g) => g.spin_euler_factor(p).map_err(failed)?.iter().map(cyc).collect(),
            Form::Elliptic(g) => g.euler_factor(p).map_err(failed)?.iter().map(cyc).collect(),
        };
        out.push(json!({ "p": p, "coefficients": coeffs }));
    }
    Outcome::new(json!({ "form": path_text(form), "primes": primes }), json!({ "euler_factors": out }))
}

fn complex_pair(re: f64, im: f64) -> Value {
    json!([re, im])
}

pub fn satake(form: &Path, primes: &[u64], tol: Option<f64>) -> Result<Outcome, CliError> {
    let f = load_form(form)?;
    let tol = tol.unwrap_or(DEFAULT_TOL);
    let mut out = Vec::new();
    for p in table_primes(&f, primes) {
        out.push(match &f {
            Form::Siegel(g) => {
                let set = g.satake_numeric(p, tol).map_err(failed)?;
                let betas: Vec<Value> = set.betas.iter().map(|b| complex_pair(b.re, b.im)).collect();
                json!({ "p": p, "betas": betas, "s_p": complex_pair(set.s_p.re, set.s_p.im), "pairing_error": set.pairing_error })
            }
            Form::Elliptic(g) => {
                let roots: Vec<Value> = g.satake(p).map_err(failed)?.iter().map(|b| complex_pair(b.re, b.im)).collect();
                json!({ "p": p, "betas": roots })
            }
        });
    }
    Outcome::new(json!({ "form": path_text(form), "primes": primes, "tol": tol }), json!({ "satake": out }))
}

pub fn kappa(form: &Path, form2: &Path) -> Result<Outcome, CliError> {
    let (f, f2) = (load_siegel(form)?, load_siegel(form2)?);
    let k = kappa_pair(f.weights(), f.character(), f2.weights(), f2.character()).map_err(failed)?;
    Outcome::new(json!({ "form": path_text(form), "form2": path_text(form2) }), k)
}

pub fn test_relation_cmd(poly: &str, form: &Path, form2: &Path, primes: &[u64], trace: bool) -> Result<Outcome, CliError> {
    let p = parse_poly(poly)?;
    let (f, f2) = (load_siegel(form)?, load_siegel(form2)?);
    let s = sample(&f, &f2, primes)?;
    let r = if trace { test_trace_relation(&p, &f, &f2, &s) } else { test_relation(&p, &f, &f2, &s) }.map_err(failed)?;
    let warnings = r.warnings.clone();
    let inputs = json!({ "poly": poly, "form": path_text(form), "form2": path_text(form2), "primes": primes, "trace": trace });
    Ok(Outcome::new(inputs, r)?.warn(warnings))
}

pub fn test_satake_relation(
    polys: &[String],
    builtin: Option<SatakeBuiltin>,
    form: &Path,
    form2: &Path,
    primes: &[u64],
) -> Result<Outcome, CliError> {
    let factors: Vec<Poly> = match builtin {
        Some(SatakeBuiltin::PairwiseDistinct) => pairwise_distinct_factors().to_vec(),
        Some(SatakeBuiltin::LambdaP2) => vec![lambda_p2_polynomial()],
        None => polys.iter().map(|p| parse_poly(p)).collect::<Result<_, _>>()?,
    };
    if factors.is_empty() {
        return Err(invalid("give --poly or --builtin"));
    }
    let (f, f2) = (load_siegel(form)?, load_siegel(form2)?);
    let s = sample(&f, &f2, primes)?;
    let r = match &factors[..] {
        [p] => satake_relation_test(p, &f, &f2, &s),
        many => satake_product_test(many, &f, &f2, &s),
    }
    .map_err(failed)?;
    let warnings = r.warnings.clone();
    let builtin = builtin.map(|b| match b {
        SatakeBuiltin::PairwiseDistinct => "pairwise-distinct",
        SatakeBuiltin::LambdaP2 => "lambda-p2",
    });
    let inputs = json!({ "poly": polys, "builtin": builtin, "form": path_text(form), "form2": path_text(form2), "primes": primes });
    Ok(Outcome::new(inputs, r)?.warn(warnings))
}

#[allow(clippy::too_many_arguments)]
pub fn angle_test(
    m: i64,
    n: i64,
    alpha: f64,
    form: &Path,
    form2: &Path,
    primes: &[u64],
    tol: Option<f64>,
) -> Result<Outcome, CliError> {
    if m == 0 || n == 0 {
        return Err(invalid("m and n must be nonzero"));
    }
    let (f, f2) = (load_siegel(form)?, load_siegel(form2)?);
    let s = sample(&f, &f2, primes)?;
    let tol = tol.unwrap_or(DEFAULT_ANGLE_TOL);
    let r = angle_relation_test(m, n, alpha, &f, &f2, &s, tol).map_err(failed)?;
    let warnings = r.warnings.clone();
    let inputs = json!({ "m": m, "n": n, "alpha": alpha, "form": path_text(form), "form2": path_text(form2), "primes": primes, "tol": tol });
    Ok(Outcome::new(inputs, r)?.warn(warnings))
}

pub fn twist_search_cmd(form: &Path, form2: &Path, modulus_bound: u64, order_bound: u64) -> Result<Outcome, CliError> {
    let (f, f2) = (load_siegel(form)?, load_siegel(form2)?);
    let certs = twist_search(&f, &f2, modulus_bound, order_bound).map_err(failed)?;
    let inputs = json!({ "form": path_text(form), "form2": path_text(form2), "modulus_bound": modulus_bound, "order_bound": order_bound });
    Outcome::new(inputs, json!({ "certificates": certs }))
}

pub fn mu_norm_cmd(poly: &str, var: &str, d: u64, vars: Option<&str>) -> Result<Outcome, CliError> {
    let alphabet = match vars {
        Some(list) => VarAlphabet::new(&list.split(',').map(str::trim).collect::<Vec<_>>()).map_err(invalid)?,
        None => VarAlphabet::canonical(),
    };
    let p = Poly::parse(poly, &alphabet).map_err(|e| invalid(format!("polynomial {poly:?}: {e}")))?;
    let i = alphabet.index(var).ok_or_else(|| invalid(format!("unknown variable {var:?}")))?;
    let r = mu_norm(&p, i, d).map_err(failed)?;
    let inputs = json!({ "poly": poly, "var": var, "d": d, "vars": alphabet.names() });
    Outcome::new(inputs, json!({ "norm": r.norm.to_string(), "reduced": r.reduced.to_string() }))
}

pub fn rewrite_invariant(poly: &str) -> Result<Outcome, CliError> {
    let p = parse_poly(poly)?;
    let r = rewrite_invariant_pair(&p).map_err(failed)?;
    Outcome::new(json!({ "poly": poly }), json!({ "rewritten": r.to_string() }))
}

pub fn coprime_check(poly: &str, kappa: u64, kappa2: u64) -> Result<Outcome, CliError> {
    let p = parse_poly(poly)?;
    let factors = coprimality_vs_binomial(&p, kappa as i64, kappa2 as i64).map_err(failed)?;
    let list: Vec<Value> = factors.iter().map(|b| json!({ "zeta": b.zeta, "factor": b.factor.to_string() })).collect();
    let inputs = json!({ "poly": poly, "kappa": kappa, "kappa_prime": kappa2 });
    Outcome::new(inputs, json!({ "coprime": list.is_empty(), "factors": list }))
}

fn label(kappa: u64, kappa2: u64, zeta_k: i64) -> Result<ComponentLabel, CliError> {
    if kappa == 0 || kappa2 == 0 {
        return Err(invalid("kappa and kappa' must be positive"));
    }
    Ok(ComponentLabel::new(gcd(kappa, kappa2), zeta_k))
}

pub fn witness(poly: &str, kappa: u64, kappa2: u64, zeta_k: i64, budget: WitnessBudget) -> Result<Outcome, CliError> {
    let p = parse_poly(poly)?;
    let l = label(kappa, kappa2, zeta_k)?;
    let w = nonvanishing_witness(&p, kappa, kappa2, l, budget).map_err(failed)?;
    let inputs = json!({
        "poly": poly, "kappa": kappa, "kappa_prime": kappa2, "component": l,
        "max_w": budget.max_w, "max_radius": budget.max_radius,
    });
    Outcome::new(inputs, w)
}

#[allow(clippy::too_many_arguments)]
pub fn component_sample(
    poly: &str,
    q: u64,
    kappa: u64,
    kappa2: u64,
    zeta_k: i64,
    trials: u64,
    seed: u64,
) -> Result<Outcome, CliError> {
    let p = parse_poly(poly)?;
    let l = label(kappa, kappa2, zeta_k)?;
    let stats = sample_component(&p, q, kappa, kappa2, l, trials, seed).map_err(failed)?;
    let inputs = json!({ "poly": poly, "q": q, "kappa": kappa, "kappa_prime": kappa2, "component": l, "trials": trials });
    Ok(Outcome::new(inputs, stats)?.seed(seed))
}

