//! Rewriting torus-invariant functions in trace coordinates.
//!
//! A function of `s, x1, x2` that is symmetric in `x1, x2` and invariant under
//! `x_i ↦ s/x_i` is a polynomial in `u_i = x_i + s/x_i`, symmetric in `u1, u2`,
//! hence a polynomial in `e1 = u1 + u2 = a` and `e2 = u1·u2 = s(b − 1)`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;

use crate::CycNum;

use super::{LaurentError, LaurentPoly, Monomial, VarAlphabet};

type Poly = LaurentPoly<CycNum>;

/// The symmetries required of an invariant function.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Symmetry {
    SwapX,
    InvertX1,
    InvertX2,
    SwapXPrime,
    InvertX1Prime,
    InvertX2Prime,
}

impl fmt::Display for Symmetry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Symmetry::SwapX => "x1 <-> x2",
            Symmetry::InvertX1 => "x1 -> s/x1",
            Symmetry::InvertX2 => "x2 -> s/x2",
            Symmetry::SwapXPrime => "x1' <-> x2'",
            Symmetry::InvertX1Prime => "x1' -> s'/x1'",
            Symmetry::InvertX2Prime => "x2' -> s'/x2'",
        })
    }
}

struct Slots {
    s: usize,
    x1: usize,
    x2: usize,
    a: usize,
    b: usize,
}

fn slots(alphabet: &VarAlphabet, primed: bool) -> Result<Slots, LaurentError> {
    let tick = if primed { "'" } else { "" };
    let get = |n: &str| alphabet.require(&format!("{n}{tick}"));
    Ok(Slots { s: get("s")?, x1: get("x1")?, x2: get("x2")?, a: get("a")?, b: get("b")? })
}

fn inversion(n: usize, x: usize, s: usize) -> Monomial {
    let mut m = Monomial::var(n, x, -1);
    m.0[s] += 1;
    m
}

/// Checks the six symmetries, reporting the first that fails.
pub fn check_invariance(p: &Poly) -> Result<(), LaurentError> {
    let alphabet = p.alphabet();
    let n = alphabet.len();
    for (primed, swap, inv1, inv2) in [
        (false, Symmetry::SwapX, Symmetry::InvertX1, Symmetry::InvertX2),
        (true, Symmetry::SwapXPrime, Symmetry::InvertX1Prime, Symmetry::InvertX2Prime),
    ] {
        let sl = slots(alphabet, primed)?;
        if &p.swap_vars(sl.x1, sl.x2) != p {
            return Err(LaurentError::NotInvariant(swap));
        }
        for (x, sym) in [(sl.x1, inv1), (sl.x2, inv2)] {
            let img = p.substitute(&[(x, CycNum::from(1), inversion(n, x, sl.s))])?;
            if &img != p {
                return Err(LaurentError::NotInvariant(sym));
            }
        }
    }
    Ok(())
}

/// The trace coordinates `(a, b)` as Laurent polynomials in `s, x1, x2`
/// (or the primed variables).
pub fn torus_coordinates(alphabet: &VarAlphabet, primed: bool) -> Result<(Poly, Poly), LaurentError> {
    let sl = slots(alphabet, primed)?;
    let n = alphabet.len();
    let mono = |es: &[(usize, i32)]| {
        let mut m = Monomial::one(n);
        for &(i, e) in es {
            m.0[i] += e;
        }
        m
    };
    let one = CycNum::from(1);
    let (s, x1, x2) = (sl.s, sl.x1, sl.x2);
    let a = Poly::from_terms(
        alphabet,
        [
            mono(&[(x1, 1)]),
            mono(&[(s, 1), (x1, -1)]),
            mono(&[(x2, 1)]),
            mono(&[(s, 1), (x2, -1)]),
        ]
        .into_iter()
        .map(|m| (m, one.clone())),
    );
    let b = Poly::from_terms(
        alphabet,
        [
            mono(&[(x1, 1), (x2, 1), (s, -1)]),
            mono(&[(x1, 1), (x2, -1)]),
            mono(&[(x2, 1), (x1, -1)]),
            mono(&[(s, 1), (x1, -1), (x2, -1)]),
            mono(&[]),
        ]
        .into_iter()
        .map(|m| (m, one.clone())),
    );
    Ok((a, b))
}

fn binomial(n: u32, k: u32) -> BigInt {
    (0..k).fold(BigInt::from(1), |acc, i| acc * (n - i) / (i + 1))
}

/// `(x + s/x)^n`.
fn u_power(alphabet: &VarAlphabet, x: usize, s: usize, n: u32) -> Poly {
    let len = alphabet.len();
    Poly::from_terms(
        alphabet,
        (0..=n).map(|k| {
            let mut m = Monomial::var(len, x, n as i32 - 2 * k as i32);
            m.0[s] += k as i32;
            (m, CycNum::from_integer(binomial(n, k)))
        }),
    )
}

/// Writes `p = Σ_n C_n · (x + s/x)^n` with `C_n` free of `x`.
fn peel(p: &Poly, x: usize, s: usize) -> Result<BTreeMap<u32, Poly>, LaurentError> {
    let alphabet = p.alphabet().clone();
    let mut rest = p.clone();
    let mut out: BTreeMap<u32, Poly> = BTreeMap::new();
    while let Some(top) = rest.terms().map(|(m, _)| m.0[x]).max() {
        if top < 0 {
            return Err(LaurentError::Internal("peeling left a negative power".into()));
        }
        let c = Poly::from_terms(
            &alphabet,
            rest.terms().filter(|(m, _)| m.0[x] == top).map(|(m, c)| {
                let mut m = m.clone();
                m.0[x] = 0;
                (m, c.clone())
            }),
        );
        rest = rest.checked_sub(&c.checked_mul(&u_power(&alphabet, x, s, top as u32))?)?;
        let slot = out.entry(top as u32).or_insert_with(|| Poly::zero(&alphabet));
        *slot = slot.checked_add(&c)?;
    }
    out.retain(|_, c| !c.is_zero());
    Ok(out)
}

/// Rewrites the `(x1, x2)` dependence of `p` in terms of `a, b`.
fn rewrite_one(p: &Poly, sl: &Slots) -> Result<Poly, LaurentError> {
    let alphabet = p.alphabet().clone();
    let mut grid: BTreeMap<(u32, u32), Poly> = BTreeMap::new();
    for (i, ci) in peel(p, sl.x1, sl.s)? {
        for (j, cij) in peel(&ci, sl.x2, sl.s)? {
            grid.insert((i, j), cij);
        }
    }

    let mut sym: BTreeMap<(u32, u32), Poly> = BTreeMap::new();
    while let Some(((i, j), c)) = grid.pop_last() {
        if i < j {
            return Err(LaurentError::Internal("leading term is not symmetric".into()));
        }
        let (alpha, beta) = (i - j, j);
        for k in 0..=alpha {
            let key = (k + beta, alpha - k + beta);
            if key == (i, j) {
                continue;
            }
            let term = c.scale(&CycNum::from_integer(binomial(alpha, k)));
            let slot = grid.entry(key).or_insert_with(|| Poly::zero(&alphabet));
            *slot = slot.checked_sub(&term)?;
            if slot.is_zero() {
                grid.remove(&key);
            }
        }
        let slot = sym.entry((alpha, beta)).or_insert_with(|| Poly::zero(&alphabet));
        *slot = slot.checked_add(&c)?;
    }

    let n = alphabet.len();
    let a = Poly::term(&alphabet, CycNum::from(1), Monomial::var(n, sl.a, 1));
    let mut sb = Poly::term(&alphabet, CycNum::from(1), Monomial::var(n, sl.b, 1));
    sb.add_term(Monomial::one(n), CycNum::from(-1));
    let e2 = sb.mul_monomial(&Monomial::var(n, sl.s, 1));
    let mut out = Poly::zero(&alphabet);
    for ((alpha, beta), c) in sym {
        if c.is_zero() {
            continue;
        }
        let t = c.checked_mul(&a.pow(alpha))?.checked_mul(&e2.pow(beta))?;
        out = out.checked_add(&t)?;
    }
    Ok(out)
}

/// Rewrites an invariant function of `s, s', x1, x2, x1', x2'` as a polynomial
/// `R(s, s', a, b, a', b')`, verified by substituting the trace coordinates back.
pub fn rewrite_invariant_pair(p: &Poly) -> Result<Poly, LaurentError> {
    let alphabet = p.alphabet();
    let unp = slots(alphabet, false)?;
    let pri = slots(alphabet, true)?;
    let allowed = [unp.s, unp.x1, unp.x2, pri.s, pri.x1, pri.x2];
    if let Some(bad) = p.used_vars().into_iter().find(|i| !allowed.contains(i)) {
        return Err(LaurentError::UnexpectedVariable(alphabet.name(bad).to_string()));
    }
    check_invariance(p)?;
    let r = rewrite_one(&rewrite_one(p, &unp)?, &pri)?;

    let (a, b) = torus_coordinates(alphabet, false)?;
    let (a2, b2) = torus_coordinates(alphabet, true)?;
    let back = r.compose(&[(unp.a, a), (unp.b, b), (pri.a, a2), (pri.b, b2)])?;
    if &back != p {
        return Err(LaurentError::Internal("back-substitution does not reproduce the input".into()));
    }
    Ok(r)
}
