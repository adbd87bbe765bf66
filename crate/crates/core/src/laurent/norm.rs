use crate::CycNum;

use super::{LaurentError, LaurentPoly, Monomial};

type Poly = LaurentPoly<CycNum>;

/// The μ_d-norm `F = ∏_{ζ∈μ_d} p(ζ·x)` and its deflation `Q` with `Q(x^d) = F`.
#[derive(Debug, Clone, PartialEq)]
pub struct MuNorm {
    pub norm: Poly,
    pub reduced: Poly,
}

/// μ_d-norm of `p` in variable `var`.
pub fn mu_norm(p: &Poly, var: usize, d: u64) -> Result<MuNorm, LaurentError> {
    if p.is_zero() {
        return Err(LaurentError::ZeroInput);
    }
    if d == 0 {
        return Err(LaurentError::NonPositiveDegree);
    }
    if var >= p.alphabet().len() {
        return Err(LaurentError::AlphabetMismatch);
    }
    if d == 1 {
        return Ok(MuNorm { norm: p.clone(), reduced: p.clone() });
    }
    let n = p.alphabet().len();
    let x = Monomial::var(n, var, 1);
    let mut f = p.clone();
    for j in 1..d {
        let conj = p.substitute(&[(var, CycNum::zeta(d, j as i64), x.clone())])?;
        f = f.checked_mul(&conj)?;
    }
    let norm = f.canonical_coeffs();
    let reduced = norm
        .deflate(var, d as i32)
        .ok_or_else(|| LaurentError::Internal("norm is not a function of x^d".into()))?;
    Ok(MuNorm { norm, reduced })
}

impl Poly {
    /// Rewrites every coefficient at its minimal conductor.
    pub fn canonical_coeffs(&self) -> Self {
        Poly::from_terms(self.alphabet(), self.terms().map(|(m, c)| (m.clone(), c.minimal_form())))
    }
}
