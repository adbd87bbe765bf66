use crate::Scalar;

use super::{LaurentError, LaurentPoly, Monomial};

/// Exact quotient `p / q`.
///
/// Both operands are shifted by monomial units into the ordinary polynomial
/// ring and divided by leading terms; any remainder means no quotient exists.
/// A variable that occurs in `p` only with nonnegative exponents is treated as
/// a polynomial variable, so the quotient may not carry negative powers of it:
/// `s^-1 * a / s` succeeds while `a / b` does not.
pub fn exact_div<C: Scalar>(p: &LaurentPoly<C>, q: &LaurentPoly<C>) -> Result<LaurentPoly<C>, LaurentError> {
    if p.alphabet() != q.alphabet() {
        return Err(LaurentError::AlphabetMismatch);
    }
    if q.is_zero() {
        return Err(LaurentError::DivisionByZero);
    }
    let alphabet = p.alphabet().clone();
    if p.is_zero() {
        return Ok(LaurentPoly::zero(&alphabet));
    }
    let pmin = p.min_exponents();
    let qmin = q.min_exponents();
    let mut rem = p.mul_monomial(&pmin.pow(-1));
    let q0 = q.mul_monomial(&qmin.pow(-1));
    let (lm, lc) = q0.leading_term().map(|(m, c)| (m.clone(), c.clone())).unwrap();
    let lc_inv = lc.inverse().ok_or(LaurentError::NotInvertible)?;

    let mut quot = LaurentPoly::zero(&alphabet);
    while let Some((m, c)) = rem.leading_term().map(|(m, c)| (m.clone(), c.clone())) {
        let shift = m.div(&lm);
        if shift.0.iter().any(|&e| e < 0) {
            return Err(LaurentError::NotDivisible);
        }
        let k = c * lc_inv.clone();
        let step = q0.mul_monomial(&shift).scale(&k);
        rem = rem.checked_sub(&step)?;
        quot.add_term(shift, k);
    }
    let quot = quot.mul_monomial(&pmin.div(&qmin));
    let qlo = quot.min_exponents();
    if pmin.0.iter().zip(&qlo.0).any(|(&pe, &re)| pe >= 0 && re < 0) {
        return Err(LaurentError::NotDivisible);
    }
    Ok(quot)
}

impl<C: Scalar> LaurentPoly<C> {
    /// Whether every exponent of variable `i` is a multiple of `k`.
    pub fn is_function_of_power(&self, i: usize, k: i32) -> bool {
        self.terms().all(|(m, _)| m.0[i] % k == 0)
    }

    /// Divides every exponent of variable `i` by `k`; `None` if some exponent
    /// is not a multiple of `k`.
    pub fn deflate(&self, i: usize, k: i32) -> Option<Self> {
        if !self.is_function_of_power(i, k) {
            return None;
        }
        Some(LaurentPoly::from_terms(
            self.alphabet(),
            self.terms().map(|(m, c)| {
                let mut m: Monomial = m.clone();
                m.0[i] /= k;
                (m, c.clone())
            }),
        ))
    }
}
