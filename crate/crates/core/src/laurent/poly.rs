use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use crate::scalar::Scalar;

use super::LaurentError;

/// Canonical variable names: `s, s', a, b, a', b', x1, x2, x1', x2', t, u`.
pub const CANONICAL_VARS: [&str; 12] = ["s", "s'", "a", "b", "a'", "b'", "x1", "x2", "x1'", "x2'", "t", "u"];

/// An ordered list of distinct variable names; positions are stable.
#[derive(Clone, PartialEq, Eq)]
pub struct VarAlphabet(Arc<Vec<String>>);

impl VarAlphabet {
    pub fn new<S: AsRef<str>>(names: &[S]) -> Result<Self, LaurentError> {
        let names: Vec<String> = names.iter().map(|s| s.as_ref().to_string()).collect();
        for (i, n) in names.iter().enumerate() {
            if n.is_empty() || names[..i].contains(n) {
                return Err(LaurentError::BadAlphabet(n.clone()));
            }
        }
        Ok(VarAlphabet(Arc::new(names)))
    }

    pub fn canonical() -> Self {
        static CANON: std::sync::OnceLock<VarAlphabet> = std::sync::OnceLock::new();
        CANON
            .get_or_init(|| VarAlphabet::new(&CANONICAL_VARS).unwrap())
            .clone()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn index(&self, name: &str) -> Option<usize> {
        self.0.iter().position(|n| n == name)
    }

    pub fn name(&self, i: usize) -> &str {
        &self.0[i]
    }

    pub fn names(&self) -> &[String] {
        &self.0
    }

    pub(crate) fn require(&self, name: &str) -> Result<usize, LaurentError> {
        self.index(name).ok_or_else(|| LaurentError::UnknownVariable(name.to_string()))
    }
}

impl fmt::Debug for VarAlphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.0.iter()).finish()
    }
}

/// Exponent vector of a Laurent monomial, ordered graded-lexicographically.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial(pub Vec<i32>);

impl Monomial {
    pub fn one(n: usize) -> Self {
        Monomial(vec![0; n])
    }

    pub fn var(n: usize, i: usize, e: i32) -> Self {
        let mut m = Monomial::one(n);
        m.0[i] = e;
        m
    }

    pub fn degree(&self) -> i64 {
        self.0.iter().map(|&e| e as i64).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn div(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn pow(&self, e: i32) -> Monomial {
        Monomial(self.0.iter().map(|a| a * e).collect())
    }

    pub fn exponent(&self, i: usize) -> i32 {
        self.0[i]
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A multivariate Laurent polynomial: a finite map from monomials to nonzero coefficients.
#[derive(Clone, PartialEq)]
pub struct LaurentPoly<C> {
    alphabet: VarAlphabet,
    terms: BTreeMap<Monomial, C>,
}

/// Operation selector for [`poly_arith`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
}

/// Add, subtract or multiply two polynomials over the same alphabet.
pub fn poly_arith<C: Scalar>(
    p: &LaurentPoly<C>,
    q: &LaurentPoly<C>,
    op: ArithOp,
) -> Result<LaurentPoly<C>, LaurentError> {
    match op {
        ArithOp::Add => p.checked_add(q),
        ArithOp::Sub => p.checked_sub(q),
        ArithOp::Mul => p.checked_mul(q),
    }
}

impl<C: Scalar> LaurentPoly<C> {
    pub fn zero(alphabet: &VarAlphabet) -> Self {
        LaurentPoly { alphabet: alphabet.clone(), terms: BTreeMap::new() }
    }

    pub fn constant(alphabet: &VarAlphabet, c: C) -> Self {
        LaurentPoly::term(alphabet, c, Monomial::one(alphabet.len()))
    }

    pub fn term(alphabet: &VarAlphabet, c: C, m: Monomial) -> Self {
        assert_eq!(m.0.len(), alphabet.len(), "monomial length must match alphabet");
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        LaurentPoly { alphabet: alphabet.clone(), terms }
    }

    /// The variable `name` raised to the first power.
    pub fn var(alphabet: &VarAlphabet, name: &str) -> Result<Self, LaurentError> {
        let i = alphabet.require(name)?;
        Ok(LaurentPoly::term(alphabet, C::one(), Monomial::var(alphabet.len(), i, 1)))
    }

    pub fn from_terms(alphabet: &VarAlphabet, terms: impl IntoIterator<Item = (Monomial, C)>) -> Self {
        let mut p = LaurentPoly::zero(alphabet);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn alphabet(&self) -> &VarAlphabet {
        &self.alphabet
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending monomial order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &C)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Option<&C> {
        self.terms.get(m)
    }

    /// Largest term in the graded-lexicographic order.
    pub fn leading_term(&self) -> Option<(&Monomial, &C)> {
        self.terms.iter().next_back()
    }

    pub fn add_term(&mut self, m: Monomial, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get().clone() + c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    /// Whether `name` occurs with a nonzero exponent in some term.
    pub fn uses_var(&self, i: usize) -> bool {
        self.terms.keys().any(|m| m.0[i] != 0)
    }

    /// Indices of the variables that occur.
    pub fn used_vars(&self) -> Vec<usize> {
        (0..self.alphabet.len()).filter(|&i| self.uses_var(i)).collect()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    /// The constant coefficient if the polynomial has no variables.
    pub fn as_constant(&self) -> Option<C> {
        if self.terms.is_empty() {
            return Some(C::zero());
        }
        (self.is_constant()).then(|| self.terms.values().next().unwrap().clone())
    }

    fn check(&self, other: &Self) -> Result<(), LaurentError> {
        if self.alphabet != other.alphabet {
            return Err(LaurentError::AlphabetMismatch);
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, LaurentError> {
        self.check(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, LaurentError> {
        self.check(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, LaurentError> {
        self.check(other)?;
        let mut acc: BTreeMap<Monomial, C> = BTreeMap::new();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                let m = m1.mul(m2);
                let c = c1.clone() * c2.clone();
                match acc.get_mut(&m) {
                    Some(v) => *v = v.clone() + c,
                    None => {
                        acc.insert(m, c);
                    }
                }
            }
        }
        acc.retain(|_, c| !c.is_zero());
        Ok(LaurentPoly { alphabet: self.alphabet.clone(), terms: acc })
    }

    pub fn neg(&self) -> Self {
        LaurentPoly {
            alphabet: self.alphabet.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect(),
        }
    }

    pub fn scale(&self, k: &C) -> Self {
        if k.is_zero() {
            return LaurentPoly::zero(&self.alphabet);
        }
        LaurentPoly {
            alphabet: self.alphabet.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c.clone() * k.clone())).collect(),
        }
    }

    pub fn mul_monomial(&self, mono: &Monomial) -> Self {
        LaurentPoly {
            alphabet: self.alphabet.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.mul(mono), c.clone())).collect(),
        }
    }

    /// Non-negative integer power.
    pub fn pow(&self, e: u32) -> Self {
        let mut acc = LaurentPoly::constant(&self.alphabet, C::one());
        for _ in 0..e {
            acc = acc.checked_mul(self).unwrap();
        }
        acc
    }

    /// Integer power; negative exponents are allowed for single-term polynomials only.
    pub fn powi(&self, e: i32) -> Result<Self, LaurentError> {
        if e >= 0 {
            return Ok(self.pow(e as u32));
        }
        let (m, c) = match (self.terms.len(), self.terms.iter().next()) {
            (1, Some(t)) => t,
            _ => return Err(LaurentError::NotInvertible),
        };
        let inv = c.inverse().ok_or(LaurentError::NotInvertible)?;
        let c = inv.powi(-(e as i64)).unwrap();
        Ok(LaurentPoly::term(&self.alphabet, c, m.pow(e)))
    }

    /// Ring homomorphism fixing the coefficients and sending each mapped variable
    /// to `scalar · monomial`; unmapped variables are fixed.
    pub fn substitute(&self, map: &[(usize, C, Monomial)]) -> Result<Self, LaurentError> {
        let n = self.alphabet.len();
        for (_, c, m) in map {
            if c.is_zero() {
                return Err(LaurentError::ZeroScalarImage);
            }
            if m.0.len() != n {
                return Err(LaurentError::AlphabetMismatch);
            }
        }
        let mut out = LaurentPoly::zero(&self.alphabet);
        for (m, c) in &self.terms {
            let mut mono = m.clone();
            let mut coef = c.clone();
            for (i, k, img) in map {
                let e = m.0[*i];
                if e == 0 {
                    continue;
                }
                mono.0[*i] -= e;
                mono = mono.mul(&img.pow(e));
                coef = coef * k.powi(e as i64).unwrap();
            }
            out.add_term(mono, coef);
        }
        Ok(out)
    }

    /// Moves the polynomial into another alphabet, sending variable `i` to
    /// `images[i]` (a `scalar · monomial` in the target alphabet).
    pub fn substitute_into(&self, target: &VarAlphabet, images: &[(C, Monomial)]) -> Result<Self, LaurentError> {
        if images.len() != self.alphabet.len() {
            return Err(LaurentError::AlphabetMismatch);
        }
        let mut out = LaurentPoly::zero(target);
        for (m, c) in &self.terms {
            let mut mono = Monomial::one(target.len());
            let mut coef = c.clone();
            for (i, (k, img)) in images.iter().enumerate() {
                let e = m.0[i];
                if e == 0 {
                    continue;
                }
                if k.is_zero() {
                    return Err(LaurentError::ZeroScalarImage);
                }
                mono = mono.mul(&img.pow(e));
                coef = coef * k.powi(e as i64).unwrap();
            }
            out.add_term(mono, coef);
        }
        Ok(out)
    }

    /// Replaces variables by polynomials. Variables occurring with negative
    /// exponents must map to single terms.
    pub fn compose(&self, images: &[(usize, LaurentPoly<C>)]) -> Result<Self, LaurentError> {
        for (_, img) in images {
            self.check(img)?;
        }
        let mut out = LaurentPoly::zero(&self.alphabet);
        let mut cache: BTreeMap<(usize, i32), LaurentPoly<C>> = BTreeMap::new();
        for (m, c) in &self.terms {
            let mut rest = m.clone();
            let mut factor = LaurentPoly::constant(&self.alphabet, c.clone());
            for (slot, (i, img)) in images.iter().enumerate() {
                let e = m.0[*i];
                if e == 0 {
                    continue;
                }
                rest.0[*i] = 0;
                let pw = match cache.get(&(slot, e)) {
                    Some(p) => p.clone(),
                    None => {
                        let p = img.powi(e)?;
                        cache.insert((slot, e), p.clone());
                        p
                    }
                };
                factor = factor.checked_mul(&pw)?;
            }
            for (fm, fc) in factor.terms {
                out.add_term(fm.mul(&rest), fc);
            }
        }
        Ok(out)
    }

    /// Evaluation with an explicit coefficient map.
    pub fn eval_with<T: Scalar>(
        &self,
        values: &[T],
        coef: impl Fn(&C, &T) -> Option<T>,
    ) -> Result<T, LaurentError> {
        if values.len() != self.alphabet.len() {
            return Err(LaurentError::AlphabetMismatch);
        }
        let like = values.first().cloned().unwrap_or_else(T::one);
        let n = values.len();
        let mut powers: Vec<BTreeMap<i32, T>> = vec![BTreeMap::new(); n];
        let mut acc = T::zero();
        for (m, c) in &self.terms {
            let mut t = coef(c, &like).ok_or(LaurentError::CoefficientNotRepresentable)?;
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let p = match powers[i].get(&e) {
                    Some(p) => p.clone(),
                    None => {
                        let p = values[i].powi(e as i64).ok_or(LaurentError::NotInvertible)?;
                        powers[i].insert(e, p.clone());
                        p
                    }
                };
                t = t * p;
            }
            acc = acc + t;
        }
        Ok(acc)
    }

    /// Swaps two variables.
    pub fn swap_vars(&self, i: usize, j: usize) -> Self {
        LaurentPoly {
            alphabet: self.alphabet.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    let mut m = m.clone();
                    m.0.swap(i, j);
                    (m, c.clone())
                })
                .collect(),
        }
    }

    /// Maps the coefficients into another scalar type.
    pub fn map_coeffs<D: Scalar>(&self, f: impl Fn(&C) -> Option<D>) -> Option<LaurentPoly<D>> {
        let mut out = LaurentPoly::zero(&self.alphabet);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), f(c)?);
        }
        Some(out)
    }

    /// Per-variable minimum exponent over all terms (0 for the zero polynomial).
    pub fn min_exponents(&self) -> Monomial {
        let n = self.alphabet.len();
        let mut lo = vec![i32::MAX; n];
        for m in self.terms.keys() {
            for (l, &e) in lo.iter_mut().zip(&m.0) {
                *l = (*l).min(e);
            }
        }
        Monomial(lo.into_iter().map(|e| if e == i32::MAX { 0 } else { e }).collect())
    }
}

impl LaurentPoly<crate::CycNum> {
    /// Evaluates at a point. `values[i]` is the value of variable `i`; values of
    /// variables that occur with negative exponents must be invertible.
    pub fn eval<T: Scalar>(&self, values: &[T]) -> Result<T, LaurentError> {
        self.eval_with(values, |c, like| T::from_cyc_like(c, like))
    }
}

macro_rules! poly_ops {
    ($($tr:ident $m:ident $checked:ident),*) => {$(
        impl<'a, C: Scalar> std::ops::$tr<&'a LaurentPoly<C>> for &'a LaurentPoly<C> {
            type Output = LaurentPoly<C>;
            /// Panics when the alphabets differ; use the `checked_*` methods to handle that case.
            fn $m(self, rhs: &LaurentPoly<C>) -> LaurentPoly<C> {
                self.$checked(rhs).expect("alphabet mismatch")
            }
        }
        impl<C: Scalar> std::ops::$tr<LaurentPoly<C>> for LaurentPoly<C> {
            type Output = LaurentPoly<C>;
            fn $m(self, rhs: LaurentPoly<C>) -> LaurentPoly<C> {
                self.$checked(&rhs).expect("alphabet mismatch")
            }
        }
    )*};
}
poly_ops!(Add add checked_add, Sub sub checked_sub, Mul mul checked_mul);

impl<C: Scalar> std::ops::Neg for LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn neg(self) -> LaurentPoly<C> {
        LaurentPoly::neg(&self)
    }
}

impl<C: Scalar> fmt::Debug for LaurentPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map()
            .entries(self.terms.iter().rev().map(|(m, c)| (&m.0, c)))
            .finish()
    }
}
