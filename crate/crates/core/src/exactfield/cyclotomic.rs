//! Exact elements of cyclotomic fields Q(ζ_M).
//!
//! An element is stored at a conductor `M` as an integer vector over the power
//! basis `1, ζ_M, …, ζ_M^{φ(M)-1}` with a single positive common denominator.
//! Binary operations embed both operands at `lcm(M, M')`; the representation at
//! a fixed conductor is unique, so equality is a coordinate comparison there.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::arith::{divisors, euler_phi, lcm};
use super::rational::{format_rational, parse_rational};
use super::ExactFieldError;

/// Coefficients of Φ_m, ascending, monic of degree φ(m).
pub fn cyclotomic_poly(m: u64) -> Arc<Vec<BigInt>> {
    static CACHE: OnceLock<Mutex<HashMap<u64, Arc<Vec<BigInt>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(p) = cache.lock().unwrap().get(&m) {
        return p.clone();
    }
    let mut num = vec![BigInt::zero(); m as usize + 1];
    num[0] = BigInt::from(-1);
    num[m as usize] = BigInt::one();
    for d in divisors(m) {
        if d < m {
            num = div_exact_monic(&num, &cyclotomic_poly(d));
        }
    }
    let p = Arc::new(num);
    cache.lock().unwrap().insert(m, p.clone());
    p
}

fn div_exact_monic(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let dn = den.len() - 1;
    let mut rem = num.to_vec();
    let mut quo = vec![BigInt::zero(); num.len() - dn];
    for i in (0..quo.len()).rev() {
        let c = rem[i + dn].clone();
        if c.is_zero() {
            continue;
        }
        for (j, dj) in den.iter().enumerate() {
            rem[i + j] -= &c * dj;
        }
        quo[i] = c;
    }
    debug_assert!(rem.iter().all(Zero::is_zero));
    quo
}

/// Reduces an integer polynomial in ζ_m to the power basis of Q(ζ_m).
fn reduce(m: u64, coeffs: Vec<BigInt>) -> Vec<BigInt> {
    let m_us = m as usize;
    let deg = euler_phi(m) as usize;
    let mut folded = if coeffs.len() > m_us {
        let mut f = vec![BigInt::zero(); m_us];
        for (i, c) in coeffs.into_iter().enumerate() {
            if !c.is_zero() {
                f[i % m_us] += c;
            }
        }
        f
    } else {
        coeffs
    };
    if folded.len() > deg {
        let phi = cyclotomic_poly(m);
        for i in (deg..folded.len()).rev() {
            let c = std::mem::take(&mut folded[i]);
            if c.is_zero() {
                continue;
            }
            for (j, pj) in phi.iter().take(deg).enumerate() {
                folded[i - deg + j] -= &c * pj;
            }
        }
        folded.truncate(deg);
    }
    folded.resize(deg, BigInt::zero());
    folded
}

#[derive(Clone)]
pub struct CycNum {
    conductor: u64,
    num: Vec<BigInt>,
    den: BigInt,
}

impl CycNum {
    fn from_parts(conductor: u64, num: Vec<BigInt>, den: BigInt) -> Self {
        let mut x = CycNum { conductor, num, den };
        x.normalize();
        x
    }

    fn normalize(&mut self) {
        if self.num.iter().all(Zero::is_zero) {
            self.den = BigInt::one();
            return;
        }
        let mut g = self.den.clone();
        for c in &self.num {
            if g.is_one() {
                break;
            }
            g = g.gcd(c);
        }
        if self.den.is_negative() {
            g = -g;
        }
        if !g.is_one() {
            for c in &mut self.num {
                *c /= &g;
            }
            self.den /= &g;
        }
    }

    pub fn from_rational(q: &BigRational) -> Self {
        CycNum::from_parts(1, vec![q.numer().clone()], q.denom().clone())
    }

    pub fn from_integer(n: impl Into<BigInt>) -> Self {
        CycNum { conductor: 1, num: vec![n.into()], den: BigInt::one() }
    }

    /// Builds an element from power-basis coordinates at `conductor`.
    pub fn from_coords(conductor: u64, coords: &[BigRational]) -> Result<Self, ExactFieldError> {
        if conductor == 0 {
            return Err(ExactFieldError::ZeroConductor);
        }
        let deg = euler_phi(conductor) as usize;
        if coords.len() != deg {
            return Err(ExactFieldError::CoordsLength { conductor, expected: deg, got: coords.len() });
        }
        let den = coords.iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
        let num = coords.iter().map(|q| q.numer() * (&den / q.denom())).collect();
        Ok(CycNum::from_parts(conductor, num, den))
    }

    /// ζ_m^k, reduced into the power basis of Q(ζ_m).
    pub fn zeta(m: u64, k: i64) -> Self {
        assert!(m >= 1, "conductor must be positive");
        let e = k.rem_euclid(m as i64) as usize;
        let mut coeffs = vec![BigInt::zero(); e + 1];
        coeffs[e] = BigInt::one();
        CycNum { conductor: m, num: reduce(m, coeffs), den: BigInt::one() }
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    /// Power-basis coordinates at the stored conductor.
    pub fn coords(&self) -> Vec<BigRational> {
        self.num
            .iter()
            .map(|c| BigRational::new(c.clone(), self.den.clone()))
            .collect()
    }

    /// The same number represented at conductor `m_new`, a multiple of the current one.
    pub fn embed(&self, m_new: u64) -> Result<Self, ExactFieldError> {
        if m_new == 0 || m_new % self.conductor != 0 {
            return Err(ExactFieldError::ConductorNotMultiple { from: self.conductor, to: m_new });
        }
        Ok(self.embed_unchecked(m_new))
    }

    fn embed_unchecked(&self, m_new: u64) -> Self {
        if m_new == self.conductor {
            return self.clone();
        }
        let step = (m_new / self.conductor) as usize;
        let mut coeffs = vec![BigInt::zero(); (self.num.len().max(1) - 1) * step + 1];
        for (i, c) in self.num.iter().enumerate() {
            coeffs[i * step] = c.clone();
        }
        CycNum { conductor: m_new, num: reduce(m_new, coeffs), den: self.den.clone() }
    }

    fn aligned(&self, other: &Self) -> (Self, Self) {
        let l = lcm(self.conductor, other.conductor);
        (self.embed_unchecked(l), other.embed_unchecked(l))
    }

    pub fn is_rational(&self) -> bool {
        self.num.iter().skip(1).all(Zero::is_zero)
    }

    pub fn to_rational(&self) -> Option<BigRational> {
        self.is_rational()
            .then(|| BigRational::new(self.num[0].clone(), self.den.clone()))
    }

    /// Value under the embedding ζ_M ↦ exp(2πi/M).
    pub fn to_complex(&self) -> Complex64 {
        let m = self.conductor as f64;
        let mut acc = Complex64::new(0.0, 0.0);
        for (i, c) in self.num.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let q = BigRational::new(c.clone(), self.den.clone()).to_f64().unwrap_or(f64::NAN);
            acc += Complex64::from_polar(q, std::f64::consts::TAU * i as f64 / m);
        }
        acc
    }

    pub fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        if self.conductor == 1 {
            let q = BigRational::new(self.den.clone(), self.num[0].clone());
            return Some(CycNum::from_rational(&q));
        }
        let a: Vec<BigRational> = self.coords();
        let f: Vec<BigRational> = cyclotomic_poly(self.conductor)
            .iter()
            .map(|c| BigRational::from_integer(c.clone()))
            .collect();
        let inv = rational_poly_inverse(&a, &f)?;
        let mut inv = inv;
        inv.resize(self.num.len(), BigRational::zero());
        CycNum::from_coords(self.conductor, &inv).ok()
    }

    pub fn pow_u(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = CycNum::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Integer power; `None` for a negative power of zero.
    pub fn pow(&self, e: i64) -> Option<Self> {
        if e >= 0 {
            Some(self.pow_u(e as u64))
        } else {
            self.inverse().map(|x| x.pow_u(e.unsigned_abs()))
        }
    }

    /// Least `n ≥ 1` with `xⁿ = 1`, or `None` when `x` is not a root of unity.
    ///
    /// Roots of unity in Q(ζ_M) have order dividing lcm(2, M), so only those
    /// divisors are tried.
    pub fn order_of_unity(&self) -> Result<Option<u64>, ExactFieldError> {
        if self.is_zero() {
            return Err(ExactFieldError::ZeroInput);
        }
        let one = CycNum::one();
        Ok(divisors(lcm(2, self.conductor))
            .into_iter()
            .find(|&n| self.pow_u(n) == one))
    }

    /// Representation at the smallest conductor whose field contains the value.
    pub fn minimal_form(&self) -> Self {
        if let Some(q) = self.to_rational() {
            return CycNum::from_rational(&q);
        }
        for d in divisors(self.conductor) {
            if d == self.conductor {
                break;
            }
            if let Some(x) = self.descend(d) {
                return x;
            }
        }
        self.clone()
    }

    /// Solves for coordinates at conductor `d | M` by exact elimination.
    fn descend(&self, d: u64) -> Option<Self> {
        let rows = self.num.len();
        let cols = euler_phi(d) as usize;
        let basis: Vec<Vec<BigInt>> = (0..cols)
            .map(|j| CycNum::zeta(d, j as i64).embed_unchecked(self.conductor).num)
            .collect();
        let mut mat: Vec<Vec<BigRational>> = (0..rows)
            .map(|r| {
                let mut row: Vec<BigRational> = basis
                    .iter()
                    .map(|b| BigRational::from_integer(b[r].clone()))
                    .collect();
                row.push(BigRational::new(self.num[r].clone(), self.den.clone()));
                row
            })
            .collect();
        let sol = solve_consistent(&mut mat, cols)?;
        CycNum::from_coords(d, &sol).ok()
    }
}

/// Gaussian elimination on an augmented system; `None` when inconsistent.
fn solve_consistent(mat: &mut [Vec<BigRational>], cols: usize) -> Option<Vec<BigRational>> {
    let rows = mat.len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !mat[i][c].is_zero()) else {
            continue;
        };
        mat.swap(r, p);
        let inv = mat[r][c].recip();
        for k in c..=cols {
            mat[r][k] = &mat[r][k] * &inv;
        }
        for i in 0..rows {
            if i != r && !mat[i][c].is_zero() {
                let f = mat[i][c].clone();
                for k in c..=cols {
                    let t = &f * &mat[r][k];
                    mat[i][k] -= t;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    if mat[r..].iter().any(|row| !row[cols].is_zero()) {
        return None;
    }
    let mut sol = vec![BigRational::zero(); cols];
    for (i, &c) in pivots.iter().enumerate() {
        sol[c] = mat[i][cols].clone();
    }
    Some(sol)
}

fn trim(p: &mut Vec<BigRational>) {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

fn rational_divmod(a: &[BigRational], b: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    let mut rem = a.to_vec();
    trim(&mut rem);
    let db = b.len() - 1;
    if rem.len() <= db {
        return (vec![], rem);
    }
    let lead_inv = b[db].recip();
    let mut quo = vec![BigRational::zero(); rem.len() - db];
    for i in (0..quo.len()).rev() {
        let c = &rem[i + db] * &lead_inv;
        if c.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            let t = &c * bj;
            rem[i + j] -= t;
        }
        quo[i] = c;
    }
    trim(&mut rem);
    (quo, rem)
}

fn rational_poly_mul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn rational_poly_sub(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let n = a.len().max(b.len());
    let mut out: Vec<BigRational> = (0..n)
        .map(|i| {
            let x = a.get(i).cloned().unwrap_or_else(BigRational::zero);
            let y = b.get(i).cloned().unwrap_or_else(BigRational::zero);
            x - y
        })
        .collect();
    trim(&mut out);
    out
}

/// Inverse of `a` modulo `f` in Q[x] by the extended Euclidean algorithm.
fn rational_poly_inverse(a: &[BigRational], f: &[BigRational]) -> Option<Vec<BigRational>> {
    let mut r0 = f.to_vec();
    let mut r1 = a.to_vec();
    trim(&mut r1);
    let mut s0: Vec<BigRational> = vec![];
    let mut s1: Vec<BigRational> = vec![BigRational::one()];
    while !r1.is_empty() {
        let (q, r) = rational_divmod(&r0, &r1);
        let s2 = rational_poly_sub(&s0, &rational_poly_mul(&q, &s1));
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s2);
    }
    if r0.len() != 1 {
        return None;
    }
    let c = r0[0].recip();
    Some(s0.into_iter().map(|x| x * &c).collect())
}

fn poly_mul_int(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[i + j] += x * y;
            }
        }
    }
    out
}

impl Zero for CycNum {
    fn zero() -> Self {
        CycNum::from_integer(0)
    }

    fn is_zero(&self) -> bool {
        self.num.iter().all(Zero::is_zero)
    }
}

impl One for CycNum {
    fn one() -> Self {
        CycNum::from_integer(1)
    }
}

impl PartialEq for CycNum {
    fn eq(&self, other: &Self) -> bool {
        if self.conductor == other.conductor {
            return self.den == other.den && self.num == other.num;
        }
        let (a, b) = self.aligned(other);
        a.den == b.den && a.num == b.num
    }
}

impl Eq for CycNum {}

impl<'a> Add<&'a CycNum> for &'a CycNum {
    type Output = CycNum;

    fn add(self, rhs: &CycNum) -> CycNum {
        let (a, b) = if self.conductor == rhs.conductor {
            (self.clone(), rhs.clone())
        } else {
            self.aligned(rhs)
        };
        let num = if a.den == b.den {
            a.num.iter().zip(&b.num).map(|(x, y)| x + y).collect()
        } else {
            a.num.iter().zip(&b.num).map(|(x, y)| x * &b.den + y * &a.den).collect()
        };
        let den = if a.den == b.den { a.den } else { &a.den * &b.den };
        CycNum::from_parts(a.conductor, num, den)
    }
}

impl<'a> Mul<&'a CycNum> for &'a CycNum {
    type Output = CycNum;

    fn mul(self, rhs: &CycNum) -> CycNum {
        if self.conductor == 1 || rhs.conductor == 1 {
            let (scalar, vec) = if self.conductor == 1 { (self, rhs) } else { (rhs, self) };
            let k = &scalar.num[0];
            let num = vec.num.iter().map(|c| c * k).collect();
            return CycNum::from_parts(vec.conductor, num, &scalar.den * &vec.den);
        }
        let (a, b) = self.aligned(rhs);
        let prod = poly_mul_int(&a.num, &b.num);
        CycNum::from_parts(a.conductor, reduce(a.conductor, prod), &a.den * &b.den)
    }
}

impl<'a> Sub<&'a CycNum> for &'a CycNum {
    type Output = CycNum;

    fn sub(self, rhs: &CycNum) -> CycNum {
        self + &(-rhs)
    }
}

impl Neg for &CycNum {
    type Output = CycNum;

    fn neg(self) -> CycNum {
        CycNum {
            conductor: self.conductor,
            num: self.num.iter().map(|c| -c).collect(),
            den: self.den.clone(),
        }
    }
}

impl Neg for CycNum {
    type Output = CycNum;

    fn neg(self) -> CycNum {
        -&self
    }
}

impl<'a> Div<&'a CycNum> for &'a CycNum {
    type Output = CycNum;

    /// Panics on division by zero, like the rational types.
    fn div(self, rhs: &CycNum) -> CycNum {
        self * &rhs.inverse().expect("division by zero")
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr<CycNum> for CycNum {
            type Output = CycNum;
            fn $m(self, rhs: CycNum) -> CycNum { (&self).$m(&rhs) }
        }
        impl<'a> $tr<&'a CycNum> for CycNum {
            type Output = CycNum;
            fn $m(self, rhs: &CycNum) -> CycNum { (&self).$m(rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul, Div div);

impl From<BigRational> for CycNum {
    fn from(q: BigRational) -> Self {
        CycNum::from_rational(&q)
    }
}

impl From<i64> for CycNum {
    fn from(n: i64) -> Self {
        CycNum::from_integer(n)
    }
}

impl fmt::Debug for CycNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycNum({})", self)
    }
}

/// Rationals print as `n/d`; other values as `(c0 + c1*zM + c2*zM^2 …)` at the
/// minimal conductor, which the polynomial parser reads back.
impl fmt::Display for CycNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(q) = self.to_rational() {
            return write!(f, "{}", format_rational(&q));
        }
        let x = self.minimal_form();
        let m = x.conductor;
        let mut first = true;
        write!(f, "(")?;
        for (i, c) in x.coords().into_iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let root = match i {
                0 => String::new(),
                1 => format!("z{m}"),
                _ => format!("z{m}^{i}"),
            };
            match (root.is_empty(), mag.is_one()) {
                (true, _) => write!(f, "{}", format_rational(&mag))?,
                (false, true) => write!(f, "{root}")?,
                (false, false) => write!(f, "{}*{root}", format_rational(&mag))?,
            }
        }
        write!(f, ")")
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct CycNumJson {
    conductor: u64,
    coords: Vec<String>,
}

impl Serialize for CycNum {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        CycNumJson {
            conductor: self.conductor,
            coords: self.coords().iter().map(format_rational).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for CycNum {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = CycNumJson::deserialize(d)?;
        let coords = raw
            .coords
            .iter()
            .map(|s| parse_rational(s))
            .collect::<Result<Vec<_>, _>>()
            .map_err(serde::de::Error::custom)?;
        CycNum::from_coords(raw.conductor, &coords).map_err(serde::de::Error::custom)
    }
}
