use num_bigint::BigInt;
use num_traits::{One, ToPrimitive};

use crate::{CycNum, Rational, RootOfUnity};

use super::satake::{satake_from_quartic, SatakeSet};
use super::{check_prime, HeckeError, SiegelEigen, SiegelForm};

/// A Sato–Tate angle, or the normalized eigenvalue when it lies outside the
/// range where an angle exists.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Theta {
    Angle(f64),
    OutOfRange(f64),
}

impl Theta {
    pub fn angle(self) -> Option<f64> {
        match self {
            Theta::Angle(t) => Some(t),
            Theta::OutOfRange(_) => None,
        }
    }
}

pub(crate) fn int_pow(p: u64, e: i64) -> Rational {
    let base = Rational::from_integer(BigInt::from(p));
    if e >= 0 {
        num_traits::pow(base, e as usize)
    } else {
        num_traits::pow(base.recip(), (-e) as usize)
    }
}

impl SiegelForm {
    pub(crate) fn local(&self, p: u64) -> Result<&SiegelEigen, HeckeError> {
        check_prime(p, self.level)?;
        self.eigen.get(&p).ok_or(HeckeError::MissingPrime(p))
    }

    /// `ε(p²)`.
    pub fn eps_p2(&self, p: u64) -> Result<RootOfUnity, HeckeError> {
        check_prime(p, self.level)?;
        Ok(self.eps.eval_root((p * p) as i64)?)
    }

    /// The similitude value `s_p = ε(p²)p^u`.
    pub fn s_p(&self, p: u64) -> Result<CycNum, HeckeError> {
        let e = self.eps_p2(p)?.to_cyc();
        Ok(e * CycNum::from_rational(&int_pow(p, self.u())))
    }

    /// `b_p = (a_p² − a_{p²})/s_p − 1/p − 1`.
    pub fn bp(&self, p: u64) -> Result<CycNum, HeckeError> {
        let ev = self.local(p)?;
        let s = self.s_p(p)?;
        let num = CycNum::from_rational(&(&ev.ap * &ev.ap - &ev.ap2));
        let tail = CycNum::from_rational(&(int_pow(p, -1) + Rational::one()));
        Ok(num / s - tail)
    }

    /// Whether `(b_p + 1)s_p = a_p² − a_{p²} − ε(p²)p^{u−1}` holds exactly.
    pub fn bp_identity_holds(&self, p: u64) -> Result<bool, HeckeError> {
        let ev = self.local(p)?;
        let b = self.bp(p)?;
        let lhs = (b + CycNum::from(1)) * self.s_p(p)?;
        let rhs = CycNum::from_rational(&(&ev.ap * &ev.ap - &ev.ap2))
            - self.eps_p2(p)?.to_cyc() * CycNum::from_rational(&int_pow(p, self.u() - 1));
        Ok(lhs == rhs)
    }

    /// Coefficients `[c0, …, c4]` of the local spin factor `Σ c_i X^i`, `X = p^{-s}`.
    pub fn spin_euler_factor(&self, p: u64) -> Result<[CycNum; 5], HeckeError> {
        let ev = self.local(p)?;
        let s = self.s_p(p)?;
        let ap = CycNum::from_rational(&ev.ap);
        let c2 = CycNum::from_rational(&(&ev.ap * &ev.ap - &ev.ap2))
            - self.eps_p2(p)?.to_cyc() * CycNum::from_rational(&int_pow(p, self.u() - 1));
        Ok([CycNum::from(1), -ap.clone(), c2, -(&ap * &s), &s * &s])
    }

    /// Coefficients of the monic Hecke polynomial, leading coefficient first.
    ///
    /// The quartic is reciprocal to the spin factor, so the vector coincides
    /// with [`SiegelForm::spin_euler_factor`].
    pub fn hecke_polynomial(&self, p: u64) -> Result<[CycNum; 5], HeckeError> {
        self.spin_euler_factor(p)
    }

    /// Numeric Satake parameters.
    pub fn satake_numeric(&self, p: u64, tol: f64) -> Result<SatakeSet, HeckeError> {
        let coeffs = self.hecke_polynomial(p)?.map(|c| c.to_complex());
        let mut out = satake_from_quartic(&coeffs, self.s_p(p)?.to_complex(), tol)?;
        out.p = p;
        Ok(out)
    }

    /// `λ_{p^n} = a_{p^n} / p^{nu/2}` for `n ∈ {1, 2}`.
    pub fn lambda(&self, p: u64, n: u32) -> Result<f64, HeckeError> {
        let ev = self.local(p)?;
        let a = match n {
            1 => &ev.ap,
            2 => &ev.ap2,
            _ => return Err(HeckeError::UnsupportedIndex(n)),
        };
        let scale = (p as f64).powf(n as f64 * self.u() as f64 / 2.0);
        Ok(a.to_f64().unwrap_or(f64::NAN) / scale)
    }

    /// `θ_p ∈ [0, π]` with `4 cos θ_p = λ_p`.
    pub fn theta(&self, p: u64) -> Result<Theta, HeckeError> {
        let l = self.lambda(p, 1)?;
        Ok(if l.abs() <= 4.0 { Theta::Angle((l / 4.0).acos()) } else { Theta::OutOfRange(l) })
    }
}
