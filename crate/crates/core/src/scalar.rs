//! The scalar abstraction shared by matrices, polynomial evaluation and invariants.

use std::fmt::Debug;
use std::ops::{Neg, Sub};

use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::exactfield::{primitive_root, CycNum, Fp};

/// A field element usable as a matrix entry or an evaluation point.
///
/// Coefficients of [`crate::Poly`] live in cyclotomic fields; `from_cyc_like`
/// maps them into `Self`, using `like` for runtime context such as a prime
/// modulus. It returns `None` when the value has no image (an irrational
/// number into the rationals, a root of unity missing from F_q).
pub trait Scalar:
    Clone + PartialEq + Debug + Zero + One + Neg<Output = Self> + Sub<Output = Self> + Send + Sync + 'static
{
    fn inverse(&self) -> Option<Self>;

    fn from_cyc_like(c: &CycNum, like: &Self) -> Option<Self>;

    /// Whether equality is exact (true for all but floating-point types).
    fn is_exact() -> bool {
        true
    }

    fn from_i64_like(n: i64, like: &Self) -> Self {
        Self::from_cyc_like(&CycNum::from_integer(n), like).expect("integers embed in every field")
    }

    /// Integer power; `None` for a negative power of zero.
    fn powi(&self, e: i64) -> Option<Self> {
        let mut base = if e < 0 { self.inverse()? } else { self.clone() };
        let mut e = e.unsigned_abs();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base.clone();
            }
            e >>= 1;
            if e > 0 {
                base = base.clone() * base;
            }
        }
        Some(acc)
    }
}

impl Scalar for BigRational {
    fn inverse(&self) -> Option<Self> {
        (!self.is_zero()).then(|| self.recip())
    }

    fn from_cyc_like(c: &CycNum, _: &Self) -> Option<Self> {
        c.to_rational()
    }
}

impl Scalar for CycNum {
    fn inverse(&self) -> Option<Self> {
        CycNum::inverse(self)
    }

    fn from_cyc_like(c: &CycNum, _: &Self) -> Option<Self> {
        Some(c.clone())
    }
}

impl Scalar for Complex64 {
    fn inverse(&self) -> Option<Self> {
        (!self.is_zero()).then(|| self.inv())
    }

    fn from_cyc_like(c: &CycNum, _: &Self) -> Option<Self> {
        Some(c.to_complex())
    }

    fn is_exact() -> bool {
        false
    }
}

macro_rules! impl_float_scalar {
    ($($t:ty),*) => {$(
        impl Scalar for $t {
            fn inverse(&self) -> Option<Self> {
                (*self != 0.0).then(|| self.recip())
            }

            fn from_cyc_like(c: &CycNum, _: &Self) -> Option<Self> {
                c.to_rational().and_then(|q| q.to_f64()).map(|x| x as $t)
            }

            fn is_exact() -> bool {
                false
            }
        }
    )*};
}
impl_float_scalar!(f32, f64);

impl Scalar for Fp {
    fn inverse(&self) -> Option<Self> {
        Fp::inverse(self)
    }

    /// Rationals map when the denominator is a unit; ζ_M maps to
    /// `g^{(q-1)/M}` for the smallest generator `g`, when `M | q - 1`.
    fn from_cyc_like(c: &CycNum, like: &Self) -> Option<Self> {
        let Some(q) = like.modulus() else {
            let r = c.to_rational()?;
            return r.is_integer().then(|| r.to_integer().to_i64().map(Fp::from_integer)).flatten();
        };
        let reduce = |r: &BigRational| -> Option<Fp> {
            let qi = num_bigint::BigInt::from(q);
            let n = (r.numer() % &qi).to_i64()?;
            let d = (r.denom() % &qi).to_i64()?;
            Some(Fp::new(n, q) * Fp::new(d, q).inverse()?)
        };
        if let Some(r) = c.to_rational() {
            return reduce(&r);
        }
        let c = c.minimal_form();
        let m = c.conductor();
        if (q - 1) % m != 0 {
            return None;
        }
        let zeta = Fp::new(primitive_root(q) as i64, q).pow((q - 1) / m);
        let mut acc = Fp::new(0, q);
        let mut power = Fp::new(1, q);
        for coord in c.coords() {
            acc = acc + reduce(&coord)? * power;
            power = power * zeta;
        }
        Some(acc)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclotomic_into_prime_field() {
        let like = Fp::new(1, 13);
        let i = Fp::from_cyc_like(&CycNum::zeta(4, 1), &like).unwrap();
        assert_eq!(i * i, Fp::new(-1, 13));
        let half = CycNum::from_rational(&BigRational::new(1.into(), 2.into()));
        assert_eq!(Fp::from_cyc_like(&half, &like).unwrap(), Fp::new(7, 13));
        assert!(Fp::from_cyc_like(&CycNum::zeta(5, 1), &like).is_none());
    }

    #[test]
    fn powers() {
        let x = BigRational::new(2.into(), 3.into());
        assert_eq!(x.powi(-2).unwrap(), BigRational::new(9.into(), 4.into()));
        assert_eq!(BigRational::zero().powi(-1), None);
        assert_eq!(Fp::new(3, 7).powi(6).unwrap(), Fp::new(1, 7));
    }
}
