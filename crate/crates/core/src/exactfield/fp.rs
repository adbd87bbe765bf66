//! Prime-field elements carrying their modulus at runtime.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::arith::{factorize, pow_mod};

/// An element of F_q for a prime `q` fixed at runtime.
///
/// `zero()`/`one()` (and `from_integer`) produce unbound integer constants that
/// adopt the modulus of the first bound operand they meet. Mixing two bound
/// elements with different moduli panics.
#[derive(Clone, Copy)]
pub struct Fp(Repr);

#[derive(Clone, Copy)]
enum Repr {
    Lit(i64),
    Mod { v: u64, q: u64 },
}

impl Fp {
    pub fn new(v: i64, q: u64) -> Self {
        assert!(q >= 2, "modulus must be at least 2");
        Fp(Repr::Mod { v: v.rem_euclid(q as i64) as u64, q })
    }

    pub fn from_integer(n: i64) -> Self {
        Fp(Repr::Lit(n))
    }

    pub fn modulus(&self) -> Option<u64> {
        match self.0 {
            Repr::Lit(_) => None,
            Repr::Mod { q, .. } => Some(q),
        }
    }

    /// Residue in `[0, q)`, or the raw integer for an unbound constant.
    pub fn value(&self) -> i64 {
        match self.0 {
            Repr::Lit(n) => n,
            Repr::Mod { v, .. } => v as i64,
        }
    }

    pub fn bind(self, q: u64) -> Self {
        match self.0 {
            Repr::Lit(n) => Fp::new(n, q),
            Repr::Mod { q: q0, .. } => {
                assert_eq!(q0, q, "mixed prime-field moduli");
                self
            }
        }
    }

    fn pair(a: Fp, b: Fp) -> Result<(u64, u64, u64), (i64, i64)> {
        match (a.0, b.0) {
            (Repr::Lit(x), Repr::Lit(y)) => Err((x, y)),
            (Repr::Mod { q, .. }, _) | (_, Repr::Mod { q, .. }) => {
                let (Repr::Mod { v: x, .. }, Repr::Mod { v: y, .. }) = (a.bind(q).0, b.bind(q).0) else {
                    unreachable!()
                };
                Ok((x, y, q))
            }
        }
    }

    pub fn pow(self, e: u64) -> Self {
        match self.0 {
            Repr::Lit(n) => Fp(Repr::Lit(n.pow(e as u32))),
            Repr::Mod { v, q } => Fp(Repr::Mod { v: pow_mod(v, e, q), q }),
        }
    }

    pub fn inverse(&self) -> Option<Self> {
        match self.0 {
            Repr::Lit(1) => Some(*self),
            Repr::Lit(-1) => Some(*self),
            Repr::Lit(_) => None,
            Repr::Mod { v, q } => (v != 0).then(|| Fp(Repr::Mod { v: pow_mod(v, q - 2, q), q })),
        }
    }
}

/// Smallest generator of F_q^* for a prime `q`.
pub fn primitive_root(q: u64) -> u64 {
    if q == 2 {
        return 1;
    }
    let factors = factorize(q - 1);
    (2..q)
        .find(|&g| factors.iter().all(|&(p, _)| pow_mod(g, (q - 1) / p, q) != 1))
        .expect("prime fields have primitive roots")
}

impl PartialEq for Fp {
    fn eq(&self, other: &Self) -> bool {
        match Fp::pair(*self, *other) {
            Ok((x, y, _)) => x == y,
            Err((x, y)) => x == y,
        }
    }
}

impl Eq for Fp {}

impl Add for Fp {
    type Output = Fp;
    fn add(self, rhs: Fp) -> Fp {
        match Fp::pair(self, rhs) {
            Ok((x, y, q)) => Fp(Repr::Mod { v: ((x as u128 + y as u128) % q as u128) as u64, q }),
            Err((x, y)) => Fp(Repr::Lit(x + y)),
        }
    }
}

impl Sub for Fp {
    type Output = Fp;
    fn sub(self, rhs: Fp) -> Fp {
        self + (-rhs)
    }
}

impl Mul for Fp {
    type Output = Fp;
    fn mul(self, rhs: Fp) -> Fp {
        match Fp::pair(self, rhs) {
            Ok((x, y, q)) => Fp(Repr::Mod { v: ((x as u128 * y as u128) % q as u128) as u64, q }),
            Err((x, y)) => Fp(Repr::Lit(x * y)),
        }
    }
}

impl Neg for Fp {
    type Output = Fp;
    fn neg(self) -> Fp {
        match self.0 {
            Repr::Lit(n) => Fp(Repr::Lit(-n)),
            Repr::Mod { v, q } => Fp(Repr::Mod { v: (q - v) % q, q }),
        }
    }
}

impl Zero for Fp {
    fn zero() -> Self {
        Fp(Repr::Lit(0))
    }
    fn is_zero(&self) -> bool {
        match self.0 {
            Repr::Lit(n) => n == 0,
            Repr::Mod { v, .. } => v == 0,
        }
    }
}

impl One for Fp {
    fn one() -> Self {
        Fp(Repr::Lit(1))
    }
}

impl fmt::Debug for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.0 {
            Repr::Lit(n) => write!(f, "{n}"),
            Repr::Mod { v, q } => write!(f, "{v} mod {q}"),
        }
    }
}

impl fmt::Display for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value())
    }
}
