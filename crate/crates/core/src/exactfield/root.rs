use std::fmt;

use serde::{Deserialize, Serialize};

use super::arith::{gcd, lcm};
use super::CycNum;

/// ζ_n^k in lowest terms: `gcd(k, n) = 1`, so `n` is the multiplicative order.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct RootOfUnity {
    #[serde(rename = "M")]
    order: u64,
    k: u64,
}

impl RootOfUnity {
    pub const ONE: RootOfUnity = RootOfUnity { order: 1, k: 0 };

    pub fn new(n: u64, k: i64) -> Self {
        assert!(n >= 1, "root of unity needs a positive order");
        let k = k.rem_euclid(n as i64) as u64;
        let g = gcd(k, n);
        RootOfUnity { order: n / g, k: k / g }
    }

    pub fn order(self) -> u64 {
        self.order
    }

    /// Exponent `k` with the value equal to ζ_order^k.
    pub fn exponent(self) -> u64 {
        self.k
    }

    /// Exponent of this value as a power of ζ_m; `m` must be a multiple of the order.
    pub fn exponent_at(self, m: u64) -> Option<u64> {
        (m % self.order == 0).then(|| self.k * (m / self.order))
    }

    pub fn is_one(self) -> bool {
        self.order == 1
    }

    pub fn mul(self, other: RootOfUnity) -> RootOfUnity {
        let l = lcm(self.order, other.order);
        let k = self.k * (l / self.order) + other.k * (l / other.order);
        RootOfUnity::new(l, (k % l) as i64)
    }

    pub fn pow(self, e: i64) -> RootOfUnity {
        let n = self.order as i128;
        let k = (self.k as i128 * e as i128).rem_euclid(n);
        RootOfUnity::new(self.order, k as i64)
    }

    pub fn inv(self) -> RootOfUnity {
        self.pow(-1)
    }

    pub fn to_cyc(self) -> CycNum {
        CycNum::zeta(self.order, self.k as i64)
    }
}

impl fmt::Debug for RootOfUnity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ζ_{}^{}", self.order, self.k)
    }
}
