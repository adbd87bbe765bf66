//! Small integer helpers shared by the exact-arithmetic modules.

use num_integer::Integer;

pub fn gcd(a: u64, b: u64) -> u64 {
    a.gcd(&b)
}

pub fn lcm(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        0
    } else {
        a / gcd(a, b) * b
    }
}

/// Prime factorization by trial division, primes ascending.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2u64;
    while p * p <= n {
        if n % p == 0 {
            let mut e = 0;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn divisors(n: u64) -> Vec<u64> {
    let mut divs = vec![1u64];
    for (p, e) in factorize(n) {
        let len = divs.len();
        let mut pk = 1;
        for _ in 0..e {
            pk *= p;
            for i in 0..len {
                divs.push(divs[i] * pk);
            }
        }
    }
    divs.sort_unstable();
    divs
}

pub fn euler_phi(n: u64) -> u64 {
    factorize(n)
        .into_iter()
        .fold(n, |acc, (p, _)| acc / p * (p - 1))
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Primes in ascending order, starting at 2.
pub fn primes() -> impl Iterator<Item = u64> {
    (2u64..).filter(|&n| is_prime(n))
}

pub fn pow_mod(base: u64, mut exp: u64, modulus: u64) -> u64 {
    if modulus == 1 {
        return 0;
    }
    let m = modulus as u128;
    let mut b = (base % modulus) as u128;
    let mut acc = 1u128;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        exp >>= 1;
    }
    acc as u64
}

/// Multiplicative order of `a` modulo `n`; `a` must be a unit.
pub fn mult_order(a: u64, n: u64, group_order: u64) -> u64 {
    let mut ord = group_order;
    for (p, _) in factorize(group_order) {
        while ord % p == 0 && pow_mod(a, ord / p, n) == 1 {
            ord /= p;
        }
    }
    ord
}

/// Smallest generator of the cyclic group (Z/p^e)^*, p odd.
pub fn primitive_root_prime_power(p: u64, e: u32) -> u64 {
    let n = p.pow(e);
    let order = euler_phi(n);
    (2..n)
        .find(|&g| g % p != 0 && mult_order(g, n, order) == order)
        .expect("odd prime powers have primitive roots")
}

/// Inverse of `a` modulo `m` (gcd must be 1).
pub fn inv_mod(a: u64, m: u64) -> Option<u64> {
    let (a, m) = (a as i128, m as i128);
    let g = a.extended_gcd(&m);
    if g.gcd != 1 {
        return None;
    }
    Some(g.x.rem_euclid(m) as u64)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn totient_and_divisors() {
        assert_eq!(euler_phi(1), 1);
        assert_eq!(euler_phi(12), 4);
        assert_eq!(euler_phi(17), 16);
        assert_eq!(divisors(12), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(divisors(1), vec![1]);
    }

    #[test]
    fn primitive_roots() {
        assert_eq!(primitive_root_prime_power(5, 1), 2);
        assert_eq!(primitive_root_prime_power(7, 1), 3);
        assert_eq!(primitive_root_prime_power(9, 1).pow(1), 2);
        assert_eq!(mult_order(2, 9, 6), 6);
    }
}
