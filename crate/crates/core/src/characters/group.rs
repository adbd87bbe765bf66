//! Structure of `(Z/NZ)*` with canonical CRT generators.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use crate::exactfield::arith::{factorize, gcd, inv_mod, primitive_root_prime_power};

#[derive(Debug)]
enum Local {
    /// `2^2`: one generator `-1`.
    Four,
    /// `2^e`, `e ≥ 3`: generators `-1` and `5`; `log5[r]` is the discrete log of `r` base 5.
    PowerOfTwo { pe: u64, log5: Vec<u32> },
    /// Odd `p^e` with discrete logs base the smallest primitive root.
    Odd { pe: u64, log: Vec<u32> },
}

/// `(Z/NZ)*` as a product of cyclic groups.
#[derive(Debug)]
pub(crate) struct CharGroup {
    pub modulus: u64,
    pub gens: Vec<u64>,
    pub orders: Vec<u64>,
    locals: Vec<Local>,
}

fn crt_lift(g: u64, pe: u64, n: u64) -> u64 {
    if pe == n {
        return g % n;
    }
    let rest = n / pe;
    // x ≡ g (mod pe), x ≡ 1 (mod rest)
    let inv = inv_mod(rest % pe, pe).expect("coprime CRT parts");
    let t = ((g as u128 + pe as u128 - 1) % pe as u128 * inv as u128 % pe as u128) as u64;
    ((1 + rest as u128 * t as u128) % n as u128) as u64
}

impl CharGroup {
    fn build(n: u64) -> CharGroup {
        let mut gens = Vec::new();
        let mut orders = Vec::new();
        let mut locals = Vec::new();
        for (p, e) in factorize(n) {
            let pe = p.pow(e);
            if p == 2 {
                match e {
                    1 => {}
                    2 => {
                        gens.push(crt_lift(3, 4, n));
                        orders.push(2);
                        locals.push(Local::Four);
                    }
                    _ => {
                        let mut log5 = vec![u32::MAX; pe as usize];
                        let mut x = 1u64;
                        for k in 0..pe / 4 {
                            log5[x as usize] = k as u32;
                            x = x * 5 % pe;
                        }
                        gens.push(crt_lift(pe - 1, pe, n));
                        gens.push(crt_lift(5, pe, n));
                        orders.push(2);
                        orders.push(pe / 4);
                        locals.push(Local::PowerOfTwo { pe, log5 });
                    }
                }
            } else {
                let g = primitive_root_prime_power(p, e);
                let ord = pe / p * (p - 1);
                let mut log = vec![u32::MAX; pe as usize];
                let mut x = 1u64;
                for k in 0..ord {
                    log[x as usize] = k as u32;
                    x = x * g % pe;
                }
                gens.push(crt_lift(g, pe, n));
                orders.push(ord);
                locals.push(Local::Odd { pe, log });
            }
        }
        CharGroup { modulus: n, gens, orders, locals }
    }

    /// Cached group structure for modulus `n`.
    pub fn get(n: u64) -> Arc<CharGroup> {
        static CACHE: OnceLock<Mutex<HashMap<u64, Arc<CharGroup>>>> = OnceLock::new();
        let cache = CACHE.get_or_init(Default::default);
        if let Some(g) = cache.lock().unwrap().get(&n) {
            return g.clone();
        }
        let g = Arc::new(CharGroup::build(n));
        cache.lock().unwrap().entry(n).or_insert(g).clone()
    }

    /// Exponents of `r` with respect to the generators, or `None` when `gcd(r, N) > 1`.
    pub fn log(&self, r: i64) -> Option<Vec<u64>> {
        let n = self.modulus;
        let r = r.rem_euclid(n as i64) as u64;
        if gcd(r, n) != 1 {
            return None;
        }
        let mut out = Vec::with_capacity(self.gens.len());
        for local in &self.locals {
            match local {
                Local::Four => out.push(u64::from(r % 4 == 3)),
                Local::PowerOfTwo { pe, log5 } => {
                    let x = r % pe;
                    let (a, m) = if x % 4 == 3 { (1, pe - x) } else { (0, x) };
                    out.push(a);
                    out.push(log5[m as usize] as u64);
                }
                Local::Odd { pe, log } => out.push(log[(r % pe) as usize] as u64),
            }
        }
        Some(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactfield::arith::{euler_phi, pow_mod};

    #[test]
    fn generators_and_orders() {
        let g = CharGroup::get(8);
        assert_eq!((g.gens.clone(), g.orders.clone()), (vec![7, 5], vec![2, 2]));
        let g = CharGroup::get(5);
        assert_eq!((g.gens.clone(), g.orders.clone()), (vec![2], vec![4]));
        let g = CharGroup::get(12);
        assert_eq!((g.gens.clone(), g.orders.clone()), (vec![7, 5], vec![2, 2]));
        assert!(CharGroup::get(1).gens.is_empty());
        assert!(CharGroup::get(2).gens.is_empty());
    }

    #[test]
    fn log_inverts_generators() {
        for n in 1..200u64 {
            let g = CharGroup::get(n);
            assert_eq!(g.orders.iter().product::<u64>(), euler_phi(n));
            for r in 1..n.max(2) {
                let Some(ex) = g.log(r as i64) else { continue };
                let back = g
                    .gens
                    .iter()
                    .zip(&ex)
                    .fold(1 % n, |acc, (&gen, &k)| acc * pow_mod(gen, k, n) % n);
                assert_eq!(back, r % n, "n={n} r={r}");
            }
        }
    }
}
