use hecketwist::exactfield::{format_rational, parse_rational};
use hecketwist::{CycNum, Fp, Rational};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use proptest::prelude::*;

/// `Σ c_k ζ_M^k` with small integer coefficients.
fn cyc() -> impl Strategy<Value = CycNum> {
    (1u64..=24).prop_flat_map(|m| {
        prop::collection::vec(-3i64..=3, m as usize).prop_map(move |cs| {
            cs.iter()
                .enumerate()
                .fold(CycNum::zero(), |acc, (k, &c)| &acc + &(&CycNum::from(c) * &CycNum::zeta(m, k as i64)))
        })
    })
}

fn rational() -> impl Strategy<Value = Rational> {
    (-1000i64..=1000, 1i64..=50).prop_map(|(n, d)| Rational::new(BigInt::from(n), BigInt::from(d)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn cyclotomic_field_axioms(x in cyc(), y in cyc(), z in cyc()) {
        prop_assert_eq!(&(&x + &y) + &z, &x + &(&y + &z));
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
        prop_assert_eq!(&x * &y, &y * &x);
        prop_assert_eq!(&(&x - &y) + &y, x.clone());
        if !x.is_zero() {
            let inv = x.inverse().unwrap();
            prop_assert!((&x * &inv).is_one());
            prop_assert_eq!(&(&y / &x) * &x, y.clone());
        }
    }

    #[test]
    fn cyclotomic_matches_complex_embedding(x in cyc(), y in cyc()) {
        let (cx, cy) = (x.to_complex(), y.to_complex());
        prop_assert!(((&x * &y).to_complex() - cx * cy).norm() <= 1e-8 * (1.0 + (cx * cy).norm()));
        prop_assert!(((&x + &y).to_complex() - (cx + cy)).norm() <= 1e-8 * (1.0 + (cx + cy).norm()));
    }

    #[test]
    fn zeta_embeds_as_exponential(m in 1u64..=60, k in -200i64..200) {
        let want = num_complex::Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI * k as f64 / m as f64);
        prop_assert!((CycNum::zeta(m, k).to_complex() - want).norm() < 1e-10);
    }

    #[test]
    fn order_of_unity_is_exact(m in 1u64..=30, k in 0i64..30, sign in any::<bool>()) {
        let z = CycNum::zeta(m, k);
        let x = if sign { -z } else { z };
        let n = x.order_of_unity().unwrap().expect("roots of unity are detected");
        prop_assert!(x.pow_u(n).is_one());
        for j in 1..n {
            prop_assert!(!x.pow_u(j).is_one());
        }
    }

    #[test]
    fn non_roots_are_rejected(x in cyc()) {
        if x.is_zero() {
            prop_assert!(x.order_of_unity().is_err());
        } else if let Some(n) = x.order_of_unity().unwrap() {
            prop_assert!(x.pow_u(n).is_one());
            prop_assert!((x.to_complex().norm() - 1.0).abs() < 1e-9);
        }
    }

    #[test]
    fn embedding_preserves_value(x in cyc(), k in 1u64..=4) {
        let big = x.embed(x.conductor() * k).unwrap();
        prop_assert_eq!(&big, &x);
        prop_assert!((big.to_complex() - x.to_complex()).norm() < 1e-9);
    }

    #[test]
    fn json_round_trip(x in cyc()) {
        let text = serde_json::to_string(&x).unwrap();
        let back: CycNum = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(back, x);
    }

    #[test]
    fn rational_text_round_trip(r in rational()) {
        prop_assert_eq!(parse_rational(&format_rational(&r)).unwrap(), r);
    }

    #[test]
    fn prime_field_axioms(q in prop::sample::select(vec![2u64, 3, 5, 7, 13, 101, 65537]), a in any::<i64>(), b in any::<i64>(), c in any::<i64>()) {
        let (x, y, z) = (Fp::new(a, q), Fp::new(b, q), Fp::new(c, q));
        prop_assert_eq!((x * y) * z, x * (y * z));
        prop_assert_eq!(x * (y + z), x * y + x * z);
        prop_assert_eq!((x - y) + y, x);
        prop_assert_eq!((x + y).value(), ((a as i128 + b as i128).rem_euclid(q as i128)) as i64);
        if !x.is_zero() {
            prop_assert!((x * x.inverse().unwrap()).is_one());
            prop_assert!(x.pow(q - 1).is_one());
        }
    }
}
