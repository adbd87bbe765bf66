use num_integer::Integer;

use crate::{CycNum, RootOfUnity};

use super::{LaurentError, LaurentPoly, Monomial};

type Poly = LaurentPoly<CycNum>;

/// A factor `s^{κ/d} − ζ·s'^{κ'/d}` that divides the tested polynomial.
#[derive(Debug, Clone, PartialEq)]
pub struct BinomialFactor {
    pub zeta: RootOfUnity,
    pub factor: Poly,
}

/// Lists the factors `s^{κ/d} − ζ·s'^{κ'/d}` (ζ ∈ μ_d, d = gcd(κ, κ')) that
/// divide `p`. An empty list means `p` is coprime to `s^κ − s'^κ'`.
///
/// Each factor is tested by the parametrization `s ↦ ζ''·t^{κ'/d}`,
/// `s' ↦ t^{κ/d}` with `ζ''^{κ/d} = ζ`, using `s'` itself as `t`.
pub fn coprimality_vs_binomial(p: &Poly, kappa: i64, kappa_prime: i64) -> Result<Vec<BinomialFactor>, LaurentError> {
    if kappa <= 0 || kappa_prime <= 0 {
        return Err(LaurentError::NonPositiveDegree);
    }
    let alphabet = p.alphabet();
    let s = alphabet.require("s")?;
    let s2 = alphabet.require("s'")?;
    let n = alphabet.len();
    let d = kappa.gcd(&kappa_prime);
    let (ka, kb) = ((kappa / d) as i32, (kappa_prime / d) as i32);

    let mut out = Vec::new();
    for j in 0..d {
        let zeta = RootOfUnity::new(d as u64, j);
        let lifted = CycNum::zeta(kappa as u64, j);
        let param = p.substitute(&[
            (s, lifted, Monomial::var(n, s2, kb)),
            (s2, CycNum::from(1), Monomial::var(n, s2, ka)),
        ])?;
        if param.is_zero() {
            let mut factor = Poly::term(alphabet, CycNum::from(1), Monomial::var(n, s, ka));
            factor.add_term(Monomial::var(n, s2, kb), -zeta.to_cyc());
            out.push(BinomialFactor { zeta, factor });
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Poly {
        Poly::parse_canonical(s).unwrap()
    }

    #[test]
    fn no_s_dependence_is_coprime() {
        for k in 1..4 {
            for k2 in 1..4 {
                assert!(coprimality_vs_binomial(&p("a - a'"), k, k2).unwrap().is_empty());
            }
        }
    }

    #[test]
    fn linear_factor() {
        let out = coprimality_vs_binomial(&p("(s - s')*a"), 1, 1).unwrap();
        assert_eq!(out.len(), 1);
        assert!(out[0].zeta.is_one());
        assert_eq!(out[0].factor, p("s - s'"));
    }

    #[test]
    fn both_square_factors() {
        let out = coprimality_vs_binomial(&p("s^2 - s'^2"), 2, 2).unwrap();
        let got: Vec<_> = out.iter().map(|f| (f.zeta.to_cyc(), f.factor.clone())).collect();
        assert_eq!(got, vec![(CycNum::from(1), p("s - s'")), (CycNum::from(-1), p("s + s'"))]);
    }

    #[test]
    fn rejects_nonpositive() {
        assert_eq!(coprimality_vs_binomial(&p("s"), 0, 1), Err(LaurentError::NonPositiveDegree));
    }
}
