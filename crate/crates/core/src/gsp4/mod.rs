//! GSp4 over exact fields and prime fields, the group `G_{κ,κ'}` and its
//! components, invariant functions, witnesses and sampling.

mod component;
mod matrix;
mod sampler;
mod witness;

use thiserror::Error;

use crate::laurent::{BinomialFactor, LaurentError};

pub use component::{component_of, eval_invariant, ComponentLabel};
pub use matrix::{companion_for, torus, transvection, EntryText, GSpMatrix, Mat4};
pub use sampler::{random_sp4, sample_component, SampleStats, SAMPLER_STEPS};
pub use witness::{nonvanishing_witness, Witness, WitnessBudget};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Gsp4Error {
    #[error("matrix is not in GSp4")]
    NotInGroup,
    #[error("v must be nonzero")]
    ZeroV,
    #[error("polynomial is not coprime to s^kappa - s'^kappa' ({} common factor(s))", .0.len())]
    NotCoprime(Vec<BinomialFactor>),
    #[error("component label has d = {d}, expected gcd(kappa, kappa') = {expected}")]
    BadComponent { d: u64, expected: u64 },
    #[error("no witness found with w <= {w} and grid radius <= {radius}")]
    BudgetExhausted { w: u64, radius: i64 },
    #[error("F_{q} does not contain the {d}-th roots of unity")]
    BadField { q: u64, d: u64 },
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("the field must have odd characteristic")]
    EvenField,
    #[error(transparent)]
    Laurent(#[from] LaurentError),
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{CycNum, Poly, Rational};

    fn q(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    fn p(s: &str) -> Poly {
        Poly::parse_canonical(s).unwrap()
    }

    #[test]
    fn similitude_examples() {
        assert_eq!(Mat4::<Rational>::identity().similitude(), Some(q(1)));
        assert_eq!(Mat4::diag([q(3), q(3), q(3), q(3)]).similitude(), Some(q(9)));
        assert_eq!(Mat4::diag([q(1), q(2), q(3), q(4)]).similitude(), None);
        assert_eq!(Mat4::<Rational>::from_fn(|_, _| q(0)).similitude(), None);
    }

    #[test]
    fn companion_examples() {
        let c = companion_for(&q(0), &q(0), &q(1)).unwrap();
        assert_eq!(c.char_poly(), [q(1), q(0), q(0), q(0), q(1)]);
        let c = companion_for(&q(1), &q(2), &q(1)).unwrap();
        assert_eq!(c.matrix().similitude(), Some(q(1)));
        assert_eq!(c.char_poly(), [q(1), q(1), q(2), q(1), q(1)]);
        assert_eq!(c.trace(), q(-1));
        let c = companion_for(&q(0), &q(0), &q(3)).unwrap();
        assert_eq!(c.similitude(), &q(9));
        assert_eq!(c.char_poly(), [q(1), q(0), q(0), q(0), q(81)]);
        assert_eq!(companion_for(&q(1), &q(1), &q(0)).unwrap_err(), Gsp4Error::ZeroV);
    }

    #[test]
    fn std_trace_examples() {
        assert_eq!(GSpMatrix::<Rational>::identity().std_trace(), q(5));
        let g = GSpMatrix::new(Mat4::diag([q(2), q(2), q(2), q(2)])).unwrap();
        assert_eq!(g.std_trace(), q(5));
    }

    #[test]
    fn inverse_and_transvection() {
        let t = transvection(&[q(1), q(2), q(0), q(-1)], &q(3));
        assert_eq!(t.matrix().similitude(), Some(q(1)));
        let c = companion_for(&q(2), &q(-1), &q(3)).unwrap();
        let g = t.mul(&c);
        assert_eq!(g.mul(&g.inverse()), GSpMatrix::identity());
        let conj = c.conjugate_by(&t);
        assert_eq!(conj.char_poly(), c.char_poly());
    }

    #[test]
    fn component_examples() {
        let id = GSpMatrix::<Rational>::identity();
        assert_eq!(component_of(&id, &id, 3, 2), Some(ComponentLabel::new(1, 0)));
        let t = q(5);
        let g = torus(&q(1), &q(1), &t).unwrap();
        let g2 = torus(&q(1), &q(1), &-t).unwrap();
        assert_eq!(component_of(&g, &g2, 2, 2), Some(ComponentLabel::new(2, 1)));
        let g = torus(&q(1), &q(1), &q(2)).unwrap();
        let g2 = torus(&q(1), &q(1), &q(3)).unwrap();
        assert_eq!(component_of(&g, &g2, 1, 1), None);
    }

    #[test]
    fn invariant_examples() {
        let c = companion_for(&q(1), &q(2), &q(1)).unwrap();
        assert_eq!(eval_invariant(&p("a - a'"), &c, &c).unwrap(), q(0));
        assert_eq!(eval_invariant(&p("s*b' + a"), &c, &c).unwrap(), q(1 - 1));
        assert!(eval_invariant(&p("x1"), &c, &c).is_err());
    }

    #[test]
    fn witness_examples() {
        let w = nonvanishing_witness(&p("a - a'"), 2, 3, ComponentLabel::new(1, 0), WitnessBudget::default()).unwrap();
        assert_eq!((w.t, w.params[0], w.params[2]), (1, 1, 0));
        let w = nonvanishing_witness(&p("s - 2"), 1, 1, ComponentLabel::new(1, 0), WitnessBudget::default()).unwrap();
        assert_eq!((w.t, w.value.clone()), (1, CycNum::from(-1)));
        let e = nonvanishing_witness(&p("s - s'"), 1, 1, ComponentLabel::new(1, 0), WitnessBudget::default());
        assert!(matches!(e, Err(Gsp4Error::NotCoprime(_))));
        let e = nonvanishing_witness(&p("a"), 2, 2, ComponentLabel::new(1, 0), WitnessBudget::default());
        assert!(matches!(e, Err(Gsp4Error::BadComponent { .. })));
    }

    #[test]
    fn witness_lands_in_component() {
        let label = ComponentLabel::new(2, 1);
        let w = nonvanishing_witness(&p("s + s' - 2*a*b"), 2, 4, label, WitnessBudget::default()).unwrap();
        assert_eq!(component_of(&w.gamma, &w.gamma_prime, 2, 4), Some(label));
        // s - s'^2 vanishes on the ζ = 1 component only.
        let w = nonvanishing_witness(&p("s - s'^2 + a - a"), 2, 4, label, WitnessBudget::default());
        assert!(matches!(w, Err(Gsp4Error::NotCoprime(_))));
    }

    #[test]
    fn sampler_examples() {
        let l = ComponentLabel::new(1, 0);
        assert_eq!(sample_component(&p("0"), 13, 1, 1, l, 50, 1).unwrap().fraction, 1.0);
        assert_eq!(sample_component(&p("1"), 13, 1, 1, l, 50, 1).unwrap().fraction, 0.0);
        let a = sample_component(&p("a - a'"), 13, 1, 1, l, 200, 7).unwrap();
        assert_eq!(a, sample_component(&p("a - a'"), 13, 1, 1, l, 200, 7).unwrap());
        let l3 = ComponentLabel::new(3, 1);
        assert_eq!(sample_component(&p("1"), 11, 3, 3, l3, 5, 0), Err(Gsp4Error::BadField { q: 11, d: 3 }));
        assert_eq!(sample_component(&p("1"), 9, 1, 1, l, 5, 0), Err(Gsp4Error::NotPrime(9)));
        assert_eq!(sample_component(&p("1"), 2, 1, 1, l, 5, 0), Err(Gsp4Error::EvenField));
    }
}
