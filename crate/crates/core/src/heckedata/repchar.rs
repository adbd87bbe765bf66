use crate::laurent::{rewrite_invariant_pair, LaurentError, Monomial, VarAlphabet};
use crate::{CycNum, Poly};

use super::{HeckeError, SiegelForm};

/// The character of a representation of GSp4, written as the trace of
/// `r(diag(x1, x2, s/x1, s/x2))`, together with its trace-coordinate form
/// `R(s, a, b)`.
#[derive(Debug, Clone, PartialEq)]
pub struct RepChar {
    name: String,
    trace: Poly,
    rewritten: Poly,
}

impl RepChar {
    /// Validates and rewrites a character polynomial in `s, x1, x2`.
    pub fn new(name: impl Into<String>, trace: Poly) -> Result<Self, HeckeError> {
        let alphabet = trace.alphabet().clone();
        let allowed = ["s", "x1", "x2"].map(|n| alphabet.index(n));
        if let Some(bad) = trace.used_vars().into_iter().find(|i| !allowed.contains(&Some(*i))) {
            return Err(LaurentError::UnexpectedVariable(alphabet.name(bad).to_string()).into());
        }
        let rewritten = rewrite_invariant_pair(&trace)?;
        Ok(RepChar { name: name.into(), trace, rewritten })
    }

    /// The four torus eigenvalues `x1, x2, s/x1, s/x2` as monomials.
    fn weights(alphabet: &VarAlphabet) -> [Monomial; 4] {
        let n = alphabet.len();
        let [s, x1, x2] = ["s", "x1", "x2"].map(|v| alphabet.index(v).unwrap());
        let inv = |x: usize| {
            let mut m = Monomial::var(n, x, -1);
            m.0[s] = 1;
            m
        };
        [Monomial::var(n, x1, 1), Monomial::var(n, x2, 1), inv(x1), inv(x2)]
    }

    /// The 4-dimensional spin representation.
    pub fn spin() -> Self {
        RepChar::sym(1).expect("spin character is invariant")
    }

    /// The 5-dimensional standard representation, `∧²/ν − 1`.
    pub fn std() -> Self {
        let trace = Poly::parse_canonical("x1*x2/s + x1/x2 + x2/x1 + s/(x1*x2) + 1").unwrap();
        RepChar::new("std", trace).expect("std character is invariant")
    }

    /// `Sym^m` of the spin representation: the complete homogeneous sum of
    /// degree `m` in the four torus eigenvalues.
    pub fn sym(m: u32) -> Result<Self, HeckeError> {
        let alphabet = VarAlphabet::canonical();
        let w = RepChar::weights(&alphabet);
        let mut trace = Poly::zero(&alphabet);
        let m = m as i32;
        for i in 0..=m {
            for j in 0..=m - i {
                for k in 0..=m - i - j {
                    let l = m - i - j - k;
                    let mono = w[0].pow(i).mul(&w[1].pow(j)).mul(&w[2].pow(k)).mul(&w[3].pow(l));
                    trace.add_term(mono, CycNum::from(1));
                }
            }
        }
        let name = if m == 1 { "spin".to_string() } else { format!("sym{m}") };
        RepChar::new(name, trace)
    }

    /// Built-in characters by name: `spin`, `std`, `sym1`..`sym4`.
    pub fn builtin(name: &str) -> Option<Self> {
        match name {
            "spin" => Some(RepChar::spin()),
            "std" => Some(RepChar::std()),
            _ => {
                let m: u32 = name.strip_prefix("sym")?.parse().ok()?;
                (1..=4).contains(&m).then(|| RepChar::sym(m).unwrap())
            }
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn trace(&self) -> &Poly {
        &self.trace
    }

    /// `R(s, a, b)` with `R(s, tr γ, tr std γ) = tr r(γ)`.
    pub fn rewritten(&self) -> &Poly {
        &self.rewritten
    }
}

impl SiegelForm {
    /// `r_p`: the trace of `r` at `p`, computed exactly as `R(s_p, a_p, b_p)`.
    pub fn rp(&self, r: &RepChar, p: u64) -> Result<CycNum, HeckeError> {
        let ev = self.local(p)?;
        let alphabet = r.rewritten.alphabet();
        let mut values = vec![CycNum::from(1); alphabet.len()];
        values[alphabet.require("s")?] = self.s_p(p)?;
        values[alphabet.require("a")?] = CycNum::from_rational(&ev.ap);
        values[alphabet.require("b")?] = self.bp(p)?;
        Ok(r.rewritten.eval(&values)?)
    }
}
