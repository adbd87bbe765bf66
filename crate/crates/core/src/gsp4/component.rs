use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::laurent::LaurentError;
use crate::{Poly, RootOfUnity, Scalar};

use super::{GSpMatrix, Gsp4Error};

/// The component `G^ζ` of `G_{κ,κ'}` with `ζ ∈ μ_d`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentLabel {
    pub d: u64,
    pub zeta: RootOfUnity,
}

impl ComponentLabel {
    /// The label `ζ_d^k`.
    pub fn new(d: u64, k: i64) -> Self {
        ComponentLabel { d, zeta: RootOfUnity::new(d, k) }
    }

    /// Exponent `k` with `ζ = ζ_d^k`.
    pub fn exponent(&self) -> u64 {
        self.zeta.exponent_at(self.d).expect("label order divides d")
    }
}

/// The `ζ ∈ μ_d` with `ν(γ)^{κ/d} = ζ·ν(γ')^{κ'/d}`, or `None` when the pair is
/// not in `G_{κ,κ'}` (or `ζ` has no image in the scalar domain).
pub fn component_of<T: Scalar>(g: &GSpMatrix<T>, g2: &GSpMatrix<T>, kappa: u64, kappa_prime: u64) -> Option<ComponentLabel> {
    if kappa == 0 || kappa_prime == 0 {
        return None;
    }
    let d = kappa.gcd(&kappa_prime);
    let x = g.similitude().powi((kappa / d) as i64)?;
    let y = g2.similitude().powi((kappa_prime / d) as i64)?;
    if x.powi(d as i64)? != y.powi(d as i64)? {
        return None;
    }
    let ratio = x * y.inverse()?;
    let like = g.similitude().clone();
    (0..d as i64)
        .map(|k| ComponentLabel::new(d, k))
        .find(|l| T::from_cyc_like(&l.zeta.to_cyc(), &like).is_some_and(|z| z == ratio))
}

/// `φ(γ, γ') = P(ν(γ), ν(γ'), tr γ, tr std γ, tr γ', tr std γ')`.
pub fn eval_invariant<T: Scalar>(phi: &Poly, g: &GSpMatrix<T>, g2: &GSpMatrix<T>) -> Result<T, Gsp4Error> {
    let alphabet = phi.alphabet();
    let names = ["s", "s'", "a", "b", "a'", "b'"];
    let vals = [
        g.similitude().clone(),
        g2.similitude().clone(),
        g.trace(),
        g.std_trace(),
        g2.trace(),
        g2.std_trace(),
    ];
    let mut values = vec![g.similitude().clone(); alphabet.len()];
    let mut slots = Vec::new();
    for (n, v) in names.iter().zip(vals) {
        if let Some(i) = alphabet.index(n) {
            values[i] = v;
            slots.push(i);
        }
    }
    if let Some(bad) = phi.used_vars().into_iter().find(|i| !slots.contains(i)) {
        return Err(LaurentError::UnexpectedVariable(alphabet.name(bad).to_string()).into());
    }
    Ok(phi.eval(&values)?)
}
