//! Numeric Satake parameters from the monic Hecke quartic.

use nalgebra::Matrix4;
use num_complex::Complex64;
use serde::Serialize;

use super::HeckeError;

/// Default relative tolerance for pairing Satake roots.
pub const DEFAULT_TOL: f64 = 1e-10;

/// Roots `β1..β4` of the Hecke polynomial with `β1β4 = β2β3 = s_p`.
#[derive(Debug, Clone, Serialize)]
pub struct SatakeSet {
    pub p: u64,
    pub betas: [Complex64; 4],
    pub s_p: Complex64,
    /// Largest relative deviation `|β_iβ_j − s_p| / |s_p|` over the two pairs.
    pub pairing_error: f64,
}

impl SatakeSet {
    /// Elementary symmetric functions `e1..e4` of the roots.
    pub fn elementary(&self) -> [Complex64; 4] {
        let b = self.betas;
        let e1 = b[0] + b[1] + b[2] + b[3];
        let e2 = b[0] * b[1] + b[0] * b[2] + b[0] * b[3] + b[1] * b[2] + b[1] * b[3] + b[2] * b[3];
        let e3 = b[0] * b[1] * b[2] + b[0] * b[1] * b[3] + b[0] * b[2] * b[3] + b[1] * b[2] * b[3];
        let e4 = b[0] * b[1] * b[2] * b[3];
        [e1, e2, e3, e4]
    }
}

fn horner(c: &[Complex64; 5], x: Complex64) -> (Complex64, Complex64) {
    let mut f = c[0];
    let mut df = Complex64::new(0.0, 0.0);
    for ci in &c[1..] {
        df = df * x + f;
        f = f * x + ci;
    }
    (f, df)
}

fn companion_roots(c: &[Complex64; 5]) -> Vec<Complex64> {
    let z = Complex64::new(0.0, 0.0);
    let one = Complex64::new(1.0, 0.0);
    let lead = c[0];
    let m = Matrix4::new(
        -c[1] / lead, -c[2] / lead, -c[3] / lead, -c[4] / lead,
        one, z, z, z,
        z, one, z, z,
        z, z, one, z,
    );
    match m.schur().eigenvalues() {
        Some(ev) => ev.iter().copied().collect(),
        None => m.schur().unpack().1.diagonal().iter().copied().collect(),
    }
}

/// Replaces each cluster of nearby roots by its mean, then applies one Newton
/// step to the isolated roots.
fn polish(c: &[Complex64; 5], roots: &[Complex64], radius: f64) -> Vec<Complex64> {
    let scale = roots.iter().map(|r| r.norm()).fold(1.0, f64::max);
    let mut label: Vec<usize> = (0..roots.len()).collect();
    for i in 0..roots.len() {
        for j in 0..i {
            if (roots[i] - roots[j]).norm() <= radius * scale {
                let (a, b) = (label[i], label[j]);
                for l in label.iter_mut() {
                    if *l == a {
                        *l = b;
                    }
                }
            }
        }
    }
    let mut out = roots.to_vec();
    for (i, r) in out.iter_mut().enumerate() {
        let members: Vec<usize> = (0..roots.len()).filter(|&j| label[j] == label[i]).collect();
        if members.len() > 1 {
            *r = members.iter().map(|&j| roots[j]).sum::<Complex64>() / members.len() as f64;
        } else {
            let (f, df) = horner(c, *r);
            if df.norm() > 0.0 {
                *r -= f / df;
            }
        }
    }
    out
}

const MATCHINGS: [[(usize, usize); 2]; 3] = [[(0, 1), (2, 3)], [(0, 2), (1, 3)], [(0, 3), (1, 2)]];

fn best_matching(roots: &[Complex64], s: Complex64) -> ([(usize, usize); 2], f64) {
    let err = |i: usize, j: usize| (roots[i] * roots[j] - s).norm() / s.norm();
    MATCHINGS
        .iter()
        .map(|m| (*m, err(m[0].0, m[0].1).max(err(m[1].0, m[1].1))))
        .min_by(|a, b| a.1.total_cmp(&b.1))
        .unwrap()
}

/// Sort key: descending modulus (quantized so tiny noise does not reorder
/// equal moduli), then ascending argument.
fn order_key(z: Complex64, scale: f64) -> (i64, f64) {
    (-((z.norm() / scale) * 1e8).round() as i64, z.arg())
}

fn cmp_roots(a: Complex64, b: Complex64, scale: f64) -> std::cmp::Ordering {
    let (ka, kb) = (order_key(a, scale), order_key(b, scale));
    ka.0.cmp(&kb.0).then(ka.1.total_cmp(&kb.1))
}

/// Both roots of `z² + bz + c`, computed without cancellation. A discriminant
/// at rounding level is treated as a double root.
fn quadratic_roots(b: Complex64, c: Complex64) -> [Complex64; 2] {
    let disc = b * b - 4.0 * c;
    if disc.norm() <= 1e-12 * (b * b).norm().max(c.norm()) {
        return [-b / 2.0; 2];
    }
    let mut d = disc.sqrt();
    if (b.conj() * d).re < 0.0 {
        d = -d;
    }
    let q = -(b + d) / 2.0;
    if q.norm() == 0.0 {
        return [q, q];
    }
    [q, c / q]
}

/// Relative failure of `c0x⁴ + … + c4` to be reciprocal with respect to `s`.
fn reciprocity_defect(c: &[Complex64; 5], s: Complex64) -> f64 {
    let d3 = (c[3] - c[1] * s).norm() / (c[1] * s).norm().max(c[3].norm()).max(s.norm());
    let d4 = (c[4] - c[0] * s * s).norm() / (c[0] * s * s).norm();
    d3.max(d4)
}

/// Pairs `(x, s/x)` from `u = x + s/x` solving `u² + c1u + c2 − 2s = 0`.
fn reciprocal_pairs(c: &[Complex64; 5], s: Complex64) -> [(Complex64, Complex64); 2] {
    let (c1, c2) = (c[1] / c[0], c[2] / c[0]);
    quadratic_roots(c1, c2 - 2.0 * s).map(|u| {
        let [x, y] = quadratic_roots(-u, s);
        (x, y)
    })
}

fn ordered(pairs: &mut [(Complex64, Complex64)], scale: f64) -> [Complex64; 4] {
    for pair in pairs.iter_mut() {
        if cmp_roots(pair.0, pair.1, scale).is_gt() {
            *pair = (pair.1, pair.0);
        }
    }
    pairs.sort_by(|a, b| cmp_roots(a.0, b.0, scale));
    [pairs[0].0, pairs[1].0, pairs[1].1, pairs[0].1]
}

/// Roots of `c0 x⁴ + c1 x³ + … + c4`, paired so that `β1β4 = β2β3 = s`.
///
/// Reciprocal quartics are solved through `u = x + s/x`, which keeps relative
/// accuracy when the roots span many orders of magnitude. Other input goes
/// through the companion matrix and the pairing is searched for.
pub fn satake_from_quartic(c: &[Complex64; 5], s: Complex64, tol: f64) -> Result<SatakeSet, HeckeError> {
    let defect = reciprocity_defect(c, s);
    if defect <= tol {
        let mut pairs = reciprocal_pairs(c, s);
        let err = pairs.iter().map(|(x, y)| (x * y - s).norm() / s.norm()).fold(defect, f64::max);
        if err <= tol {
            let scale = pairs.iter().map(|(x, y)| x.norm().max(y.norm())).fold(f64::MIN_POSITIVE, f64::max);
            let betas = ordered(&mut pairs, scale);
            return Ok(SatakeSet { p: 0, betas, s_p: s, pairing_error: err });
        }
    }
    let raw = companion_roots(c);
    let mut best: Option<(Vec<Complex64>, [(usize, usize); 2], f64)> = None;
    for radius in [0.0, 1e-6, 1e-3] {
        let roots = polish(c, &raw, radius);
        let (m, e) = best_matching(&roots, s);
        if best.as_ref().is_none_or(|b| e < b.2) {
            best = Some((roots, m, e));
        }
    }
    let (roots, matching, err) = best.unwrap();
    if !(err <= tol) {
        return Err(HeckeError::PairingFailure { best: err });
    }
    let scale = roots.iter().map(|r| r.norm()).fold(f64::MIN_POSITIVE, f64::max);
    let mut pairs: Vec<(Complex64, Complex64)> = matching.iter().map(|&(i, j)| (roots[i], roots[j])).collect();
    let betas = ordered(&mut pairs, scale);
    Ok(SatakeSet { p: 0, betas, s_p: s, pairing_error: err })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(x: f64) -> Complex64 {
        Complex64::new(x, 0.0)
    }

    fn from_roots(r: [Complex64; 4]) -> [Complex64; 5] {
        let mut p = vec![c(1.0)];
        for root in r {
            let mut next = vec![c(0.0); p.len() + 1];
            for (i, a) in p.iter().enumerate() {
                next[i] += a;
                next[i + 1] -= a * root;
            }
            p = next;
        }
        [p[0], p[1], p[2], p[3], p[4]]
    }

    #[test]
    fn known_roots() {
        let q = from_roots([c(2.0), c(3.0), c(3.0), c(2.0)]);
        let s = satake_from_quartic(&q, c(6.0), DEFAULT_TOL).unwrap();
        let b: Vec<f64> = s.betas.iter().map(|z| z.re).collect();
        for (got, want) in b.iter().zip([3.0, 3.0, 2.0, 2.0]) {
            assert!((got - want).abs() < 1e-9, "{b:?}");
        }
    }

    #[test]
    fn scalar_cluster() {
        let r = 6f64.sqrt();
        let q = from_roots([c(r); 4]);
        let s = satake_from_quartic(&q, c(6.0), DEFAULT_TOL).unwrap();
        for b in s.betas {
            assert!((b - c(r)).norm() < 1e-6);
        }
    }

    #[test]
    fn unitary_roots() {
        let s: f64 = 8.0;
        let z1 = Complex64::from_polar(s.sqrt(), 0.7);
        let z2 = Complex64::from_polar(s.sqrt(), 2.1);
        let q = from_roots([z1, z2, z2.conj(), z1.conj()]);
        let out = satake_from_quartic(&q, c(s), DEFAULT_TOL).unwrap();
        let e = out.elementary();
        for (k, coeff) in q[1..].iter().enumerate() {
            let sign = if k % 2 == 0 { -1.0 } else { 1.0 };
            assert!((e[k] * sign - coeff).norm() < 1e-8 * coeff.norm().max(1.0));
        }
        assert!((out.betas[0] * out.betas[3] - c(s)).norm() < 1e-9);
    }

    #[test]
    fn pairing_failure() {
        let mut q = from_roots([c(2.0), c(3.0), c(3.0), c(2.0)]);
        q[3] += c(0.5);
        assert!(matches!(satake_from_quartic(&q, c(6.0), DEFAULT_TOL), Err(HeckeError::PairingFailure { .. })));
    }
}
