use std::fmt;

use serde::ser::SerializeStruct;
use serde::Serialize;

use crate::exactfield::format_rational;
use crate::{CycNum, Fp, Rational, Scalar};

use super::Gsp4Error;

/// A 4×4 matrix over a scalar field.
#[derive(Clone, PartialEq)]
pub struct Mat4<T>(pub [[T; 4]; 4]);

impl<T: Scalar> Mat4<T> {
    pub fn from_fn(f: impl Fn(usize, usize) -> T) -> Self {
        Mat4(std::array::from_fn(|i| std::array::from_fn(|j| f(i, j))))
    }

    pub fn identity() -> Self {
        Mat4::from_fn(|i, j| if i == j { T::one() } else { T::zero() })
    }

    pub fn diag(d: [T; 4]) -> Self {
        Mat4::from_fn(|i, j| if i == j { d[i].clone() } else { T::zero() })
    }

    /// The form `J` with `J[0][3] = J[1][2] = 1`, `J[2][1] = J[3][0] = −1`.
    pub fn form() -> Self {
        Mat4::from_fn(|i, j| match (i, j) {
            (0, 3) | (1, 2) => T::one(),
            (2, 1) | (3, 0) => -T::one(),
            _ => T::zero(),
        })
    }

    pub fn mul(&self, other: &Mat4<T>) -> Mat4<T> {
        Mat4::from_fn(|i, j| {
            (0..4).fold(T::zero(), |acc, k| acc + self.0[i][k].clone() * other.0[k][j].clone())
        })
    }

    pub fn transpose(&self) -> Mat4<T> {
        Mat4::from_fn(|i, j| self.0[j][i].clone())
    }

    pub fn scale(&self, k: &T) -> Mat4<T> {
        Mat4::from_fn(|i, j| self.0[i][j].clone() * k.clone())
    }

    pub fn trace(&self) -> T {
        (0..4).fold(T::zero(), |acc, i| acc + self.0[i][i].clone())
    }

    fn minor(&self, rows: &[usize]) -> T {
        self.sub_det(rows, rows)
    }

    fn sub_det(&self, rows: &[usize], cols: &[usize]) -> T {
        if rows.is_empty() {
            return T::one();
        }
        let mut acc = T::zero();
        for (k, &c) in cols.iter().enumerate() {
            let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
            let term = self.0[rows[0]][c].clone() * self.sub_det(&rows[1..], &rest);
            acc = if k % 2 == 0 { acc + term } else { acc - term };
        }
        acc
    }

    /// Sum of the principal `k×k` minors, the `k`-th elementary symmetric
    /// function of the eigenvalues.
    pub fn principal_minor_sum(&self, k: usize) -> T {
        let mut acc = T::zero();
        for mask in 0u32..16 {
            if mask.count_ones() as usize == k {
                let rows: Vec<usize> = (0..4).filter(|i| mask >> i & 1 == 1).collect();
                acc = acc + self.minor(&rows);
            }
        }
        acc
    }

    pub fn det(&self) -> T {
        self.principal_minor_sum(4)
    }

    /// Characteristic polynomial `det(x − γ)`, leading coefficient first.
    pub fn char_poly(&self) -> [T; 5] {
        [
            T::one(),
            -self.principal_minor_sum(1),
            self.principal_minor_sum(2),
            -self.principal_minor_sum(3),
            self.principal_minor_sum(4),
        ]
    }

    /// `ν` with `γᵗJγ = νJ`, if it exists and is nonzero.
    pub fn similitude(&self) -> Option<T> {
        let j = Mat4::<T>::form();
        let g = self.transpose().mul(&j).mul(self);
        let nu = g.0[0][3].clone();
        (!nu.is_zero() && g == j.scale(&nu)).then_some(nu)
    }
}

impl<T: fmt::Debug> fmt::Debug for Mat4<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.0.iter()).finish()
    }
}

/// An element of GSp4 with its similitude.
#[derive(Clone, PartialEq)]
pub struct GSpMatrix<T> {
    m: Mat4<T>,
    nu: T,
}

impl<T: Scalar> GSpMatrix<T> {
    pub fn new(m: Mat4<T>) -> Result<Self, Gsp4Error> {
        let nu = m.similitude().ok_or(Gsp4Error::NotInGroup)?;
        Ok(GSpMatrix { m, nu })
    }

    pub fn identity() -> Self {
        GSpMatrix { m: Mat4::identity(), nu: T::one() }
    }

    pub fn matrix(&self) -> &Mat4<T> {
        &self.m
    }

    pub fn similitude(&self) -> &T {
        &self.nu
    }

    pub fn trace(&self) -> T {
        self.m.trace()
    }

    /// `tr ∧²γ / ν − 1`.
    pub fn std_trace(&self) -> T {
        self.m.principal_minor_sum(2) * self.nu.inverse().expect("similitude is nonzero") - T::one()
    }

    pub fn char_poly(&self) -> [T; 5] {
        self.m.char_poly()
    }

    pub fn mul(&self, other: &GSpMatrix<T>) -> GSpMatrix<T> {
        GSpMatrix { m: self.m.mul(&other.m), nu: self.nu.clone() * other.nu.clone() }
    }

    /// `γ⁻¹ = ν⁻¹ J⁻¹ γᵗ J`.
    pub fn inverse(&self) -> GSpMatrix<T> {
        let j = Mat4::<T>::form();
        let jinv = j.scale(&-T::one());
        let inv_nu = self.nu.inverse().expect("similitude is nonzero");
        GSpMatrix { m: jinv.mul(&self.m.transpose()).mul(&j).scale(&inv_nu), nu: inv_nu }
    }

    /// `hγh⁻¹`.
    pub fn conjugate_by(&self, h: &GSpMatrix<T>) -> GSpMatrix<T> {
        h.mul(self).mul(&h.inverse())
    }
}

impl<T: fmt::Debug> fmt::Debug for GSpMatrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GSpMatrix").field("m", &self.m).field("nu", &self.nu).finish()
    }
}

/// The companion matrix
/// `[[0,0,−v,0],[v,0,−a,0],[0,0,0,v],[0,v,−b/v,−a]]`, with similitude `v²` and
/// characteristic polynomial `x⁴ + ax³ + bx² + av²x + v⁴`.
pub fn companion_for<T: Scalar>(a: &T, b: &T, v: &T) -> Result<GSpMatrix<T>, Gsp4Error> {
    let vinv = v.inverse().ok_or(Gsp4Error::ZeroV)?;
    let z = || T::zero();
    let m = Mat4([
        [z(), z(), -v.clone(), z()],
        [v.clone(), z(), -a.clone(), z()],
        [z(), z(), z(), v.clone()],
        [z(), v.clone(), -(b.clone() * vinv), -a.clone()],
    ]);
    GSpMatrix::new(m)
}

/// Symplectic transvection `x ↦ x + λ⟨v, x⟩v` with `⟨v, x⟩ = vᵗJx`.
pub fn transvection<T: Scalar>(v: &[T; 4], lambda: &T) -> GSpMatrix<T> {
    let j = Mat4::<T>::form();
    let vj: [T; 4] = std::array::from_fn(|c| (0..4).fold(T::zero(), |acc, k| acc + v[k].clone() * j.0[k][c].clone()));
    let m = Mat4::from_fn(|r, c| {
        let id = if r == c { T::one() } else { T::zero() };
        id + lambda.clone() * v[r].clone() * vj[c].clone()
    });
    GSpMatrix { m, nu: T::one() }
}

/// The torus element `diag(x1, x2, s/x2, s/x1)`.
pub fn torus<T: Scalar>(x1: &T, x2: &T, s: &T) -> Result<GSpMatrix<T>, Gsp4Error> {
    let i1 = x1.inverse().ok_or(Gsp4Error::NotInGroup)?;
    let i2 = x2.inverse().ok_or(Gsp4Error::NotInGroup)?;
    if s.is_zero() {
        return Err(Gsp4Error::NotInGroup);
    }
    let m = Mat4::diag([x1.clone(), x2.clone(), s.clone() * i2, s.clone() * i1]);
    Ok(GSpMatrix { m, nu: s.clone() })
}

/// Text form of matrix entries and the name of their domain.
pub trait EntryText {
    fn domain(&self) -> String;
    fn text(&self) -> String;
}

impl EntryText for Rational {
    fn domain(&self) -> String {
        "Q".into()
    }
    fn text(&self) -> String {
        format_rational(self)
    }
}

impl EntryText for CycNum {
    fn domain(&self) -> String {
        "cyclotomic".into()
    }
    fn text(&self) -> String {
        self.to_string()
    }
}

impl EntryText for Fp {
    fn domain(&self) -> String {
        match self.modulus() {
            Some(q) => format!("F_{q}"),
            None => "F_q".into(),
        }
    }
    fn text(&self) -> String {
        self.to_string()
    }
}

impl<T: Scalar + EntryText> Serialize for GSpMatrix<T> {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let entries: Vec<String> = self.m.0.iter().flatten().map(EntryText::text).collect();
        let mut st = s.serialize_struct("GSpMatrix", 3)?;
        st.serialize_field("domain", &self.nu.domain())?;
        st.serialize_field("entries", &entries)?;
        st.serialize_field("similitude", &self.nu.text())?;
        st.end()
    }
}
