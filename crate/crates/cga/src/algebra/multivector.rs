//! Dense multivectors of the 5D algebra of {origin, 3-space, infinity}.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use super::blade::{
    self, mask, null_blade_name, null_blade_order, reverse_sign, BLADE_COUNT, B_E1, B_E2, B_E3,
    SIGN,
};
use super::tolerance::Tolerance;
use crate::euclid::{Bivec3, Vec3};
use crate::AlgebraError;

/// A dense element of the algebra: 32 coefficients over the internal
/// diagonal basis, indexed by a 5-bit blade mask.
///
/// All operations are pure; values are immutable once built.
#[derive(Clone, Copy, PartialEq)]
pub struct Multivector {
    c: [f64; BLADE_COUNT],
}

impl Multivector {
    pub const ZERO: Multivector = Multivector {
        c: [0.0; BLADE_COUNT],
    };

    /// From raw coefficients over the internal diagonal basis.
    pub fn from_coeffs(c: [f64; BLADE_COUNT]) -> Self {
        Self { c }
    }

    /// Raw coefficients over the internal diagonal basis.
    pub fn coeffs(&self) -> &[f64; BLADE_COUNT] {
        &self.c
    }

    pub fn scalar(s: f64) -> Self {
        let mut c = [0.0; BLADE_COUNT];
        c[0] = s;
        Self { c }
    }

    /// Euclidean basis vector e1, e2 or e3 (index 1..=3).
    pub fn e(i: usize) -> Self {
        assert!((1..=3).contains(&i), "Euclidean basis index must be 1..=3");
        let mut c = [0.0; BLADE_COUNT];
        c[1 << (i - 1)] = 1.0;
        Self { c }
    }

    /// The null vector representing infinity: n = e- + e+, n^2 = 0.
    pub fn n() -> Self {
        Self::from_null_coeffs(&one_hot(mask::N))
    }

    /// The null vector representing the origin: nb = (e- - e+)/2, nb^2 = 0.
    pub fn nb() -> Self {
        Self::from_null_coeffs(&one_hot(mask::NB))
    }

    /// The Minkowski plane bivector N = n^nb; N^2 = 1.
    pub fn minkowski_plane() -> Self {
        Self::n().wedge(&Self::nb())
    }

    /// The Euclidean pseudoscalar i = e1 e2 e3; i^2 = -1.
    pub fn euclid_pseudoscalar() -> Self {
        let mut c = [0.0; BLADE_COUNT];
        c[(B_E1 | B_E2 | B_E3) as usize] = 1.0;
        Self { c }
    }

    /// Coefficients over the null basis {e1, e2, e3, n, nb}, indexed by the
    /// masks of [`crate::algebra::blade::mask`].
    pub fn null_coeffs(&self) -> [f64; BLADE_COUNT] {
        let table = &*blade::INTERNAL_TO_NULL;
        let mut out = [0.0; BLADE_COUNT];
        for (m, &c) in self.c.iter().enumerate() {
            if c != 0.0 {
                for (j, &t) in table[m].iter().enumerate() {
                    if t != 0.0 {
                        out[j] += c * t;
                    }
                }
            }
        }
        out
    }

    /// Build from coefficients over the null basis {e1, e2, e3, n, nb}.
    pub fn from_null_coeffs(coeffs: &[f64; BLADE_COUNT]) -> Self {
        let table = &*blade::NULL_TO_INTERNAL;
        let mut out = [0.0; BLADE_COUNT];
        for (m, &c) in coeffs.iter().enumerate() {
            if c != 0.0 {
                for (j, &t) in table[m].iter().enumerate() {
                    if t != 0.0 {
                        out[j] += c * t;
                    }
                }
            }
        }
        Self { c: out }
    }

    /// Grade-1 element with the given Euclidean components.
    pub fn from_euclid_vector(v: Vec3) -> Self {
        let mut c = [0.0; BLADE_COUNT];
        c[B_E1 as usize] = v.x;
        c[B_E2 as usize] = v.y;
        c[B_E3 as usize] = v.z;
        Self { c }
    }

    /// Grade-2 element with the given Euclidean bivector components.
    pub fn from_euclid_bivector(b: Bivec3) -> Self {
        let mut c = [0.0; BLADE_COUNT];
        c[(B_E2 | B_E3) as usize] = b.yz;
        c[(B_E1 | B_E3) as usize] = -b.zx; // e3^e1 stored as -(e1^e3)
        c[(B_E1 | B_E2) as usize] = b.xy;
        Self { c }
    }

    pub fn scalar_part(&self) -> f64 {
        self.c[0]
    }

    /// Euclidean components of the grade-1 part.
    pub fn euclid_vector_part(&self) -> Vec3 {
        Vec3::new(
            self.c[B_E1 as usize],
            self.c[B_E2 as usize],
            self.c[B_E3 as usize],
        )
    }

    /// Euclidean components of the grade-2 part.
    pub fn euclid_bivector_part(&self) -> Bivec3 {
        Bivec3::new(
            self.c[(B_E2 | B_E3) as usize],
            -self.c[(B_E1 | B_E3) as usize],
            self.c[(B_E1 | B_E2) as usize],
        )
    }

    /// Geometric product.
    pub fn geometric(&self, rhs: &Self) -> Self {
        let mut out = [0.0; BLADE_COUNT];
        for (a, &ca) in self.c.iter().enumerate() {
            if ca == 0.0 {
                continue;
            }
            for (b, &cb) in rhs.c.iter().enumerate() {
                if cb != 0.0 {
                    out[a ^ b] += SIGN[a][b] as f64 * ca * cb;
                }
            }
        }
        Self { c: out }
    }

    /// Outer product: keeps only the blade pairs without common generators.
    pub fn wedge(&self, rhs: &Self) -> Self {
        let mut out = [0.0; BLADE_COUNT];
        for (a, &ca) in self.c.iter().enumerate() {
            if ca == 0.0 {
                continue;
            }
            for (b, &cb) in rhs.c.iter().enumerate() {
                if cb != 0.0 && a & b == 0 {
                    out[a | b] += SIGN[a][b] as f64 * ca * cb;
                }
            }
        }
        Self { c: out }
    }

    /// Left contraction: grade (s - r) part of the product of grade-r and
    /// grade-s blades, i.e. the blade pairs where the left divides the right.
    pub fn left_contract(&self, rhs: &Self) -> Self {
        let mut out = [0.0; BLADE_COUNT];
        for (a, &ca) in self.c.iter().enumerate() {
            if ca == 0.0 {
                continue;
            }
            for (b, &cb) in rhs.c.iter().enumerate() {
                if cb != 0.0 && a & b == a {
                    out[a ^ b] += SIGN[a][b] as f64 * ca * cb;
                }
            }
        }
        Self { c: out }
    }

    /// Right contraction: grade (r - s) part, the mirror of the left
    /// contraction.
    pub fn right_contract(&self, rhs: &Self) -> Self {
        let mut out = [0.0; BLADE_COUNT];
        for (a, &ca) in self.c.iter().enumerate() {
            if ca == 0.0 {
                continue;
            }
            for (b, &cb) in rhs.c.iter().enumerate() {
                if cb != 0.0 && a & b == b {
                    out[a ^ b] += SIGN[a][b] as f64 * ca * cb;
                }
            }
        }
        Self { c: out }
    }

    /// Scalar product: the grade-0 part of the geometric product.
    pub fn scalar_product(&self, rhs: &Self) -> f64 {
        let mut out = 0.0;
        for (a, &ca) in self.c.iter().enumerate() {
            if ca != 0.0 && rhs.c[a] != 0.0 {
                out += SIGN[a][a] as f64 * ca * rhs.c[a];
            }
        }
        out
    }

    /// The scalar part of the geometric square.
    pub fn scalar_square(&self) -> f64 {
        self.scalar_product(self)
    }

    /// Grade-k part. Panics if `k > 5`.
    pub fn grade(&self, k: usize) -> Self {
        assert!(k <= 5, "grade must be 0..=5");
        let mut out = [0.0; BLADE_COUNT];
        for (m, &c) in self.c.iter().enumerate() {
            if m.count_ones() as usize == k {
                out[m] = c;
            }
        }
        Self { c: out }
    }

    /// Reversion: the grade-k part picks up (-1)^(k(k-1)/2).
    pub fn reverse(&self) -> Self {
        let mut out = [0.0; BLADE_COUNT];
        for (m, &c) in self.c.iter().enumerate() {
            out[m] = c * reverse_sign(m as u8);
        }
        Self { c: out }
    }

    /// Inverse of a versor or blade: reverse(a) / (a * reverse(a)).
    ///
    /// Fails with [`AlgebraError::NotInvertible`] when the scalar
    /// `a * reverse(a)` vanishes relative to the squared norm (null or zero
    /// blades).
    pub fn inverse(&self, tol: Tolerance) -> Result<Self, AlgebraError> {
        let rev = self.reverse();
        let denom = self.scalar_product(&rev);
        if tol.is_zero(denom, self.norm_squared()) || denom == 0.0 {
            return Err(AlgebraError::NotInvertible);
        }
        Ok(rev * (1.0 / denom))
    }

    /// Frobenius norm of the coefficients.
    pub fn norm(&self) -> f64 {
        self.norm_squared().sqrt()
    }

    pub fn norm_squared(&self) -> f64 {
        self.c.iter().map(|c| c * c).sum()
    }

    /// True when every coefficient outside grade k vanishes relative to the
    /// norm of the whole element. The zero element has every grade.
    pub fn is_grade(&self, k: usize, tol: Tolerance) -> bool {
        let mut off = 0.0;
        for (m, &c) in self.c.iter().enumerate() {
            if m.count_ones() as usize != k {
                off += c * c;
            }
        }
        tol.is_zero(off.sqrt(), self.norm())
    }

    /// True when the whole element vanishes relative to `scale`.
    pub fn is_zero(&self, tol: Tolerance, scale: f64) -> bool {
        tol.is_zero(self.norm(), scale)
    }

    /// Canonical text rendering: terms over the null basis, sorted by grade
    /// then blade name, coefficients formatted by `fmt_coeff` (returning
    /// `None` drops the term).
    pub fn render_with(&self, fmt_coeff: impl Fn(f64) -> Option<String>) -> String {
        let coeffs = self.null_coeffs();
        let mut out = String::new();
        for m in null_blade_order() {
            let c = coeffs[m as usize];
            if c == 0.0 {
                continue;
            }
            let Some(mag) = fmt_coeff(c.abs()) else {
                continue;
            };
            if mag == "0" {
                continue;
            }
            if out.is_empty() {
                if c < 0.0 {
                    out.push('-');
                }
            } else {
                out.push_str(if c < 0.0 { " - " } else { " + " });
            }
            let name = null_blade_name(m);
            if m == 0 {
                out.push_str(&mag);
            } else if mag == "1" {
                out.push_str(&name);
            } else {
                out.push_str(&mag);
                out.push('*');
                out.push_str(&name);
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

fn one_hot(mask: u8) -> [f64; BLADE_COUNT] {
    let mut c = [0.0; BLADE_COUNT];
    c[mask as usize] = 1.0;
    c
}

impl Add for Multivector {
    type Output = Multivector;
    fn add(self, rhs: Multivector) -> Multivector {
        let mut c = self.c;
        for (a, b) in c.iter_mut().zip(rhs.c.iter()) {
            *a += b;
        }
        Multivector { c }
    }
}

impl AddAssign for Multivector {
    fn add_assign(&mut self, rhs: Multivector) {
        for (a, b) in self.c.iter_mut().zip(rhs.c.iter()) {
            *a += b;
        }
    }
}

impl Sub for Multivector {
    type Output = Multivector;
    fn sub(self, rhs: Multivector) -> Multivector {
        let mut c = self.c;
        for (a, b) in c.iter_mut().zip(rhs.c.iter()) {
            *a -= b;
        }
        Multivector { c }
    }
}

impl Neg for Multivector {
    type Output = Multivector;
    fn neg(self) -> Multivector {
        self * -1.0
    }
}

impl Mul for Multivector {
    type Output = Multivector;
    fn mul(self, rhs: Multivector) -> Multivector {
        self.geometric(&rhs)
    }
}

impl Mul<f64> for Multivector {
    type Output = Multivector;
    fn mul(self, s: f64) -> Multivector {
        let mut c = self.c;
        for a in c.iter_mut() {
            *a *= s;
        }
        Multivector { c }
    }
}

impl Mul<Multivector> for f64 {
    type Output = Multivector;
    fn mul(self, mv: Multivector) -> Multivector {
        mv * self
    }
}

impl From<Vec3> for Multivector {
    fn from(v: Vec3) -> Self {
        Multivector::from_euclid_vector(v)
    }
}

impl From<Bivec3> for Multivector {
    fn from(b: Bivec3) -> Self {
        Multivector::from_euclid_bivector(b)
    }
}

impl fmt::Display for Multivector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render_with(|c| Some(format!("{c}"))))
    }
}

impl fmt::Debug for Multivector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Multivector({self})")
    }
}
