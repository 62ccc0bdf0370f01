//! Spheres: grade-4 joins P1 ^ P2 ^ P3 ^ P4 of four non-coplanar points.

use super::point::{extract_point, ConformalPoint};
use super::ObjectError;
use crate::algebra::{Multivector, Tolerance};
use crate::euclid::Vec3;

/// A sphere 4-vector (C - (r^2/2) n) i_s N, where i_s is a Euclidean
/// pseudoscalar. Round: mv ^ n != 0 (its vanishing means the four points
/// were coplanar and the object is a plane).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Sphere {
    mv: Multivector,
}

/// Center and radius of a sphere, plus the weight of its pseudoscalar
/// factor. The conformal center is the embedding of the Euclidean one.
/// `is_scale` carries the representative's own scale (it is the only
/// field that is not scale invariant).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SphereData {
    pub c: Vec3,
    pub conformal_center: ConformalPoint,
    pub r: f64,
    pub is_scale: f64,
}

impl Sphere {
    /// Join four non-coplanar conformal points.
    pub fn through(
        a: &ConformalPoint,
        b: &ConformalPoint,
        c: &ConformalPoint,
        d: &ConformalPoint,
        tol: Tolerance,
    ) -> Result<Self, ObjectError> {
        let mv = a
            .multivector()
            .wedge(b.multivector())
            .wedge(c.multivector())
            .wedge(d.multivector());
        let scale = a.multivector().norm()
            * b.multivector().norm()
            * c.multivector().norm()
            * d.multivector().norm()
            * Multivector::n().norm();
        if mv.wedge(&Multivector::n()).is_zero(tol, scale) {
            return Err(ObjectError::DegenerateSphere);
        }
        Ok(Self { mv })
    }

    /// Build a sphere from its conformal center and radius with unit
    /// pseudoscalar weight: (C - (r^2/2) n) i N.
    pub fn from_center_radius(
        center: &ConformalPoint,
        r: f64,
        tol: Tolerance,
    ) -> Result<Self, ObjectError> {
        let _ = tol;
        if !(r > 0.0 && r.is_finite()) {
            return Err(ObjectError::InvalidArgument("sphere radius must be > 0"));
        }
        let carrier = *center.multivector() - Multivector::n() * (0.5 * r * r);
        let mv = carrier
            .geometric(&Multivector::euclid_pseudoscalar())
            .geometric(&Multivector::minkowski_plane());
        Ok(Self { mv })
    }

    /// Wrap a raw multivector, checking grade 4 and roundness.
    pub fn try_new(mv: Multivector, tol: Tolerance) -> Result<Self, ObjectError> {
        if !mv.is_grade(4, tol) {
            return Err(ObjectError::InvalidObject("a sphere must be grade 4"));
        }
        if mv
            .wedge(&Multivector::n())
            .is_zero(tol, mv.norm() * Multivector::n().norm())
        {
            return Err(ObjectError::InvalidObject(
                "a sphere must not contain infinity (mv ^ n != 0)",
            ));
        }
        Ok(Self { mv })
    }

    pub fn multivector(&self) -> &Multivector {
        &self.mv
    }

    /// The pseudoscalar factor i_s = -(V4 ^ n) N.
    pub fn pseudoscalar_factor(&self) -> Multivector {
        -(self
            .mv
            .wedge(&Multivector::n())
            .geometric(&Multivector::minkowski_plane()))
        .grade(3)
    }

    /// Extract center and radius: r^2 = V4^2 / (V4 ^ n)^2 and
    /// C = (r^2/2) n + V4 / (-V4 ^ n). Scale invariant.
    pub fn data(&self, tol: Tolerance) -> Result<SphereData, ObjectError> {
        let w = self.mv.wedge(&Multivector::n());
        if w.is_zero(tol, self.mv.norm() * Multivector::n().norm()) {
            return Err(ObjectError::DegenerateSphere);
        }
        let is_scale = self.pseudoscalar_factor().coeffs()[0b00111];

        let r2 = self.mv.scalar_square() / w.scalar_square();
        let r2_scale = self.mv.norm_squared() / w.norm_squared();
        if r2 < -(tol.relative() * r2_scale) {
            return Err(ObjectError::ImaginarySphere);
        }
        let r = r2.max(0.0).sqrt();

        let w_inv = (-w)
            .inverse(tol)
            .map_err(|_| ObjectError::DegenerateSphere)?;
        let center_mv = Multivector::n() * (0.5 * r2) + self.mv.geometric(&w_inv).grade(1);
        let c = extract_point(&center_mv, tol)?;
        Ok(SphereData {
            c,
            conformal_center: ConformalPoint::embed(c),
            r,
            is_scale,
        })
    }
}
