//! Planes: grade-4 joins P1 ^ P2 ^ P3 ^ n of three non-collinear points.

use super::point::ConformalPoint;
use super::ObjectError;
use crate::algebra::{Multivector, Tolerance};
use crate::euclid::{Bivec3, Vec3};

/// A plane 4-vector (d^Ip)^n - Ip N. Flat: mv ^ n = 0.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Plane {
    mv: Multivector,
}

/// Orientation bivector (unit, sign-canonicalized) and support vector of a
/// plane. The support d points from the origin to the plane and is
/// perpendicular to it: d |_ Ip = 0; it vanishes when the plane passes
/// through the origin.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PlaneData {
    pub ip: Bivec3,
    pub d: Vec3,
}

impl Plane {
    /// Join three non-collinear conformal points with infinity.
    pub fn through(
        a: &ConformalPoint,
        b: &ConformalPoint,
        c: &ConformalPoint,
        tol: Tolerance,
    ) -> Result<Self, ObjectError> {
        let mv = a
            .multivector()
            .wedge(b.multivector())
            .wedge(c.multivector())
            .wedge(&Multivector::n());
        let scale = a.multivector().norm()
            * b.multivector().norm()
            * c.multivector().norm()
            * Multivector::n().norm();
        if mv.is_zero(tol, scale) {
            return Err(ObjectError::DegeneratePlane);
        }
        Ok(Self { mv })
    }

    /// Parametrize by any conformal point C on the plane and a direction
    /// bivector: C^Ic^n = (c^Ic)^n - Ic N. When c lies in the span of Ic
    /// the first term vanishes and the plane passes through the origin.
    pub fn from_point_bivector(
        c: &ConformalPoint,
        ic: Bivec3,
        tol: Tolerance,
    ) -> Result<Self, ObjectError> {
        if ic.norm() <= tol.relative() {
            return Err(ObjectError::InvalidArgument(
                "plane direction bivector must be nonzero",
            ));
        }
        let mv = c
            .multivector()
            .wedge(&Multivector::from_euclid_bivector(ic))
            .wedge(&Multivector::n());
        Ok(Self { mv })
    }

    /// Wrap a raw multivector, checking grade 4 and flatness.
    pub fn try_new(mv: Multivector, tol: Tolerance) -> Result<Self, ObjectError> {
        if !mv.is_grade(4, tol) {
            return Err(ObjectError::InvalidObject("a plane must be grade 4"));
        }
        if !mv
            .wedge(&Multivector::n())
            .is_zero(tol, mv.norm() * Multivector::n().norm())
        {
            return Err(ObjectError::InvalidObject(
                "a plane must contain infinity (mv ^ n = 0)",
            ));
        }
        Ok(Self { mv })
    }

    pub fn multivector(&self) -> &Multivector {
        &self.mv
    }

    /// Extract the orientation bivector Ip = -(V n) |_ nb and the support
    /// vector d = (V ^ nb) Ip^-1 N. Scale invariant.
    pub fn data(&self, tol: Tolerance) -> Result<PlaneData, ObjectError> {
        let nb = Multivector::nb();
        let ip_mv = -(self
            .mv
            .geometric(&Multivector::n())
            .right_contract(&nb))
        .grade(2);
        let ip_raw = ip_mv.euclid_bivector_part();
        if tol.is_zero(ip_raw.norm(), self.mv.norm()) {
            return Err(ObjectError::DegeneratePlane);
        }
        let ip_inv = ip_mv
            .inverse(tol)
            .map_err(|_| ObjectError::DegeneratePlane)?;
        let d = self
            .mv
            .wedge(&nb)
            .geometric(&ip_inv)
            .geometric(&Multivector::minkowski_plane())
            .grade(1)
            .euclid_vector_part();
        let ip = ip_raw
            .canonical_unit()
            .ok_or(ObjectError::DegeneratePlane)?;
        Ok(PlaneData { ip, d })
    }
}
