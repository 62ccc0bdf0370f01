//! Homogeneous geometric objects and the extraction of their 3D data.
//!
//! Objects are built by joining conformal points with the outer product:
//! a pair is P1^P2, a line P1^P2^n, a circle P1^P2^P3, a plane
//! P1^P2^P3^n and a sphere P1^P2^P3^P4. Each wrapper type checks the
//! structural invariants (grade, flatness) and offers the closed-form
//! extraction of its 3D data. Homogeneous representatives are defined
//! only up to a nonzero scale, and every extraction is scale invariant.

mod circle;
mod line;
mod pair;
mod plane;
mod point;
mod sphere;

pub use circle::{Circle, CircleData};
pub use line::{Line, LineData};
pub use pair::{PairData, PairSplitIntermediates, PointPair};
pub use plane::{Plane, PlaneData};
pub use point::{extract_point, ConformalPoint};
pub use sphere::{Sphere, SphereData};

use crate::algebra::{Multivector, Tolerance};
use thiserror::Error;

#[derive(Clone, Copy, Debug, Error, PartialEq, Eq)]
pub enum ObjectError {
    /// The weight against infinity vanishes, so there is no finite position.
    #[error("point at infinity: the weight against infinity vanishes")]
    PointAtInfinity,
    /// The element is not a (scaled) null point vector.
    #[error("not a conformal point: the element is not a null vector")]
    NotAPoint,
    #[error("degenerate pair: the points coincide or the carrier is lost")]
    DegeneratePair,
    /// The pair solves to complex points (negative discriminant).
    #[error("imaginary pair: the bivector has no real point solutions")]
    ImaginaryPair,
    #[error("degenerate line: the points coincide or the direction vanishes")]
    DegenerateLine,
    #[error("degenerate circle: the points are collinear (the object is a line)")]
    DegenerateCircle,
    #[error("imaginary circle: the extracted squared radius is negative")]
    ImaginaryCircle,
    /// The special-case conformal center extraction only applies when the
    /// circle plane passes through the origin.
    #[error("circle plane does not contain the origin")]
    NotOriginPlane,
    #[error("degenerate plane: the points are collinear")]
    DegeneratePlane,
    #[error("degenerate sphere: the points are coplanar (the object is a plane)")]
    DegenerateSphere,
    #[error("imaginary sphere: the extracted squared radius is negative")]
    ImaginarySphere,
    /// A wrapped multivector violates the structural invariants of the
    /// object type (wrong grade, wrong flatness).
    #[error("invalid object: {0}")]
    InvalidObject(&'static str),
    #[error("invalid argument: {0}")]
    InvalidArgument(&'static str),
}

/// Incidence test: X lies on the object V when V ^ X vanishes relative to
/// the norms of both inputs. Applies to pairs, lines, circles, planes and
/// spheres alike.
pub fn incident(object: &Multivector, point: &ConformalPoint, tol: Tolerance) -> bool {
    let x = point.multivector();
    object
        .wedge(x)
        .is_zero(tol, object.norm() * x.norm())
}

/// True when A and B are nonzero multiples of each other, i.e. represent
/// the same homogeneous object.
pub fn same_object(a: &Multivector, b: &Multivector, tol: Tolerance) -> bool {
    let (na, nb) = (a.norm(), b.norm());
    if na == 0.0 && nb == 0.0 {
        return true;
    }
    if na == 0.0 || nb == 0.0 {
        return false;
    }
    // Least-squares scale of b against a over the coefficients.
    let mut dot = 0.0;
    for (x, y) in a.coeffs().iter().zip(b.coeffs().iter()) {
        dot += x * y;
    }
    let lambda = dot / (nb * nb);
    if lambda == 0.0 {
        return false;
    }
    (*a - *b * lambda).is_zero(tol, na)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::euclid::Vec3;

    #[test]
    fn same_object_accepts_scales_and_rejects_others() {
        let tol = Tolerance::default();
        let p1 = ConformalPoint::embed(Vec3::ZERO);
        let p2 = ConformalPoint::embed(Vec3::EX);
        let p3 = ConformalPoint::embed(Vec3::EY);
        let line_x = Line::through(&p1, &p2, tol).unwrap();
        let line_y = Line::through(&p1, &p3, tol).unwrap();
        let l = *line_x.multivector();
        assert!(same_object(&l, &(l * 3.0), tol));
        assert!(same_object(&l, &(-l), tol));
        assert!(!same_object(&l, line_y.multivector(), tol));
        assert!(!same_object(&l, &Multivector::ZERO, tol));
        assert!(same_object(&Multivector::ZERO, &Multivector::ZERO, tol));
    }

    #[test]
    fn constructor_points_are_incident() {
        let tol = Tolerance::default();
        let a = ConformalPoint::embed(Vec3::new(1.0, 2.0, -0.5));
        let b = ConformalPoint::embed(Vec3::new(-3.0, 0.25, 4.0));
        let line = Line::through(&a, &b, tol).unwrap();
        assert!(incident(line.multivector(), &a, tol));
        assert!(incident(line.multivector(), &b, tol));
        let far = ConformalPoint::embed(Vec3::new(5.0, 5.0, 5.0));
        assert!(!incident(line.multivector(), &far, tol));
    }
}
