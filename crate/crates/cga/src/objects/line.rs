//! Lines: grade-3 joins P1 ^ P2 ^ n, carrying a moment bivector and a
//! direction vector.

use super::pair::{bivector_with_suffix, vector_with_suffix};
use super::point::ConformalPoint;
use super::ObjectError;
use crate::algebra::{mask, Multivector, Tolerance};
use crate::euclid::{Bivec3, Vec3};

/// A straight line m^n + d^N with moment m = p1^p2 and direction
/// d = p2 - p1. Flat objects contain infinity: mv ^ n = 0.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Line {
    mv: Multivector,
}

/// Moment bivector and direction vector of a line. Every point x on the
/// line satisfies x ^ d = m.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LineData {
    pub d: Vec3,
    pub m: Bivec3,
}

impl Line {
    /// Join two distinct conformal points with infinity.
    pub fn through(
        a: &ConformalPoint,
        b: &ConformalPoint,
        tol: Tolerance,
    ) -> Result<Self, ObjectError> {
        let mv = a
            .multivector()
            .wedge(b.multivector())
            .wedge(&Multivector::n());
        let scale = a.multivector().norm() * b.multivector().norm() * Multivector::n().norm();
        if mv.is_zero(tol, scale) {
            return Err(ObjectError::DegenerateLine);
        }
        Ok(Self { mv })
    }

    /// Parametrize by any conformal point C on the line, the unit
    /// direction and a weight: 2r phat^C^n = 2r { (phat^c)^n - phat^N }.
    /// C does not need to be the midpoint of any particular pair.
    pub fn from_point_direction(
        c: &ConformalPoint,
        phat: Vec3,
        two_r: f64,
        tol: Tolerance,
    ) -> Result<Self, ObjectError> {
        if (phat.norm() - 1.0).abs() > tol.relative().max(1e-12) {
            return Err(ObjectError::InvalidArgument("phat must be a unit vector"));
        }
        if two_r == 0.0 || !two_r.is_finite() {
            return Err(ObjectError::InvalidArgument("weight must be nonzero"));
        }
        let mv = Multivector::from_euclid_vector(phat)
            .wedge(c.multivector())
            .wedge(&Multivector::n())
            * two_r;
        Ok(Self { mv })
    }

    /// Wrap a raw multivector, checking grade 3 and flatness.
    pub fn try_new(mv: Multivector, tol: Tolerance) -> Result<Self, ObjectError> {
        if !mv.is_grade(3, tol) {
            return Err(ObjectError::InvalidObject("a line must be grade 3"));
        }
        if !mv
            .wedge(&Multivector::n())
            .is_zero(tol, mv.norm() * Multivector::n().norm())
        {
            return Err(ObjectError::InvalidObject(
                "a line must contain infinity (mv ^ n = 0)",
            ));
        }
        Ok(Self { mv })
    }

    pub fn multivector(&self) -> &Multivector {
        &self.mv
    }

    /// Read the moment (coefficient of n) and direction (coefficient of N)
    /// off the trivector.
    pub fn data(&self, tol: Tolerance) -> Result<LineData, ObjectError> {
        let nc = self.mv.null_coeffs();
        let d = vector_with_suffix(&nc, mask::N | mask::NB);
        let m = bivector_with_suffix(&nc, mask::N);
        if tol.is_zero(d.norm(), self.mv.norm()) {
            return Err(ObjectError::DegenerateLine);
        }
        Ok(LineData { d, m })
    }
}

impl LineData {
    /// The point (m + alpha) d^-1 of the parametric solution; for every
    /// alpha the embedded result is incident with the line.
    pub fn point_at(&self, alpha: f64, tol: Tolerance) -> Result<Vec3, ObjectError> {
        let d_inv = Multivector::from_euclid_vector(self.d)
            .inverse(tol)
            .map_err(|_| ObjectError::DegenerateLine)?;
        let m = Multivector::from_euclid_bivector(self.m) + Multivector::scalar(alpha);
        Ok(m.geometric(&d_inv).grade(1).euclid_vector_part())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::objects::{incident, same_object};

    fn embed(v: Vec3) -> ConformalPoint {
        ConformalPoint::embed(v)
    }

    #[test]
    fn data_of_simple_lines() {
        let tol = Tolerance::default();
        let line = Line::through(&embed(Vec3::EX), &embed(Vec3::new(1.0, 1.0, 0.0)), tol).unwrap();
        let data = line.data(tol).unwrap();
        assert_eq!(data.d, Vec3::EY);
        assert_eq!(data.m, Bivec3::new(0.0, 0.0, 1.0));

        // A line through the origin has no moment.
        let line = Line::through(&embed(Vec3::ZERO), &embed(Vec3::EX), tol).unwrap();
        let data = line.data(tol).unwrap();
        assert_eq!(data.d, Vec3::EX);
        assert_eq!(data.m, Bivec3::ZERO);
    }

    #[test]
    fn coincident_points_are_degenerate() {
        let tol = Tolerance::default();
        let p = embed(Vec3::new(0.5, 1.5, -2.0));
        assert_eq!(
            Line::through(&p, &p, tol).unwrap_err(),
            ObjectError::DegenerateLine
        );
    }

    #[test]
    fn scaling_leaves_the_parametric_solution_unchanged() {
        let tol = Tolerance::default();
        let line = Line::through(&embed(Vec3::EX), &embed(Vec3::new(1.0, 1.0, 0.0)), tol).unwrap();
        let scaled = Line::try_new(*line.multivector() * 5.0, tol).unwrap();
        let d0 = line.data(tol).unwrap();
        let d5 = scaled.data(tol).unwrap();
        assert!((d5.d - d0.d * 5.0).norm() < 1e-12);
        for alpha in [-2.0, 0.0, 0.75, 3.0] {
            // The parametric point uses alpha relative to the
            // representative scale; alpha scales along with it.
            let x0 = d0.point_at(alpha, tol).unwrap();
            let x5 = d5.point_at(alpha * 5.0, tol).unwrap();
            assert!((x0 - x5).norm() < 1e-12, "alpha = {alpha}");
        }
    }

    #[test]
    fn parametric_points_lie_on_the_line() {
        let tol = Tolerance::default();
        let line = Line::through(
            &embed(Vec3::new(2.0, -1.0, 3.0)),
            &embed(Vec3::new(-1.0, 0.5, 1.0)),
            tol,
        )
        .unwrap();
        let data = line.data(tol).unwrap();
        for alpha in [-10.0, -1.0, 0.0, 0.5, 2.0, 40.0] {
            let x = data.point_at(alpha, tol).unwrap();
            assert!(incident(line.multivector(), &embed(x), tol));
        }
        // Worked values for the axis-aligned line.
        let data = LineData {
            d: Vec3::EY,
            m: Bivec3::new(0.0, 0.0, 1.0),
        };
        assert_eq!(data.point_at(0.0, tol).unwrap(), Vec3::EX);
        assert_eq!(
            data.point_at(1.0, tol).unwrap(),
            Vec3::new(1.0, 1.0, 0.0)
        );
        let through_origin = LineData {
            d: Vec3::EX,
            m: Bivec3::ZERO,
        };
        assert_eq!(
            through_origin.point_at(2.0, tol).unwrap(),
            Vec3::EX * 2.0
        );
    }

    #[test]
    fn zero_direction_is_degenerate() {
        let tol = Tolerance::default();
        let data = LineData {
            d: Vec3::ZERO,
            m: Bivec3::new(0.0, 0.0, 1.0),
        };
        assert_eq!(
            data.point_at(0.0, tol).unwrap_err(),
            ObjectError::DegenerateLine
        );
        // A pure moment trivector has no direction.
        let mv = Multivector::from_euclid_bivector(Bivec3::new(0.0, 0.0, 1.0))
            .wedge(&Multivector::n());
        let line = Line::try_new(mv, tol).unwrap();
        assert_eq!(line.data(tol).unwrap_err(), ObjectError::DegenerateLine);
    }

    #[test]
    fn point_direction_form_matches_the_join() {
        let tol = Tolerance::default();
        // Any point on the line works, not only pair midpoints.
        let join = Line::through(&embed(Vec3::ZERO), &embed(Vec3::EX), tol).unwrap();
        let alt = Line::from_point_direction(&embed(Vec3::ZERO), Vec3::EX, 2.0, tol).unwrap();
        assert_eq!(
            *alt.multivector(),
            Multivector::from_euclid_vector(Vec3::EX).wedge(&Multivector::minkowski_plane())
                * -2.0
        );
        assert!(same_object(alt.multivector(), join.multivector(), tol));

        let join = Line::through(&embed(Vec3::EX), &embed(Vec3::new(1.0, 1.0, 0.0)), tol).unwrap();
        let alt = Line::from_point_direction(&embed(Vec3::EX), Vec3::EY, 2.0, tol).unwrap();
        assert!(same_object(alt.multivector(), join.multivector(), tol));
        // A different anchor point on the same line.
        let alt2 =
            Line::from_point_direction(&embed(Vec3::new(1.0, -7.5, 0.0)), Vec3::EY, 0.5, tol)
                .unwrap();
        assert!(same_object(alt2.multivector(), join.multivector(), tol));
    }
}
