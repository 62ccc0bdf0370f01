//! Circles: grade-3 joins P1 ^ P2 ^ P3 of three non-collinear points.

use super::point::ConformalPoint;
use super::ObjectError;
use crate::algebra::{Multivector, Tolerance};
use crate::euclid::{Bivec3, Vec3};

/// A circle trivector. Round objects do not contain infinity: mv ^ n != 0
/// (its vanishing means the three points were collinear and the object is
/// a line).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Circle {
    mv: Multivector,
}

/// The 3D data of a circle: the unit plane bivector (sign-canonicalized),
/// the center split into its components parallel and perpendicular to the
/// circle plane, and the radius.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CircleData {
    pub ic: Bivec3,
    pub c: Vec3,
    pub c_par: Vec3,
    pub c_perp: Vec3,
    pub r: f64,
}

/// Raw quantities shared by the data extraction and the special-case
/// conformal center. `ic_mv` keeps the representative's own scale.
struct Extraction {
    ic_mv: Multivector,
    ic_raw: Bivec3,
    r2: f64,
    c_par: Vec3,
    c_perp: Vec3,
}

impl Circle {
    /// Join three non-collinear conformal points.
    pub fn through(
        a: &ConformalPoint,
        b: &ConformalPoint,
        c: &ConformalPoint,
        tol: Tolerance,
    ) -> Result<Self, ObjectError> {
        let mv = a
            .multivector()
            .wedge(b.multivector())
            .wedge(c.multivector());
        let scale = a.multivector().norm() * b.multivector().norm() * c.multivector().norm();
        if plane_bivector_of(&mv).euclid_bivector_part().norm() <= tol.relative() * scale {
            return Err(ObjectError::DegenerateCircle);
        }
        Ok(Self { mv })
    }

    /// Build a circle from center, radius and plane bivector:
    ///
    /// c^Ic + [ (r^2+c^2)/2 Ic - c (c |_ Ic) ] ^ n + Ic^nb - (c |_ Ic) N
    ///
    /// Any nonzero scale of `ic` yields a representative of the same circle.
    pub fn from_data(c: Vec3, r: f64, ic: Bivec3, tol: Tolerance) -> Result<Self, ObjectError> {
        if !(r > 0.0 && r.is_finite()) {
            return Err(ObjectError::InvalidArgument("circle radius must be > 0"));
        }
        if ic.norm() <= tol.relative() {
            return Err(ObjectError::InvalidArgument(
                "circle plane bivector must be nonzero",
            ));
        }
        Ok(Self {
            mv: center_radius_form(c, r * r, ic),
        })
    }

    /// Wrap a raw multivector, checking grade 3 and roundness.
    pub fn try_new(mv: Multivector, tol: Tolerance) -> Result<Self, ObjectError> {
        if !mv.is_grade(3, tol) {
            return Err(ObjectError::InvalidObject("a circle must be grade 3"));
        }
        if mv
            .wedge(&Multivector::n())
            .is_zero(tol, mv.norm() * Multivector::n().norm())
        {
            return Err(ObjectError::InvalidObject(
                "a circle must not contain infinity (mv ^ n != 0)",
            ));
        }
        Ok(Self { mv })
    }

    pub fn multivector(&self) -> &Multivector {
        &self.mv
    }

    /// Extract plane, center and radius. All outputs are invariant under
    /// scaling of the representative.
    pub fn data(&self, tol: Tolerance) -> Result<CircleData, ObjectError> {
        let ex = self.extract(tol)?;
        let ic = ex
            .ic_raw
            .canonical_unit()
            .ok_or(ObjectError::DegenerateCircle)?;
        Ok(CircleData {
            ic,
            c: ex.c_par + ex.c_perp,
            c_par: ex.c_par,
            c_perp: ex.c_perp,
            r: ex.r2.max(0.0).sqrt(),
        })
    }

    /// Special-case conformal center for circles whose plane contains the
    /// origin (c_perp = 0): C = -V3 (Ic N)^-1 + (r^2/2) n.
    pub fn conformal_center_origin_plane(
        &self,
        tol: Tolerance,
    ) -> Result<ConformalPoint, ObjectError> {
        let ex = self.extract(tol)?;
        let r = ex.r2.max(0.0).sqrt();
        if ex.c_perp.norm() > tol.relative() * (ex.c_par.norm() + ex.c_perp.norm() + r) {
            return Err(ObjectError::NotOriginPlane);
        }
        let ic_n = ex.ic_mv.geometric(&Multivector::minkowski_plane());
        let inv = ic_n
            .inverse(tol)
            .map_err(|_| ObjectError::DegenerateCircle)?;
        let center = -self.mv.geometric(&inv) + Multivector::n() * (0.5 * ex.r2);
        ConformalPoint::try_from_multivector(&center.grade(1), tol)
    }

    fn extract(&self, tol: Tolerance) -> Result<Extraction, ObjectError> {
        let v3 = &self.mv;
        let ic_mv = plane_bivector_of(v3);
        let ic_raw = ic_mv.euclid_bivector_part();
        if tol.is_zero(ic_raw.norm(), v3.norm()) {
            return Err(ObjectError::DegenerateCircle);
        }

        // r^2 = -V3^2 / Ic^2 (the bivector square is negative).
        let r2 = -v3.scalar_square() / ic_mv.scalar_square();
        let r2_scale = v3.norm_squared() / ic_raw.norm_squared();
        if r2 < -(tol.relative() * r2_scale) {
            return Err(ObjectError::ImaginaryCircle);
        }

        let ic_inv = ic_mv
            .inverse(tol)
            .map_err(|_| ObjectError::DegenerateCircle)?;
        // Parallel part from the doubly contracted representative:
        // c_par = -[(V3 |_ n) |_ nb] Ic^-1 (right contractions).
        let w = v3
            .right_contract(&Multivector::n())
            .right_contract(&Multivector::nb());
        let c_par = -(w.geometric(&ic_inv)).grade(1).euclid_vector_part();
        // Perpendicular part from the Euclidean-pseudoscalar component:
        // c_perp = -(V3 * i) i Ic^-1.
        let i = Multivector::euclid_pseudoscalar();
        let c_perp = -(i.geometric(&ic_inv) * v3.scalar_product(&i))
            .grade(1)
            .euclid_vector_part();
        Ok(Extraction {
            ic_mv,
            ic_raw,
            r2,
            c_par,
            c_perp,
        })
    }
}

/// The plane bivector of a circle trivector: -{[V3 + (V3 * i) i] ^ n} N.
/// Adding the projection onto the Euclidean pseudoscalar cancels the pure
/// Euclidean trivector part; what survives the wedge with n is the
/// bivector against nb.
pub(crate) fn plane_bivector_of(v3: &Multivector) -> Multivector {
    let i = Multivector::euclid_pseudoscalar();
    let m = *v3 + i * v3.scalar_product(&i);
    -(m.wedge(&Multivector::n()).geometric(&Multivector::minkowski_plane())).grade(2)
}

/// The center-radius representative with an explicit squared radius
/// (which tests also feed negative values to exercise the imaginary
/// classification).
pub(crate) fn center_radius_form(c: Vec3, r2: f64, ic: Bivec3) -> Multivector {
    let ic_mv = Multivector::from_euclid_bivector(ic);
    let c_mv = Multivector::from_euclid_vector(c);
    let c_contr = c_mv.left_contract(&ic_mv);
    let bracket = ic_mv * (0.5 * (r2 + c.norm_squared())) - c_mv.wedge(&c_contr);
    c_mv.wedge(&ic_mv)
        + bracket.wedge(&Multivector::n())
        + ic_mv.wedge(&Multivector::nb())
        - c_contr.wedge(&Multivector::minkowski_plane())
}
