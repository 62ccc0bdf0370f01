//! Conformal points: the null-vector embedding of Euclidean positions.

use super::ObjectError;
use crate::algebra::{Multivector, Tolerance};
use crate::euclid::Vec3;

/// A normalized conformal point P = p + (p^2/2) n + nb.
///
/// Invariants: grade 1, P^2 = 0 and unit weight against infinity
/// (-(P * n) = 1), so the Euclidean position can be read off directly.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ConformalPoint {
    mv: Multivector,
}

impl ConformalPoint {
    /// Embed a Euclidean position on the null cone.
    pub fn embed(p: Vec3) -> Self {
        debug_assert!(p.is_finite());
        let mv = Multivector::from_euclid_vector(p)
            + Multivector::n() * (0.5 * p.norm_squared())
            + Multivector::nb();
        Self { mv }
    }

    /// Validate an arbitrary multivector as a normalized conformal point.
    pub fn try_from_multivector(mv: &Multivector, tol: Tolerance) -> Result<Self, ObjectError> {
        if !mv.is_grade(1, tol) {
            return Err(ObjectError::NotAPoint);
        }
        let weight = -mv.scalar_product(&Multivector::n());
        if (weight - 1.0).abs() > tol.relative() * mv.norm().max(1.0) {
            return Err(ObjectError::InvalidArgument(
                "conformal point is not normalized to unit weight",
            ));
        }
        if !tol.is_zero(mv.scalar_square(), mv.norm_squared()) {
            return Err(ObjectError::NotAPoint);
        }
        Ok(Self { mv: *mv })
    }

    pub fn multivector(&self) -> &Multivector {
        &self.mv
    }

    /// The represented Euclidean position.
    pub fn euclidean(&self) -> Vec3 {
        self.mv.euclid_vector_part()
    }
}

/// Recover the Euclidean position of a (possibly scaled) conformal point:
/// normalize by the weight against infinity, then reject off the
/// Minkowski plane via p = (P ^ N) N.
pub fn extract_point(mv: &Multivector, tol: Tolerance) -> Result<Vec3, ObjectError> {
    let weight = -mv.scalar_product(&Multivector::n());
    if tol.is_zero(weight, mv.norm()) {
        return Err(ObjectError::PointAtInfinity);
    }
    let p = *mv * (1.0 / weight);
    if !p.is_grade(1, tol) || !tol.is_zero(p.scalar_square(), p.norm_squared()) {
        return Err(ObjectError::NotAPoint);
    }
    let plane = Multivector::minkowski_plane();
    let rejected = p.wedge(&plane).geometric(&plane);
    Ok(rejected.euclid_vector_part())
}
