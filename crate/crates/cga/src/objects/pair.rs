//! Point pairs: grade-2 joins of two conformal points, their split back
//! into two Euclidean positions, and the center-radius (one-dimensional
//! circle) form.

use super::point::ConformalPoint;
use super::ObjectError;
use crate::algebra::{mask, Multivector, Tolerance};
use crate::euclid::{Bivec3, Vec3};

/// Relative size of rho below which the split switches to the
/// sum-recovery fallback. The direction formula loses roughly
/// (sigma/rho)^2 ulps to the cancellation in sigma^2 - u^2 v^2, so the
/// whole near-tie band goes through the fallback, which is exact for any
/// real pair.
const NEAR_TIE_REL: f64 = 1e-3;

/// Relative mismatch between candidate point norms and the norms computed
/// from sigma/rho above which the fallback declares the pair imaginary.
const CONSISTENCY_REL: f64 = 1e-6;

/// A point pair V2 = P1 ^ P2 (grade 2). For pairs of two distinct real
/// points the geometric square is the nonnegative scalar (P1 * P2)^2.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PointPair {
    mv: Multivector,
}

/// The 3D data of a point pair: the two positions (larger norm first,
/// exact ties broken lexicographically), half their distance r, the unit
/// vector from the second point to the first and the Euclidean midpoint.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PairData {
    pub p1: Vec3,
    pub p2: Vec3,
    pub r: f64,
    pub phat: Vec3,
    pub c: Vec3,
}

/// Intermediate quantities of the pair split, after orienting the
/// components so that the first point has the larger norm: u points from
/// the second point to the first scaled by one, v = p1^2 p2 - p2^2 p1,
/// gamma = p1^2 - p2^2 >= 0, sigma = gamma^2/2 - u * v and
/// rho = sqrt(sigma^2 - u^2 v^2).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PairSplitIntermediates {
    pub u: Vec3,
    pub v: Vec3,
    pub gamma: f64,
    pub sigma: f64,
    pub rho: f64,
}

impl PointPair {
    /// Join two conformal points. Coincident points give the zero bivector
    /// and are rejected as degenerate.
    pub fn through(
        a: &ConformalPoint,
        b: &ConformalPoint,
        tol: Tolerance,
    ) -> Result<Self, ObjectError> {
        let mv = a.multivector().wedge(b.multivector());
        if mv.is_zero(tol, a.multivector().norm() * b.multivector().norm()) {
            return Err(ObjectError::DegeneratePair);
        }
        Ok(Self { mv })
    }

    /// Wrap a raw multivector, checking it is exactly grade 2.
    pub fn try_new(mv: Multivector, tol: Tolerance) -> Result<Self, ObjectError> {
        if !mv.is_grade(2, tol) {
            return Err(ObjectError::InvalidObject("a point pair must be grade 2"));
        }
        Ok(Self { mv })
    }

    pub fn multivector(&self) -> &Multivector {
        &self.mv
    }

    /// Build the pair from its center-radius data, viewing it as a
    /// one-dimensional circle:
    ///
    /// 2r { phat^c + [ (c^2+r^2)/2 phat - (c*phat) c ] ^ n + phat^nb + (c*phat) N }
    ///
    /// This equals the join of the two points c + r phat and c - r phat.
    pub fn from_data(data: &PairData, tol: Tolerance) -> Result<Self, ObjectError> {
        if !(data.r >= 0.0 && data.r.is_finite()) {
            return Err(ObjectError::InvalidArgument("pair radius must be >= 0"));
        }
        if (data.phat.norm() - 1.0).abs() > tol.relative().max(1e-12) {
            return Err(ObjectError::InvalidArgument("phat must be a unit vector"));
        }
        let c2 = data.c.norm_squared();
        let cp = data.c.dot(data.phat);
        let n_vec = data.phat * (0.5 * (c2 + data.r * data.r)) - data.c * cp;
        let phat_mv = Multivector::from_euclid_vector(data.phat);
        let mv = (phat_mv.wedge(&Multivector::from_euclid_vector(data.c))
            + Multivector::from_euclid_vector(n_vec).wedge(&Multivector::n())
            + phat_mv.wedge(&Multivector::nb())
            + Multivector::minkowski_plane() * cp)
            * (2.0 * data.r);
        Ok(Self { mv })
    }

    /// Recover the two Euclidean positions from the bivector components.
    ///
    /// Reading V2 = b + a^n + u^nb + g N gives u (toward the first point),
    /// v = -2a and gamma = 2g; then sigma = gamma^2/2 - u * v,
    /// rho = sqrt(sigma^2 - u^2 v^2), the point norms are
    /// sqrt(sigma +- rho)/|u| and the directions are the units of
    /// pk^2 u + v. When the norms tie (rho ~ 0) the directions degenerate
    /// and the point sum is recovered as u^-1 (gamma + 2b) instead.
    pub fn split(
        &self,
        tol: Tolerance,
    ) -> Result<(PairData, PairSplitIntermediates), ObjectError> {
        let nc = self.mv.null_coeffs();
        let mut b = euclid_bivector_of(&nc);
        let a = vector_against_n(&nc);
        let mut u = vector_against_nb(&nc);
        let mut v = a * -2.0;
        let mut gamma = 2.0 * nc[(mask::N | mask::NB) as usize];

        let u_len = u.norm();
        if tol.is_zero(u_len, self.mv.norm()) {
            return Err(ObjectError::DegeneratePair);
        }

        // Orient the representative so the first point has the larger norm.
        if gamma < 0.0 {
            b = -b;
            u = -u;
            v = -v;
            gamma = -gamma;
        }

        let sigma = 0.5 * gamma * gamma - u.dot(v);
        let mag = 0.5 * gamma * gamma + u_len * v.norm();
        let disc = sigma * sigma - u.norm_squared() * v.norm_squared();
        if disc < -(tol.relative() * mag * mag) || sigma < -(tol.relative() * mag) {
            return Err(ObjectError::ImaginaryPair);
        }
        let rho = disc.max(0.0).sqrt();
        let n1 = (sigma + rho).max(0.0).sqrt() / u_len;
        let n2 = (sigma - rho).max(0.0).sqrt() / u_len;

        let (pa, pb) = if rho <= NEAR_TIE_REL * mag {
            // Near-equal norms: recover p1 + p2 = u^-1 (gamma + 2b). The
            // gamma term vanishes for exact ties but keeps near-ties exact.
            let rhs = Multivector::scalar(gamma) + Multivector::from_euclid_bivector(b) * 2.0;
            let u_inv = Multivector::from_euclid_vector(u)
                .inverse(tol)
                .map_err(|_| ObjectError::DegeneratePair)?;
            let s = u_inv.geometric(&rhs).grade(1).euclid_vector_part();
            let c1 = (s + u) * 0.5;
            let c2 = (s - u) * 0.5;
            // Candidate norms must reproduce the computed point norms;
            // otherwise no real points solve the pair and it is imaginary.
            let consistent = |p: Vec3, want: f64| {
                let (a2, b2) = (p.norm_squared(), want * want);
                (a2 - b2).abs() <= CONSISTENCY_REL * (a2 + b2).max(f64::MIN_POSITIVE)
            };
            if !consistent(c1, n1) || !consistent(c2, n2) {
                return Err(ObjectError::ImaginaryPair);
            }
            (c1, c2)
        } else {
            let point = |norm: f64| -> Result<Vec3, ObjectError> {
                if tol.is_zero(norm, n1) {
                    return Ok(Vec3::ZERO);
                }
                let dir = u * (norm * norm) + v;
                dir.normalized()
                    .map(|d| d * norm)
                    .ok_or(ObjectError::DegeneratePair)
            };
            (point(n1)?, point(n2)?)
        };

        let (p1, p2) = order_points(pa, pb);
        let diff = p1 - p2;
        let r = 0.5 * diff.norm();
        let phat = if r > 0.0 { diff * (0.5 / r) } else { Vec3::ZERO };
        let data = PairData {
            p1,
            p2,
            r,
            phat,
            c: (p1 + p2) * 0.5,
        };
        let intermediates = PairSplitIntermediates {
            u,
            v,
            gamma,
            sigma,
            rho,
        };
        Ok((data, intermediates))
    }
}

impl PairData {
    /// The conformal representative of the Euclidean midpoint.
    pub fn midpoint(&self) -> ConformalPoint {
        ConformalPoint::embed(self.c)
    }
}

/// Larger norm first; exact ties fall back to descending lexicographic
/// order so the labeling is deterministic for any representative scale.
fn order_points(a: Vec3, b: Vec3) -> (Vec3, Vec3) {
    let (na, nb) = (a.norm(), b.norm());
    let swap = match na.partial_cmp(&nb) {
        Some(std::cmp::Ordering::Less) => true,
        Some(std::cmp::Ordering::Greater) => false,
        _ => a.lex_cmp(b) == std::cmp::Ordering::Less,
    };
    if swap {
        (b, a)
    } else {
        (a, b)
    }
}

pub(crate) fn euclid_bivector_of(nc: &[f64; 32]) -> Bivec3 {
    bivector_with_suffix(nc, 0)
}

pub(crate) fn vector_against_n(nc: &[f64; 32]) -> Vec3 {
    vector_with_suffix(nc, mask::N)
}

pub(crate) fn vector_against_nb(nc: &[f64; 32]) -> Vec3 {
    vector_with_suffix(nc, mask::NB)
}

/// Euclidean bivector carried on the blades {e2^e3, e1^e3, e1^e2} wedged
/// with a fixed suffix blade; the e3^e1 component flips sign against the
/// stored ascending order.
pub(crate) fn bivector_with_suffix(nc: &[f64; 32], suffix: u8) -> Bivec3 {
    Bivec3::new(
        nc[(mask::E2 | mask::E3 | suffix) as usize],
        -nc[(mask::E1 | mask::E3 | suffix) as usize],
        nc[(mask::E1 | mask::E2 | suffix) as usize],
    )
}

/// Euclidean vector carried on the blades e_i wedged with a fixed suffix.
pub(crate) fn vector_with_suffix(nc: &[f64; 32], suffix: u8) -> Vec3 {
    Vec3::new(
        nc[(mask::E1 | suffix) as usize],
        nc[(mask::E2 | suffix) as usize],
        nc[(mask::E3 | suffix) as usize],
    )
}
