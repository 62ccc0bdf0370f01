//! Brute-force point-pair solver: parametrize the carrier line of the
//! bivector and solve the incidence condition as a scalar quadratic.
//!
//! For V2 = b + a^n + u^nb + g N the pair points x must satisfy the
//! vector condition a + g x - (x^2/2) u = 0. On the carrier line
//! x(t) = x0 + t u/|u| (with x0 the foot of the perpendicular from the
//! origin, recovered from b and u alone) this projects onto
//!
//!   -(|u|/2) t^2 + g t + (a . u/|u| - x0^2 |u|/2) = 0,
//!
//! whose discriminant decides real versus imaginary pairs. No use is made
//! of the norm/direction split formulas this solver cross-checks.

use super::OracleError;
use crate::algebra::{mask, Multivector, Tolerance};
use crate::euclid::Vec3;

/// Solve a pair bivector for its two Euclidean points, larger norm first
/// (exact ties broken by descending lexicographic order).
pub fn pair_solve_bruteforce(
    v2: &Multivector,
    tol: Tolerance,
) -> Result<(Vec3, Vec3), OracleError> {
    let nc = v2.null_coeffs();
    let b_axial = Vec3::new(
        nc[(mask::E2 | mask::E3) as usize],
        -nc[(mask::E1 | mask::E3) as usize],
        nc[(mask::E1 | mask::E2) as usize],
    );
    let a = Vec3::new(
        nc[(mask::E1 | mask::N) as usize],
        nc[(mask::E2 | mask::N) as usize],
        nc[(mask::E3 | mask::N) as usize],
    );
    let u = Vec3::new(
        nc[(mask::E1 | mask::NB) as usize],
        nc[(mask::E2 | mask::NB) as usize],
        nc[(mask::E3 | mask::NB) as usize],
    );
    let g = nc[(mask::N | mask::NB) as usize];

    let u_len = u.norm();
    if tol.is_zero(u_len, v2.norm()) {
        return Err(OracleError::Degenerate("pair carrier direction vanishes"));
    }
    let uhat = u * (1.0 / u_len);
    let x0 = b_axial.cross(u) * (1.0 / u.norm_squared());

    let qa = -0.5 * u_len;
    let qb = g;
    let qc = a.dot(uhat) - 0.5 * x0.norm_squared() * u_len;
    let disc = qb * qb - 4.0 * qa * qc;
    let disc_scale = qb * qb + 4.0 * (qa * qc).abs();
    if disc < -(tol.relative() * disc_scale.max(f64::MIN_POSITIVE)) {
        return Err(OracleError::ImaginaryPair);
    }
    let sqrt_disc = disc.max(0.0).sqrt();

    let q = if qb >= 0.0 {
        -0.5 * (qb + sqrt_disc)
    } else {
        -0.5 * (qb - sqrt_disc)
    };
    let (t1, t2) = if q == 0.0 {
        let t = -qb / (2.0 * qa);
        (t, t)
    } else {
        (q / qa, qc / q)
    };

    let pa = x0 + uhat * t1;
    let pb = x0 + uhat * t2;
    let (na, nb) = (pa.norm(), pb.norm());
    let first = match na.partial_cmp(&nb) {
        Some(std::cmp::Ordering::Less) => false,
        Some(std::cmp::Ordering::Greater) => true,
        _ => pa.lex_cmp(pb) != std::cmp::Ordering::Less,
    };
    if first {
        Ok((pa, pb))
    } else {
        Ok((pb, pa))
    }
}
