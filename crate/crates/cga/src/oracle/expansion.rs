//! Term-by-term expansion of the circle trivector P1 ^ P2 ^ P3, assembled
//! component-wise from plain vector algebra:
//!
//!   p1^p2^p3
//!   + 1/2 (p1^2 p2^p3 + p2^2 p3^p1 + p3^2 p1^p2) ^ n
//!   + (p2^p3 + p3^p1 + p1^p2) ^ nb
//!   + 1/2 (p1 (p2^2 - p3^2) + p2 (p3^2 - p1^2) + p3 (p1^2 - p2^2)) ^ N
//!
//! (all exponents are squares). Agreement with the wedge of the embedded
//! points, coefficient by coefficient, pins the expansion and the outer
//! product against each other.

use crate::algebra::{mask, Multivector};
use crate::euclid::{Bivec3, Vec3};

pub fn expanded_circle_trivector(p1: Vec3, p2: Vec3, p3: Vec3) -> Multivector {
    let (q1, q2, q3) = (p1.norm_squared(), p2.norm_squared(), p3.norm_squared());
    let triple = p1.dot(p2.cross(p3));
    let with_n = (p2.wedge(p3) * q1 + p3.wedge(p1) * q2 + p1.wedge(p2) * q3) * 0.5;
    let with_nb = p2.wedge(p3) + p3.wedge(p1) + p1.wedge(p2);
    let with_minkowski = (p1 * (q2 - q3) + p2 * (q3 - q1) + p3 * (q1 - q2)) * 0.5;

    let mut nc = [0.0f64; 32];
    nc[(mask::E1 | mask::E2 | mask::E3) as usize] = triple;
    set_bivector(&mut nc, mask::N, with_n);
    set_bivector(&mut nc, mask::NB, with_nb);
    nc[(mask::E1 | mask::N | mask::NB) as usize] = with_minkowski.x;
    nc[(mask::E2 | mask::N | mask::NB) as usize] = with_minkowski.y;
    nc[(mask::E3 | mask::N | mask::NB) as usize] = with_minkowski.z;
    Multivector::from_null_coeffs(&nc)
}

fn set_bivector(nc: &mut [f64; 32], suffix: u8, b: Bivec3) {
    nc[(mask::E2 | mask::E3 | suffix) as usize] = b.yz;
    nc[(mask::E1 | mask::E3 | suffix) as usize] = -b.zx;
    nc[(mask::E1 | mask::E2 | suffix) as usize] = b.xy;
}
