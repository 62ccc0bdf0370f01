//! Classical circumcircle, circumsphere and plane-support fits, built on
//! elementary vector algebra and a pivoted 3 x 3 linear solve only.

use super::OracleError;
use crate::euclid::{Bivec3, Vec3};

/// Result of the classical circumcircle solve. The plane bivector is unit
/// length with the orientation of (p1 - p2) ^ (p2 - p3).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CircumCircle {
    pub center: Vec3,
    pub radius: f64,
    pub plane: Bivec3,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CircumSphere {
    pub center: Vec3,
    pub radius: f64,
}

/// Gaussian elimination with partial pivoting; `None` when a pivot
/// vanishes relative to the matrix scale.
fn solve3(a: [[f64; 3]; 3], b: [f64; 3]) -> Option<[f64; 3]> {
    let mut m = [
        [a[0][0], a[0][1], a[0][2], b[0]],
        [a[1][0], a[1][1], a[1][2], b[1]],
        [a[2][0], a[2][1], a[2][2], b[2]],
    ];
    let scale = a
        .iter()
        .flatten()
        .fold(0.0f64, |acc, x| acc.max(x.abs()))
        .max(f64::MIN_POSITIVE);

    for col in 0..3 {
        let mut pivot_row = col;
        for row in col + 1..3 {
            if m[row][col].abs() > m[pivot_row][col].abs() {
                pivot_row = row;
            }
        }
        if m[pivot_row][col].abs() <= 1e-12 * scale {
            return None;
        }
        m.swap(col, pivot_row);
        let pivot = m[col];
        for row in m.iter_mut().skip(col + 1) {
            let f = row[col] / pivot[col];
            for (x, p) in row[col..].iter_mut().zip(&pivot[col..]) {
                *x -= f * p;
            }
        }
    }

    let mut x = [0.0; 3];
    for col in (0..3).rev() {
        let mut s = m[col][3];
        for k in col + 1..3 {
            s -= m[col][k] * x[k];
        }
        x[col] = s / m[col][col];
    }
    Some(x)
}

/// Circumcenter of a non-collinear triple: the intersection of the two
/// perpendicular bisector planes with the plane of the points.
pub fn circumcircle(p1: Vec3, p2: Vec3, p3: Vec3) -> Result<CircumCircle, OracleError> {
    let d21 = p2 - p1;
    let d32 = p3 - p2;
    let normal = d21.cross(d32);
    if normal.norm() <= 1e-12 * d21.norm() * d32.norm() {
        return Err(OracleError::Degenerate("collinear points"));
    }
    let a = [
        [2.0 * d21.x, 2.0 * d21.y, 2.0 * d21.z],
        [2.0 * d32.x, 2.0 * d32.y, 2.0 * d32.z],
        [normal.x, normal.y, normal.z],
    ];
    let b = [
        p2.norm_squared() - p1.norm_squared(),
        p3.norm_squared() - p2.norm_squared(),
        normal.dot(p1),
    ];
    let c = solve3(a, b).ok_or(OracleError::Degenerate("collinear points"))?;
    let center = Vec3::new(c[0], c[1], c[2]);
    let plane = (p1 - p2)
        .wedge(p2 - p3)
        .normalized()
        .ok_or(OracleError::Degenerate("collinear points"))?;
    Ok(CircumCircle {
        center,
        radius: (p1 - center).norm(),
        plane,
    })
}

/// Circumcenter of a non-coplanar quadruple from the three perpendicular
/// bisector planes.
pub fn circumsphere(
    p1: Vec3,
    p2: Vec3,
    p3: Vec3,
    p4: Vec3,
) -> Result<CircumSphere, OracleError> {
    let d21 = p2 - p1;
    let d32 = p3 - p2;
    let d43 = p4 - p3;
    let volume = d21.dot(d32.cross(d43));
    if volume.abs() <= 1e-12 * d21.norm() * d32.norm() * d43.norm() {
        return Err(OracleError::Degenerate("coplanar points"));
    }
    let a = [
        [2.0 * d21.x, 2.0 * d21.y, 2.0 * d21.z],
        [2.0 * d32.x, 2.0 * d32.y, 2.0 * d32.z],
        [2.0 * d43.x, 2.0 * d43.y, 2.0 * d43.z],
    ];
    let b = [
        p2.norm_squared() - p1.norm_squared(),
        p3.norm_squared() - p2.norm_squared(),
        p4.norm_squared() - p3.norm_squared(),
    ];
    let c = solve3(a, b).ok_or(OracleError::Degenerate("coplanar points"))?;
    let center = Vec3::new(c[0], c[1], c[2]);
    Ok(CircumSphere {
        center,
        radius: (p1 - center).norm(),
    })
}

/// Support vector of the plane through three non-collinear points: the
/// foot of the perpendicular from the origin. Also returns the unit
/// normal.
pub fn plane_support(p1: Vec3, p2: Vec3, p3: Vec3) -> Result<(Vec3, Vec3), OracleError> {
    let normal = (p2 - p1).cross(p3 - p2);
    let unit = normal
        .normalized()
        .filter(|_| normal.norm() > 1e-12 * (p2 - p1).norm() * (p3 - p2).norm())
        .ok_or(OracleError::Degenerate("collinear points"))?;
    Ok((unit * p1.dot(unit), unit))
}
