//! Samplers and random instance generators.
//!
//! Circles and spheres of known center and radius emit points
//! c + r * r_k with unit direction vectors r_k; feeding those points to
//! the object constructors must reproduce (c, r) through extraction. All
//! generators take the caller's RNG so every check is reproducible from
//! an explicit seed.

use rand::Rng;

use super::OracleError;
use crate::algebra::{mask, Multivector};
use crate::euclid::{Bivec3, Vec3};
use crate::objects::ConformalPoint;

/// A circle of known center, radius and unit plane bivector, sampled at
/// the stored angles.
#[derive(Clone, Debug, PartialEq)]
pub struct SampledCircle {
    pub center: Vec3,
    pub radius: f64,
    pub plane: Bivec3,
    pub angles: Vec<f64>,
}

impl SampledCircle {
    pub fn new(
        center: Vec3,
        radius: f64,
        plane: Bivec3,
        angles: Vec<f64>,
    ) -> Result<Self, OracleError> {
        if !(radius > 0.0 && radius.is_finite()) {
            return Err(OracleError::InvalidArgument("radius must be > 0"));
        }
        if angles.len() < 3 {
            return Err(OracleError::InvalidArgument(
                "a circle sample needs at least 3 angles",
            ));
        }
        let plane = plane
            .normalized()
            .ok_or(OracleError::InvalidArgument("plane bivector must be nonzero"))?;
        Ok(Self {
            center,
            radius,
            plane,
            angles,
        })
    }

    /// k equally spaced angles.
    pub fn uniform(center: Vec3, radius: f64, plane: Bivec3, k: usize) -> Result<Self, OracleError> {
        let angles = (0..k)
            .map(|j| 2.0 * std::f64::consts::PI * j as f64 / k as f64)
            .collect();
        Self::new(center, radius, plane, angles)
    }

    /// Unit vectors from the center to the sampled points.
    pub fn unit_directions(&self) -> Vec<Vec3> {
        let (u, v) = plane_basis(self.plane).expect("plane bivector is unit by construction");
        self.angles
            .iter()
            .map(|t| u * t.cos() + v * t.sin())
            .collect()
    }

    pub fn points(&self) -> Vec<Vec3> {
        self.unit_directions()
            .into_iter()
            .map(|r_k| self.center + r_k * self.radius)
            .collect()
    }

    pub fn conformal_points(&self) -> Vec<ConformalPoint> {
        self.points().into_iter().map(ConformalPoint::embed).collect()
    }
}

/// A sphere of known center and radius, sampled along stored unit
/// directions.
#[derive(Clone, Debug, PartialEq)]
pub struct SampledSphere {
    pub center: Vec3,
    pub radius: f64,
    pub directions: Vec<Vec3>,
}

impl SampledSphere {
    pub fn new(center: Vec3, radius: f64, directions: Vec<Vec3>) -> Result<Self, OracleError> {
        if !(radius > 0.0 && radius.is_finite()) {
            return Err(OracleError::InvalidArgument("radius must be > 0"));
        }
        if directions.len() < 4 {
            return Err(OracleError::InvalidArgument(
                "a sphere sample needs at least 4 directions",
            ));
        }
        let mut unit = Vec::with_capacity(directions.len());
        for d in directions {
            unit.push(
                d.normalized()
                    .ok_or(OracleError::InvalidArgument("zero direction"))?,
            );
        }
        Ok(Self {
            center,
            radius,
            directions: unit,
        })
    }

    pub fn points(&self) -> Vec<Vec3> {
        self.directions
            .iter()
            .map(|r_k| self.center + *r_k * self.radius)
            .collect()
    }

    pub fn conformal_points(&self) -> Vec<ConformalPoint> {
        self.points().into_iter().map(ConformalPoint::embed).collect()
    }
}

/// Orthonormal in-plane basis (u, v) with u ^ v oriented like the plane
/// bivector. Deterministic: u is the normalized rejection of the least
/// aligned coordinate axis.
pub fn plane_basis(plane: Bivec3) -> Option<(Vec3, Vec3)> {
    let w = plane.axial().normalized()?;
    let axes = [Vec3::EX, Vec3::EY, Vec3::EZ];
    let mut seed = axes[0];
    let mut best = w.dot(seed).abs();
    for axis in &axes[1..] {
        let a = w.dot(*axis).abs();
        if a < best {
            best = a;
            seed = *axis;
        }
    }
    let u = (seed - w * w.dot(seed)).normalized()?;
    let v = w.cross(u);
    Some((u, v))
}

/// Center-radius form of a pair bivector with an explicit squared radius;
/// negative values build virtual pairs with no real points. Assembled
/// directly from components, independent of the object constructors.
pub fn virtual_pair(center: Vec3, phat: Vec3, r2: f64, weight: f64) -> Multivector {
    let cp = center.dot(phat);
    let b = phat.wedge(center) * weight;
    let with_n = (phat * (0.5 * (center.norm_squared() + r2)) - center * cp) * weight;
    let with_nb = phat * weight;
    let g = cp * weight;

    let mut nc = [0.0f64; 32];
    nc[(mask::E2 | mask::E3) as usize] = b.yz;
    nc[(mask::E1 | mask::E3) as usize] = -b.zx;
    nc[(mask::E1 | mask::E2) as usize] = b.xy;
    for (bit, (vn, vnb)) in [
        (mask::E1, (with_n.x, with_nb.x)),
        (mask::E2, (with_n.y, with_nb.y)),
        (mask::E3, (with_n.z, with_nb.z)),
    ] {
        nc[(bit | mask::N) as usize] = vn;
        nc[(bit | mask::NB) as usize] = vnb;
    }
    nc[(mask::N | mask::NB) as usize] = g;
    Multivector::from_null_coeffs(&nc)
}

/// Uniform coordinate in [-10, 10].
pub fn random_coordinate(rng: &mut impl Rng) -> f64 {
    rng.random_range(-10.0..10.0)
}

pub fn random_point(rng: &mut impl Rng) -> Vec3 {
    Vec3::new(
        random_coordinate(rng),
        random_coordinate(rng),
        random_coordinate(rng),
    )
}

/// Uniform-ish unit vector by rejection sampling on the cube.
pub fn random_unit(rng: &mut impl Rng) -> Vec3 {
    loop {
        let v = Vec3::new(
            rng.random_range(-1.0..1.0),
            rng.random_range(-1.0..1.0),
            rng.random_range(-1.0..1.0),
        );
        let n = v.norm();
        if n > 0.1 && n <= 1.0 {
            return v * (1.0 / n);
        }
    }
}

pub fn random_unit_bivector(rng: &mut impl Rng) -> Bivec3 {
    Bivec3::from_axial(random_unit(rng))
}
