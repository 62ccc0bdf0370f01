//! Plain 3D Euclidean carriers: vectors and bivectors.
//!
//! These hold the extracted data of geometric objects (positions,
//! directions, moments, plane bivectors) and feed the classical oracle
//! fits, which work in ordinary vector algebra only.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// A 3D Euclidean vector.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct Vec3 {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl Vec3 {
    pub const ZERO: Vec3 = Vec3 {
        x: 0.0,
        y: 0.0,
        z: 0.0,
    };
    pub const EX: Vec3 = Vec3 {
        x: 1.0,
        y: 0.0,
        z: 0.0,
    };
    pub const EY: Vec3 = Vec3 {
        x: 0.0,
        y: 1.0,
        z: 0.0,
    };
    pub const EZ: Vec3 = Vec3 {
        x: 0.0,
        y: 0.0,
        z: 1.0,
    };

    pub const fn new(x: f64, y: f64, z: f64) -> Self {
        Self { x, y, z }
    }

    pub fn dot(self, rhs: Vec3) -> f64 {
        self.x * rhs.x + self.y * rhs.y + self.z * rhs.z
    }

    pub fn cross(self, rhs: Vec3) -> Vec3 {
        Vec3::new(
            self.y * rhs.z - self.z * rhs.y,
            self.z * rhs.x - self.x * rhs.z,
            self.x * rhs.y - self.y * rhs.x,
        )
    }

    /// Outer product with another vector; the components of the resulting
    /// bivector agree with the cross product.
    pub fn wedge(self, rhs: Vec3) -> Bivec3 {
        let c = self.cross(rhs);
        Bivec3::new(c.x, c.y, c.z)
    }

    pub fn norm_squared(self) -> f64 {
        self.dot(self)
    }

    pub fn norm(self) -> f64 {
        self.norm_squared().sqrt()
    }

    pub fn normalized(self) -> Option<Vec3> {
        let n = self.norm();
        if n == 0.0 {
            None
        } else {
            Some(self * (1.0 / n))
        }
    }

    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite() && self.z.is_finite()
    }

    /// Lexicographic comparison by (x, y, z); used only to break exact
    /// ties when ordering extracted points.
    pub fn lex_cmp(self, rhs: Vec3) -> std::cmp::Ordering {
        self.x
            .total_cmp(&rhs.x)
            .then(self.y.total_cmp(&rhs.y))
            .then(self.z.total_cmp(&rhs.z))
    }
}

impl Add for Vec3 {
    type Output = Vec3;
    fn add(self, rhs: Vec3) -> Vec3 {
        Vec3::new(self.x + rhs.x, self.y + rhs.y, self.z + rhs.z)
    }
}

impl Sub for Vec3 {
    type Output = Vec3;
    fn sub(self, rhs: Vec3) -> Vec3 {
        Vec3::new(self.x - rhs.x, self.y - rhs.y, self.z - rhs.z)
    }
}

impl Neg for Vec3 {
    type Output = Vec3;
    fn neg(self) -> Vec3 {
        Vec3::new(-self.x, -self.y, -self.z)
    }
}

impl Mul<f64> for Vec3 {
    type Output = Vec3;
    fn mul(self, s: f64) -> Vec3 {
        Vec3::new(self.x * s, self.y * s, self.z * s)
    }
}

impl Mul<Vec3> for f64 {
    type Output = Vec3;
    fn mul(self, v: Vec3) -> Vec3 {
        v * self
    }
}

impl fmt::Display for Vec3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.x, self.y, self.z)
    }
}

/// A 3D Euclidean bivector with components on {e2^e3, e3^e1, e1^e2}.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct Bivec3 {
    pub yz: f64,
    pub zx: f64,
    pub xy: f64,
}

impl Bivec3 {
    pub const ZERO: Bivec3 = Bivec3 {
        yz: 0.0,
        zx: 0.0,
        xy: 0.0,
    };

    pub const fn new(yz: f64, zx: f64, xy: f64) -> Self {
        Self { yz, zx, xy }
    }

    /// The vector dual to this bivector (its components under the plane
    /// orientation convention `u.wedge(v) <-> u.cross(v)`).
    pub fn axial(self) -> Vec3 {
        Vec3::new(self.yz, self.zx, self.xy)
    }

    pub fn from_axial(v: Vec3) -> Self {
        Self::new(v.x, v.y, v.z)
    }

    pub fn dot(self, rhs: Bivec3) -> f64 {
        self.yz * rhs.yz + self.zx * rhs.zx + self.xy * rhs.xy
    }

    pub fn norm_squared(self) -> f64 {
        self.dot(self)
    }

    pub fn norm(self) -> f64 {
        self.norm_squared().sqrt()
    }

    pub fn normalized(self) -> Option<Bivec3> {
        let n = self.norm();
        if n == 0.0 {
            None
        } else {
            Some(self * (1.0 / n))
        }
    }

    /// Unit bivector with a deterministic sign: the component of largest
    /// magnitude (first of yz, zx, xy on ties) is made positive. Scaling
    /// the input by any nonzero factor leaves the result unchanged.
    pub fn canonical_unit(self) -> Option<Bivec3> {
        let unit = self.normalized()?;
        let comps = [unit.yz, unit.zx, unit.xy];
        let mut lead = 0;
        for (i, c) in comps.iter().enumerate() {
            if c.abs() > comps[lead].abs() {
                lead = i;
            }
        }
        if comps[lead] < 0.0 {
            Some(-unit)
        } else {
            Some(unit)
        }
    }
}

impl Add for Bivec3 {
    type Output = Bivec3;
    fn add(self, rhs: Bivec3) -> Bivec3 {
        Bivec3::new(self.yz + rhs.yz, self.zx + rhs.zx, self.xy + rhs.xy)
    }
}

impl Sub for Bivec3 {
    type Output = Bivec3;
    fn sub(self, rhs: Bivec3) -> Bivec3 {
        Bivec3::new(self.yz - rhs.yz, self.zx - rhs.zx, self.xy - rhs.xy)
    }
}

impl Neg for Bivec3 {
    type Output = Bivec3;
    fn neg(self) -> Bivec3 {
        Bivec3::new(-self.yz, -self.zx, -self.xy)
    }
}

impl Mul<f64> for Bivec3 {
    type Output = Bivec3;
    fn mul(self, s: f64) -> Bivec3 {
        Bivec3::new(self.yz * s, self.zx * s, self.xy * s)
    }
}

impl Mul<Bivec3> for f64 {
    type Output = Bivec3;
    fn mul(self, b: Bivec3) -> Bivec3 {
        b * self
    }
}
