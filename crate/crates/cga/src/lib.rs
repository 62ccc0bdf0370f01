//! Geometric algebra kernel for the conformal model of 3D Euclidean space.
//!
//! Euclidean points embed as null vectors of a 5D algebra spanned by the
//! Euclidean frame plus two extra null directions (origin and infinity).
//! Joining embedded points with the outer product yields homogeneous
//! representatives of point pairs, lines, circles, planes and spheres,
//! and every piece of their 3D data (positions, directions, moments,
//! plane bivectors, centers, radii) can be read back out with closed-form
//! expressions.
//!
//! The crate has three layers:
//!
//! - [`algebra`]: dense 32-coefficient multivectors with the full product
//!   zoo (geometric, outer, contractions, scalar product), grade and
//!   reversion operations, blade inverses and a canonical text rendering.
//! - [`objects`]: constructors and data-extraction routines for the
//!   homogeneous objects, with degeneracy reporting under a configurable
//!   relative [`Tolerance`].
//! - [`oracle`]: independent brute-force ground truth (classical
//!   circumcircle/circumsphere fits, a quadratic point-pair solver, an
//!   exact blade-product table and samplers), sharing no formulas with the
//!   extraction code it validates.
//!
//! ```
//! use cga::{Circle, ConformalPoint, Tolerance, Vec3};
//!
//! let tol = Tolerance::default();
//! let a = ConformalPoint::embed(Vec3::new(1.0, 0.0, 0.0));
//! let b = ConformalPoint::embed(Vec3::new(0.0, 1.0, 0.0));
//! let c = ConformalPoint::embed(Vec3::new(-1.0, 0.0, 0.0));
//! let circle = Circle::through(&a, &b, &c, tol).unwrap();
//! let data = circle.data(tol).unwrap();
//! assert!((data.r - 1.0).abs() < 1e-12);
//! assert!(data.c.norm() < 1e-12);
//! ```

pub mod algebra;
pub mod euclid;
pub mod objects;
pub mod oracle;

pub use algebra::{AlgebraError, Multivector, Tolerance};
pub use euclid::{Bivec3, Vec3};
pub use objects::{
    extract_point, incident, same_object, Circle, CircleData, ConformalPoint, Line, LineData,
    ObjectError, PairData, PairSplitIntermediates, Plane, PlaneData, PointPair, Sphere, SphereData,
};
