//! Exact dense multivector arithmetic for the conformal model of 3D space.
//!
//! The five generators are the Euclidean frame e1, e2, e3 together with
//! two null vectors: n for infinity and nb for the origin. Requiring
//! embedded points to be null forces n * nb = -1, realized internally by
//! the diagonal pair e+ (square +1), e- (square -1) with n = e- + e+ and
//! nb = (e- - e+)/2.

pub mod blade;
mod multivector;
mod tolerance;

pub use blade::{mask, null_blade_name, null_blade_order};
pub use multivector::Multivector;
pub use tolerance::Tolerance;

use thiserror::Error;

#[derive(Clone, Copy, Debug, Error, PartialEq, Eq)]
pub enum AlgebraError {
    /// The element has a vanishing scalar `a * reverse(a)`, so the blade
    /// inverse does not exist (null or zero blades).
    #[error("element is not invertible (null or zero blade)")]
    NotInvertible,
}
