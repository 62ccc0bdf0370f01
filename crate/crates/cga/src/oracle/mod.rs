//! Independent brute-force ground truth.
//!
//! Everything here recomputes results the extraction formulas are supposed
//! to deliver, by a different route: classical vector-algebra fits and
//! linear solves, a quadratic solver for point pairs on their carrier
//! line, a generator-by-generator blade product table, and samplers that
//! emit points on circles and spheres of known center and radius. The
//! oracle shares no formulas with the code it validates.

mod cayley;
mod classical;
mod expansion;
mod pair_solve;
mod sampling;

pub use cayley::{cayley_check, CayleyMismatch, CayleyTable};
pub use classical::{circumcircle, circumsphere, plane_support, CircumCircle, CircumSphere};
pub use expansion::expanded_circle_trivector;
pub use pair_solve::pair_solve_bruteforce;
pub use sampling::{
    plane_basis, random_point, random_unit, random_unit_bivector, virtual_pair, SampledCircle,
    SampledSphere,
};

use thiserror::Error;

#[derive(Clone, Copy, Debug, Error, PartialEq, Eq)]
pub enum OracleError {
    #[error("degenerate configuration: {0}")]
    Degenerate(&'static str),
    /// The quadratic for the pair points has a negative discriminant.
    #[error("imaginary pair: no real solutions")]
    ImaginaryPair,
    #[error("invalid argument: {0}")]
    InvalidArgument(&'static str),
}
