//! Relative tolerance governing every "is zero" decision.

/// A single relative epsilon, scaled by the magnitude of the quantities
/// involved, used for nullity, incidence and degeneracy decisions.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Tolerance {
    rel: f64,
}

impl Tolerance {
    /// Relative epsilon used when none is specified.
    pub const DEFAULT_REL: f64 = 1e-9;

    pub fn new(rel: f64) -> Self {
        assert!(rel > 0.0 && rel.is_finite(), "tolerance must be positive");
        Self { rel }
    }

    pub fn relative(&self) -> f64 {
        self.rel
    }

    /// True when `value` vanishes relative to `scale`.
    pub fn is_zero(&self, value: f64, scale: f64) -> bool {
        value.abs() <= self.rel * scale.abs()
    }
}

impl Default for Tolerance {
    fn default() -> Self {
        Self {
            rel: Self::DEFAULT_REL,
        }
    }
}
