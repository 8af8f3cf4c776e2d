//! Scalar abstraction over the floating-point payoff type.

use num_traits::{Float, FromPrimitive};

/// Floating-point scalar used for payoffs, profits, and probabilities.
///
/// Implemented for `f32` and `f64`. Every comparison in the crate
/// (best responses, dominance, Nash membership, ESS conditions,
/// distribution normalization) goes through [`Scalar::tolerance`], so a
/// precision's tolerance is fixed in one place.
pub trait Scalar:
    Float + FromPrimitive + std::fmt::Debug + std::fmt::Display + Default + 'static
{
    /// Comparison tolerance for equilibrium and validation checks.
    fn tolerance() -> Self;
}

impl Scalar for f64 {
    fn tolerance() -> Self {
        1e-9
    }
}

impl Scalar for f32 {
    fn tolerance() -> Self {
        1e-5
    }
}

/// Shorthand for lifting an `f64` literal into the working scalar type.
pub(crate) fn lit<T: Scalar>(v: f64) -> T {
    T::from_f64(v).expect("literal representable in every Scalar")
}
