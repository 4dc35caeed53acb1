//! Floating-point scalar abstraction shared by every centrality routine.

use std::fmt::{Debug, Display};
use std::iter::Sum;

use num_traits::{Float, FromPrimitive, ToPrimitive};

/// Real scalar type used for centrality scores: `f32` or `f64`.
///
/// `Display` must print the shortest decimal string that round-trips to the
/// same value; the ranking matrix derives its decimal rounding from it.
pub trait Scalar:
    Float + FromPrimitive + ToPrimitive + Sum + Debug + Display + Default + Send + Sync + 'static
{
    /// Default convergence tolerance for iterative solvers at this precision.
    const DEFAULT_TOLERANCE: Self;

    fn from_count(value: usize) -> Self {
        <Self as FromPrimitive>::from_usize(value).expect("usize is representable as a float")
    }

    fn to_f64_lossy(self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }
}

impl Scalar for f32 {
    const DEFAULT_TOLERANCE: Self = 1e-5;
}

impl Scalar for f64 {
    const DEFAULT_TOLERANCE: Self = 1e-8;
}
