//! Scalar abstraction: all core math is generic over the floating-point type.

use std::fmt::{Debug, Display};
use std::iter::Sum;

use num_traits::{Float, FromPrimitive, ToPrimitive};

/// Floating-point scalar used by every solver and feasible-set oracle.
///
/// Implemented for `f32` and `f64` via the blanket impl. The `f64`
/// instantiations are re-exported as type aliases at the crate root.
pub trait Scalar:
    Float + FromPrimitive + ToPrimitive + Sum + Debug + Display + Default + Send + Sync + 'static
{
}

impl<T> Scalar for T where
    T: Float + FromPrimitive + ToPrimitive + Sum + Debug + Display + Default + Send + Sync + 'static
{
}

/// Converts an `f64` constant into the scalar type.
///
/// Conversion is exact for `f64` and rounds for `f32`; panics only for
/// exotic scalar types that cannot represent finite doubles at all.
#[inline]
pub fn fl<F: Scalar>(x: f64) -> F {
    F::from_f64(x).expect("finite f64 constant must convert into the scalar type")
}
