//! Exact scalar types for the linear algebra in this crate.

use std::fmt::{Debug, Display};

use num_traits::{FromPrimitive, Num, Signed};

/// An exact signed ring element: `i64`, `i128`, `BigInt`, or a rational.
///
/// Characteristic polynomials divide by small integers along the way; the
/// divisions are exact for integer matrices.
pub trait Scalar: Clone + PartialEq + Debug + Display + Num + Signed + FromPrimitive {
    fn from_int(v: i64) -> Self {
        Self::from_i64(v).expect("scalar type cannot represent an i64")
    }
}

impl<T> Scalar for T where T: Clone + PartialEq + Debug + Display + Num + Signed + FromPrimitive {}
