use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_integer::Integer;
use num_traits::{FromPrimitive, Signed, ToPrimitive};

/// Integer coefficient ring used by the polynomial code.
///
/// Implemented for every signed integer type that supports exact division and
/// gcds (`i64`, `i128`, [`num_bigint::BigInt`], ...). Fixed-width types are fine
/// for small inputs but can overflow inside resultants; use `BigInt` when in
/// doubt.
pub trait Scalar:
    Clone + Debug + Display + Hash + Integer + Signed + FromPrimitive + ToPrimitive + Send + Sync + 'static
{
    fn from_int(v: i64) -> Self {
        Self::from_i64(v).expect("scalar type cannot represent value")
    }
}

impl<T> Scalar for T where
    T: Clone + Debug + Display + Hash + Integer + Signed + FromPrimitive + ToPrimitive + Send + Sync + 'static
{
}
