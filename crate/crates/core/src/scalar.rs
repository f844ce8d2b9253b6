//! Integer scalar abstraction.
//!
//! Every lattice computation in this crate (classes, pairings, monodromy
//! matrices, Smith normal form) is exact integer arithmetic, generic over the
//! coefficient type. `i64` is plenty for the worked examples; swap in
//! `num_bigint::BigInt` to rule out overflow on adversarial inputs.

use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_integer::Integer;
use num_traits::{NumAssign, Signed};

pub trait Scalar:
    Integer + Signed + NumAssign + Clone + Hash + Debug + Display + From<i32> + 'static
{
}

impl<T> Scalar for T where
    T: Integer + Signed + NumAssign + Clone + Hash + Debug + Display + From<i32> + 'static
{
}

/// Sign of a scalar as -1 / 0 / +1 in the same scalar type.
pub fn signum<T: Scalar>(x: &T) -> T {
    if x.is_positive() {
        T::one()
    } else if x.is_negative() {
        -T::one()
    } else {
        T::zero()
    }
}

/// Positive part, `max(0, x)`.
pub fn pos_part<T: Scalar>(x: T) -> T {
    if x.is_positive() {
        x
    } else {
        T::zero()
    }
}

/// gcd of a slice, zero for the empty slice.
pub fn gcd_all<T: Scalar>(xs: &[T]) -> T {
    xs.iter()
        .fold(T::zero(), |acc, x| acc.gcd(x))
}
