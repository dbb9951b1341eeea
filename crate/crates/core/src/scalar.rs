//! The integer scalar every semigroup computation is generic over.

use std::fmt::{Debug, Display};
use std::hash::Hash;
use std::str::FromStr;

use num_integer::{Integer, Roots};
use num_traits::{NumCast, PrimInt, Signed};

/// A signed machine integer usable as a semigroup element.
///
/// Signed because the Frobenius number of ℕ is −1. Implemented for `i32`,
/// `i64` and `i128`; `i64` is the default everywhere in the crate root.
pub trait Element:
    PrimInt + Signed + Integer + Roots + Hash + Debug + Display + FromStr + Send + Sync + 'static
{
    /// Small constant conversion. Panics only if `n` does not fit, which
    /// cannot happen for the constants used in this crate.
    #[inline]
    fn lit(n: i32) -> Self {
        <Self as NumCast>::from(n).expect("literal fits every supported width")
    }

    #[inline]
    fn from_usize(n: usize) -> Option<Self> {
        <Self as NumCast>::from(n)
    }

    /// Converts a nonnegative value to an index.
    #[inline]
    fn to_index(self) -> usize {
        self.to_usize()
            .expect("index must be nonnegative and fit in usize")
    }

    #[inline]
    fn widen(self) -> i128 {
        self.to_i128().expect("every supported width fits in i128")
    }

    /// `2^k`, or `None` on overflow.
    fn pow2(k: u32) -> Option<Self> {
        let bits = Self::zero().count_zeros();
        if k + 1 >= bits {
            None
        } else {
            Some(Self::one() << k as usize)
        }
    }

    /// ⌊log₂ self⌋ for positive values.
    fn floor_log2(self) -> u32 {
        debug_assert!(self > Self::zero());
        Self::zero().count_zeros() - 1 - self.leading_zeros()
    }
}

impl Element for i32 {}
impl Element for i64 {}
impl Element for i128 {}
