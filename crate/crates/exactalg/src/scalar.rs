use std::fmt::Debug;

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::ratfunc::RatFunc;
use crate::rational::int;

/// Field operations shared by exact rational numbers and rational functions,
/// so that recurrences can run either symbolically or at a fixed parameter.
///
/// Constants are produced "like" an existing value because rational
/// functions carry their variable set.
pub trait Scalar: Clone + PartialEq + Debug + Send + Sync {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn int_like(&self, n: i64) -> Self;
    fn rational_like(&self, c: &BigRational) -> Self;
    fn is_zero_value(&self) -> bool;
    fn add_ref(&self, other: &Self) -> Self;
    fn sub_ref(&self, other: &Self) -> Self;
    fn mul_ref(&self, other: &Self) -> Self;
    /// Panics when `other` is zero.
    fn div_ref(&self, other: &Self) -> Self;

    fn neg_ref(&self) -> Self {
        self.zero_like().sub_ref(self)
    }
}

impl Scalar for BigRational {
    fn zero_like(&self) -> Self {
        BigRational::zero()
    }
    fn one_like(&self) -> Self {
        BigRational::one()
    }
    fn int_like(&self, n: i64) -> Self {
        int(n)
    }
    fn rational_like(&self, c: &BigRational) -> Self {
        c.clone()
    }
    fn is_zero_value(&self) -> bool {
        self.is_zero()
    }
    fn add_ref(&self, other: &Self) -> Self {
        self + other
    }
    fn sub_ref(&self, other: &Self) -> Self {
        self - other
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn div_ref(&self, other: &Self) -> Self {
        assert!(!other.is_zero(), "division by zero");
        self / other
    }
    fn neg_ref(&self) -> Self {
        -self
    }
}

impl Scalar for RatFunc {
    fn zero_like(&self) -> Self {
        RatFunc::zero(self.vars())
    }
    fn one_like(&self) -> Self {
        RatFunc::one(self.vars())
    }
    fn int_like(&self, n: i64) -> Self {
        RatFunc::from_int(self.vars(), n)
    }
    fn rational_like(&self, c: &BigRational) -> Self {
        RatFunc::constant(self.vars(), c.clone())
    }
    fn is_zero_value(&self) -> bool {
        self.is_zero()
    }
    fn add_ref(&self, other: &Self) -> Self {
        self + other
    }
    fn sub_ref(&self, other: &Self) -> Self {
        self - other
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn div_ref(&self, other: &Self) -> Self {
        self / other
    }
    fn neg_ref(&self) -> Self {
        -self
    }
}
