//! The scalar-field abstraction shared by symbolic and numeric computations.
//!
//! Matrices, tensor operators and series are generic over [`Scalar`], so the
//! same algorithm runs on exact rational functions (symbolic mode) and on
//! exact rationals at a sample point (grid mode).

use super::mpoly::BigRat;
use super::ratfunc::RatFunc;
use crate::error::{AlgebraError, Result};
use num_traits::{One, Zero};
use std::fmt::{Debug, Display};

/// An exact commutative field element.
pub trait Scalar: Clone + PartialEq + Debug + Display + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(k: i64) -> Self;
    fn from_bigrat(r: &BigRat) -> Self;
    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn inv(&self) -> Result<Self>;

    fn div(&self, other: &Self) -> Result<Self> {
        Ok(self.mul(&other.inv()?))
    }

    /// Integer power; negative exponents invert.
    fn powi(&self, k: i32) -> Result<Self> {
        let base = if k < 0 { self.inv()? } else { self.clone() };
        let mut acc = Self::one();
        for _ in 0..k.unsigned_abs() {
            acc = acc.mul(&base);
        }
        Ok(acc)
    }

    /// Sum of many terms; implementations may batch the normalization.
    fn sum<'a, I: IntoIterator<Item = &'a Self>>(items: I) -> Self
    where
        Self: 'a,
    {
        items.into_iter().fold(Self::zero(), |acc, x| acc.add(x))
    }
}

impl Scalar for RatFunc {
    fn zero() -> Self {
        RatFunc::zero()
    }
    fn one() -> Self {
        RatFunc::one()
    }
    fn from_i64(k: i64) -> Self {
        RatFunc::from_int(k)
    }
    fn from_bigrat(r: &BigRat) -> Self {
        RatFunc::from_bigrat(r)
    }
    fn is_zero(&self) -> bool {
        RatFunc::is_zero(self)
    }
    fn is_one(&self) -> bool {
        RatFunc::is_one(self)
    }
    fn add(&self, other: &Self) -> Self {
        RatFunc::add(self, other)
    }
    fn sub(&self, other: &Self) -> Self {
        RatFunc::sub(self, other)
    }
    fn mul(&self, other: &Self) -> Self {
        RatFunc::mul(self, other)
    }
    fn neg(&self) -> Self {
        RatFunc::neg(self)
    }
    fn inv(&self) -> Result<Self> {
        RatFunc::inv(self)
    }
    fn sum<'a, I: IntoIterator<Item = &'a Self>>(items: I) -> Self {
        RatFunc::sum_all(items)
    }
}

impl Scalar for BigRat {
    fn zero() -> Self {
        <BigRat as Zero>::zero()
    }
    fn one() -> Self {
        <BigRat as One>::one()
    }
    fn from_i64(k: i64) -> Self {
        BigRat::from_integer(k.into())
    }
    fn from_bigrat(r: &BigRat) -> Self {
        r.clone()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_one(&self) -> bool {
        One::is_one(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Result<Self> {
        if Zero::is_zero(self) {
            Err(AlgebraError::DivisionByZero)
        } else {
            Ok(self.recip())
        }
    }
}
