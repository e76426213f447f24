//! Scalar abstraction for polynomial coefficients.
//!
//! The exact code paths instantiate everything with [`crate::Rational`];
//! the floating cross-checks and plot-data export reuse the same polynomial
//! algebra over `f64`.

use std::ops::{AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_traits::{FromPrimitive, One, Zero};

/// Coefficient ring for [`crate::poly::TriPoly`] and [`crate::rquat::QuatPoly`].
pub trait Scalar:
    Clone
    + PartialEq
    + Zero
    + One
    + Neg<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + AddAssign
    + SubAssign
    + MulAssign
    + FromPrimitive
{
}

impl<T> Scalar for T where
    T: Clone
        + PartialEq
        + Zero
        + One
        + Neg<Output = T>
        + Sub<Output = T>
        + Mul<Output = T>
        + AddAssign
        + SubAssign
        + MulAssign
        + FromPrimitive
{
}
