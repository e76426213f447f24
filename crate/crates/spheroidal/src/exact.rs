//! Exact scalar arithmetic: arbitrary-precision rationals, half-integers,
//! and the combinatorial primitives (factorials, Pochhammer symbols) that
//! every coefficient formula is built from.
//!
//! All coefficients in this crate are exact [`Rational`] values; no floating
//! point enters any identity. Rationals serialize as `"p/q"` (or `"p"` when
//! the denominator is 1), which is exactly what `Display`/`FromStr` of the
//! underlying type produce.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Arbitrary-precision rational number, always reduced, denominator > 0.
pub type Rational = num_rational::BigRational;

/// Rational from an integer pair. Panics on q = 0.
pub fn rat(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// Rational from an integer.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// An exact half-integer `twice/2`, e.g. `1/2`, `-n - 1/2`.
///
/// Pochhammer bases like `(1/2)_n` occur in nearly every coefficient of the
/// basis-conversion formulas; keeping them exact (never as floats) is what
/// makes the downstream identity checks bit-exact.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HalfInteger {
    twice: BigInt,
}

impl HalfInteger {
    /// The half-integer `twice/2`.
    pub fn new(twice: impl Into<BigInt>) -> Self {
        HalfInteger { twice: twice.into() }
    }

    /// The half-integer `k + 1/2`.
    pub fn half_plus(k: i64) -> Self {
        HalfInteger::new(2 * k + 1)
    }

    pub fn twice(&self) -> &BigInt {
        &self.twice
    }

    pub fn to_rational(&self) -> Rational {
        Rational::new(self.twice.clone(), BigInt::from(2))
    }
}

impl From<HalfInteger> for Rational {
    fn from(h: HalfInteger) -> Rational {
        h.to_rational()
    }
}

impl From<&HalfInteger> for Rational {
    fn from(h: &HalfInteger) -> Rational {
        h.to_rational()
    }
}

impl std::fmt::Display for HalfInteger {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.to_rational())
    }
}

/// Rising factorial `(a)_n = a (a+1) ... (a+n-1)`, with `(a)_0 = 1`.
pub fn pochhammer(a: impl Into<Rational>, n: u32) -> Rational {
    let a = a.into();
    let mut acc = Rational::one();
    let mut factor = a;
    for _ in 0..n {
        acc *= &factor;
        factor += Rational::one();
    }
    acc
}

/// `n!` as an exact integer.
pub fn factorial(n: u32) -> BigInt {
    let mut acc = BigInt::one();
    for k in 2..=n {
        acc *= k;
    }
    acc
}

/// `n!` as a rational, convenient inside coefficient formulas.
pub fn factorial_rat(n: u32) -> Rational {
    Rational::from_integer(factorial(n))
}

/// Double factorial `n!! = n (n-2) (n-4) ...`, with `(-1)!! = 0!! = 1`.
pub fn double_factorial(n: i64) -> BigInt {
    debug_assert!(n >= -1);
    let mut acc = BigInt::one();
    let mut k = n;
    while k > 1 {
        acc *= k;
        k -= 2;
    }
    acc
}

/// Exact square root of a nonnegative rational, if it is rational.
pub fn rational_sqrt(x: &Rational) -> Option<Rational> {
    if x.is_negative() {
        return None;
    }
    if x.is_zero() {
        return Some(Rational::zero());
    }
    let ns = x.numer().sqrt();
    let ds = x.denom().sqrt();
    if &(&ns * &ns) == x.numer() && &(&ds * &ds) == x.denom() {
        Some(Rational::new(ns, ds))
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn pochhammer_empty_product_is_one() {
        assert_eq!(pochhammer(rat(7, 3), 0), int(1));
        assert_eq!(pochhammer(HalfInteger::half_plus(-4), 0), int(1));
    }

    #[test]
    fn pochhammer_half_integer_values() {
        // (1/2)_2 = (1/2)(3/2)
        assert_eq!(pochhammer(HalfInteger::new(1), 2), rat(3, 4));
        // (-5/2)_3 = (-5/2)(-3/2)(-1/2)
        assert_eq!(pochhammer(HalfInteger::new(-5), 3), rat(-15, 8));
    }

    #[test]
    fn factorial_values() {
        assert_eq!(factorial(0), BigInt::from(1));
        assert_eq!(factorial(5), BigInt::from(120));
        // independent product loop
        let mut acc = BigInt::one();
        for k in 1..=10 {
            acc *= k;
        }
        assert_eq!(factorial(10), acc);
        assert_eq!(factorial(10), BigInt::from(3628800));
    }

    #[test]
    fn double_factorial_values() {
        assert_eq!(double_factorial(-1), BigInt::one());
        assert_eq!(double_factorial(0), BigInt::one());
        assert_eq!(double_factorial(5), BigInt::from(15));
        assert_eq!(double_factorial(6), BigInt::from(48));
    }

    #[test]
    fn rational_sqrt_detects_squares() {
        assert_eq!(rational_sqrt(&rat(1, 4)), Some(rat(1, 2)));
        assert_eq!(rational_sqrt(&rat(9, 16)), Some(rat(3, 4)));
        assert_eq!(rational_sqrt(&rat(1, 2)), None);
        assert_eq!(rational_sqrt(&rat(-1, 4)), None);
        assert_eq!(rational_sqrt(&int(0)), Some(int(0)));
    }

    proptest! {
        // (a)_{m+n} = (a)_m (a+m)_n
        #[test]
        fn pochhammer_splits(twice in -41i64..41, m in 0u32..21, n in 0u32..21) {
            let a = HalfInteger::new(twice).to_rational();
            let lhs = pochhammer(a.clone(), m + n);
            let rhs = pochhammer(a.clone(), m) * pochhammer(a + int(m as i64), n);
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn pochhammer_of_one_is_factorial(n in 0u32..21) {
            prop_assert_eq!(pochhammer(int(1), n), factorial_rat(n));
        }

        // exactness: (p/q + r/s) - r/s == p/q bitwise
        #[test]
        fn rational_addition_is_exact(p in -999i64..999, q in 1i64..999,
                                      r in -999i64..999, s in 1i64..999) {
            let x = rat(p, q);
            let y = rat(r, s);
            prop_assert_eq!(&(&x + &y) - &y, x);
        }
    }
}
