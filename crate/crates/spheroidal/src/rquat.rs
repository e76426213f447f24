//! Quaternion-valued polynomials on `(x0, x1, x2)` and the Dirac operators.
//!
//! Functions of interest take values in the reduced quaternions
//! `span{1, e1, e2}` (vanishing `e3` component), but intermediate products
//! with `e3` leave that subspace transiently, so the full four components are
//! always carried. Multiplication follows the usual table
//! `e1^2 = e2^2 = e3^2 = -1`, `e1 e2 = e3 = -e2 e1`, `e2 e3 = e1`,
//! `e3 e1 = e2`.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use crate::poly::TriPoly;
use crate::scalar::Scalar;

/// Quaternion-valued polynomial: `s + v1 e1 + v2 e2 + v3 e3`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuatPoly<T: Scalar> {
    pub s: TriPoly<T>,
    pub v1: TriPoly<T>,
    pub v2: TriPoly<T>,
    pub v3: TriPoly<T>,
}

impl<T: Scalar> Default for QuatPoly<T> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<T: Scalar> QuatPoly<T> {
    pub fn zero() -> Self {
        QuatPoly {
            s: TriPoly::zero(),
            v1: TriPoly::zero(),
            v2: TriPoly::zero(),
            v3: TriPoly::zero(),
        }
    }

    pub fn from_scalar(s: TriPoly<T>) -> Self {
        QuatPoly { s, ..Self::zero() }
    }

    pub fn new(s: TriPoly<T>, v1: TriPoly<T>, v2: TriPoly<T>, v3: TriPoly<T>) -> Self {
        QuatPoly { s, v1, v2, v3 }
    }

    /// The constant unit `e1`.
    pub fn e1() -> Self {
        QuatPoly { v1: TriPoly::one(), ..Self::zero() }
    }

    /// The constant unit `e2`.
    pub fn e2() -> Self {
        QuatPoly { v2: TriPoly::one(), ..Self::zero() }
    }

    /// The constant unit `e3`.
    pub fn e3() -> Self {
        QuatPoly { v3: TriPoly::one(), ..Self::zero() }
    }

    pub fn is_zero(&self) -> bool {
        self.s.is_zero() && self.v1.is_zero() && self.v2.is_zero() && self.v3.is_zero()
    }

    /// R3-valued: no `e3` component.
    pub fn is_reduced(&self) -> bool {
        self.v3.is_zero()
    }

    /// Scalar part `Sc q`.
    pub fn sc(&self) -> &TriPoly<T> {
        &self.s
    }

    /// Vector part `Vec q` as a quaternion with zero scalar component.
    pub fn vec(&self) -> Self {
        QuatPoly {
            s: TriPoly::zero(),
            v1: self.v1.clone(),
            v2: self.v2.clone(),
            v3: self.v3.clone(),
        }
    }

    /// Quaternionic conjugate: scalar part kept, vector part negated.
    pub fn conjugate(&self) -> Self {
        QuatPoly {
            s: self.s.clone(),
            v1: -&self.v1,
            v2: -&self.v2,
            v3: -&self.v3,
        }
    }

    pub fn scale(&self, c: &T) -> Self {
        QuatPoly {
            s: self.s.scale(c),
            v1: self.v1.scale(c),
            v2: self.v2.scale(c),
            v3: self.v3.scale(c),
        }
    }

    pub fn scale_poly(&self, p: &TriPoly<T>) -> Self {
        QuatPoly {
            s: &self.s * p,
            v1: &self.v1 * p,
            v2: &self.v2 * p,
            v3: &self.v3 * p,
        }
    }

    pub fn component(&self, i: usize) -> &TriPoly<T> {
        match i {
            0 => &self.s,
            1 => &self.v1,
            2 => &self.v2,
            3 => &self.v3,
            _ => panic!("component index out of range"),
        }
    }

    /// Component-wise partial derivative.
    pub fn partial_derivative(&self, axis: usize) -> Self {
        QuatPoly {
            s: self.s.partial_derivative(axis),
            v1: self.v1.partial_derivative(axis),
            v2: self.v2.partial_derivative(axis),
            v3: self.v3.partial_derivative(axis),
        }
    }

    /// Component-wise Laplacian.
    pub fn laplacian(&self) -> Self {
        QuatPoly {
            s: self.s.laplacian(),
            v1: self.v1.laplacian(),
            v2: self.v2.laplacian(),
            v3: self.v3.laplacian(),
        }
    }

    pub fn map_coeffs<U: Scalar>(&self, f: impl Fn(&T) -> U + Copy) -> QuatPoly<U> {
        QuatPoly {
            s: self.s.map_coeffs(f),
            v1: self.v1.map_coeffs(f),
            v2: self.v2.map_coeffs(f),
            v3: self.v3.map_coeffs(f),
        }
    }
}

/// Full quaternion product with polynomial components.
pub fn qmul<T: Scalar>(f: &QuatPoly<T>, g: &QuatPoly<T>) -> QuatPoly<T> {
    let s = &f.s * &g.s - &(&f.v1 * &g.v1) - &(&f.v2 * &g.v2) - &(&f.v3 * &g.v3);
    let v1 = &f.s * &g.v1 + &(&f.v1 * &g.s) + &(&f.v2 * &g.v3) - &(&f.v3 * &g.v2);
    let v2 = &f.s * &g.v2 + &(&f.v2 * &g.s) + &(&f.v3 * &g.v1) - &(&f.v1 * &g.v3);
    let v3 = &f.s * &g.v3 + &(&f.v3 * &g.s) + &(&f.v1 * &g.v2) - &(&f.v2 * &g.v1);
    QuatPoly { s, v1, v2, v3 }
}

/// Left Dirac operator: `sum_i u_i (df/dx_i)` with `u = (1, e1, e2)`,
/// or `(1, -e1, -e2)` when `conjugated` is set.
pub fn dirac<T: Scalar>(f: &QuatPoly<T>, conjugated: bool) -> QuatPoly<T> {
    let d0 = f.partial_derivative(0);
    let d1 = qmul(&QuatPoly::e1(), &f.partial_derivative(1));
    let d2 = qmul(&QuatPoly::e2(), &f.partial_derivative(2));
    if conjugated {
        d0 - d1 - d2
    } else {
        d0 + d1 + d2
    }
}

/// Left Dirac operator applied to a scalar polynomial.
pub fn dirac_scalar<T: Scalar>(p: &TriPoly<T>, conjugated: bool) -> QuatPoly<T> {
    dirac(&QuatPoly::from_scalar(p.clone()), conjugated)
}

impl<T: Scalar> Add for QuatPoly<T> {
    type Output = QuatPoly<T>;
    fn add(self, rhs: Self) -> Self {
        QuatPoly {
            s: self.s + rhs.s,
            v1: self.v1 + rhs.v1,
            v2: self.v2 + rhs.v2,
            v3: self.v3 + rhs.v3,
        }
    }
}

impl<T: Scalar> Add<&QuatPoly<T>> for QuatPoly<T> {
    type Output = QuatPoly<T>;
    fn add(self, rhs: &Self) -> Self {
        QuatPoly {
            s: self.s + &rhs.s,
            v1: self.v1 + &rhs.v1,
            v2: self.v2 + &rhs.v2,
            v3: self.v3 + &rhs.v3,
        }
    }
}

impl<T: Scalar> AddAssign<&QuatPoly<T>> for QuatPoly<T> {
    fn add_assign(&mut self, rhs: &Self) {
        self.s += &rhs.s;
        self.v1 += &rhs.v1;
        self.v2 += &rhs.v2;
        self.v3 += &rhs.v3;
    }
}

impl<T: Scalar> Sub for QuatPoly<T> {
    type Output = QuatPoly<T>;
    fn sub(self, rhs: Self) -> Self {
        QuatPoly {
            s: self.s - rhs.s,
            v1: self.v1 - rhs.v1,
            v2: self.v2 - rhs.v2,
            v3: self.v3 - rhs.v3,
        }
    }
}

impl<T: Scalar> Sub<&QuatPoly<T>> for QuatPoly<T> {
    type Output = QuatPoly<T>;
    fn sub(self, rhs: &Self) -> Self {
        QuatPoly {
            s: self.s - &rhs.s,
            v1: self.v1 - &rhs.v1,
            v2: self.v2 - &rhs.v2,
            v3: self.v3 - &rhs.v3,
        }
    }
}

impl<T: Scalar> Neg for QuatPoly<T> {
    type Output = QuatPoly<T>;
    fn neg(self) -> Self {
        QuatPoly { s: -self.s, v1: -self.v1, v2: -self.v2, v3: -self.v3 }
    }
}

impl<T: Scalar> Mul for &QuatPoly<T> {
    type Output = QuatPoly<T>;
    fn mul(self, rhs: &QuatPoly<T>) -> QuatPoly<T> {
        qmul(self, rhs)
    }
}

impl<T: Scalar + fmt::Display> fmt::Display for QuatPoly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}] + [{}]e1 + [{}]e2 + [{}]e3",
            self.s, self.v1, self.v2, self.v3
        )
    }
}

impl QuatPoly<crate::exact::Rational> {
    /// JSON form: `{"s": ..., "e1": ..., "e2": ..., "e3": ...}`.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "s": self.s.to_json(),
            "e1": self.v1.to_json(),
            "e2": self.v2.to_json(),
            "e3": self.v3.to_json(),
        })
    }
}
