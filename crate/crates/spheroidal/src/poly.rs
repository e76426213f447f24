//! Sparse trivariate polynomials in `(x0, x1, x2)`, generic over the scalar.
//!
//! The solid harmonics built elsewhere in the crate have structured sparsity
//! (parity constraints kill most monomials), so terms live in a map keyed by
//! exponent triple. Term order is graded lexicographic, which fixes the
//! serialization order everywhere (CLI output, JSON forms, golden tests).

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};



use crate::scalar::Scalar;

/// Exponent triple `x0^a x1^b x2^c`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Monomial(pub [u32; 3]);

impl Monomial {
    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn exponent(&self, axis: usize) -> u32 {
        self.0[axis]
    }
}

impl Ord for Monomial {
    // graded lex: total degree first, then exponents
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.degree(), self.0).cmp(&(other.degree(), other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Trivariate polynomial with scalar coefficients of type `T`.
///
/// Invariant: no stored zero coefficients. The zero polynomial is the empty
/// map and has degree -1 by convention (see [`TriPoly::degree`]).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TriPoly<T: Scalar> {
    terms: BTreeMap<Monomial, T>,
}

impl<T: Scalar> Default for TriPoly<T> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<T: Scalar> TriPoly<T> {
    pub fn zero() -> Self {
        TriPoly { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::constant(T::one())
    }

    pub fn constant(c: T) -> Self {
        Self::term(Monomial([0, 0, 0]), c)
    }

    /// The coordinate polynomial `x{axis}`.
    pub fn var(axis: usize) -> Self {
        let mut e = [0u32; 3];
        e[axis] = 1;
        Self::term(Monomial(e), T::one())
    }

    /// Single term `c * x0^a x1^b x2^c`.
    pub fn term(m: Monomial, c: T) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        TriPoly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Total degree; -1 for the zero polynomial.
    pub fn degree(&self) -> i64 {
        self.terms.keys().map(|m| m.degree() as i64).max().unwrap_or(-1)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &T)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, m: &Monomial) -> T {
        self.terms.get(m).cloned().unwrap_or_else(T::zero)
    }

    pub fn add_term(&mut self, m: Monomial, c: T) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &T) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut out = Self::zero();
        for (m, v) in &self.terms {
            out.add_term(*m, v.clone() * c.clone());
        }
        out
    }

    /// Formal partial derivative along `axis` (0, 1 or 2).
    pub fn partial_derivative(&self, axis: usize) -> Self {
        assert!(axis < 3, "axis must be 0, 1 or 2");
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            let e = m.0[axis];
            if e == 0 {
                continue;
            }
            let mut exps = m.0;
            exps[axis] = e - 1;
            let factor = T::from_u32(e).expect("exponent fits in scalar");
            out.add_term(Monomial(exps), c.clone() * factor);
        }
        out
    }

    /// `d2/dx0^2 + d2/dx1^2 + d2/dx2^2`.
    pub fn laplacian(&self) -> Self {
        let mut out = Self::zero();
        for axis in 0..3 {
            out += self.partial_derivative(axis).partial_derivative(axis);
        }
        out
    }

    /// Exact evaluation at a point.
    pub fn evaluate(&self, point: &[T; 3]) -> T {
        let mut acc = T::zero();
        for (m, c) in &self.terms {
            let mut term = c.clone();
            for axis in 0..3 {
                for _ in 0..m.0[axis] {
                    term *= point[axis].clone();
                }
            }
            acc += term;
        }
        acc
    }

    /// Map coefficients into another scalar type (e.g. exact -> f64).
    pub fn map_coeffs<U: Scalar>(&self, f: impl Fn(&T) -> U) -> TriPoly<U> {
        let mut out = TriPoly::zero();
        for (m, c) in &self.terms {
            out.add_term(*m, f(c));
        }
        out
    }
}

impl<T: Scalar> Add for TriPoly<T> {
    type Output = TriPoly<T>;
    fn add(mut self, rhs: Self) -> Self {
        for (m, c) in rhs.terms {
            self.add_term(m, c);
        }
        self
    }
}

impl<T: Scalar> Add<&TriPoly<T>> for TriPoly<T> {
    type Output = TriPoly<T>;
    fn add(mut self, rhs: &Self) -> Self {
        self += rhs;
        self
    }
}

impl<T: Scalar> AddAssign<&TriPoly<T>> for TriPoly<T> {
    fn add_assign(&mut self, rhs: &Self) {
        for (m, c) in &rhs.terms {
            self.add_term(*m, c.clone());
        }
    }
}

impl<T: Scalar> AddAssign for TriPoly<T> {
    fn add_assign(&mut self, rhs: Self) {
        for (m, c) in rhs.terms {
            self.add_term(m, c);
        }
    }
}

impl<T: Scalar> Neg for TriPoly<T> {
    type Output = TriPoly<T>;
    fn neg(self) -> Self {
        TriPoly {
            terms: self.terms.into_iter().map(|(m, c)| (m, -c)).collect(),
        }
    }
}

impl<T: Scalar> Neg for &TriPoly<T> {
    type Output = TriPoly<T>;
    fn neg(self) -> TriPoly<T> {
        TriPoly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c.clone())).collect(),
        }
    }
}

impl<T: Scalar> Sub for TriPoly<T> {
    type Output = TriPoly<T>;
    fn sub(mut self, rhs: Self) -> Self {
        for (m, c) in rhs.terms {
            self.add_term(m, -c);
        }
        self
    }
}

impl<T: Scalar> Sub<&TriPoly<T>> for TriPoly<T> {
    type Output = TriPoly<T>;
    fn sub(mut self, rhs: &Self) -> Self {
        for (m, c) in &rhs.terms {
            self.add_term(*m, -c.clone());
        }
        self
    }
}

impl<T: Scalar> Mul for &TriPoly<T> {
    type Output = TriPoly<T>;
    fn mul(self, rhs: &TriPoly<T>) -> TriPoly<T> {
        let mut out = TriPoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                let m = Monomial([
                    ma.0[0] + mb.0[0],
                    ma.0[1] + mb.0[1],
                    ma.0[2] + mb.0[2],
                ]);
                out.add_term(m, ca.clone() * cb.clone());
            }
        }
        out
    }
}

impl<T: Scalar> Mul for TriPoly<T> {
    type Output = TriPoly<T>;
    fn mul(self, rhs: Self) -> Self {
        &self * &rhs
    }
}

impl<T: Scalar + fmt::Display> fmt::Display for TriPoly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({})", c)?;
            for (axis, &e) in m.0.iter().enumerate() {
                match e {
                    0 => {}
                    1 => write!(f, "*x{}", axis)?,
                    _ => write!(f, "*x{}^{}", axis, e)?,
                }
            }
        }
        Ok(())
    }
}

impl TriPoly<crate::exact::Rational> {
    /// JSON form: `[{"e":[a,b,c],"c":"p/q"}, ...]` in graded-lex order.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.terms
                .iter()
                .map(|(m, c)| {
                    serde_json::json!({
                        "e": [m.0[0], m.0[1], m.0[2]],
                        "c": c.to_string(),
                    })
                })
                .collect(),
        )
    }

    /// Approximate the coefficients in f64 for plotting / cross-checks.
    pub fn to_f64(&self) -> TriPoly<f64> {
        use num_traits::ToPrimitive;
        self.map_coeffs(|c| c.to_f64().expect("rational fits in f64"))
    }
}
