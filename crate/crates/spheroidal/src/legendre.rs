//! Associated Legendre functions of the first kind, exact where possible.
//!
//! Two evaluation regimes exist: the cut `[-1, 1]`, where we adopt the
//! Condon-Shortley phase
//! `P_n^m(x) = (-1)^m (1-x^2)^{m/2} (d/dx)^m P_n(x)`,
//! and the exterior interval `(1, oo)`, where the positive branch
//! `P_n^m(x) = (x^2-1)^{m/2} (d/dx)^m P_n(x)` is used. The cut phase is the
//! convention that makes the explicit monogenic formulas elsewhere in this
//! crate agree with the Dirac-derivative construction; the exterior branch is
//! validated by the closed-form norm cross-checks producing positive norms.
//!
//! Values are exact rationals whenever the square-root factor disappears:
//! even order, or products of two functions of the same order.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{int, rat, Rational};

/// Evaluation interval for an associated Legendre function.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Regime {
    /// x in [-1, 1], Condon-Shortley phase `(-1)^m`.
    Cut,
    /// x in (1, oo), positive branch of `(x^2-1)^{m/2}`.
    Exterior,
}

/// Coefficients of the Legendre polynomial `P_n` (index = power of x).
pub fn legendre_coefficients(n: u32) -> Vec<Rational> {
    // (n+1) P_{n+1} = (2n+1) x P_n - n P_{n-1}
    let mut prev = vec![Rational::one()]; // P_0
    if n == 0 {
        return prev;
    }
    let mut cur = vec![Rational::zero(), Rational::one()]; // P_1
    for k in 1..n {
        let mut next = vec![Rational::zero(); k as usize + 2];
        let a = rat(2 * k as i64 + 1, k as i64 + 1);
        let b = rat(k as i64, k as i64 + 1);
        for (i, c) in cur.iter().enumerate() {
            next[i + 1] += &a * c;
        }
        for (i, c) in prev.iter().enumerate() {
            next[i] -= &b * c;
        }
        prev = cur;
        cur = next;
    }
    cur
}

/// Coefficients of `(d/dx)^m P_n`.
pub fn legendre_derivative_coefficients(n: u32, m: u32) -> Vec<Rational> {
    let mut coeffs = legendre_coefficients(n);
    for _ in 0..m {
        coeffs = upoly_derivative(&coeffs);
    }
    coeffs
}

fn check_index(n: u32, m: u32) -> Result<()> {
    if m > n {
        return Err(Error::InvalidIndex { n, m, context: "associated Legendre needs 0 <= m <= n" });
    }
    Ok(())
}

/// Exact `P_n^m(x)` for even `m` (the square-root factor is a polynomial).
pub fn assoc_legendre_exact(n: u32, m: u32, x: &Rational, regime: Regime) -> Result<Rational> {
    check_index(n, m)?;
    if !m.is_multiple_of(2) {
        return Err(Error::InvalidIndex {
            n,
            m,
            context: "odd order is irrational at generic x; use the f64 or product form",
        });
    }
    let d = upoly_eval(&legendre_derivative_coefficients(n, m), x);
    let one = Rational::one();
    let factor_base = match regime {
        Regime::Cut => &one - &(x * x),
        Regime::Exterior => x * x - &one,
    };
    let mut factor = Rational::one();
    for _ in 0..(m / 2) {
        factor *= &factor_base;
    }
    // Condon-Shortley phase (-1)^m is +1 here since m is even.
    Ok(d * factor)
}

/// Exact product `P_n^m(x) * P_k^m(x)`: the `(1 -+ x^2)^{m/2}` factors pair up
/// for any order, so the product is rational at rational `x`.
pub fn assoc_legendre_product(n: u32, k: u32, m: u32, x: &Rational, regime: Regime) -> Result<Rational> {
    let coeffs = assoc_legendre_product_coefficients(n, k, m, regime)?;
    Ok(upoly_eval(&coeffs, x))
}

/// Polynomial coefficients of the product `P_n^m(x) P_k^m(x)` in `x`.
///
/// On the cut the two Condon-Shortley phases cancel; on the exterior interval
/// there is no phase. Either way the result is
/// `(1 -+ x^2)^m (d^m P_n)(x) (d^m P_k)(x)`.
pub fn assoc_legendre_product_coefficients(n: u32, k: u32, m: u32, regime: Regime) -> Result<Vec<Rational>> {
    check_index(n, m)?;
    check_index(k, m)?;
    let dn = legendre_derivative_coefficients(n, m);
    let dk = legendre_derivative_coefficients(k, m);
    let base = match regime {
        Regime::Cut => vec![int(1), int(0), int(-1)],      // 1 - x^2
        Regime::Exterior => vec![int(-1), int(0), int(1)], // x^2 - 1
    };
    let mut out = upoly_mul(&dn, &dk);
    for _ in 0..m {
        out = upoly_mul(&out, &base);
    }
    Ok(out)
}

/// Floating-point `P_n^m(x)` in the requested regime.
pub fn assoc_legendre_f64(n: u32, m: u32, x: f64, regime: Regime) -> Result<f64> {
    check_index(n, m)?;
    use num_traits::ToPrimitive;
    let coeffs = legendre_derivative_coefficients(n, m);
    let mut d = 0.0;
    for c in coeffs.iter().rev() {
        d = d * x + c.to_f64().expect("legendre coefficient fits in f64");
    }
    let (phase, base) = match regime {
        Regime::Cut => (if m.is_multiple_of(2) { 1.0 } else { -1.0 }, 1.0 - x * x),
        Regime::Exterior => (1.0, x * x - 1.0),
    };
    Ok(phase * base.max(0.0).powf(m as f64 / 2.0) * d)
}

// --- small univariate-polynomial helpers (coefficients by ascending power) ---

pub(crate) fn upoly_eval(coeffs: &[Rational], x: &Rational) -> Rational {
    let mut acc = Rational::zero();
    for c in coeffs.iter().rev() {
        acc = acc * x + c;
    }
    acc
}

pub(crate) fn upoly_mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, ca) in a.iter().enumerate() {
        if ca.is_zero() {
            continue;
        }
        for (j, cb) in b.iter().enumerate() {
            out[i + j] += ca * cb;
        }
    }
    out
}

pub(crate) fn upoly_derivative(a: &[Rational]) -> Vec<Rational> {
    if a.len() <= 1 {
        return Vec::new();
    }
    a.iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| c * int(i as i64))
        .collect()
}

/// Exact definite integral of a univariate polynomial over `[lo, hi]`.
pub(crate) fn upoly_integrate(a: &[Rational], lo: &Rational, hi: &Rational) -> Rational {
    let antiderivative: Vec<Rational> = std::iter::once(Rational::zero())
        .chain(a.iter().enumerate().map(|(i, c)| c / int(i as i64 + 1)))
        .collect();
    upoly_eval(&antiderivative, hi) - upoly_eval(&antiderivative, lo)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::factorial_rat;

    // Independent Rodrigues-formula oracle:
    // P_n = (1 / 2^n n!) (d/dx)^n (x^2 - 1)^n.
    fn rodrigues(n: u32) -> Vec<Rational> {
        let base = vec![int(-1), int(0), int(1)];
        let mut pow = vec![int(1)];
        for _ in 0..n {
            pow = upoly_mul(&pow, &base);
        }
        for _ in 0..n {
            pow = upoly_derivative(&pow);
        }
        let scale = (factorial_rat(n) * pochhammer_two_pow(n)).recip();
        pow.iter().map(|c| c * &scale).collect()
    }

    fn pochhammer_two_pow(n: u32) -> Rational {
        let mut acc = Rational::one();
        for _ in 0..n {
            acc *= int(2);
        }
        acc
    }

    #[test]
    fn recurrence_matches_rodrigues_oracle() {
        for n in 0..=11 {
            assert_eq!(legendre_coefficients(n), rodrigues(n), "P_{}", n);
        }
    }

    #[test]
    fn low_degree_values() {
        // P_0^0 = 1 everywhere
        assert_eq!(assoc_legendre_exact(0, 0, &rat(2, 7), Regime::Cut).unwrap(), int(1));
        // P_2^0(x) = (3x^2 - 1)/2, so P_2(1) = 1
        assert_eq!(assoc_legendre_exact(2, 0, &int(1), Regime::Cut).unwrap(), int(1));
        assert_eq!(
            assoc_legendre_exact(2, 0, &rat(1, 2), Regime::Cut).unwrap(),
            rat(-1, 8)
        );
    }

    #[test]
    fn invalid_order_is_rejected() {
        assert!(assoc_legendre_exact(2, 3, &int(0), Regime::Cut).is_err());
        assert!(assoc_legendre_f64(1, 2, 0.5, Regime::Cut).is_err());
    }

    #[test]
    fn condon_shortley_phase_on_cut() {
        // P_2^1(0) = 0 and P_2^1 < 0 on (0,1) with the chosen phase
        assert_eq!(assoc_legendre_f64(2, 1, 0.0, Regime::Cut).unwrap(), 0.0);
        let v = assoc_legendre_f64(2, 1, 0.5, Regime::Cut).unwrap();
        let expect = -3.0 * 0.5 * (1.0f64 - 0.25).sqrt();
        assert!((v - expect).abs() < 1e-14);
        assert!(v < 0.0);
    }

    #[test]
    fn exterior_branch_is_positive() {
        // P_1^1(x) = sqrt(x^2-1) > 0 on (1, oo)
        let v = assoc_legendre_f64(1, 1, 2.0, Regime::Exterior).unwrap();
        assert!((v - 3.0f64.sqrt()).abs() < 1e-14);
    }

    #[test]
    fn product_form_is_exact_for_odd_order() {
        // P_1^1(x) P_3^1(x) on (1, oo) = (x^2-1) * (15x^2-3)/2
        let x = rat(3, 2);
        let got = assoc_legendre_product(1, 3, 1, &x, Regime::Exterior).unwrap();
        let x2 = &x * &x;
        let expect = (&x2 - &int(1)) * (x2.clone() * int(15) - int(3)) / int(2);
        assert_eq!(got, expect);
        // and it matches the f64 route
        use num_traits::ToPrimitive;
        let f = assoc_legendre_f64(1, 1, 1.5, Regime::Exterior).unwrap()
            * assoc_legendre_f64(3, 1, 1.5, Regime::Exterior).unwrap();
        assert!((f - got.to_f64().unwrap()).abs() < 1e-12);
    }

    #[test]
    fn definite_integration_is_exact() {
        // int_1^2 (3x^2 - 1) dx = [x^3 - x]_1^2 = 6
        let p = vec![int(-1), int(0), int(3)];
        assert_eq!(upoly_integrate(&p, &int(1), &int(2)), int(6));
    }
}
