//! Exact L2 inner products, norms, and Gram matrices over a spheroid.
//!
//! Every integral reduces to closed-form monomial integrals over the unit
//! ball: rescaling `x1, x2` by `s = sqrt(1-t)` maps the spheroid onto the
//! ball and multiplies a monomial integral by `s^{b+c+2}`, an integer power
//! of `1-t` because odd exponents integrate to zero anyway. Inner products
//! therefore carry exactly one factor of pi, kept symbolic in
//! [`PiRational`], and every orthogonality claim becomes a decidable
//! identity over the rationals.

use std::fmt;
use std::ops::{Add, AddAssign, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::{double_factorial, int, pochhammer, HalfInteger, Rational};
use crate::harmonics::{Parity, SpheroidParam};
use crate::legendre::{assoc_legendre_product_coefficients, upoly_integrate, Regime};
use crate::rquat::QuatPoly;
use crate::{Poly, QPoly};

/// An exact inner-product value `coeff * pi`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct PiRational {
    coeff: Rational,
}

impl PiRational {
    pub fn new(coeff: Rational) -> Self {
        PiRational { coeff }
    }

    pub fn zero() -> Self {
        PiRational::new(Rational::zero())
    }

    /// The rational multiplier of pi.
    pub fn coeff(&self) -> &Rational {
        &self.coeff
    }

    pub fn is_zero(&self) -> bool {
        self.coeff.is_zero()
    }

    pub fn is_positive(&self) -> bool {
        self.coeff.is_positive()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        PiRational::new(&self.coeff * c)
    }

    /// Exact ratio of two values; the pi factors cancel.
    pub fn ratio(&self, other: &PiRational) -> Rational {
        &self.coeff / &other.coeff
    }
}

impl Add for PiRational {
    type Output = PiRational;
    fn add(self, rhs: Self) -> Self {
        PiRational::new(self.coeff + rhs.coeff)
    }
}

impl AddAssign<&PiRational> for PiRational {
    fn add_assign(&mut self, rhs: &Self) {
        self.coeff += &rhs.coeff;
    }
}

impl Sub for PiRational {
    type Output = PiRational;
    fn sub(self, rhs: Self) -> Self {
        PiRational::new(self.coeff - rhs.coeff)
    }
}

impl Neg for PiRational {
    type Output = PiRational;
    fn neg(self) -> Self {
        PiRational::new(-self.coeff)
    }
}

impl fmt::Display for PiRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})*pi", self.coeff)
    }
}

/// Exact integral of `x0^a x1^b x2^c` over the spheroid with parameter `t`.
///
/// Zero when any exponent is odd; otherwise
/// `(1-t)^{(b+c+2)/2}` times the even-monomial ball integral
/// `4 pi (a-1)!! (b-1)!! (c-1)!! / ((a+b+c+1)!! (a+b+c+3))`.
pub fn monomial_integral(a: u32, b: u32, c: u32, sp: &SpheroidParam) -> PiRational {
    if a % 2 == 1 || b % 2 == 1 || c % 2 == 1 {
        return PiRational::zero();
    }
    let num = int(4)
        * Rational::from_integer(double_factorial(a as i64 - 1))
        * Rational::from_integer(double_factorial(b as i64 - 1))
        * Rational::from_integer(double_factorial(c as i64 - 1));
    let den = Rational::from_integer(double_factorial((a + b + c + 1) as i64))
        * int((a + b + c + 3) as i64);
    let mut scale = Rational::one();
    let s2 = sp.minor_semiaxis_sq();
    for _ in 0..(b + c + 2) / 2 {
        scale *= &s2;
    }
    PiRational::new(num / den * scale)
}

/// Exact integral of a scalar polynomial over the spheroid.
pub fn integrate_poly(p: &Poly, sp: &SpheroidParam) -> PiRational {
    let mut acc = PiRational::zero();
    for (mono, coeff) in p.terms() {
        let cell = monomial_integral(mono.exponent(0), mono.exponent(1), mono.exponent(2), sp);
        acc += &cell.scale(coeff);
    }
    acc
}

/// `<f, g>_[t] = int_{Omega_t} Sc(conj(f) g) dV`, exact.
///
/// For components `f = f0 + f1 e1 + f2 e2 + f3 e3` the scalar part of
/// `conj(f) g` is `f0 g0 + f1 g1 + f2 g2 + f3 g3`.
pub fn inner_product(f: &QPoly, g: &QPoly, sp: &SpheroidParam) -> PiRational {
    let mut acc = PiRational::zero();
    for i in 0..4 {
        acc += &integrate_poly(&(f.component(i) * g.component(i)), sp);
    }
    acc
}

/// Inner product of two scalar polynomials.
pub fn inner_product_scalar(f: &Poly, g: &Poly, sp: &SpheroidParam) -> PiRational {
    integrate_poly(&(f * g), sp)
}

/// `<f, f>_[t]`.
pub fn norm_sq(f: &QPoly, sp: &SpheroidParam) -> PiRational {
    inner_product(f, f, sp)
}

/// Symmetric matrix of pairwise inner products.
#[derive(Debug, Clone)]
pub struct GramMatrix {
    entries: Vec<Vec<PiRational>>,
}

impl GramMatrix {
    /// Gram matrix of quaternion-valued functions over the spheroid.
    pub fn build(funcs: &[QPoly], sp: &SpheroidParam) -> Self {
        let n = funcs.len();
        let mut entries = vec![vec![PiRational::zero(); n]; n];
        for i in 0..n {
            for j in i..n {
                let v = inner_product(&funcs[i], &funcs[j], sp);
                entries[i][j] = v.clone();
                entries[j][i] = v;
            }
        }
        GramMatrix { entries }
    }

    /// Gram matrix of scalar functions.
    pub fn build_scalar(funcs: &[Poly], sp: &SpheroidParam) -> Self {
        let lifted: Vec<QPoly> = funcs.iter().map(|p| QuatPoly::from_scalar(p.clone())).collect();
        Self::build(&lifted, sp)
    }

    pub fn size(&self) -> usize {
        self.entries.len()
    }

    pub fn entry(&self, i: usize, j: usize) -> &PiRational {
        &self.entries[i][j]
    }

    /// First nonzero off-diagonal entry, if any.
    pub fn off_diagonal_witness(&self) -> Option<(usize, usize, PiRational)> {
        for i in 0..self.size() {
            for j in (i + 1)..self.size() {
                if !self.entries[i][j].is_zero() {
                    return Some((i, j, self.entries[i][j].clone()));
                }
            }
        }
        None
    }

    pub fn is_diagonal(&self) -> bool {
        self.off_diagonal_witness().is_none()
    }

    pub fn diagonal_is_positive(&self) -> bool {
        (0..self.size()).all(|i| self.entries[i][i].is_positive())
    }

    /// Exact rank over the rationals (the common pi factor divides out).
    pub fn rank(&self) -> usize {
        let m: Vec<Vec<Rational>> = self
            .entries
            .iter()
            .map(|row| row.iter().map(|e| e.coeff().clone()).collect())
            .collect();
        rational_rank(m)
    }
}

/// Rank of a rational matrix by exact Gaussian elimination.
pub fn rational_rank(mut m: Vec<Vec<Rational>>) -> usize {
    let rows = m.len();
    if rows == 0 {
        return 0;
    }
    let cols = m[0].len();
    let mut rank = 0;
    let mut pivot_row = 0;
    for col in 0..cols {
        let Some(src) = (pivot_row..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(pivot_row, src);
        let inv = m[pivot_row][col].clone().recip();
        for c in col..cols {
            m[pivot_row][c] = &m[pivot_row][c] * &inv;
        }
        for r in 0..rows {
            if r != pivot_row && !m[r][col].is_zero() {
                let factor = m[r][col].clone();
                for c in col..cols {
                    let delta = &factor * &m[pivot_row][c];
                    m[r][c] = &m[r][c] - &delta;
                }
            }
        }
        rank += 1;
        pivot_row += 1;
        if pivot_row == rows {
            break;
        }
    }
    rank
}

/// Closed-form `||V_{n,m}||^2_[t]` for prolate `t` with rational
/// `mu = sqrt(t)`:
/// `(1 + delta_{0,m}) kappa_{n,m} pi mu^{2n+3} int_1^{1/mu} P_n^m P_{n+2}^m / 2`
/// with `kappa = (n+m+1)(n+m+1)!(n-m+2)! / (2^{2n+1} (1/2)_{n+1} (1/2)_{n+2})`.
/// The integrand pairs the `(tau^2-1)^{m/2}` factors, so it is a polynomial
/// and the integral is exact. The value equals the direct volume integral of
/// `V_{n,m}^2` bit-exactly; both parities have the same norm.
pub fn garabedian_norm_closed_form(
    n: u32,
    m: u32,
    parity: Parity,
    sp: &SpheroidParam,
) -> Result<PiRational> {
    if m > n + 1 {
        return Err(Error::InvalidIndex { n, m, context: "Garabedian norm needs m <= n+1" });
    }
    if m == 0 && parity == Parity::Minus {
        return Err(Error::MinusParityZeroOrder { n });
    }
    if !sp.is_prolate() {
        return Err(Error::UnsupportedRegime {
            t: sp.t().clone(),
            context: "closed-form Garabedian norm",
        });
    }
    if m == n + 1 {
        return Ok(PiRational::zero());
    }
    let mu = sp.rational_mu()?;
    let kappa_num = int((n + m + 1) as i64)
        * crate::exact::factorial_rat(n + m + 1)
        * crate::exact::factorial_rat(n - m + 2);
    let mut two_pow = Rational::one();
    for _ in 0..(2 * n + 1) {
        two_pow *= int(2);
    }
    let kappa = kappa_num
        / (two_pow
            * pochhammer(HalfInteger::new(1), n + 1)
            * pochhammer(HalfInteger::new(1), n + 2));
    let integrand = assoc_legendre_product_coefficients(n, n + 2, m, Regime::Exterior)?;
    let integral = upoly_integrate(&integrand, &Rational::one(), &mu.clone().recip());
    let mut mu_pow = Rational::one();
    for _ in 0..(2 * n + 3) {
        mu_pow *= &mu;
    }
    let delta = if m == 0 { int(2) } else { int(1) };
    Ok(PiRational::new(delta * kappa * mu_pow * integral / int(2)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;
    use crate::harmonics::{
        garabedian_harmonic, monogenic_indices, spheroidal_solid_harmonic, HarmonicIndex,
        MonogenicIndex,
    };
    use crate::rquat::dirac_scalar;

    fn params() -> Vec<SpheroidParam> {
        [rat(0, 1), rat(1, 4), rat(9, 16), rat(-1, 1), rat(-3, 1)]
            .into_iter()
            .map(|t| SpheroidParam::new(t).unwrap())
            .collect()
    }

    #[test]
    fn ball_monomial_integrals() {
        let ball = SpheroidParam::ball();
        assert_eq!(monomial_integral(0, 0, 0, &ball), PiRational::new(rat(4, 3)));
        assert_eq!(monomial_integral(2, 0, 0, &ball), PiRational::new(rat(4, 15)));
        assert_eq!(monomial_integral(4, 0, 0, &ball), PiRational::new(rat(4, 35)));
        assert_eq!(monomial_integral(2, 2, 0, &ball), PiRational::new(rat(4, 105)));
        assert!(monomial_integral(1, 0, 0, &ball).is_zero());
        assert!(monomial_integral(2, 3, 2, &ball).is_zero());
    }

    // Independent oracle: surface x radial factorization of the ball integral,
    // with the surface moment computed by the beta-function product formula.
    fn ball_integral_oracle(a: u32, b: u32, c: u32) -> Rational {
        if a % 2 == 1 || b % 2 == 1 || c % 2 == 1 {
            return Rational::zero();
        }
        // int_{S^2} x^a y^b z^c dS / (4 pi) = (a-1)!!(b-1)!!(c-1)!!/(a+b+c+1)!!
        let surface = Rational::from_integer(double_factorial(a as i64 - 1))
            * Rational::from_integer(double_factorial(b as i64 - 1))
            * Rational::from_integer(double_factorial(c as i64 - 1))
            / Rational::from_integer(double_factorial((a + b + c + 1) as i64));
        // radial: int_0^1 r^{a+b+c+2} dr
        surface * int(4) / int((a + b + c + 3) as i64)
    }

    #[test]
    fn monomial_integral_matches_oracle_and_scaling() {
        let ball = SpheroidParam::ball();
        for a in 0..6 {
            for b in 0..6 {
                for c in 0..5 {
                    assert_eq!(
                        monomial_integral(a, b, c, &ball).coeff().clone(),
                        ball_integral_oracle(a, b, c)
                    );
                }
            }
        }
        // scaling rule at t = 1/4: (0,2,0) -> (3/4)^2 * 4/15
        let sp = SpheroidParam::from_ints(1, 4).unwrap();
        assert_eq!(monomial_integral(0, 2, 0, &sp), PiRational::new(rat(3, 20)));
    }

    #[test]
    fn inner_product_basics() {
        let ball = SpheroidParam::ball();
        let one = QuatPoly::from_scalar(Poly::one());
        assert_eq!(inner_product(&one, &one, &ball), PiRational::new(rat(4, 3)));
        for sp in params() {
            let x0 = QuatPoly::from_scalar(Poly::var(0));
            let x1 = QuatPoly::from_scalar(Poly::var(1));
            assert!(inner_product(&x0, &x1, &sp).is_zero());
        }
        // <X_{1,0}, conj(X_{1,0})>_[0] != 0: monogenics and antimonogenics
        // are not mutually orthogonal in general
        let sp = SpheroidParam::ball();
        let u20 = spheroidal_solid_harmonic(HarmonicIndex::new(2, 0, Parity::Plus).unwrap(), &sp);
        let x10 = dirac_scalar(&u20, true);
        let v = inner_product(&x10, &x10.conjugate(), &sp);
        assert_eq!(v, PiRational::new(rat(8, 15)));
    }

    #[test]
    fn positivity_of_norms() {
        for sp in params() {
            for idx in monogenic_indices(4) {
                let v = garabedian_harmonic(idx, &sp);
                if v.is_zero() {
                    continue;
                }
                let q = QuatPoly::from_scalar(v);
                assert!(norm_sq(&q, &sp).is_positive(), "norm at {} t={}", idx, sp);
            }
        }
    }

    #[test]
    fn plus_minus_norms_agree() {
        for sp in params() {
            for n in 0..=4u32 {
                for m in 1..=n + 1 {
                    let p = garabedian_harmonic(
                        MonogenicIndex::new(n, m, Parity::Plus).unwrap(),
                        &sp,
                    );
                    let q = garabedian_harmonic(
                        MonogenicIndex::new(n, m, Parity::Minus).unwrap(),
                        &sp,
                    );
                    assert_eq!(
                        inner_product_scalar(&p, &p, &sp),
                        inner_product_scalar(&q, &q, &sp),
                        "norms differ at ({}, {})",
                        n,
                        m
                    );
                }
            }
        }
    }

    #[test]
    fn rank_of_simple_matrices() {
        let m = vec![
            vec![int(1), int(2), int(3)],
            vec![int(2), int(4), int(6)],
            vec![int(0), int(1), int(1)],
        ];
        assert_eq!(rational_rank(m), 2);
        assert_eq!(rational_rank(vec![vec![int(0); 3]; 3]), 0);
    }

    #[test]
    fn closed_form_norm_cross_check() {
        // dual-path equality for a few hand-picked indices
        for (t, cases) in [
            (rat(1, 4), vec![(0u32, 0u32), (1, 1), (2, 1), (2, 0)]),
            (rat(9, 16), vec![(3, 3), (2, 2), (1, 0)]),
        ] {
            let sp = SpheroidParam::new(t).unwrap();
            for (n, m) in cases {
                let parity = Parity::Plus;
                let closed = garabedian_norm_closed_form(n, m, parity, &sp).unwrap();
                let v = garabedian_harmonic(MonogenicIndex::new(n, m, parity).unwrap(), &sp);
                let direct = inner_product_scalar(&v, &v, &sp);
                assert_eq!(closed, direct, "norm mismatch at ({},{}) t={}", n, m, sp);
            }
        }
    }

    #[test]
    fn closed_form_norm_volume_case() {
        // ||V_{0,0}||^2 = vol(Omega_t) = (4/3) pi (1 - t)
        let sp = SpheroidParam::from_ints(1, 4).unwrap();
        let got = garabedian_norm_closed_form(0, 0, Parity::Plus, &sp).unwrap();
        assert_eq!(got, PiRational::new(rat(4, 3) * rat(3, 4)));
    }

    #[test]
    fn closed_form_norm_rejects_bad_parameters() {
        let oblate = SpheroidParam::from_ints(-1, 1).unwrap();
        assert!(matches!(
            garabedian_norm_closed_form(2, 1, Parity::Plus, &oblate),
            Err(Error::UnsupportedRegime { .. })
        ));
        let irrational = SpheroidParam::from_ints(1, 2).unwrap();
        assert!(matches!(
            garabedian_norm_closed_form(2, 1, Parity::Plus, &irrational),
            Err(Error::IrrationalMu { .. })
        ));
    }

    #[test]
    fn u_family_is_not_l2_orthogonal_off_the_ball() {
        // <U_{0,0}[t], U_{2,0}[t]>_[t] = -(8/45) pi t (1-t): a witness that
        // the U family is only Dirichlet-orthogonal, not L2-orthogonal
        let sp = SpheroidParam::from_ints(1, 4).unwrap();
        let u0 = spheroidal_solid_harmonic(HarmonicIndex::new(0, 0, Parity::Plus).unwrap(), &sp);
        let u2 = spheroidal_solid_harmonic(HarmonicIndex::new(2, 0, Parity::Plus).unwrap(), &sp);
        assert_eq!(
            inner_product_scalar(&u0, &u2, &sp),
            PiRational::new(rat(-1, 30))
        );
    }

    #[test]
    fn parity_annihilation() {
        // any odd exponent pair integrates to zero, for every parameter
        for sp in params() {
            let p = Poly::var(0) * Poly::var(1) * Poly::var(1) * Poly::var(2);
            assert!(integrate_poly(&p, &sp).is_zero());
        }
    }
}
