//! Solid spherical and spheroidal harmonics `U`, and the Garabedian
//! harmonics `V`, as exact polynomials.
//!
//! The coaxial spheroids are parameterized by `t = mu^2 < 1`: `t > 0` is
//! prolate, `t = 0` the unit ball, `t < 0` oblate (imaginary `mu`). Only even
//! powers of `mu` occur in any implemented formula, so `t` is the single
//! parameter and the prolate/ball/oblate cases share one exact code path.
//!
//! With `r = |x|` and the axis along `x0`, the classical solid spherical
//! harmonics are
//! `U_{n,m}^{+}[0] = r^n P_n^m(x0/r) cos(m phi)`,
//! `U_{n,m}^{-}[0] = r^n P_n^m(x0/r) sin(m phi)`,
//! with the Condon-Shortley phase in `P_n^m` (see [`crate::legendre`]).
//! The spheroidal `U_{n,m}[t]` is the finite combination
//! `sum_k c_{n,m,k} t^k U_{n-2k,m}[0]` (see [`crate::convert::coef_u_to_u`]),
//! and the Garabedian harmonic is `V_{n,m}[t] = d/dx0 U_{n+1,m}[t]`.

use std::fmt;

use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::convert::coef_u_to_u;
use crate::error::{Error, Result};
use crate::exact::{factorial_rat, int, pochhammer, rat, HalfInteger, Rational};
use crate::legendre::{assoc_legendre_f64, legendre_derivative_coefficients, Regime};
use crate::poly::Monomial;
use crate::Poly;

/// Angular parity: `+` carries `cos(m phi)`, `-` carries `sin(m phi)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Parity {
    Plus,
    Minus,
}

impl Parity {
    pub fn flip(self) -> Self {
        match self {
            Parity::Plus => Parity::Minus,
            Parity::Minus => Parity::Plus,
        }
    }

    /// +1 for `+`, -1 for `-`; handy when a formula carries `-+`/`+-` signs.
    pub fn sign(self) -> i64 {
        match self {
            Parity::Plus => 1,
            Parity::Minus => -1,
        }
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Parity::Plus => write!(f, "+"),
            Parity::Minus => write!(f, "-"),
        }
    }
}

impl std::str::FromStr for Parity {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "+" | "plus" => Ok(Parity::Plus),
            "-" | "minus" => Ok(Parity::Minus),
            other => Err(Error::UnsupportedFamily(format!("parity '{}'", other))),
        }
    }
}

/// Index of a solid harmonic `U_{n,m}^{parity}`: `0 <= m <= n`, and `-`
/// requires `m >= 1` (the `sin(0 phi)` element is identically zero).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HarmonicIndex {
    n: u32,
    m: u32,
    parity: Parity,
}

impl HarmonicIndex {
    pub fn new(n: u32, m: u32, parity: Parity) -> Result<Self> {
        if m > n {
            return Err(Error::InvalidIndex { n, m, context: "harmonic index needs m <= n" });
        }
        if m == 0 && parity == Parity::Minus {
            return Err(Error::MinusParityZeroOrder { n });
        }
        Ok(HarmonicIndex { n, m, parity })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn parity(&self) -> Parity {
        self.parity
    }
}

impl fmt::Display for HarmonicIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(n={}, m={}, {})", self.n, self.m, self.parity)
    }
}

/// Index of a Garabedian harmonic `V_{n,m}` or basic monogenic `X_{n,m}`:
/// `0 <= m <= n + 1`, `-` requires `m >= 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MonogenicIndex {
    n: u32,
    m: u32,
    parity: Parity,
}

impl MonogenicIndex {
    pub fn new(n: u32, m: u32, parity: Parity) -> Result<Self> {
        if m > n + 1 {
            return Err(Error::InvalidIndex { n, m, context: "index needs m <= n + 1" });
        }
        if m == 0 && parity == Parity::Minus {
            return Err(Error::MinusParityZeroOrder { n });
        }
        Ok(MonogenicIndex { n, m, parity })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn parity(&self) -> Parity {
        self.parity
    }
}

impl fmt::Display for MonogenicIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(n={}, m={}, {})", self.n, self.m, self.parity)
    }
}

/// Spheroid eccentricity parameter `t = mu^2 < 1`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SpheroidParam {
    t: Rational,
}

impl SpheroidParam {
    pub fn new(t: Rational) -> Result<Self> {
        if t >= Rational::one() {
            return Err(Error::InvalidParameter { t });
        }
        Ok(SpheroidParam { t })
    }

    pub fn ball() -> Self {
        SpheroidParam { t: Rational::zero() }
    }

    pub fn from_ints(p: i64, q: i64) -> Result<Self> {
        Self::new(rat(p, q))
    }

    pub fn t(&self) -> &Rational {
        &self.t
    }

    pub fn is_ball(&self) -> bool {
        self.t.is_zero()
    }

    pub fn is_prolate(&self) -> bool {
        self.t.is_positive()
    }

    /// `1 - t`, the square of the minor semi-axis.
    pub fn minor_semiaxis_sq(&self) -> Rational {
        Rational::one() - &self.t
    }

    /// Exact `mu = sqrt(t)`, when rational (prolate only).
    pub fn rational_mu(&self) -> Result<Rational> {
        crate::exact::rational_sqrt(&self.t).ok_or_else(|| Error::IrrationalMu { t: self.t.clone() })
    }
}

impl fmt::Display for SpheroidParam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.t)
    }
}

/// `Re (x1 + i x2)^m` for `+`, `Im (x1 + i x2)^m` for `-`:
/// the polynomial carrying `rho^m cos(m phi)` / `rho^m sin(m phi)`.
pub fn angular_factor(m: u32, parity: Parity) -> Poly {
    let mut re = Poly::one();
    let mut im = Poly::zero();
    let x1 = Poly::var(1);
    let x2 = Poly::var(2);
    for _ in 0..m {
        let new_re = &re * &x1 - &(&im * &x2);
        let new_im = &re * &x2 + &(&im * &x1);
        re = new_re;
        im = new_im;
    }
    match parity {
        Parity::Plus => re,
        Parity::Minus => im,
    }
}

/// Classical solid spherical harmonic `U_{n,m}^{parity}[0]` as an exact
/// polynomial of degree `n`.
pub fn spherical_solid_harmonic(idx: HarmonicIndex) -> Poly {
    let (n, m) = (idx.n, idx.m);
    // r^{n-m} (d^m P_n)(x0/r) expands over even powers of r^2.
    let deriv = legendre_derivative_coefficients(n, m);
    let r2 = Poly::var(0) * Poly::var(0) + Poly::var(1) * Poly::var(1) + Poly::var(2) * Poly::var(2);
    let mut zonal = Poly::zero();
    for (p, coeff) in deriv.iter().enumerate() {
        if coeff.is_zero() {
            continue;
        }
        let half = (n - m - p as u32) / 2;
        debug_assert_eq!((n - m - p as u32) % 2, 0);
        let mut term = Poly::term(Monomial([p as u32, 0, 0]), coeff.clone());
        for _ in 0..half {
            term = &term * &r2;
        }
        zonal += term;
    }
    let phase = if m % 2 == 0 { int(1) } else { int(-1) };
    (&zonal * &angular_factor(m, idx.parity)).scale(&phase)
}

/// Solid spheroidal harmonic
/// `U_{n,m}[t] = sum_{0 <= 2k <= n-m} c_{n,m,k} t^k U_{n-2k,m}[0]`,
/// normalized so that `t = 0` gives the classical spherical harmonic.
pub fn spheroidal_solid_harmonic(idx: HarmonicIndex, sp: &SpheroidParam) -> Poly {
    let (n, m) = (idx.n, idx.m);
    let mut acc = Poly::zero();
    let mut t_pow = Rational::one();
    for k in 0..=((n - m) / 2) {
        let inner = HarmonicIndex::new(n - 2 * k, m, idx.parity).expect("index stays valid");
        let c = coef_u_to_u(n, m, k) * &t_pow;
        acc += spherical_solid_harmonic(inner).scale(&c);
        t_pow *= sp.t();
    }
    acc
}

/// Garabedian spheroidal harmonic `V_{n,m}[t] = d/dx0 U_{n+1,m}[t]`.
///
/// Defined for `0 <= m <= n + 1`; the top order `m = n + 1` gives the zero
/// polynomial because `U_{n+1,n+1}` is free of `x0`.
pub fn garabedian_harmonic(idx: MonogenicIndex, sp: &SpheroidParam) -> Poly {
    let up = HarmonicIndex::new(idx.n + 1, idx.m, idx.parity).expect("m <= n+1 lifts to m <= n'");
    spheroidal_solid_harmonic(up, sp).partial_derivative(0)
}

/// `V_{n,m}^{parity}[t]`, treating out-of-range indices as the zero
/// polynomial (`m > n + 1`, or `m = 0` with parity `-`).
pub(crate) fn garabedian_or_zero(n: u32, m: u32, parity: Parity, sp: &SpheroidParam) -> Poly {
    if m > n + 1 || (m == 0 && parity == Parity::Minus) {
        return Poly::zero();
    }
    garabedian_harmonic(MonogenicIndex::new(n, m, parity).expect("checked"), sp)
}

/// All valid harmonic indices with degree `n <= max_degree`.
pub fn harmonic_indices(max_degree: u32) -> Vec<HarmonicIndex> {
    let mut out = Vec::new();
    for n in 0..=max_degree {
        for m in 0..=n {
            out.push(HarmonicIndex::new(n, m, Parity::Plus).unwrap());
            if m >= 1 {
                out.push(HarmonicIndex::new(n, m, Parity::Minus).unwrap());
            }
        }
    }
    out
}

/// All valid Garabedian/monogenic indices with `n <= max_degree`.
pub fn monogenic_indices(max_degree: u32) -> Vec<MonogenicIndex> {
    let mut out = Vec::new();
    for n in 0..=max_degree {
        for m in 0..=(n + 1) {
            out.push(MonogenicIndex::new(n, m, Parity::Plus).unwrap());
            if m >= 1 {
                out.push(MonogenicIndex::new(n, m, Parity::Minus).unwrap());
            }
        }
    }
    out
}

/// Cartesian image of prolate spheroidal coordinates `(u, v, phi)`.
pub fn spheroidal_point(sp: &SpheroidParam, u: f64, v: f64, phi: f64) -> Result<[f64; 3]> {
    if !sp.is_prolate() {
        return Err(Error::UnsupportedRegime {
            t: sp.t().clone(),
            context: "spheroidal coordinates",
        });
    }
    let mu = sp.t().to_f64().expect("t fits in f64").sqrt();
    Ok([
        mu * u.cos() * v.cosh(),
        mu * u.sin() * v.sinh() * phi.cos(),
        mu * u.sin() * v.sinh() * phi.sin(),
    ])
}

/// Evaluate `U_{n,m}^{parity}[t]` through the prolate coordinate
/// factorization
/// `(n-m)!/(2n-1)!! * mu^n P_n^m(cos u) P_n^m(cosh v) Phi_m(phi)`,
/// as a floating cross-check of the exact polynomial path.
pub fn eval_via_coords(
    idx: HarmonicIndex,
    sp: &SpheroidParam,
    u: f64,
    v: f64,
    phi: f64,
) -> Result<f64> {
    if !sp.is_prolate() {
        return Err(Error::UnsupportedRegime {
            t: sp.t().clone(),
            context: "coordinate-path evaluation",
        });
    }
    let (n, m) = (idx.n, idx.m);
    // (n-m)! / (2^n (1/2)_n) with 2^n (1/2)_n = (2n-1)!!
    let scale = factorial_rat(n - m) / (pochhammer(HalfInteger::new(1), n) * pow2(n));
    let mu = sp.t().to_f64().expect("t fits in f64").sqrt();
    let p_cut = assoc_legendre_f64(n, m, u.cos(), Regime::Cut)?;
    let p_ext = assoc_legendre_f64(n, m, v.cosh(), Regime::Exterior)?;
    let ang = match idx.parity {
        Parity::Plus => (m as f64 * phi).cos(),
        Parity::Minus => (m as f64 * phi).sin(),
    };
    Ok(scale.to_f64().unwrap() * mu.powi(n as i32) * p_cut * p_ext * ang)
}

fn pow2(n: u32) -> Rational {
    let mut acc = Rational::one();
    for _ in 0..n {
        acc *= int(2);
    }
    acc
}
