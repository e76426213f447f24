//! Coefficient families for converting between the harmonic bases of
//! different spheroids, and the basis expansions they induce.
//!
//! Naming follows the direction of the expansion, e.g. [`coef_u_to_u`] are
//! the coefficients expressing `U_{n,m}[t]` in terms of `{U_{n-2k,m}[0]}`,
//! while [`coef_u0_to_umu`] go the other way. All families return exact
//! rationals and are zero outside their stated index range, which keeps the
//! finite sums honest without special cases at call sites. The same
//! coefficients serve the `+` and `-` angular parities.
//!
//! Every closed form here is cross-validated in the test suites against the
//! polynomial identity it encodes, so a typo in one formula cannot silently
//! propagate into another.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{factorial_rat, int, pochhammer, rat, HalfInteger, Rational};
use crate::harmonics::Parity;

/// `c_{n,m,k}`: coefficient of `t^k U_{n-2k,m}[0]` in `U_{n,m}[t]`.
///
/// `(1/2)_{n-k} (n+m-2k+1)_{2k} / ((-4)^k (1/2)_n k!)` for
/// `0 <= m <= n`, `0 <= 2k <= n-m`; zero otherwise.
pub fn coef_u_to_u(n: u32, m: u32, k: u32) -> Rational {
    if m > n || 2 * k > n - m {
        return Rational::zero();
    }
    let num = pochhammer(HalfInteger::new(1), n - k)
        * pochhammer(int((n + m - 2 * k + 1) as i64), 2 * k);
    let den = neg_four_pow(k) * pochhammer(HalfInteger::new(1), n) * factorial_rat(k);
    num / den
}

/// Coefficient of `t^k V_{n-2k,m}[0]` in `V_{n,m}[t]`; equals
/// `c_{n+1,m,k}` because `V` is the `x0`-derivative of `U` one degree up.
pub fn coef_v_to_v(n: u32, m: u32, k: u32) -> Rational {
    coef_u_to_u(n + 1, m, k)
}

/// Coefficient of `t^k U_{n-2k,m}[0]` in `V_{n,m}[t]`:
/// `(n+m-2k+1) * coef_v_to_v(n,m,k)`.
pub fn coef_vhat_to_u0(n: u32, m: u32, k: u32) -> Rational {
    if m > n || 2 * k > n + 1 - m {
        return Rational::zero();
    }
    int((n + m + 1 - 2 * k) as i64) * coef_v_to_v(n, m, k)
}

/// `c0_{n,m,k}`: coefficient of `t^k U_{n-2k,m}[t]` in `U_{n,m}[0]`
/// (the inverse of [`coef_u_to_u`]), nonzero for `0 <= 2k <= n-m`.
pub fn coef_u0_to_umu(n: u32, m: u32, k: u32) -> Rational {
    if m > n || 2 * k > n - m {
        return Rational::zero();
    }
    let num = four_pow(n - 2 * k)
        * int((2 * n - 4 * k + 1) as i64)
        * factorial_rat(n - k)
        * factorial_rat(m + n)
        * pochhammer(HalfInteger::new(1), n - 2 * k);
    let den = factorial_rat(k) * factorial_rat(2 * n - 2 * k + 1) * factorial_rat(n + m - 2 * k);
    num / den
}

/// Coefficient of `t^k V_{n-2k,m}[t]` in `U_{n,m}[0]`:
/// `c0_{n+1,m,k} / (n+m+1)`.
pub fn coef_u0_to_vmu(n: u32, m: u32, k: u32) -> Rational {
    if m > n || 2 * k > n - m {
        return Rational::zero();
    }
    coef_u0_to_umu(n + 1, m, k) / int((n + m + 1) as i64)
}

/// Coefficient of `t^k U_{n-2k,m}[t]` in `V_{n,m}[t]` (same spheroid):
/// `(n+m+1)! (1/2)_{n-2k+1} / (4^k (n+m-2k)! (1/2)_{n+1})`.
pub fn coef_vmu_from_umu(n: u32, m: u32, k: u32) -> Rational {
    if m > n || 2 * k > n - m {
        return Rational::zero();
    }
    let num = factorial_rat(n + m + 1) * pochhammer(HalfInteger::new(1), n - 2 * k + 1);
    let den = four_pow(k) * factorial_rat(n + m - 2 * k) * pochhammer(HalfInteger::new(1), n + 1);
    num / den
}

/// Coefficients of the inverse of [`coef_vmu_from_umu`], which collapses to
/// two terms:
/// `U_{n,m}[t] = V_{n,m}[t]/(n+m+1) - t (n+m)/(4n^2-1) V_{n-2,m}[t]`.
pub fn coef_umu_from_vmu(n: u32, m: u32, k: u32) -> Rational {
    if m > n {
        return Rational::zero();
    }
    match k {
        0 => rat(1, (n + m + 1) as i64),
        1 if n >= 2 => -rat((n + m) as i64, (4 * n * n - 1) as i64),
        _ => Rational::zero(),
    }
}

/// Coefficient of `t^k V_{n-2k,m}[t]` in `V_{n,m}[0]`
/// (inverse of [`coef_v_to_v`]); equals `c0_{n+1,m,k}`.
pub fn coef_v0_from_vmu(n: u32, m: u32, k: u32) -> Rational {
    if m > n || 2 * k > n - m {
        return Rational::zero();
    }
    coef_u0_to_umu(n + 1, m, k)
}

/// The `t`-free part of the cross-spheroid coefficient [`coef_w`]:
/// `(n+m+1)! (1/2)_{n-2k+2} / (4^k k! (n+m-2k+1)! (1/2)_{n-k+2})` for
/// `0 <= 2k <= n-m+2`, zero otherwise. Orders up to `m = n+1` are admitted
/// because the monogenic family extends one order past the harmonics.
pub fn coef_w_gamma(n: u32, m: u32, k: u32) -> Rational {
    let (ni, mi, ki) = (n as i64, m as i64, k as i64);
    if mi > ni + 1 || 2 * ki > ni - mi + 2 || 2 * ki > ni + mi + 1 {
        return Rational::zero();
    }
    let num = factorial_rat(n + m + 1) * pochhammer(HalfInteger::new(1), n + 2 - 2 * k);
    let den = four_pow(k)
        * factorial_rat(k)
        * factorial_rat(n + m + 1 - 2 * k)
        * pochhammer(HalfInteger::new(1), n + 2 - k);
    num / den
}

/// Terminating Gaussian hypergeometric sum
/// `2F1(-k, -n+k-3/2; -n-1/2; z) = sum_{l=0}^{k} (-k)_l (-n+k-3/2)_l / (l! (-n-1/2)_l) z^l`.
///
/// The lower parameter is a negative half-integer, so no denominator
/// Pochhammer ever vanishes; the sum is exact for any rational `z`.
pub fn hypergeom_terminating(k: u32, n: u32, z: &Rational) -> Rational {
    let a = int(-(k as i64));
    let b = HalfInteger::new(2 * (k as i64 - n as i64) - 3).to_rational();
    let c = HalfInteger::new(-2 * (n as i64) - 1).to_rational();
    let mut acc = Rational::zero();
    let mut z_pow = Rational::one();
    for l in 0..=k {
        let term = pochhammer(a.clone(), l) * pochhammer(b.clone(), l)
            / (factorial_rat(l) * pochhammer(c.clone(), l));
        acc += term * &z_pow;
        z_pow *= z;
    }
    acc
}

/// `w_{n,m,k}[t_target, t_source]`: coefficient of `V_{n-2k,m}[t_source]`
/// in `V_{n,m}[t_target]` (and of `X_{n-2k,m}` in `X_{n,m}` one range wider).
///
/// For `t_source != 0` this is the hypergeometric closed form
/// `2F1(-k, -n+k-3/2; -n-1/2; t_target/t_source) * gamma_{n,m,k} * t_source^k`;
/// at `t_source = 0` the limit `coef_v_to_v(n,m,k) * t_target^k` is returned,
/// so conversions from the ball need no special casing by the caller.
pub fn coef_w(n: u32, m: u32, k: u32, t_target: &Rational, t_source: &Rational) -> Rational {
    if t_source.is_zero() {
        return coef_v_to_v(n, m, k) * rational_pow(t_target, k);
    }
    let z = t_target / t_source;
    hypergeom_terminating(k, n, &z) * coef_w_gamma(n, m, k) * rational_pow(t_source, k)
}

/// Coefficient of `t^k U_{n-2k,m}[t_source]` in `U_{n,m}[t_target]`,
/// by composing the expansion through the ball.
pub fn coef_u_cross(n: u32, m: u32, k: u32, t_target: &Rational, t_source: &Rational) -> Rational {
    if m > n || 2 * k > n - m {
        return Rational::zero();
    }
    let mut acc = Rational::zero();
    let mut tt_pow = Rational::one();
    for l in 0..=k {
        let down = coef_u_to_u(n, m, l);
        let back = coef_u0_to_umu(n - 2 * l, m, k - l);
        if !down.is_zero() && !back.is_zero() {
            acc += down * back * &tt_pow * rational_pow(t_source, k - l);
        }
        tt_pow *= t_target;
    }
    acc
}

/// The coefficient families surfaced by the `coeffs` table interface.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CoeffFamily {
    UToU,
    VToV,
    VhatToU0,
    U0ToUmu,
    U0ToVmu,
    VmuFromUmu,
    V0FromVmu,
    W,
}

impl CoeffFamily {
    pub const ALL: [CoeffFamily; 8] = [
        CoeffFamily::UToU,
        CoeffFamily::VToV,
        CoeffFamily::VhatToU0,
        CoeffFamily::U0ToUmu,
        CoeffFamily::U0ToVmu,
        CoeffFamily::VmuFromUmu,
        CoeffFamily::V0FromVmu,
        CoeffFamily::W,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            CoeffFamily::UToU => "u-to-u",
            CoeffFamily::VToV => "v-to-v",
            CoeffFamily::VhatToU0 => "vhat-to-u0",
            CoeffFamily::U0ToUmu => "u0-to-umu",
            CoeffFamily::U0ToVmu => "u0-to-vmu",
            CoeffFamily::VmuFromUmu => "vmu-from-umu",
            CoeffFamily::V0FromVmu => "v0-from-vmu",
            CoeffFamily::W => "w",
        }
    }
}

impl std::str::FromStr for CoeffFamily {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        CoeffFamily::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::UnsupportedFamily(s.to_string()))
    }
}

/// Evaluate one coefficient of a family. The `W` family needs the spheroid
/// pair `(t_target, t_source)`; the others ignore it.
pub fn coefficient(
    family: CoeffFamily,
    n: u32,
    m: u32,
    k: u32,
    t_pair: Option<(&Rational, &Rational)>,
) -> Result<Rational> {
    Ok(match family {
        CoeffFamily::UToU => coef_u_to_u(n, m, k),
        CoeffFamily::VToV => coef_v_to_v(n, m, k),
        CoeffFamily::VhatToU0 => coef_vhat_to_u0(n, m, k),
        CoeffFamily::U0ToUmu => coef_u0_to_umu(n, m, k),
        CoeffFamily::U0ToVmu => coef_u0_to_vmu(n, m, k),
        CoeffFamily::VmuFromUmu => coef_vmu_from_umu(n, m, k),
        CoeffFamily::V0FromVmu => coef_v0_from_vmu(n, m, k),
        CoeffFamily::W => {
            let (tt, ts) = t_pair.ok_or_else(|| {
                Error::UnsupportedFamily("family 'w' needs t-target and t-source".into())
            })?;
            coef_w(n, m, k, tt, ts)
        }
    })
}

/// Basis families subject to cross-spheroid conversion.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BasisFamily {
    U,
    V,
    X,
}

impl std::str::FromStr for BasisFamily {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "U" | "u" => Ok(BasisFamily::U),
            "V" | "v" => Ok(BasisFamily::V),
            "X" | "x" => Ok(BasisFamily::X),
            other => Err(Error::UnsupportedFamily(other.to_string())),
        }
    }
}

/// One term of a basis expansion: `coefficient * <family>_{n,m}^{parity}[t_source]`.
/// The coefficient already contains the `t`-powers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConversionTerm {
    pub n: u32,
    pub m: u32,
    pub parity: Parity,
    pub k: u32,
    pub coefficient: Rational,
}

/// Expand the `(n, m, parity)` element of `family` at `t_target` in the
/// corresponding basis at `t_source`. The expansion is finite, exact, and
/// parity-independent; zero coefficients are dropped.
pub fn convert_basis(
    family: BasisFamily,
    n: u32,
    m: u32,
    parity: Parity,
    t_source: &Rational,
    t_target: &Rational,
) -> Result<Vec<ConversionTerm>> {
    if m == 0 && parity == Parity::Minus {
        return Err(Error::MinusParityZeroOrder { n });
    }
    let max_m = match family {
        BasisFamily::U => n,
        BasisFamily::V | BasisFamily::X => n + 1,
    };
    if m > max_m {
        return Err(Error::InvalidIndex { n, m, context: "conversion index out of range" });
    }
    let k_bound = match family {
        BasisFamily::U | BasisFamily::V => (n - m.min(n)) / 2,
        BasisFamily::X => (n + 1 - m) / 2,
    };
    let mut out = Vec::new();
    for k in 0..=k_bound {
        if 2 * k > n {
            // X with m = 0 and n odd: the top term pairs with the constant
            // harmonic, whose Dirac derivative vanishes; no basis element.
            continue;
        }
        let coefficient = match family {
            BasisFamily::U => coef_u_cross(n, m, k, t_target, t_source),
            BasisFamily::V | BasisFamily::X => coef_w(n, m, k, t_target, t_source),
        };
        if coefficient.is_zero() {
            continue;
        }
        out.push(ConversionTerm { n: n - 2 * k, m, parity, k, coefficient });
    }
    Ok(out)
}

/// Tabulated conversion coefficients for a family and a spheroid pair,
/// lower-triangular in degree with unit diagonal (`k = 0` maps to 1).
#[derive(Debug, Clone)]
pub struct ConversionMatrix {
    pub family: BasisFamily,
    pub t_source: Rational,
    pub t_target: Rational,
    pub max_degree: u32,
    entries: std::collections::BTreeMap<(u32, u32, u32), Rational>,
}

impl ConversionMatrix {
    pub fn build(
        family: BasisFamily,
        max_degree: u32,
        t_source: &Rational,
        t_target: &Rational,
    ) -> Result<Self> {
        let mut entries = std::collections::BTreeMap::new();
        for n in 0..=max_degree {
            let m_max = match family {
                BasisFamily::U => n,
                _ => n + 1,
            };
            for m in 0..=m_max {
                for term in convert_basis(family, n, m, Parity::Plus, t_source, t_target)? {
                    entries.insert((n, m, term.k), term.coefficient);
                }
            }
        }
        Ok(ConversionMatrix {
            family,
            t_source: t_source.clone(),
            t_target: t_target.clone(),
            max_degree,
            entries,
        })
    }

    /// Coefficient for `(n, m, k)`; zero when absent.
    pub fn entry(&self, n: u32, m: u32, k: u32) -> Rational {
        self.entries.get(&(n, m, k)).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&(u32, u32, u32), &Rational)> {
        self.entries.iter()
    }
}

fn four_pow(k: u32) -> Rational {
    rational_pow(&int(4), k)
}

fn neg_four_pow(k: u32) -> Rational {
    rational_pow(&int(-4), k)
}

fn rational_pow(x: &Rational, k: u32) -> Rational {
    let mut acc = Rational::one();
    for _ in 0..k {
        acc *= x;
    }
    acc
}
