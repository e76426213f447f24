//! Basic monogenic, antimonogenic, ambigenic, and contragenic polynomials,
//! the norm-ratio weight `nu`, and the contragenic decomposition
//! coefficients.
//!
//! The basic monogenic `X_{n,m}[t]` is built by differentiation,
//! `X = conj-Dirac(U_{n+1,m}[t])`, and satisfies `Dirac(X) = 0`. Its scalar
//! part is the Garabedian harmonic `V_{n,m}[t]`. The explicit expansion of
//! `X` over Garabedian harmonics ([`monogenic_explicit`]) is kept as an
//! independent evaluation route: agreement of the two routes is what pins
//! the Condon-Shortley phase convention used throughout.
//!
//! Contragenic polynomials are harmonic, R3-valued, and L2-orthogonal to
//! every monogenic and antimonogenic on the same spheroid; this is a
//! domain-dependent property, not a differential equation. The basic family
//! `Z_{n,m}[t]` (degree slice `n` has the `2n - 1` elements `m = 0` and
//! `1 <= m <= n-1` in both parities) is constructed from the particular
//! ambigenics `A = X - conj(X)` and the weight `nu`, and is kept
//! unnormalized: exact norms are available separately through the
//! integration module, so a caller can normalize (the normalizing constants
//! involve `sqrt(pi)` and leave the rational field).

use num_traits::{One, Zero};

use crate::convert::coef_w;
use crate::error::{Error, Result};
use crate::exact::{int, rat, Rational};
use crate::harmonics::{garabedian_or_zero, MonogenicIndex, Parity, SpheroidParam};
use crate::harmonics::{spheroidal_solid_harmonic, HarmonicIndex};
use crate::integrals::{inner_product, inner_product_scalar, GramMatrix};
use crate::rquat::{dirac, dirac_scalar, qmul, QuatPoly};
use crate::QPoly;

/// Basic spheroidal monogenic polynomial `X_{n,m}[t] = conj-Dirac(U_{n+1,m}[t])`.
///
/// `Dirac(X) = 0` exactly, and `Sc X = V_{n,m}[t]`.
pub fn monogenic(idx: MonogenicIndex, sp: &SpheroidParam) -> QPoly {
    let up = HarmonicIndex::new(idx.n() + 1, idx.m(), idx.parity()).expect("m <= n+1 lifts");
    dirac_scalar(&spheroidal_solid_harmonic(up, sp), true)
}

/// The explicit expansion of `X_{n,m}[t]` over Garabedian harmonics:
///
/// `X_{n,0} = V_{n,0} - (V_{n,1}^+ e1 + V_{n,1}^- e2)/(n+2)`,
///
/// and for `1 <= m <= n+1`
/// `X_{n,m}^p = V_{n,m}^p
///   + [(n+m+1) V_{n,m-1}^p - V_{n,m+1}^p/(n+m+2)] e1/2
///   -+ [(n+m+1) V_{n,m-1}^q + V_{n,m+1}^q/(n+m+2)] e2/2`
/// with `q` the opposite parity. This is the independent route checked
/// against [`monogenic`] in the verification suites.
pub fn monogenic_explicit(idx: MonogenicIndex, sp: &SpheroidParam) -> QPoly {
    let (n, m, p) = (idx.n(), idx.m(), idx.parity());
    if m == 0 {
        let s = garabedian_or_zero(n, 0, Parity::Plus, sp);
        let c = rat(-1, (n + 2) as i64);
        let v1 = garabedian_or_zero(n, 1, Parity::Plus, sp).scale(&c);
        let v2 = garabedian_or_zero(n, 1, Parity::Minus, sp).scale(&c);
        return QuatPoly::new(s, v1, v2, crate::Poly::zero());
    }
    let q = p.flip();
    let big = int((n + m + 1) as i64);
    let small = rat(1, (n + m + 2) as i64);
    let half = rat(1, 2);
    let s = garabedian_or_zero(n, m, p, sp);
    let v1 = (garabedian_or_zero(n, m - 1, p, sp).scale(&big)
        - &garabedian_or_zero(n, m + 1, p, sp).scale(&small))
        .scale(&half);
    let sign = int(-p.sign());
    let v2 = (garabedian_or_zero(n, m - 1, q, sp).scale(&big)
        + &garabedian_or_zero(n, m + 1, q, sp).scale(&small))
        .scale(&(half * sign));
    QuatPoly::new(s, v1, v2, crate::Poly::zero())
}

/// Basic antimonogenic polynomial: the quaternionic conjugate of
/// [`monogenic`]; annihilated by the conjugated Dirac operator.
pub fn antimonogenic(idx: MonogenicIndex, sp: &SpheroidParam) -> QPoly {
    monogenic(idx, sp).conjugate()
}

/// Particular ambigenic polynomial `A_{n,m}[t] = 2 Vec X = X - conj(X)`.
pub fn ambigenic(idx: MonogenicIndex, sp: &SpheroidParam) -> QPoly {
    let x = monogenic(idx, sp);
    let conj = x.conjugate();
    x - conj
}

/// Sign slot of the `Psi` angular combinations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PsiSign {
    Plus,
    Minus,
}

impl PsiSign {
    fn sign(self) -> i64 {
        match self {
            PsiSign::Plus => 1,
            PsiSign::Minus => -1,
        }
    }
}

/// The angular combination `Psi_{sign,m}^{parity}`, identified by its slots.
///
/// As a solid object it only appears multiplied by the Garabedian profile
/// (see [`psi_solid`]); the `e3` algebra relations
/// `Psi_{+,m}^{p} e3 = sign(p) Psi_{+,m}^{flip p}` and
/// `Psi_{-,m}^{p} e3 = -sign(p) Psi_{-,m}^{flip p}`
/// hold as exact polynomial identities in that form.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PsiCombo {
    pub sign: PsiSign,
    pub m: u32,
    pub parity: Parity,
}

/// `V-hat_{n,m}[t] * Psi_{sign,m}^{parity}` as a solid quaternion-valued
/// polynomial: `V^{parity} e1 + sigma V^{flip parity} e2` with
/// `sigma = sign(Psi) * sign(parity)`.
pub fn psi_solid(n: u32, combo: PsiCombo, sp: &SpheroidParam) -> QPoly {
    let sigma = int(combo.sign.sign() * combo.parity.sign());
    let v1 = garabedian_or_zero(n, combo.m, combo.parity, sp);
    let v2 = garabedian_or_zero(n, combo.m, combo.parity.flip(), sp).scale(&sigma);
    QuatPoly::new(crate::Poly::zero(), v1, v2, crate::Poly::zero())
}

/// Squared scaled norm ratio
/// `nu_{n,m}[t] = (1/(n+m+1)_2)^2 * N_{n,m+1}[t] / N_{n,m-1}[t]`,
/// where `N_{n,m}` is the phi-profile norm `||V_{n,m}^+||^2 / ((1+delta_{0,m}) pi)`.
///
/// By convention `nu_{n,0} = 1` and `nu_{n,m} = 0` for `m >= n` (the
/// numerator profile vanishes there). Exact rational: the pi factors cancel
/// in the ratio.
pub fn nu_ratio(n: u32, m: u32, sp: &SpheroidParam) -> Rational {
    if m == 0 {
        return Rational::one();
    }
    if m >= n {
        return Rational::zero();
    }
    let profile = |order: u32| -> Rational {
        let v = garabedian_or_zero(n, order, Parity::Plus, sp);
        let nsq = inner_product_scalar(&v, &v, sp);
        let delta = if order == 0 { int(2) } else { int(1) };
        nsq.coeff() / delta
    };
    let scale = rat(1, ((n + m + 1) * (n + m + 2)) as i64);
    &scale * &scale * profile(m + 1) / profile(m - 1)
}

/// Index of a basic contragenic polynomial `Z_{n,m}^{parity}`:
/// `n >= 1`, `0 <= m <= n-1`, with `m = 0` carrying only the `+` parity.
pub fn contragenic_index_valid(n: u32, m: u32, parity: Parity) -> Result<()> {
    if n == 0 || m + 1 > n {
        return Err(Error::InvalidIndex { n, m, context: "contragenic index needs m <= n-1, n >= 1" });
    }
    if m == 0 && parity == Parity::Minus {
        return Err(Error::MinusParityZeroOrder { n });
    }
    Ok(())
}

/// Basic contragenic polynomial `Z_{n,m}^{parity}[t]`:
///
/// `Z_{n,0} = -A_{n,0} e3`, and for `m >= 1`
/// `Z^{p} = [(nu - 1) A^{p} + sign(p) (nu + 1) A^{flip p} e3] / 2`.
///
/// Reduced (no `e3` component), harmonic, and exactly orthogonal in
/// `<.,.>_[t]` to every monogenic and antimonogenic on the same spheroid.
pub fn contragenic(n: u32, m: u32, parity: Parity, sp: &SpheroidParam) -> Result<QPoly> {
    contragenic_index_valid(n, m, parity)?;
    Ok(contragenic_extended(n, m, parity, sp))
}

/// The contragenic construction formula extended to `0 <= m <= n+1`
/// (with `nu = 0` once `m >= n`). The extension is what the ladder
/// decompositions recombine; only `m <= n-1` yields basis contragenics.
pub fn contragenic_extended(n: u32, m: u32, parity: Parity, sp: &SpheroidParam) -> QPoly {
    let e3 = QuatPoly::e3();
    if m == 0 {
        let a = ambigenic(MonogenicIndex::new(n, 0, Parity::Plus).unwrap(), sp);
        return -qmul(&a, &e3);
    }
    let nu = nu_ratio(n, m, sp);
    let a_same = ambigenic(MonogenicIndex::new(n, m, parity).unwrap(), sp);
    let a_flip = ambigenic(MonogenicIndex::new(n, m, parity.flip()).unwrap(), sp);
    let half = rat(1, 2);
    let c_same = (&nu - &Rational::one()) * &half;
    let c_flip = (&nu + &Rational::one()) * &half * int(parity.sign());
    a_same.scale(&c_same) + &qmul(&a_flip, &e3).scale(&c_flip)
}

/// The Garabedian-profile expansion of the same polynomial:
///
/// `Z_{n,0} = (2/(n+2)) Vhat_{n,1} Psi_{+,1}^-`, and for `1 <= m <= n-1`
/// `Z^{p} = (n+m+1) nu Vhat_{n,m-1} Psi_{-,m-1}^{p}
///          + Vhat_{n,m+1} Psi_{+,m+1}^{p} / (n+m+2)`.
///
/// Dual route to [`contragenic`]; equality of the two is enforced by tests.
pub fn contragenic_explicit(n: u32, m: u32, parity: Parity, sp: &SpheroidParam) -> QPoly {
    if m == 0 {
        let combo = PsiCombo { sign: PsiSign::Plus, m: 1, parity: Parity::Minus };
        return psi_solid(n, combo, sp).scale(&rat(2, (n + 2) as i64));
    }
    let nu = nu_ratio(n, m, sp);
    let lower = PsiCombo { sign: PsiSign::Minus, m: m - 1, parity };
    let upper = PsiCombo { sign: PsiSign::Plus, m: m + 1, parity };
    psi_solid(n, lower, sp).scale(&(int((n + m + 1) as i64) * nu))
        + &psi_solid(n, upper, sp).scale(&rat(1, (n + m + 2) as i64))
}

/// Which Garabedian-profile object a ladder split reconstructs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VzaSide {
    /// `Vhat_{n,m-1} Psi_{-,m-1}^{parity}`
    Lower,
    /// `Vhat_{n,m+1} Psi_{+,m+1}^{parity}`
    Upper,
}

/// Split `Vhat_{n,m-1} Psi_{-,m-1}^{p}` (or the `m+1` partner) into its
/// contragenic and ambigenic parts, returned already weighted so that
/// `z_part + a_part` reconstructs the profile object bit-exactly:
///
/// - lower: both parts weighted by `1/((n+m+1)(nu+1))`;
/// - upper: `Z` weighted by `(n+m+2)/(nu+1)`, `A` by `-nu (n+m+2)/(nu+1)`
///   (so the `m = n` degeneracy `nu = 0` collapses it to a contragenic
///   multiple).
///
/// Valid for `1 <= m <= n+1`, using the extended contragenic formula.
pub fn vza_split(
    n: u32,
    m: u32,
    parity: Parity,
    sp: &SpheroidParam,
    side: VzaSide,
) -> Result<(QPoly, QPoly)> {
    if m == 0 || m > n + 1 {
        return Err(Error::InvalidIndex { n, m, context: "ladder split needs 1 <= m <= n+1" });
    }
    let nu = nu_ratio(n, m, sp);
    let z = contragenic_extended(n, m, parity, sp);
    let a = ambigenic(MonogenicIndex::new(n, m, parity).unwrap(), sp);
    let nu1 = &nu + &Rational::one();
    match side {
        VzaSide::Lower => {
            let c = (int((n + m + 1) as i64) * &nu1).recip();
            Ok((z.scale(&c), a.scale(&c)))
        }
        VzaSide::Upper => {
            let c = int((n + m + 2) as i64) / &nu1;
            let ca = -(&c * &nu);
            Ok((z.scale(&c), a.scale(&ca)))
        }
    }
}

/// Decomposition coefficients `(zC, zA)` expressing `Z_{n,m}[t_target]` over
/// the contragenics and ambigenics of `t_source`:
///
/// `Z_{n,m}^{p}[t~] = sum_k ( zC Z_{n-2k,m}^{p}[t] + zA A_{n-2k,m}^{p}[t] )`,
///
/// with branches split at `2k` versus `n - m - 1`:
/// - `m = 0`: `zC = (n-2k+2)/(n+2) w_{n,1,k}`, `zA = 0`, for `0 <= 2k <= n-1`;
/// - low range `2k <= n-m-1`: `zC = (nu~ + 1)/(nu_k + 1) w`,
///   `zA = (nu~ - nu_k)/(nu_k + 1) w`;
/// - high range `n-m <= 2k <= n-m+1`: `zC = zA = nu~ / (nu_k + 1) w`;
///
/// where `w = w_{n,m,k}[t~, t]`, `nu~ = nu_{n,m}[t~]`, and
/// `nu_k = nu_{n-2k,m}[t]` (zero in the high range). Out-of-range `k`
/// returns `(0, 0)`.
pub fn coef_z_decomp(
    n: u32,
    m: u32,
    k: u32,
    sp_target: &SpheroidParam,
    sp_source: &SpheroidParam,
) -> (Rational, Rational) {
    if m == 0 {
        if n < 1 + 2 * k {
            return (Rational::zero(), Rational::zero());
        }
        let w = coef_w(n, 1, k, sp_target.t(), sp_source.t());
        let zc = rat((n - 2 * k + 2) as i64, (n + 2) as i64) * w;
        return (zc, Rational::zero());
    }
    if m > n || 2 * k > n - m + 1 {
        return (Rational::zero(), Rational::zero());
    }
    let w = coef_w(n, m, k, sp_target.t(), sp_source.t());
    let nu_t = nu_ratio(n, m, sp_target);
    let nu_k = nu_ratio(n - 2 * k, m, sp_source);
    let denom = &nu_k + &Rational::one();
    if 2 * k + m < n {
        // low range: 2k <= n - m - 1
        let zc = (&nu_t + &Rational::one()) / &denom * &w;
        let za = (&nu_t - &nu_k) / &denom * &w;
        (zc, za)
    } else {
        let c = &nu_t / &denom * &w;
        (c.clone(), c)
    }
}

/// All basic contragenic indices `(n, m, parity)` with `n <= max_degree`.
pub fn contragenic_indices(max_degree: u32) -> Vec<(u32, u32, Parity)> {
    let mut out = Vec::new();
    for n in 1..=max_degree {
        out.push((n, 0, Parity::Plus));
        for m in 1..n {
            out.push((n, m, Parity::Plus));
            out.push((n, m, Parity::Minus));
        }
    }
    out
}

/// One part-(ii) witness: a ball monogenic or antimonogenic with nonzero
/// ball inner product against `Z_{n,m}^{parity}[t]`.
#[derive(Debug, Clone)]
pub struct NonInvarianceWitness {
    pub m: u32,
    pub parity: Parity,
    pub witness: Option<(MonogenicIndex, bool, Rational)>,
}

/// Result of checking how the contragenic space of one spheroid meets the
/// ball's.
#[derive(Debug, Clone)]
pub struct IntersectionReport {
    pub n: u32,
    pub t: Rational,
    /// `Z_{n,0}[t]` is orthogonal (in the ball product) to every ball
    /// monogenic and antimonogenic of degree <= n.
    pub universal_ok: bool,
    pub universal_counterexample: Option<(MonogenicIndex, bool, Rational)>,
    /// For each `1 <= m <= n-1` and parity, a ball ambigenic with nonzero
    /// ball inner product against `Z_{n,m}[t]`, when one exists.
    pub witnesses: Vec<NonInvarianceWitness>,
    /// Exact rank of the ball Gram of `{Z_{k,0}[t] : k <= n}`.
    pub universal_dimension: usize,
}

impl IntersectionReport {
    /// Part (ii) holds iff every `m >= 1` slot found a nonzero witness.
    pub fn all_witnesses_found(&self) -> bool {
        self.witnesses.iter().all(|w| w.witness.is_some())
    }
}

/// Check the intersection behaviour of contragenic spaces at degree `n`:
/// part (i), `Z_{n,0}[t]` stays contragenic for the ball; part (ii), each
/// `Z_{n,m}[t]` with `m >= 1` fails ball-contragenicity, exhibited by a
/// witness; plus the exact dimension of the universal span found.
pub fn intersection_report(n: u32, sp: &SpheroidParam) -> IntersectionReport {
    let ball = SpheroidParam::ball();
    let ball_family: Vec<(MonogenicIndex, bool, QPoly)> = crate::harmonics::monogenic_indices(n)
        .into_iter()
        .flat_map(|idx| {
            let x = monogenic(idx, &ball);
            let xb = x.conjugate();
            [(idx, false, x), (idx, true, xb)]
        })
        .collect();

    let z_univ = contragenic_extended(n, 0, Parity::Plus, sp);
    let mut universal_ok = true;
    let mut universal_counterexample = None;
    for (idx, conj, f) in &ball_family {
        let ip = inner_product(&z_univ, f, &ball);
        if !ip.is_zero() {
            universal_ok = false;
            universal_counterexample = Some((*idx, *conj, ip.coeff().clone()));
            break;
        }
    }

    let mut witnesses = Vec::new();
    for m in 1..n {
        for parity in [Parity::Plus, Parity::Minus] {
            let z = contragenic_extended(n, m, parity, sp);
            let witness = ball_family.iter().find_map(|(idx, conj, f)| {
                let ip = inner_product(&z, f, &ball);
                (!ip.is_zero()).then(|| (*idx, *conj, ip.coeff().clone()))
            });
            witnesses.push(NonInvarianceWitness { m, parity, witness });
        }
    }

    let universal_family: Vec<QPoly> = (1..=n)
        .map(|k| contragenic_extended(k, 0, Parity::Plus, sp))
        .collect();
    let universal_dimension = GramMatrix::build(&universal_family, &ball).rank();

    IntersectionReport {
        n,
        t: sp.t().clone(),
        universal_ok,
        universal_counterexample,
        witnesses,
        universal_dimension,
    }
}

/// `Dirac` of a quaternion-valued polynomial; thin re-export used by the
/// verification suites.
pub fn dirac_of(f: &QPoly, conjugated: bool) -> QPoly {
    dirac(f, conjugated)
}
