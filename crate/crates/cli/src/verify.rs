//! Identity-verification suites behind `spheroidal verify`.
//!
//! Every suite runs a set of named checks and reports one line per check
//! and parameter choice: `PASS <suite>.<check> <scope>` or
//! `FAIL <suite>.<check> <scope>: <first counterexample>`. All checks are
//! bit-exact; a FAIL means a real broken identity, not numerical noise.

use num_traits::{One, Zero};

use spheroidal::convert::{
    coef_u0_to_umu, coef_u0_to_vmu, coef_u_to_u, coef_umu_from_vmu, coef_v0_from_vmu, coef_v_to_v,
    coef_vhat_to_u0, coef_vmu_from_umu, coef_w, coef_w_gamma, hypergeom_terminating,
};
use spheroidal::exact::Rational;
use spheroidal::harmonics::{
    garabedian_harmonic, harmonic_indices, monogenic_indices, spherical_solid_harmonic,
    spheroidal_solid_harmonic, HarmonicIndex, MonogenicIndex, Parity, SpheroidParam,
};
use spheroidal::integrals::{
    garabedian_norm_closed_form, inner_product, inner_product_scalar, GramMatrix,
};
use spheroidal::monogenic::{
    ambigenic, coef_z_decomp, contragenic, contragenic_explicit, contragenic_extended,
    contragenic_indices, dirac_of, intersection_report, monogenic, monogenic_explicit, nu_ratio,
    psi_solid, vza_split, PsiCombo, PsiSign, VzaSide,
};
use spheroidal::rquat::QuatPoly;
use spheroidal::{Poly, QPoly};

#[derive(Debug, Clone)]
pub struct Check {
    pub name: String,
    pub scope: String,
    pub pass: bool,
    pub detail: String,
}

impl Check {
    fn pass(name: &str, scope: String) -> Self {
        Check { name: name.into(), scope, pass: true, detail: String::new() }
    }

    fn fail(name: &str, scope: String, detail: String) -> Self {
        Check { name: name.into(), scope, pass: false, detail }
    }

    pub fn render(&self, suite: &str) -> String {
        if self.pass {
            format!("PASS {}.{} {}", suite, self.name, self.scope)
        } else {
            format!("FAIL {}.{} {}: {}", suite, self.name, self.scope, self.detail)
        }
    }
}

pub const SUITES: [&str; 8] = [
    "bbs",
    "roundtrip",
    "cvv",
    "monogenic",
    "orthogonality",
    "contragenic",
    "intersection",
    "norms",
];

pub fn run_suite(
    suite: &str,
    max_degree: u32,
    params: &[SpheroidParam],
    n_intersection: u32,
) -> Option<Vec<Check>> {
    match suite {
        "bbs" => Some(bbs(max_degree, params)),
        "roundtrip" => Some(roundtrip(max_degree, params)),
        "cvv" => Some(cvv(max_degree, params)),
        "monogenic" => Some(monogenic_suite(max_degree, params)),
        "orthogonality" => Some(orthogonality(max_degree, params)),
        "contragenic" => Some(contragenic_suite(max_degree, params)),
        "intersection" => Some(intersection(n_intersection, params)),
        "norms" => Some(norms(max_degree, params)),
        _ => None,
    }
}

fn rational_pow(x: &Rational, k: u32) -> Rational {
    let mut acc = Rational::one();
    for _ in 0..k {
        acc *= x;
    }
    acc
}

fn v_or_zero(n: i64, m: u32, parity: Parity, sp: &SpheroidParam) -> Poly {
    if n < 0 || m as i64 > n + 1 || (m == 0 && parity == Parity::Minus) {
        return Poly::zero();
    }
    garabedian_harmonic(MonogenicIndex::new(n as u32, m, parity).unwrap(), sp)
}

fn x_or_zero(n: i64, m: u32, parity: Parity, sp: &SpheroidParam) -> QPoly {
    if n < 0 || m as i64 > n + 1 || (m == 0 && parity == Parity::Minus) {
        return QuatPoly::zero();
    }
    monogenic(MonogenicIndex::new(n as u32, m, parity).unwrap(), sp)
}

/// Spheroidal-from-spherical expansion: exactness, harmonicity, degree,
/// and the ball normalization.
fn bbs(max_degree: u32, params: &[SpheroidParam]) -> Vec<Check> {
    let mut checks = Vec::new();
    for sp in params {
        let scope = format!("n<={} t={}", max_degree, sp);
        let mut failure = None;
        'outer: for idx in harmonic_indices(max_degree) {
            let (n, m) = (idx.n(), idx.m());
            let u = spheroidal_solid_harmonic(idx, sp);
            let mut rhs = Poly::zero();
            for k in 0..=(n - m) / 2 {
                let c = coef_u_to_u(n, m, k) * rational_pow(sp.t(), k);
                rhs += spherical_solid_harmonic(HarmonicIndex::new(n - 2 * k, m, idx.parity()).unwrap())
                    .scale(&c);
            }
            if u != rhs {
                failure = Some(format!("expansion differs at {}", idx));
                break 'outer;
            }
            if !u.laplacian().is_zero() {
                failure = Some(format!("not harmonic at {}", idx));
                break 'outer;
            }
            if u.degree() != n as i64 {
                failure = Some(format!("degree {} != {} at {}", u.degree(), n, idx));
                break 'outer;
            }
        }
        checks.push(match failure {
            None => Check::pass("expansion", scope),
            Some(d) => Check::fail("expansion", scope, d),
        });
    }
    let mut failure = None;
    for idx in harmonic_indices(max_degree) {
        if spheroidal_solid_harmonic(idx, &SpheroidParam::ball()) != spherical_solid_harmonic(idx) {
            failure = Some(format!("ball normalization differs at {}", idx));
            break;
        }
    }
    checks.push(match failure {
        None => Check::pass("ball-normalization", format!("n<={}", max_degree)),
        Some(d) => Check::fail("ball-normalization", format!("n<={}", max_degree), d),
    });
    checks
}

/// Inverse expansions and their compositions.
fn roundtrip(max_degree: u32, params: &[SpheroidParam]) -> Vec<Check> {
    let mut checks = Vec::new();
    for sp in params {
        let scope = format!("n<={} t={}", max_degree, sp);
        // U[0] = sum c0 t^k U[t]
        let mut failure = None;
        for idx in harmonic_indices(max_degree) {
            let (n, m) = (idx.n(), idx.m());
            let mut rhs = Poly::zero();
            for k in 0..=(n - m) / 2 {
                let c = coef_u0_to_umu(n, m, k) * rational_pow(sp.t(), k);
                rhs += spheroidal_solid_harmonic(
                    HarmonicIndex::new(n - 2 * k, m, idx.parity()).unwrap(),
                    sp,
                )
                .scale(&c);
            }
            if spherical_solid_harmonic(idx) != rhs {
                failure = Some(format!("ball reconstruction differs at {}", idx));
                break;
            }
        }
        checks.push(match failure {
            None => Check::pass("ball-reconstruction", scope.clone()),
            Some(d) => Check::fail("ball-reconstruction", scope.clone(), d),
        });

        // V[t] = sum c~ t^k U[t] and the two-term inverse
        let mut failure = None;
        for idx in harmonic_indices(max_degree) {
            let (n, m, parity) = (idx.n(), idx.m(), idx.parity());
            let v = v_or_zero(n as i64, m, parity, sp);
            let mut rhs = Poly::zero();
            for k in 0..=(n - m) / 2 {
                let c = coef_vmu_from_umu(n, m, k) * rational_pow(sp.t(), k);
                rhs += spheroidal_solid_harmonic(HarmonicIndex::new(n - 2 * k, m, parity).unwrap(), sp)
                    .scale(&c);
            }
            if v != rhs {
                failure = Some(format!("V-from-U differs at {}", idx));
                break;
            }
            let mut back = v.scale(&coef_umu_from_vmu(n, m, 0));
            back += v_or_zero(n as i64 - 2, m, parity, sp)
                .scale(&(coef_umu_from_vmu(n, m, 1) * sp.t()));
            if spheroidal_solid_harmonic(idx, sp) != back {
                failure = Some(format!("U-from-V differs at {}", idx));
                break;
            }
        }
        checks.push(match failure {
            None => Check::pass("garabedian-inverse", scope),
            Some(d) => Check::fail("garabedian-inverse", scope, d),
        });
    }
    checks
}

/// Cross-spheroid Garabedian conversion: closed form vs brute force,
/// polynomial identities, limit branches.
fn cvv(max_degree: u32, params: &[SpheroidParam]) -> Vec<Check> {
    let mut checks = Vec::new();
    for spt in params {
        for sps in params {
            let scope = format!("n<={} target={} source={}", max_degree, spt, sps);
            let mut failure = None;
            'outer: for n in 0..=max_degree {
                for m in 0..=n {
                    for k in 0..=(n - m) / 2 {
                        if sps.t().is_zero() {
                            continue; // the ball-source branch is itself the limit
                        }
                        let mut brute = Rational::zero();
                        for l in 0..=k {
                            brute += coef_vhat_to_u0(n, m, l)
                                * coef_u0_to_vmu(n - 2 * l, m, k - l)
                                * rational_pow(spt.t(), l)
                                * rational_pow(sps.t(), k - l);
                        }
                        let closed = hypergeom_terminating(k, n, &(spt.t() / sps.t()))
                            * coef_w_gamma(n, m, k)
                            * rational_pow(sps.t(), k);
                        if closed != brute {
                            failure =
                                Some(format!("closed form != sum at (n,m,k)=({},{},{})", n, m, k));
                            break 'outer;
                        }
                    }
                }
            }
            checks.push(match failure {
                None => Check::pass("hypergeometric-vs-sum", scope.clone()),
                Some(d) => Check::fail("hypergeometric-vs-sum", scope.clone(), d),
            });

            let mut failure = None;
            for idx in harmonic_indices(max_degree) {
                let (n, m, parity) = (idx.n(), idx.m(), idx.parity());
                let lhs = v_or_zero(n as i64, m, parity, spt);
                let mut rhs = Poly::zero();
                for k in 0..=(n - m) / 2 {
                    let w = coef_w(n, m, k, spt.t(), sps.t());
                    rhs += v_or_zero(n as i64 - 2 * k as i64, m, parity, sps).scale(&w);
                }
                if lhs != rhs {
                    failure = Some(format!("V identity differs at {}", idx));
                    break;
                }
            }
            checks.push(match failure {
                None => Check::pass("garabedian-identity", scope),
                Some(d) => Check::fail("garabedian-identity", scope, d),
            });
        }
    }
    // limit branches against the dedicated families
    for sps in params.iter().filter(|sp| !sp.t().is_zero()) {
        let scope = format!("n<={} source={}", max_degree, sps);
        let mut failure = None;
        'outer: for n in 0..=max_degree {
            for m in 0..=n {
                for k in 0..=(n - m) / 2 {
                    let to_ball = coef_w(n, m, k, &Rational::zero(), sps.t());
                    if to_ball != coef_v0_from_vmu(n, m, k) * rational_pow(sps.t(), k) {
                        failure = Some(format!("target limit at ({},{},{})", n, m, k));
                        break 'outer;
                    }
                    let from_ball = coef_w(n, m, k, sps.t(), &Rational::zero());
                    if from_ball != coef_v_to_v(n, m, k) * rational_pow(sps.t(), k) {
                        failure = Some(format!("source limit at ({},{},{})", n, m, k));
                        break 'outer;
                    }
                }
            }
        }
        checks.push(match failure {
            None => Check::pass("limit-branches", scope),
            Some(d) => Check::fail("limit-branches", scope, d),
        });
    }
    checks
}

/// Monogenicity, the explicit Garabedian expansion of X, and the three
/// cross-spheroid monogenic expansions.
fn monogenic_suite(max_degree: u32, params: &[SpheroidParam]) -> Vec<Check> {
    let mut checks = Vec::new();
    let ball = SpheroidParam::ball();
    for sp in params {
        let scope = format!("n<={} t={}", max_degree, sp);
        let mut failure = None;
        for idx in monogenic_indices(max_degree) {
            let x = monogenic(idx, sp);
            if !dirac_of(&x, false).is_zero() {
                failure = Some(format!("Dirac X != 0 at {}", idx));
                break;
            }
            if x != monogenic_explicit(idx, sp) {
                failure = Some(format!("explicit formula differs at {}", idx));
                break;
            }
            if x.sc() != &v_or_zero(idx.n() as i64, idx.m(), idx.parity(), sp) {
                failure = Some(format!("Sc X != V at {}", idx));
                break;
            }
            let anti = x.conjugate();
            if !dirac_of(&anti, true).is_zero() {
                failure = Some(format!("conj-Dirac of antimonogenic != 0 at {}", idx));
                break;
            }
        }
        checks.push(match failure {
            None => Check::pass("dirac-and-explicit", scope.clone()),
            Some(d) => Check::fail("dirac-and-explicit", scope.clone(), d),
        });

        let mut failure = None;
        'outer: for idx in monogenic_indices(max_degree) {
            let (n, m, parity) = (idx.n(), idx.m(), idx.parity());
            let k_top = (n + 1 - m) / 2;
            let mut from_ball = QuatPoly::zero();
            let mut to_ball = QuatPoly::zero();
            for k in 0..=k_top {
                let c = coef_v_to_v(n, m, k) * rational_pow(sp.t(), k);
                from_ball += &x_or_zero(n as i64 - 2 * k as i64, m, parity, &ball).scale(&c);
                let c0 = coef_u0_to_umu(n + 1, m, k) * rational_pow(sp.t(), k);
                to_ball += &x_or_zero(n as i64 - 2 * k as i64, m, parity, sp).scale(&c0);
            }
            if monogenic(idx, sp) != from_ball {
                failure = Some(format!("ball expansion differs at {}", idx));
                break 'outer;
            }
            if monogenic(idx, &ball) != to_ball {
                failure = Some(format!("inverse ball expansion differs at {}", idx));
                break 'outer;
            }
        }
        checks.push(match failure {
            None => Check::pass("ball-expansions", scope),
            Some(d) => Check::fail("ball-expansions", scope, d),
        });
    }
    for spt in params {
        for sps in params.iter().filter(|sp| !sp.t().is_zero()) {
            let scope = format!("n<={} target={} source={}", max_degree, spt, sps);
            let mut failure = None;
            for idx in monogenic_indices(max_degree) {
                let (n, m, parity) = (idx.n(), idx.m(), idx.parity());
                let mut rhs = QuatPoly::zero();
                for k in 0..=(n + 1 - m) / 2 {
                    let w = coef_w(n, m, k, spt.t(), sps.t());
                    rhs += &x_or_zero(n as i64 - 2 * k as i64, m, parity, sps).scale(&w);
                }
                if monogenic(idx, spt) != rhs {
                    failure = Some(format!("cross expansion differs at {}", idx));
                    break;
                }
            }
            checks.push(match failure {
                None => Check::pass("cross-expansion", scope),
                Some(d) => Check::fail("cross-expansion", scope, d),
            });
        }
    }
    checks
}

/// Gram-matrix structure of the V, X, and U families.
fn orthogonality(max_degree: u32, params: &[SpheroidParam]) -> Vec<Check> {
    let mut checks = Vec::new();
    for sp in params {
        let scope = format!("n<={} t={}", max_degree, sp);
        let v_family: Vec<Poly> = harmonic_indices(max_degree)
            .into_iter()
            .map(|idx| {
                garabedian_harmonic(MonogenicIndex::new(idx.n(), idx.m(), idx.parity()).unwrap(), sp)
            })
            .collect();
        let gram = GramMatrix::build_scalar(&v_family, sp);
        checks.push(if gram.is_diagonal() && gram.diagonal_is_positive() {
            Check::pass("garabedian-gram-diagonal", scope.clone())
        } else {
            Check::fail(
                "garabedian-gram-diagonal",
                scope.clone(),
                format!("off-diagonal witness {:?}", gram.off_diagonal_witness().map(|w| (w.0, w.1))),
            )
        });

        let x_family: Vec<QPoly> =
            monogenic_indices(max_degree).into_iter().map(|idx| monogenic(idx, sp)).collect();
        let gram = GramMatrix::build(&x_family, sp);
        checks.push(if gram.is_diagonal() && gram.diagonal_is_positive() {
            Check::pass("monogenic-gram-diagonal", scope.clone())
        } else {
            Check::fail(
                "monogenic-gram-diagonal",
                scope.clone(),
                format!("off-diagonal witness {:?}", gram.off_diagonal_witness().map(|w| (w.0, w.1))),
            )
        });

        // the U family is Dirichlet-orthogonal but NOT L2-orthogonal off
        // the ball; require a nonzero witness there
        if !sp.t().is_zero() {
            let u_family: Vec<Poly> = harmonic_indices(max_degree)
                .into_iter()
                .map(|idx| spheroidal_solid_harmonic(idx, sp))
                .collect();
            let gram = GramMatrix::build_scalar(&u_family, sp);
            checks.push(match gram.off_diagonal_witness() {
                Some((i, j, v)) => Check::pass(
                    "u-family-not-l2-orthogonal",
                    format!("{} witness ({},{}) = {}", scope, i, j, v),
                ),
                None => Check::fail(
                    "u-family-not-l2-orthogonal",
                    scope.clone(),
                    "unexpectedly diagonal".into(),
                ),
            });
        }
    }
    checks
}

/// Contragenicity, the dual construction formula, Gram structure, and the
/// dimension count.
fn contragenic_suite(max_degree: u32, params: &[SpheroidParam]) -> Vec<Check> {
    let mut checks = Vec::new();
    for sp in params {
        let scope = format!("n<={} t={}", max_degree, sp);
        let monogenics: Vec<QPoly> =
            monogenic_indices(max_degree).into_iter().map(|idx| monogenic(idx, sp)).collect();
        let mut z_family = Vec::new();
        let mut failure = None;
        'outer: for (n, m, parity) in contragenic_indices(max_degree) {
            let z = contragenic(n, m, parity, sp).unwrap();
            if z != contragenic_explicit(n, m, parity, sp) {
                failure = Some(format!("dual formula differs at ({},{},{})", n, m, parity));
                break 'outer;
            }
            for (i, x) in monogenics.iter().enumerate() {
                if !inner_product(&z, x, sp).is_zero()
                    || !inner_product(&z, &x.conjugate(), sp).is_zero()
                {
                    failure = Some(format!(
                        "Z({},{},{}) not orthogonal to monogenic #{}",
                        n, m, parity, i
                    ));
                    break 'outer;
                }
            }
            z_family.push(z);
        }
        checks.push(match failure {
            None => Check::pass("contragenicity", scope.clone()),
            Some(d) => Check::fail("contragenicity", scope.clone(), d),
        });

        let gram = GramMatrix::build(&z_family, sp);
        checks.push(if gram.is_diagonal() && gram.diagonal_is_positive() {
            Check::pass("contragenic-gram-diagonal", scope.clone())
        } else {
            Check::fail("contragenic-gram-diagonal", scope.clone(), "off-diagonal entry".into())
        });

        // dimension of the degree-n contragenic space
        let n_dim = max_degree.min(4);
        let mut spanning = Vec::new();
        for idx in monogenic_indices(n_dim) {
            let x = monogenic(idx, sp);
            spanning.push(x.conjugate());
            spanning.push(x);
        }
        let rank = GramMatrix::build(&spanning, sp).rank();
        let expected = (2 * n_dim * (n_dim + 3) + 3) as usize;
        let total = 3 * (n_dim as usize + 1) * (n_dim as usize + 1);
        checks.push(if rank == expected && total - rank == (n_dim * n_dim) as usize {
            Check::pass("dimension-count", format!("n={} t={}", n_dim, sp))
        } else {
            Check::fail(
                "dimension-count",
                format!("n={} t={}", n_dim, sp),
                format!("ambigenic rank {} (expected {})", rank, expected),
            )
        });

        // ladder reconstruction and cross-spheroid decomposition
        let mut failure = None;
        'ladder: for n in 1..=max_degree.min(4) {
            for m in 1..=n + 1 {
                for parity in [Parity::Plus, Parity::Minus] {
                    let (z_lo, a_lo) = vza_split(n, m, parity, sp, VzaSide::Lower).unwrap();
                    let lower = psi_solid(n, PsiCombo { sign: PsiSign::Minus, m: m - 1, parity }, sp);
                    if z_lo + &a_lo != lower {
                        failure = Some(format!("lower split at ({},{},{})", n, m, parity));
                        break 'ladder;
                    }
                    let (z_hi, a_hi) = vza_split(n, m, parity, sp, VzaSide::Upper).unwrap();
                    let upper = psi_solid(n, PsiCombo { sign: PsiSign::Plus, m: m + 1, parity }, sp);
                    if z_hi + &a_hi != upper {
                        failure = Some(format!("upper split at ({},{},{})", n, m, parity));
                        break 'ladder;
                    }
                }
            }
        }
        checks.push(match failure {
            None => Check::pass("ladder-splits", scope),
            Some(d) => Check::fail("ladder-splits", scope, d),
        });
    }

    for spt in params {
        for sps in params.iter().filter(|sp| !sp.t().is_zero()) {
            let nmax = max_degree.min(4);
            let scope = format!("n<={} target={} source={}", nmax, spt, sps);
            let mut failure = None;
            'outer: for n in 1..=nmax {
                for m in 0..n {
                    let parities: &[Parity] =
                        if m == 0 { &[Parity::Plus] } else { &[Parity::Plus, Parity::Minus] };
                    for &parity in parities {
                        let lhs = contragenic(n, m, parity, spt).unwrap();
                        let mut rhs = QuatPoly::zero();
                        let k_top = if m == 0 { (n - 1) / 2 } else { (n + 1 - m) / 2 };
                        for k in 0..=k_top {
                            let (zc, za) = coef_z_decomp(n, m, k, spt, sps);
                            rhs += &contragenic_extended(n - 2 * k, m, parity, sps).scale(&zc);
                            if !za.is_zero() {
                                rhs += &ambigenic(MonogenicIndex::new(n - 2 * k, m, parity).unwrap(), sps)
                                        .scale(&za);
                            }
                        }
                        if lhs != rhs {
                            failure = Some(format!("decomposition at ({},{},{})", n, m, parity));
                            break 'outer;
                        }
                    }
                }
            }
            checks.push(match failure {
                None => Check::pass("cross-decomposition", scope),
                Some(d) => Check::fail("cross-decomposition", scope, d),
            });
        }
    }
    checks
}

/// Universal contragenics and non-invariance witnesses.
fn intersection(n: u32, params: &[SpheroidParam]) -> Vec<Check> {
    let mut checks = Vec::new();
    for sp in params.iter().filter(|sp| !sp.t().is_zero()) {
        let scope = format!("n={} t={}", n, sp);
        let report = intersection_report(n, sp);
        checks.push(if report.universal_ok {
            Check::pass("universal-part", scope.clone())
        } else {
            Check::fail(
                "universal-part",
                scope.clone(),
                format!("counterexample {:?}", report.universal_counterexample),
            )
        });
        if n >= 2 {
            checks.push(if report.all_witnesses_found() {
                let sample = report.witnesses.iter().find_map(|w| {
                    w.witness.as_ref().map(|(idx, conj, v)| {
                        format!(
                            "<Z(m={}), {}X{}>_[0] = ({})*pi",
                            w.m,
                            if *conj { "conj " } else { "" },
                            idx,
                            v
                        )
                    })
                });
                Check::pass(
                    "non-invariance-witnesses",
                    format!("{} e.g. {}", scope, sample.unwrap_or_default()),
                )
            } else {
                Check::fail("non-invariance-witnesses", scope.clone(), "missing witness".into())
            });
        }
        checks.push(if report.universal_dimension >= n as usize {
            Check::pass(
                "universal-dimension",
                format!("{} dim={}", scope, report.universal_dimension),
            )
        } else {
            Check::fail(
                "universal-dimension",
                scope,
                format!("dim {} < {}", report.universal_dimension, n),
            )
        });
    }
    checks
}

/// Norm identities: closed form vs direct integration, parity equality,
/// and the nu weights.
fn norms(max_degree: u32, params: &[SpheroidParam]) -> Vec<Check> {
    let mut checks = Vec::new();
    for sp in params {
        let scope = format!("n<={} t={}", max_degree, sp);
        // closed form needs prolate rational mu; skip others
        if sp.is_prolate() && sp.rational_mu().is_ok() {
            let mut failure = None;
            'outer: for n in 0..=max_degree {
                for m in 0..=n {
                    for parity in [Parity::Plus, Parity::Minus] {
                        if m == 0 && parity == Parity::Minus {
                            continue;
                        }
                        let closed = garabedian_norm_closed_form(n, m, parity, sp).unwrap();
                        let v = garabedian_harmonic(MonogenicIndex::new(n, m, parity).unwrap(), sp);
                        if closed != inner_product_scalar(&v, &v, sp) {
                            failure = Some(format!("closed form differs at ({},{},{})", n, m, parity));
                            break 'outer;
                        }
                    }
                }
            }
            checks.push(match failure {
                None => Check::pass("closed-form-norms", scope.clone()),
                Some(d) => Check::fail("closed-form-norms", scope.clone(), d),
            });
        }

        let mut failure = None;
        for n in 0..=max_degree {
            for m in 1..=n {
                let p = garabedian_harmonic(MonogenicIndex::new(n, m, Parity::Plus).unwrap(), sp);
                let q = garabedian_harmonic(MonogenicIndex::new(n, m, Parity::Minus).unwrap(), sp);
                if inner_product_scalar(&p, &p, sp) != inner_product_scalar(&q, &q, sp) {
                    failure = Some(format!("parity norms differ at ({},{})", n, m));
                    break;
                }
            }
        }
        checks.push(match failure {
            None => Check::pass("parity-norm-equality", scope.clone()),
            Some(d) => Check::fail("parity-norm-equality", scope.clone(), d),
        });

        let mut failure = None;
        for n in 0..=max_degree {
            if !nu_ratio(n, 0, sp).is_one() {
                failure = Some(format!("nu(n,0) != 1 at n={}", n));
                break;
            }
            for m in n.max(1)..=n + 1 {
                if !nu_ratio(n, m, sp).is_zero() {
                    failure = Some(format!("nu({},{}) != 0", n, m));
                    break;
                }
            }
        }
        checks.push(match failure {
            None => Check::pass("nu-conventions", scope),
            Some(d) => Check::fail("nu-conventions", scope, d),
        });
    }
    checks
}
