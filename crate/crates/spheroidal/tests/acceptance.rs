//! Acceptance suite: one test per release criterion, each printing a
//! PASS line (visible with `--nocapture`). Everything except the floating
//! coordinate cross-check is bit-exact; tolerances are zero.

use std::time::Instant;

use num_traits::{One, Zero};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use spheroidal::convert::{
    coef_u0_to_umu, coef_u_to_u, coef_v0_from_vmu, coef_v_to_v, coef_vhat_to_u0, coef_vmu_from_umu,
    coef_w, coef_umu_from_vmu, hypergeom_terminating, coef_w_gamma,
};
use spheroidal::exact::{int, rat, Rational};
use spheroidal::harmonics::{
    eval_via_coords, garabedian_harmonic, harmonic_indices, monogenic_indices,
    spherical_solid_harmonic, spheroidal_point, spheroidal_solid_harmonic, HarmonicIndex,
    MonogenicIndex, Parity, SpheroidParam,
};
use spheroidal::integrals::{
    garabedian_norm_closed_form, inner_product, inner_product_scalar, GramMatrix,
};
use spheroidal::monogenic::{
    ambigenic, coef_z_decomp, contragenic, contragenic_extended, contragenic_indices, dirac_of,
    intersection_report, monogenic, monogenic_explicit, psi_solid, vza_split, PsiCombo, PsiSign,
    VzaSide,
};
use spheroidal::rquat::QuatPoly;
use spheroidal::{Poly, QPoly};

fn sweep() -> Vec<SpheroidParam> {
    [rat(1, 4), rat(9, 16), rat(-1, 1), rat(-3, 1)]
        .into_iter()
        .map(|t| SpheroidParam::new(t).unwrap())
        .collect()
}

fn sweep_with_ball() -> Vec<SpheroidParam> {
    let mut out = vec![SpheroidParam::ball()];
    out.extend(sweep());
    out
}

fn rational_pow(x: &Rational, k: u32) -> Rational {
    let mut acc = Rational::one();
    for _ in 0..k {
        acc *= x;
    }
    acc
}

/// V_{n,m}^p[t] extended by zero outside its index range.
fn v_or_zero(n: i64, m: u32, parity: Parity, sp: &SpheroidParam) -> Poly {
    if n < 0 || m as i64 > n + 1 || (m == 0 && parity == Parity::Minus) {
        return Poly::zero();
    }
    garabedian_harmonic(MonogenicIndex::new(n as u32, m, parity).unwrap(), sp)
}

/// X_{n,m}^p[t] extended by zero outside its index range.
fn x_or_zero(n: i64, m: u32, parity: Parity, sp: &SpheroidParam) -> QPoly {
    if n < 0 || m as i64 > n + 1 || (m == 0 && parity == Parity::Minus) {
        return QuatPoly::zero();
    }
    monogenic(MonogenicIndex::new(n as u32, m, parity).unwrap(), sp)
}

#[test]
fn criterion_01_spheroidal_from_spherical_expansion() {
    let start = Instant::now();
    for sp in sweep() {
        for idx in harmonic_indices(8) {
            let (n, m) = (idx.n(), idx.m());
            // brute sum over the full nominal range, relying on the
            // out-of-range coefficients being exactly zero
            let mut rhs = Poly::zero();
            for k in 0..=n / 2 {
                let c = coef_u_to_u(n, m, k) * rational_pow(sp.t(), k);
                if 2 * k > n - m {
                    assert!(c.is_zero(), "coefficient outside 2k <= n-m must vanish");
                    continue;
                }
                let inner = HarmonicIndex::new(n - 2 * k, m, idx.parity()).unwrap();
                rhs += spherical_solid_harmonic(inner).scale(&c);
            }
            let u = spheroidal_solid_harmonic(idx, &sp);
            assert_eq!(u, rhs, "expansion at {} t={}", idx, sp);
            assert!(u.laplacian().is_zero(), "harmonicity at {} t={}", idx, sp);
            assert_eq!(u.degree(), n as i64);
        }
    }
    // normalization: t = 0 reduces to the classical solid harmonics
    for idx in harmonic_indices(8) {
        assert_eq!(
            spheroidal_solid_harmonic(idx, &SpheroidParam::ball()),
            spherical_solid_harmonic(idx)
        );
    }
    let dt = start.elapsed();
    assert!(dt.as_secs_f64() < 10.0, "criterion 1 exceeded 10 s: {:?}", dt);
    println!("PASS criterion 1: spheroidal-from-spherical expansion exact, n <= 8 ({:?})", dt);
}

#[test]
fn criterion_02_round_trip_to_ball_and_back() {
    for sp in sweep() {
        for idx in harmonic_indices(8) {
            let (n, m) = (idx.n(), idx.m());
            let mut rhs = Poly::zero();
            for k in 0..=(n - m) / 2 {
                let c = coef_u0_to_umu(n, m, k) * rational_pow(sp.t(), k);
                let inner = HarmonicIndex::new(n - 2 * k, m, idx.parity()).unwrap();
                rhs += spheroidal_solid_harmonic(inner, &sp).scale(&c);
            }
            assert_eq!(
                spherical_solid_harmonic(idx),
                rhs,
                "inverse expansion at {} t={}",
                idx,
                sp
            );
        }
        // coefficient-level composition is the Kronecker delta
        for n in 0..=8u32 {
            for m in 0..=n {
                for k in 0..=(n - m) / 2 {
                    let mut acc = Rational::zero();
                    for l in 0..=k {
                        acc += coef_u_to_u(n, m, l) * coef_u0_to_umu(n - 2 * l, m, k - l);
                    }
                    let expect = if k == 0 { int(1) } else { int(0) };
                    assert_eq!(acc, expect, "round trip ({},{},{})", n, m, k);
                }
            }
        }
    }
    println!("PASS criterion 2: ball round-trip is the identity, n <= 8");
}

#[test]
fn criterion_03_garabedian_from_u_same_spheroid_and_inverse() {
    for sp in sweep_with_ball() {
        for idx in harmonic_indices(8) {
            let (n, m, parity) = (idx.n(), idx.m(), idx.parity());
            // V_{n,m}[t] = sum c~ t^k U_{n-2k,m}[t]
            let v = v_or_zero(n as i64, m, parity, &sp);
            let mut rhs = Poly::zero();
            for k in 0..=(n - m) / 2 {
                let c = coef_vmu_from_umu(n, m, k) * rational_pow(sp.t(), k);
                rhs += spheroidal_solid_harmonic(
                    HarmonicIndex::new(n - 2 * k, m, parity).unwrap(),
                    &sp,
                )
                .scale(&c);
            }
            assert_eq!(v, rhs, "V from U at {} t={}", idx, sp);

            // inverse: U = V/(n+m+1) - t (n+m)/(4n^2-1) V_{n-2,m}
            let u = spheroidal_solid_harmonic(idx, &sp);
            let mut back = v_or_zero(n as i64, m, parity, &sp).scale(&coef_umu_from_vmu(n, m, 0));
            let c1 = coef_umu_from_vmu(n, m, 1) * sp.t();
            back += v_or_zero(n as i64 - 2, m, parity, &sp).scale(&c1);
            assert_eq!(u, back, "U from V at {} t={}", idx, sp);
        }
    }
    // composition at the coefficient level
    for n in 0..=8u32 {
        for m in 0..=n {
            for k in 0..=(n - m) / 2 {
                let mut acc = Rational::zero();
                for l in 0..=k.min(1) {
                    if 2 * l > n {
                        continue;
                    }
                    acc += coef_umu_from_vmu(n, m, l) * coef_vmu_from_umu(n - 2 * l, m, k - l);
                }
                let expect = if k == 0 { int(1) } else { int(0) };
                assert_eq!(acc, expect, "V/U composition ({},{},{})", n, m, k);
            }
        }
    }
    println!("PASS criterion 3: same-spheroid V<->U conversion exact both ways, n <= 8");
}

#[test]
fn criterion_04_cross_spheroid_garabedian_conversion() {
    // hypergeometric closed form == brute-force double route
    let params = sweep();
    for spt in &params {
        for sps in &params {
            for n in 0..=8u32 {
                for m in 0..=n {
                    for k in 0..=(n - m) / 2 {
                        let mut brute = Rational::zero();
                        for l in 0..=k {
                            let a = coef_vhat_to_u0(n, m, l);
                            let b = spheroidal::convert::coef_u0_to_vmu(n - 2 * l, m, k - l);
                            brute += a
                                * b
                                * rational_pow(spt.t(), l)
                                * rational_pow(sps.t(), k - l);
                        }
                        assert_eq!(
                            coef_w(n, m, k, spt.t(), sps.t()),
                            brute,
                            "w vs brute at ({},{},{})",
                            n,
                            m,
                            k
                        );
                        // the closed form is 2F1 * gamma * t^k by definition
                        let direct = hypergeom_terminating(k, n, &(spt.t() / sps.t()))
                            * coef_w_gamma(n, m, k)
                            * rational_pow(sps.t(), k);
                        assert_eq!(direct, brute);
                    }
                }
            }
        }
    }
    // polynomial identity V[t~] = sum w V[t], sources in the sweep (t != 0)
    for spt in sweep_with_ball() {
        for sps in &params {
            for idx in harmonic_indices(8) {
                let (n, m, parity) = (idx.n(), idx.m(), idx.parity());
                let lhs = v_or_zero(n as i64, m, parity, &spt);
                let mut rhs = Poly::zero();
                for k in 0..=(n - m) / 2 {
                    let w = coef_w(n, m, k, spt.t(), sps.t());
                    rhs += v_or_zero(n as i64 - 2 * k as i64, m, parity, sps).scale(&w);
                }
                assert_eq!(lhs, rhs, "V conversion {} {} <- {}", idx, spt, sps);
            }
        }
    }
    // limit specializations
    for sps in &params {
        for n in 0..=8u32 {
            for m in 0..=n {
                for k in 0..=(n - m) / 2 {
                    // t-target -> 0 limit: (n+m+1) c0-type coefficient
                    assert_eq!(
                        coef_w(n, m, k, &int(0), sps.t()),
                        coef_v0_from_vmu(n, m, k) * rational_pow(sps.t(), k)
                    );
                    // t-source -> 0 limit: the forward ball coefficient
                    assert_eq!(
                        coef_w(n, m, k, sps.t(), &int(0)),
                        coef_v_to_v(n, m, k) * rational_pow(sps.t(), k)
                    );
                }
            }
        }
    }
    println!("PASS criterion 4: cross-spheroid Garabedian conversion exact, n <= 8");
}

#[test]
fn criterion_05_garabedian_orthogonality() {
    for sp in sweep_with_ball() {
        let mut family = Vec::new();
        for idx in harmonic_indices(6) {
            family.push(garabedian_harmonic(
                MonogenicIndex::new(idx.n(), idx.m(), idx.parity()).unwrap(),
                &sp,
            ));
        }
        let gram = GramMatrix::build_scalar(&family, &sp);
        assert!(gram.is_diagonal(), "V Gram not diagonal at t={}", sp);
        assert!(gram.diagonal_is_positive(), "V Gram diagonal not positive at t={}", sp);
    }
    println!("PASS criterion 5: Garabedian family exactly L2-orthogonal, n <= 6");
}

#[test]
fn criterion_06_monogenicity_and_explicit_formula() {
    for sp in sweep_with_ball() {
        let mut family = Vec::new();
        for idx in monogenic_indices(6) {
            let x = monogenic(idx, &sp);
            assert!(dirac_of(&x, false).is_zero(), "Dirac X at {} t={}", idx, sp);
            assert_eq!(x, monogenic_explicit(idx, &sp), "explicit X at {} t={}", idx, sp);
            family.push(x);
        }
        let gram = GramMatrix::build(&family, &sp);
        assert!(gram.is_diagonal(), "X Gram not diagonal at t={}", sp);
        assert!(gram.diagonal_is_positive(), "X Gram diagonal not positive at t={}", sp);
    }
    println!("PASS criterion 6: monogenicity, explicit formula, and X orthogonality, n <= 6");
}

#[test]
fn criterion_07_monogenic_conversion_expansions() {
    let ball = SpheroidParam::ball();
    for sp in sweep() {
        for idx in monogenic_indices(6) {
            let (n, m, parity) = (idx.n(), idx.m(), idx.parity());
            let k_top = (n + 1 - m) / 2;

            // X[t] = sum c-hat t^k X[0]
            let mut rhs = QuatPoly::zero();
            for k in 0..=k_top {
                let c = coef_v_to_v(n, m, k) * rational_pow(sp.t(), k);
                rhs += &x_or_zero(n as i64 - 2 * k as i64, m, parity, &ball).scale(&c);
            }
            assert_eq!(monogenic(idx, &sp), rhs, "X[t] from ball at {}", idx);

            // X[0] = sum c0-hat t^k X[t]
            let mut rhs = QuatPoly::zero();
            for k in 0..=k_top {
                let c = coef_u0_to_umu(n + 1, m, k) * rational_pow(sp.t(), k);
                rhs += &x_or_zero(n as i64 - 2 * k as i64, m, parity, &sp).scale(&c);
            }
            assert_eq!(monogenic(idx, &ball), rhs, "ball X from X[t] at {}", idx);
        }
    }
    // X[t~] = sum w X[t] across spheroid pairs
    for spt in sweep() {
        for sps in sweep() {
            for idx in monogenic_indices(6) {
                let (n, m, parity) = (idx.n(), idx.m(), idx.parity());
                let mut rhs = QuatPoly::zero();
                for k in 0..=(n + 1 - m) / 2 {
                    let w = coef_w(n, m, k, spt.t(), sps.t());
                    rhs += &x_or_zero(n as i64 - 2 * k as i64, m, parity, &sps).scale(&w);
                }
                assert_eq!(monogenic(idx, &spt), rhs, "X conversion {} {}<-{}", idx, spt, sps);
            }
        }
    }
    println!("PASS criterion 7: all three monogenic conversion expansions exact, n <= 6");
}

#[test]
fn criterion_08_contragenicity_and_dimension() {
    for sp in sweep() {
        // every Z is orthogonal to every X and conj(X) of degree <= 6
        let monogenics: Vec<QPoly> =
            monogenic_indices(6).into_iter().map(|idx| monogenic(idx, &sp)).collect();
        let mut z_family = Vec::new();
        for (n, m, parity) in contragenic_indices(6) {
            let z = contragenic(n, m, parity, &sp).unwrap();
            for x in &monogenics {
                assert!(
                    inner_product(&z, x, &sp).is_zero(),
                    "<Z,X> at ({},{},{}) t={}",
                    n,
                    m,
                    parity,
                    sp
                );
                assert!(
                    inner_product(&z, &x.conjugate(), &sp).is_zero(),
                    "<Z,conj X> at ({},{},{}) t={}",
                    n,
                    m,
                    parity,
                    sp
                );
            }
            z_family.push(z);
        }
        let gram = GramMatrix::build(&z_family, &sp);
        assert!(gram.is_diagonal(), "Z Gram not diagonal at t={}", sp);
        assert!(gram.diagonal_is_positive());

        // dimension count: rank of the ambigenic spanning set {X, conj X}
        // of degree <= n, against 3(n+1)^2 total harmonics
        let mut spanning = Vec::new();
        for idx in monogenic_indices(5) {
            let x = monogenic(idx, &sp);
            spanning.push(x.conjugate());
            spanning.push(x);
        }
        let full_gram = GramMatrix::build(&spanning, &sp);
        for n in 1..=5u32 {
            let count = spanning_count(n);
            let sub = submatrix_rank(&full_gram, count);
            let ambigenic_dim = (2 * n * (n + 3) + 3) as usize;
            assert_eq!(sub, ambigenic_dim, "ambigenic span dim at n={} t={}", n, sp);
            let total = 3 * (n as usize + 1) * (n as usize + 1);
            assert_eq!(total - sub, (n * n) as usize, "dim N at n={} t={}", n, sp);
            // and the contragenic family exhibits that dimension
            let z_sub: Vec<QPoly> = contragenic_indices(n)
                .into_iter()
                .map(|(nn, mm, pp)| contragenic(nn, mm, pp, &sp).unwrap())
                .collect();
            assert_eq!(z_sub.len(), (n * n) as usize);
            assert_eq!(GramMatrix::build(&z_sub, &sp).rank(), (n * n) as usize);
        }
    }
    println!("PASS criterion 8: contragenicity exact and dim N*(n) = n^2, n <= 5");
}

/// Number of elements of the ambigenic spanning set with degree <= n,
/// as laid out by `monogenic_indices` (2 per index: X then conj X).
fn spanning_count(n: u32) -> usize {
    monogenic_indices(n).len() * 2
}

fn submatrix_rank(gram: &GramMatrix, count: usize) -> usize {
    let m: Vec<Vec<Rational>> = (0..count)
        .map(|i| (0..count).map(|j| gram.entry(i, j).coeff().clone()).collect())
        .collect();
    spheroidal::integrals::rational_rank(m)
}

#[test]
fn criterion_09_ladder_and_decomposition_identities() {
    // ladder reconstructions of the Garabedian profile objects
    for sp in sweep_with_ball() {
        for n in 1..=5u32 {
            for m in 1..=n + 1 {
                for parity in [Parity::Plus, Parity::Minus] {
                    let (z_lo, a_lo) = vza_split(n, m, parity, &sp, VzaSide::Lower).unwrap();
                    let lower =
                        psi_solid(n, PsiCombo { sign: PsiSign::Minus, m: m - 1, parity }, &sp);
                    assert_eq!(z_lo + &a_lo, lower, "lower split ({},{},{}) t={}", n, m, parity, sp);
                    let (z_hi, a_hi) = vza_split(n, m, parity, &sp, VzaSide::Upper).unwrap();
                    let upper =
                        psi_solid(n, PsiCombo { sign: PsiSign::Plus, m: m + 1, parity }, &sp);
                    assert_eq!(z_hi + &a_hi, upper, "upper split ({},{},{}) t={}", n, m, parity, sp);
                }
            }
        }
    }
    // contragenic decomposition across spheroid pairs
    for spt in sweep_with_ball() {
        for sps in sweep() {
            for n in 1..=5u32 {
                // m = 0: pure contragenic expansion
                let lhs = contragenic(n, 0, Parity::Plus, &spt).unwrap();
                let mut rhs = QuatPoly::zero();
                for k in 0..=(n - 1) / 2 {
                    let (zc, za) = coef_z_decomp(n, 0, k, &spt, &sps);
                    assert!(za.is_zero());
                    rhs += &contragenic_extended(n - 2 * k, 0, Parity::Plus, &sps).scale(&zc);
                }
                assert_eq!(lhs, rhs, "Z_{{n,0}} decomposition n={} {}<-{}", n, spt, sps);

                for m in 1..n {
                    for parity in [Parity::Plus, Parity::Minus] {
                        let lhs = contragenic(n, m, parity, &spt).unwrap();
                        let mut rhs = QuatPoly::zero();
                        for k in 0..=(n + 1 - m) / 2 {
                            let (zc, za) = coef_z_decomp(n, m, k, &spt, &sps);
                            rhs = rhs
                                + &contragenic_extended(n - 2 * k, m, parity, &sps).scale(&zc)
                                + &ambigenic(
                                    MonogenicIndex::new(n - 2 * k, m, parity).unwrap(),
                                    &sps,
                                )
                                .scale(&za);
                        }
                        assert_eq!(
                            lhs, rhs,
                            "Z decomposition ({},{},{}) {}<-{}",
                            n, m, parity, spt, sps
                        );
                    }
                }
            }
        }
    }
    println!("PASS criterion 9: ladder splits and contragenic decompositions exact, n <= 5");
}

#[test]
fn criterion_10_intersection_of_contragenic_spaces() {
    for sp in sweep() {
        for n in 1..=6u32 {
            let report = intersection_report(n, &sp);
            assert!(
                report.universal_ok,
                "Z_{{n,0}}[t] not ball-contragenic at n={} t={}: {:?}",
                n,
                sp,
                report.universal_counterexample
            );
            assert_eq!(report.witnesses.len(), 2 * (n as usize).saturating_sub(1));
            assert!(
                report.all_witnesses_found(),
                "missing non-invariance witness at n={} t={}",
                n,
                sp
            );
            assert!(
                report.universal_dimension >= n as usize,
                "universal dimension {} < n = {} at t={}",
                report.universal_dimension,
                n,
                sp
            );
        }
    }
    println!("PASS criterion 10: universal contragenics and non-invariance witnesses, n <= 6");
}

#[test]
fn criterion_11_closed_form_norms() {
    for t in [rat(1, 4), rat(9, 16)] {
        let sp = SpheroidParam::new(t).unwrap();
        for n in 0..=5u32 {
            for m in 0..=n {
                for parity in [Parity::Plus, Parity::Minus] {
                    if m == 0 && parity == Parity::Minus {
                        continue;
                    }
                    let closed = garabedian_norm_closed_form(n, m, parity, &sp).unwrap();
                    let v = garabedian_harmonic(MonogenicIndex::new(n, m, parity).unwrap(), &sp);
                    let direct = inner_product_scalar(&v, &v, &sp);
                    assert_eq!(closed, direct, "norm at ({},{},{}) t={}", n, m, parity, sp);
                    assert!(closed.is_positive());
                }
            }
        }
    }
    println!("PASS criterion 11: closed-form Garabedian norms equal direct integration, n <= 5");
}

#[test]
fn criterion_12_floating_coordinate_cross_check() {
    let sp = SpheroidParam::from_ints(1, 4).unwrap();
    // v ranges over [0, arctanh(e^nu)] with e^{2 nu} = 1 - t
    let v_max = (1.0f64 - 0.25).sqrt().atanh();
    let mut rng = StdRng::seed_from_u64(0x5f4e201d);
    let mut worst = 0.0f64;
    for idx in harmonic_indices(5) {
        let poly = spheroidal_solid_harmonic(idx, &sp).to_f64();
        for _ in 0..100 {
            let u = rng.gen_range(0.0..std::f64::consts::PI);
            let v = rng.gen_range(0.0..v_max);
            let phi = rng.gen_range(0.0..2.0 * std::f64::consts::PI);
            let via_coords = eval_via_coords(idx, &sp, u, v, phi).unwrap();
            let pt = spheroidal_point(&sp, u, v, phi).unwrap();
            let via_poly = poly.evaluate(&pt);
            let rel = (via_coords - via_poly).abs() / via_coords.abs().max(via_poly.abs()).max(1.0);
            assert!(
                rel <= 1e-10,
                "coordinate path mismatch at {} (u,v,phi)=({},{},{}): {} vs {}",
                idx,
                u,
                v,
                phi,
                via_coords,
                via_poly
            );
            worst = worst.max(rel);
        }
    }
    println!(
        "PASS criterion 12: coordinate-path evaluation within 1e-10 relative (worst {:.3e})",
        worst
    );
}
