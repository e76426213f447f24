//! Emission of basis elements, coefficient tables, Gram matrices,
//! conversion expansions, and plot data, in deterministic JSON or CSV.
//!
//! Rationals cross this boundary as `"p/q"` strings; floats appear only in
//! plot data, printed with 17 significant digits.

use std::io::Write;

use anyhow::Result;
use num_traits::ToPrimitive;

use spheroidal::convert::{coefficient, BasisFamily, CoeffFamily, ConversionTerm};
use spheroidal::exact::Rational;
use spheroidal::harmonics::{
    eval_via_coords, garabedian_harmonic, harmonic_indices, monogenic_indices, spheroidal_point,
    spheroidal_solid_harmonic, HarmonicIndex, MonogenicIndex, Parity, SpheroidParam,
};
use spheroidal::integrals::GramMatrix;
use spheroidal::monogenic::{ambigenic, contragenic, contragenic_indices, monogenic};
use spheroidal::rquat::QuatPoly;
use spheroidal::{Poly, QPoly};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
}

impl std::str::FromStr for Format {
    type Err = anyhow::Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            other => anyhow::bail!("unknown format {:?} (expected json or csv)", other),
        }
    }
}

/// The function families the CLI can emit.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FunctionFamily {
    U,
    V,
    X,
    A,
    Z,
}

impl FunctionFamily {
    pub fn name(&self) -> &'static str {
        match self {
            FunctionFamily::U => "U",
            FunctionFamily::V => "V",
            FunctionFamily::X => "X",
            FunctionFamily::A => "A",
            FunctionFamily::Z => "Z",
        }
    }

    pub fn is_scalar(&self) -> bool {
        matches!(self, FunctionFamily::U | FunctionFamily::V)
    }
}

impl std::str::FromStr for FunctionFamily {
    type Err = anyhow::Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "U" | "u" => Ok(FunctionFamily::U),
            "V" | "v" => Ok(FunctionFamily::V),
            "X" | "x" => Ok(FunctionFamily::X),
            "A" | "a" => Ok(FunctionFamily::A),
            "Z" | "z" => Ok(FunctionFamily::Z),
            other => anyhow::bail!("unknown family {:?} (expected U, V, X, A or Z)", other),
        }
    }
}

/// All `(n, m, parity)` indices of basis elements of a family up to
/// `max_degree`. The Garabedian family stops at `m = n` because its
/// `m = n+1` entries are identically zero; the monogenic and ambigenic
/// families genuinely extend to `m = n+1`.
pub fn family_indices(family: FunctionFamily, max_degree: u32) -> Vec<(u32, u32, Parity)> {
    match family {
        FunctionFamily::U | FunctionFamily::V => harmonic_indices(max_degree)
            .into_iter()
            .map(|i| (i.n(), i.m(), i.parity()))
            .collect(),
        FunctionFamily::X | FunctionFamily::A => monogenic_indices(max_degree)
            .into_iter()
            .map(|i| (i.n(), i.m(), i.parity()))
            .collect(),
        FunctionFamily::Z => contragenic_indices(max_degree),
    }
}

/// Construct one family element as a quaternion-valued polynomial
/// (scalar families land in the scalar component).
pub fn family_element(
    family: FunctionFamily,
    n: u32,
    m: u32,
    parity: Parity,
    sp: &SpheroidParam,
) -> Result<QPoly> {
    let q = match family {
        FunctionFamily::U => {
            QuatPoly::from_scalar(spheroidal_solid_harmonic(HarmonicIndex::new(n, m, parity)?, sp))
        }
        FunctionFamily::V => {
            QuatPoly::from_scalar(garabedian_harmonic(MonogenicIndex::new(n, m, parity)?, sp))
        }
        FunctionFamily::X => monogenic(MonogenicIndex::new(n, m, parity)?, sp),
        FunctionFamily::A => ambigenic(MonogenicIndex::new(n, m, parity)?, sp),
        FunctionFamily::Z => contragenic(n, m, parity, sp)?,
    };
    Ok(q)
}

fn poly_csv_rows(out: &mut String, prefix: &str, component: &str, p: &Poly) {
    for (mono, coeff) in p.terms() {
        out.push_str(&format!(
            "{},{},{},{},{},{}\n",
            prefix,
            component,
            mono.exponent(0),
            mono.exponent(1),
            mono.exponent(2),
            coeff
        ));
    }
}

/// Emit basis elements for several families and parameters.
pub fn render_basis(
    families: &[FunctionFamily],
    params: &[SpheroidParam],
    max_degree: u32,
    format: Format,
) -> Result<String> {
    match format {
        Format::Json => {
            let mut elements = Vec::new();
            for &family in families {
                for sp in params {
                    for (n, m, parity) in family_indices(family, max_degree) {
                        let el = family_element(family, n, m, parity, sp)?;
                        let mut obj = serde_json::json!({
                            "family": family.name(),
                            "t": sp.t().to_string(),
                            "n": n,
                            "m": m,
                            "parity": parity.to_string(),
                        });
                        if family.is_scalar() {
                            obj["poly"] = el.sc().to_json();
                        } else {
                            obj["components"] = el.to_json();
                        }
                        elements.push(obj);
                    }
                }
            }
            let doc = serde_json::json!({
                "command": "basis",
                "max_degree": max_degree,
                "elements": elements,
            });
            Ok(format!("{:#}\n", doc))
        }
        Format::Csv => {
            let mut out = String::from("family,t,n,m,parity,component,e0,e1,e2,coeff\n");
            for &family in families {
                for sp in params {
                    for (n, m, parity) in family_indices(family, max_degree) {
                        let el = family_element(family, n, m, parity, sp)?;
                        let prefix =
                            format!("{},{},{},{},{}", family.name(), sp.t(), n, m, parity);
                        if family.is_scalar() {
                            poly_csv_rows(&mut out, &prefix, "s", el.sc());
                        } else {
                            for (label, p) in
                                [("s", &el.s), ("e1", &el.v1), ("e2", &el.v2), ("e3", &el.v3)]
                            {
                                poly_csv_rows(&mut out, &prefix, label, p);
                            }
                        }
                    }
                }
            }
            Ok(out)
        }
    }
}

/// Emit a coefficient-family table with columns `n,m,k,value`
/// (plus the parameter pair for the cross-spheroid family).
pub fn render_coeffs(
    family: CoeffFamily,
    max_n: u32,
    t_pair: Option<(&Rational, &Rational)>,
    format: Format,
) -> Result<String> {
    let mut rows = Vec::new();
    for n in 0..=max_n {
        let m_top = match family {
            CoeffFamily::UToU | CoeffFamily::U0ToUmu | CoeffFamily::U0ToVmu
            | CoeffFamily::VmuFromUmu | CoeffFamily::V0FromVmu | CoeffFamily::VhatToU0
            | CoeffFamily::W => n,
            CoeffFamily::VToV => n + 1,
        };
        for m in 0..=m_top {
            for k in 0..=(n + 2) / 2 {
                let value = coefficient(family, n, m, k, t_pair)?;
                rows.push((n, m, k, value));
            }
        }
    }
    match format {
        Format::Json => {
            let rows: Vec<serde_json::Value> = rows
                .into_iter()
                .map(|(n, m, k, v)| {
                    let mut obj = serde_json::json!({
                        "n": n, "m": m, "k": k, "value": v.to_string(),
                    });
                    if let Some((tt, ts)) = t_pair {
                        obj["t_target"] = tt.to_string().into();
                        obj["t_source"] = ts.to_string().into();
                    }
                    obj
                })
                .collect();
            let doc = serde_json::json!({
                "command": "coeffs",
                "family": family.name(),
                "rows": rows,
            });
            Ok(format!("{:#}\n", doc))
        }
        Format::Csv => {
            let mut out = String::new();
            if let Some((tt, ts)) = t_pair {
                out.push_str("n,m,k,t_target,t_source,value\n");
                for (n, m, k, v) in rows {
                    out.push_str(&format!("{},{},{},{},{},{}\n", n, m, k, tt, ts, v));
                }
            } else {
                out.push_str("n,m,k,value\n");
                for (n, m, k, v) in rows {
                    out.push_str(&format!("{},{},{},{}\n", n, m, k, v));
                }
            }
            Ok(out)
        }
    }
}

/// Emit the Gram matrix of a family as CSV ("p/q" entries, pi implied, with
/// an index legend header) or JSON.
pub fn render_gram(
    family: FunctionFamily,
    sp: &SpheroidParam,
    max_degree: u32,
    format: Format,
) -> Result<String> {
    let indices = family_indices(family, max_degree);
    let funcs: Vec<QPoly> = indices
        .iter()
        .map(|&(n, m, parity)| family_element(family, n, m, parity, sp))
        .collect::<Result<_>>()?;
    let gram = GramMatrix::build(&funcs, sp);
    match format {
        Format::Json => {
            let legend: Vec<serde_json::Value> = indices
                .iter()
                .map(|(n, m, p)| serde_json::json!({"n": n, "m": m, "parity": p.to_string()}))
                .collect();
            let matrix: Vec<Vec<String>> = (0..gram.size())
                .map(|i| (0..gram.size()).map(|j| gram.entry(i, j).coeff().to_string()).collect())
                .collect();
            let doc = serde_json::json!({
                "command": "gram",
                "family": family.name(),
                "t": sp.t().to_string(),
                "unit": "pi",
                "indices": legend,
                "matrix": matrix,
            });
            Ok(format!("{:#}\n", doc))
        }
        Format::Csv => {
            let mut out = String::new();
            out.push_str(&format!("# gram family={} t={} unit=pi\n", family.name(), sp.t()));
            for (i, (n, m, p)) in indices.iter().enumerate() {
                out.push_str(&format!("# {}: n={} m={} parity={}\n", i, n, m, p));
            }
            for i in 0..gram.size() {
                let row: Vec<String> =
                    (0..gram.size()).map(|j| gram.entry(i, j).coeff().to_string()).collect();
                out.push_str(&row.join(","));
                out.push('\n');
            }
            Ok(out)
        }
    }
}

/// Emit a basis-conversion expansion.
pub fn render_convert(
    family: BasisFamily,
    n: u32,
    m: u32,
    parity: Parity,
    t_source: &Rational,
    t_target: &Rational,
    terms: &[ConversionTerm],
    format: Format,
) -> Result<String> {
    match format {
        Format::Json => {
            let rows: Vec<serde_json::Value> = terms
                .iter()
                .map(|t| {
                    serde_json::json!({
                        "n": t.n,
                        "m": t.m,
                        "parity": t.parity.to_string(),
                        "k": t.k,
                        "coefficient": t.coefficient.to_string(),
                    })
                })
                .collect();
            let doc = serde_json::json!({
                "command": "convert",
                "family": format!("{:?}", family),
                "n": n,
                "m": m,
                "parity": parity.to_string(),
                "t_source": t_source.to_string(),
                "t_target": t_target.to_string(),
                "terms": rows,
            });
            Ok(format!("{:#}\n", doc))
        }
        Format::Csv => {
            let mut out = String::from("n,m,parity,k,coefficient\n");
            for t in terms {
                out.push_str(&format!(
                    "{},{},{},{},{}\n",
                    t.n, t.m, t.parity, t.k, t.coefficient
                ));
            }
            Ok(out)
        }
    }
}

/// Coordinate systems for plot-data grids.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Coords {
    Cartesian,
    Spheroidal,
}

impl std::str::FromStr for Coords {
    type Err = anyhow::Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "cartesian" => Ok(Coords::Cartesian),
            "spheroidal" => Ok(Coords::Spheroidal),
            other => anyhow::bail!("unknown coordinate system {:?}", other),
        }
    }
}

fn fmt_f64(v: f64) -> String {
    format!("{:.16e}", v)
}

/// Sample one basis function on a grid; CSV only (floats, 17 significant
/// digits). The spheroidal-coordinate path evaluates through the
/// coordinate factorization and is restricted to prolate parameters and
/// the harmonic family.
pub fn render_plotdata(
    family: FunctionFamily,
    n: u32,
    m: u32,
    parity: Parity,
    sp: &SpheroidParam,
    grid: u32,
    coords: Coords,
) -> Result<String> {
    match coords {
        Coords::Cartesian => {
            let el = family_element(family, n, m, parity, sp)?;
            let comps: Vec<spheroidal::PolyF64> =
                [&el.s, &el.v1, &el.v2, &el.v3].into_iter().map(|p| p.to_f64()).collect();
            let scalar = family.is_scalar();
            let mut out = String::from(if scalar {
                "x0,x1,x2,value\n"
            } else {
                "x0,x1,x2,value_s,value_e1,value_e2,value_e3\n"
            });
            let b = sp.minor_semiaxis_sq().to_f64().unwrap_or(1.0).sqrt();
            for i in 0..grid {
                for j in 0..grid {
                    for k in 0..grid {
                        let frac = |idx: u32| {
                            if grid == 1 {
                                0.0
                            } else {
                                2.0 * idx as f64 / (grid - 1) as f64 - 1.0
                            }
                        };
                        let pt = [frac(i), b * frac(j), b * frac(k)];
                        let values: Vec<String> =
                            comps.iter().map(|c| fmt_f64(c.evaluate(&pt))).collect();
                        let coords_str =
                            format!("{},{},{}", fmt_f64(pt[0]), fmt_f64(pt[1]), fmt_f64(pt[2]));
                        if scalar {
                            out.push_str(&format!("{},{}\n", coords_str, values[0]));
                        } else {
                            out.push_str(&format!("{},{}\n", coords_str, values.join(",")));
                        }
                    }
                }
            }
            Ok(out)
        }
        Coords::Spheroidal => {
            if family != FunctionFamily::U {
                anyhow::bail!("spheroidal-coordinate sampling is defined for the U family only");
            }
            let idx = HarmonicIndex::new(n, m, parity)?;
            // errors out on non-prolate parameters
            let v_max = sp.minor_semiaxis_sq().to_f64().unwrap().sqrt().atanh();
            let mut out = String::from("u,v,phi,x0,x1,x2,value\n");
            for i in 0..grid {
                for j in 0..grid {
                    for k in 0..grid {
                        let frac = |idx: u32| {
                            if grid == 1 {
                                0.0
                            } else {
                                idx as f64 / (grid - 1) as f64
                            }
                        };
                        let u = std::f64::consts::PI * frac(i);
                        let v = v_max * frac(j);
                        let phi = 2.0 * std::f64::consts::PI * frac(k);
                        let value = eval_via_coords(idx, sp, u, v, phi)?;
                        let pt = spheroidal_point(sp, u, v, phi)?;
                        out.push_str(&format!(
                            "{},{},{},{},{},{},{}\n",
                            fmt_f64(u),
                            fmt_f64(v),
                            fmt_f64(phi),
                            fmt_f64(pt[0]),
                            fmt_f64(pt[1]),
                            fmt_f64(pt[2]),
                            fmt_f64(value)
                        ));
                    }
                }
            }
            Ok(out)
        }
    }
}

/// Write rendered output to the path, or stdout when absent.
pub fn write_output(text: &str, out: Option<&std::path::Path>) -> Result<()> {
    match out {
        Some(path) => {
            std::fs::write(path, text)?;
            Ok(())
        }
        None => {
            std::io::stdout().write_all(text.as_bytes())?;
            Ok(())
        }
    }
}
