//! Command-line interface for the exact spheroidal basis library.
//!
//! Subcommands: `basis`, `coeffs`, `gram`, `convert`, `verify`, `plotdata`.
//! Rationals are written `p/q` on both sides of the boundary. Exit codes:
//! 0 all good, 1 a verification suite found a counterexample, 2 usage or
//! configuration error. Output is byte-identical across runs for identical
//! configurations.

mod config;
mod output;
mod verify;

use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};

use config::Config;
use output::{render_basis, render_coeffs, render_convert, render_gram, render_plotdata};
use output::{Coords, Format, FunctionFamily};
use spheroidal::convert::{convert_basis, BasisFamily, CoeffFamily};
use spheroidal::exact::Rational;
use spheroidal::harmonics::{Parity, SpheroidParam};

#[derive(Parser)]
#[command(
    name = "spheroidal",
    version,
    about = "Exact harmonic, monogenic, and contragenic bases on spheroids"
)]
struct Cli {
    /// Key=value file supplying defaults for flags (flags win on conflict)
    #[arg(long, global = true)]
    config: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Emit basis polynomials (families U, V, X, A, Z)
    Basis(BasisArgs),
    /// Tabulate a conversion-coefficient family
    Coeffs(CoeffsArgs),
    /// Gram matrix of a basis family over one spheroid
    Gram(GramArgs),
    /// Expand one basis element over the basis of another spheroid
    Convert(ConvertArgs),
    /// Run identity-verification suites
    Verify(VerifyArgs),
    /// Sample a basis function on a grid for plotting
    Plotdata(PlotArgs),
}

#[derive(Args)]
struct BasisArgs {
    /// Comma-separated families to emit (U, V, X, A, Z)
    #[arg(long)]
    family: Option<String>,
    /// Comma-separated spheroid parameters t = mu^2 < 1, e.g. "0,1/4,-3"
    #[arg(long, allow_hyphen_values = true)]
    t: Option<String>,
    #[arg(long)]
    max_degree: Option<u32>,
    /// Output format: json or csv
    #[arg(long)]
    format: Option<String>,
    /// Output path (stdout when omitted)
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct CoeffsArgs {
    /// Coefficient family: u-to-u, v-to-v, vhat-to-u0, u0-to-umu,
    /// u0-to-vmu, vmu-from-umu, v0-from-vmu, or w
    #[arg(long)]
    family: Option<String>,
    #[arg(long)]
    max_n: Option<u32>,
    /// Target parameter for family w
    #[arg(long, allow_hyphen_values = true)]
    t_target: Option<String>,
    /// Source parameter for family w
    #[arg(long, allow_hyphen_values = true)]
    t_source: Option<String>,
    #[arg(long)]
    format: Option<String>,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct GramArgs {
    /// Family: U, V, X, A or Z
    #[arg(long)]
    family: Option<String>,
    /// Spheroid parameter t = mu^2 < 1
    #[arg(long, allow_hyphen_values = true)]
    t: Option<String>,
    #[arg(long)]
    max_degree: Option<u32>,
    #[arg(long)]
    format: Option<String>,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct ConvertArgs {
    /// Family subject to conversion: U, V or X
    #[arg(long)]
    family: Option<String>,
    #[arg(long)]
    n: Option<u32>,
    #[arg(long)]
    m: Option<u32>,
    /// Parity: + or -
    #[arg(long)]
    parity: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    t_source: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    t_target: Option<String>,
    #[arg(long)]
    format: Option<String>,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Suite: bbs, roundtrip, cvv, monogenic, orthogonality, contragenic,
    /// intersection, norms, or all
    #[arg(long)]
    suite: Option<String>,
    #[arg(long)]
    max_degree: Option<u32>,
    /// Comma-separated spheroid parameters
    #[arg(long, allow_hyphen_values = true)]
    t: Option<String>,
    /// Degree for the intersection suite (defaults to max-degree)
    #[arg(long)]
    n: Option<u32>,
    /// Also write the report to this path
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct PlotArgs {
    /// Family: U, V, X, A or Z
    #[arg(long)]
    family: Option<String>,
    #[arg(long)]
    n: Option<u32>,
    #[arg(long)]
    m: Option<u32>,
    /// Parity: + or -
    #[arg(long)]
    parity: Option<String>,
    /// Spheroid parameter t = mu^2 < 1
    #[arg(long, allow_hyphen_values = true)]
    t: Option<String>,
    /// Grid points per axis (0 emits only the header)
    #[arg(long)]
    grid: Option<u32>,
    /// Coordinate system: cartesian or spheroidal
    #[arg(long)]
    coords: Option<String>,
    #[arg(long)]
    out: Option<PathBuf>,
}

fn parse_rational(s: &str) -> Result<Rational> {
    Rational::from_str(s.trim())
        .map_err(|e| anyhow::anyhow!("cannot parse rational {:?}: {}", s, e))
}

fn parse_param(s: &str) -> Result<SpheroidParam> {
    let t = parse_rational(s)?;
    SpheroidParam::new(t).map_err(|e| anyhow::anyhow!("{}", e))
}

fn parse_param_list(s: &str) -> Result<Vec<SpheroidParam>> {
    let items: Vec<&str> = s.split(',').filter(|p| !p.trim().is_empty()).collect();
    if items.is_empty() {
        bail!("empty parameter list {:?}", s);
    }
    items.into_iter().map(parse_param).collect()
}

fn parse_format(s: &str) -> Result<Format> {
    s.parse()
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {:#}", err);
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    let cfg = Config::load(cli.config.as_deref())?;
    match cli.command {
        Command::Basis(args) => {
            let families_raw = cfg
                .resolve_opt(args.family, "family")?
                .context("missing --family (expected a comma list of U, V, X, A, Z)")?;
            let families: Vec<FunctionFamily> = families_raw
                .split(',')
                .filter(|p| !p.trim().is_empty())
                .map(|p| p.trim().parse())
                .collect::<Result<_>>()?;
            if families.is_empty() {
                bail!("empty family list");
            }
            let t_raw = cfg.resolve(args.t, "t", "0".to_string())?;
            let params = parse_param_list(&t_raw)?;
            let max_degree = cfg.resolve(args.max_degree, "max-degree", 4)?;
            let format = parse_format(&cfg.resolve(args.format, "format", "json".to_string())?)?;
            let out = cfg.resolve_opt(args.out, "out")?;
            let text = render_basis(&families, &params, max_degree, format)?;
            output::write_output(&text, out.as_deref())?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Coeffs(args) => {
            let family_raw = cfg
                .resolve_opt(args.family, "family")?
                .context("missing --family (see --help for the family names)")?;
            let family: CoeffFamily = family_raw.parse().map_err(|e| anyhow::anyhow!("{}", e))?;
            let max_n = cfg.resolve(args.max_n, "max-n", 6)?;
            let format = parse_format(&cfg.resolve(args.format, "format", "csv".to_string())?)?;
            let out = cfg.resolve_opt(args.out, "out")?;
            let t_pair = match family {
                CoeffFamily::W => {
                    let tt = cfg
                        .resolve_opt(args.t_target, "t-target")?
                        .context("family w needs --t-target")?;
                    let ts = cfg
                        .resolve_opt(args.t_source, "t-source")?
                        .context("family w needs --t-source")?;
                    Some((parse_param(&tt)?.t().clone(), parse_param(&ts)?.t().clone()))
                }
                _ => None,
            };
            let text =
                render_coeffs(family, max_n, t_pair.as_ref().map(|(a, b)| (a, b)), format)?;
            output::write_output(&text, out.as_deref())?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Gram(args) => {
            let family: FunctionFamily = cfg
                .resolve_opt(args.family, "family")?
                .context("missing --family")?
                .parse()?;
            let sp = parse_param(&cfg.resolve(args.t, "t", "0".to_string())?)?;
            let max_degree = cfg.resolve(args.max_degree, "max-degree", 3)?;
            let format = parse_format(&cfg.resolve(args.format, "format", "csv".to_string())?)?;
            let out = cfg.resolve_opt(args.out, "out")?;
            let text = render_gram(family, &sp, max_degree, format)?;
            output::write_output(&text, out.as_deref())?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Convert(args) => {
            let family: BasisFamily = cfg
                .resolve_opt(args.family, "family")?
                .context("missing --family (U, V or X)")?
                .parse()
                .map_err(|e| anyhow::anyhow!("{}", e))?;
            let n = cfg.resolve_opt(args.n, "n")?.context("missing --n")?;
            let m = cfg.resolve_opt(args.m, "m")?.context("missing --m")?;
            let parity: Parity = cfg
                .resolve(args.parity, "parity", "+".to_string())?
                .parse()
                .map_err(|e| anyhow::anyhow!("{}", e))?;
            let sp_source = parse_param(
                &cfg.resolve_opt(args.t_source, "t-source")?.context("missing --t-source")?,
            )?;
            let sp_target = parse_param(
                &cfg.resolve_opt(args.t_target, "t-target")?.context("missing --t-target")?,
            )?;
            let format = parse_format(&cfg.resolve(args.format, "format", "json".to_string())?)?;
            let out = cfg.resolve_opt(args.out, "out")?;
            let terms = convert_basis(family, n, m, parity, sp_source.t(), sp_target.t())
                .map_err(|e| anyhow::anyhow!("{}", e))?;
            let text = render_convert(
                family,
                n,
                m,
                parity,
                sp_source.t(),
                sp_target.t(),
                &terms,
                format,
            )?;
            output::write_output(&text, out.as_deref())?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify(args) => {
            let suite = cfg.resolve(args.suite, "suite", "all".to_string())?;
            let max_degree = cfg.resolve(args.max_degree, "max-degree", 4)?;
            let t_raw = cfg.resolve(args.t, "t", "1/4,9/16,-1,-3".to_string())?;
            let params = parse_param_list(&t_raw)?;
            let n_intersection = cfg.resolve(args.n, "n", max_degree)?;
            let out = cfg.resolve_opt(args.out, "out")?;

            let suites: Vec<&str> = if suite == "all" {
                verify::SUITES.to_vec()
            } else {
                match verify::SUITES.iter().find(|s| **s == suite) {
                    Some(s) => vec![*s],
                    None => bail!(
                        "unknown suite {:?} (expected one of {}, or all)",
                        suite,
                        verify::SUITES.join(", ")
                    ),
                }
            };
            let mut report = String::new();
            let mut failures = 0usize;
            let mut total = 0usize;
            for s in suites {
                let checks = verify::run_suite(s, max_degree, &params, n_intersection)
                    .expect("suite names validated above");
                for check in checks {
                    total += 1;
                    if !check.pass {
                        failures += 1;
                    }
                    report.push_str(&check.render(s));
                    report.push('\n');
                }
            }
            report.push_str(&format!(
                "{}: {} checks, {} failures\n",
                if failures == 0 { "OK" } else { "FAILED" },
                total,
                failures
            ));
            print!("{}", report);
            if let Some(path) = out {
                std::fs::write(path, &report)?;
            }
            Ok(if failures == 0 { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
        Command::Plotdata(args) => {
            let family: FunctionFamily = cfg
                .resolve_opt(args.family, "family")?
                .context("missing --family")?
                .parse()?;
            let n = cfg.resolve_opt(args.n, "n")?.context("missing --n")?;
            let m = cfg.resolve(args.m, "m", 0)?;
            let parity: Parity = cfg
                .resolve(args.parity, "parity", "+".to_string())?
                .parse()
                .map_err(|e| anyhow::anyhow!("{}", e))?;
            let sp = parse_param(&cfg.resolve(args.t, "t", "0".to_string())?)?;
            let grid = cfg.resolve(args.grid, "grid", 5)?;
            let coords: Coords =
                cfg.resolve(args.coords, "coords", "cartesian".to_string())?.parse()?;
            let out = cfg.resolve_opt(args.out, "out")?;
            let text = render_plotdata(family, n, m, parity, &sp, grid, coords)
                .map_err(|e| anyhow::anyhow!("{}", e))?;
            output::write_output(&text, out.as_deref())?;
            Ok(ExitCode::SUCCESS)
        }
    }
}
