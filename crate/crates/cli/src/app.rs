//! Argument handling and command dispatch.

use std::ffi::OsString;
use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use loopalg_core::duality::{cap, gysin, HomologyElement, OrientedSpace, RingMap};
use loopalg_core::graded_ring::Monomial;
use loopalg_core::spaces::{gamma_label, Family, SpaceCatalog, SpaceParams};
use loopalg_core::string_topology::{
    betti, coh_class_degree, coproduct_closed, gh_product_tensor, loop_basis, loop_class_degree, loop_representative,
    tensor_class_degree, verify_coassoc, verify_duality, verify_gysin, verify_pipeline, verify_presentation,
    verify_rings, CohGen, CoproductPipeline, LinComb, LoopClass, LoopGen, Term,
};
use loopalg_core::{Report, Scalar};
use num_traits::One;

use crate::output::{
    canonical, coefficient_string, render, BettiRow, ClassResult, DegreeShift, Format, OutputRecord, ResultBody,
    TableResult, TermRecord, VerifyResult,
};
use crate::parse::{parse_bundle_gen, parse_class, ParseError};

pub const DEFAULT_MAX_LEVEL: u32 = 8;
const DEFAULT_VERIFY_K: u32 = 6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Space {
    Cp,
    Hp,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Route {
    Closed,
    Pipeline,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Duality,
    Coassoc,
    Pipeline,
    Presentation,
    Gysin,
    Rings,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MapArg {
    Pl,
    Pv(u32),
}

fn parse_map(s: &str) -> Result<MapArg, String> {
    if s == "pL" {
        return Ok(MapArg::Pl);
    }
    s.strip_prefix("pV:")
        .and_then(|m| m.parse().ok())
        .map(MapArg::Pv)
        .ok_or_else(|| format!("expected pL or pV:<m>, got {s:?}"))
}

/// Exact string topology of CP^n and HP^n.
#[derive(Debug, Parser)]
#[command(name = "loopalg", version)]
pub struct Cli {
    #[arg(long, value_enum)]
    pub space: Space,
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    pub n: u32,
    #[arg(long, value_enum, default_value = "text", global = true)]
    pub format: Format,
    /// Highest level for verify (capped by LOOPALG_MAX_LEVEL).
    #[arg(long, global = true)]
    pub max_k: Option<u32>,
    /// Highest degree for table.
    #[arg(long, global = true)]
    pub max_degree: Option<u32>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// The coproduct of a homology class, e.g. "A[3,1] - 2*B[2,0]".
    Coproduct {
        #[arg(allow_hyphen_values = true)]
        expr: String,
        #[arg(long, value_enum, default_value = "closed")]
        route: Route,
    },
    /// The product of cross terms of cohomology classes, e.g. "s[1,0] x m[1,1]".
    Product {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Gysin image of a[i] or ab[i] along pL or pV:<m> into Gamma_k.
    Gysin {
        #[arg(long)]
        k: u32,
        #[arg(long, value_parser = parse_map)]
        map: MapArg,
        gen: String,
    },
    /// Cap of x_{2m} with the Gamma_k representative of a class at level k.
    Cap {
        #[arg(long)]
        k: u32,
        #[arg(long)]
        m: u32,
        #[arg(allow_hyphen_values = true)]
        gen: String,
    },
    /// Betti numbers of H_*(LM, M) with their generators.
    Table,
    /// Run one verification sweep.
    Verify {
        #[arg(value_enum)]
        suite: Suite,
    },
}

/// Failure of a command, with its exit code.
#[derive(Debug)]
pub enum Failure {
    Usage(String),
    Parse(ParseError),
    Compute(loopalg_core::Error),
}

impl Failure {
    fn code(&self) -> i32 {
        match self {
            Failure::Compute(loopalg_core::Error::Internal(_)) => 1,
            _ => 2,
        }
    }
}

impl std::fmt::Display for Failure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Failure::Usage(m) => f.write_str(m),
            Failure::Parse(e) => e.fmt(f),
            Failure::Compute(e) => e.fmt(f),
        }
    }
}

impl From<ParseError> for Failure {
    fn from(e: ParseError) -> Self {
        Failure::Parse(e)
    }
}

impl From<loopalg_core::Error> for Failure {
    fn from(e: loopalg_core::Error) -> Self {
        Failure::Compute(e)
    }
}

/// `LOOPALG_MAX_LEVEL`, or the default when unset.
pub fn max_level_from(value: Option<&str>) -> Result<u32, Failure> {
    match value {
        None => Ok(DEFAULT_MAX_LEVEL),
        Some(v) => match v.trim().parse::<u32>() {
            Ok(k) if k >= 1 => Ok(k),
            _ => Err(Failure::Usage(format!("LOOPALG_MAX_LEVEL must be a positive integer, got {v:?}"))),
        },
    }
}

/// Parses `args`, runs the command, writes to `out` and `err`, and
/// returns the exit code.
pub fn run<I, T>(args: I, max_level_env: Option<&str>, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            let _ = if code == 0 { out.write_all(rendered.as_bytes()) } else { err.write_all(rendered.as_bytes()) };
            return code;
        }
    };
    let result = max_level_from(max_level_env).and_then(|max_level| execute(&cli, max_level, err));
    match result {
        Ok((record, code)) => {
            let _ = out.write_all(render(&record, cli.format).as_bytes());
            code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.code()
        }
    }
}

fn params(cli: &Cli) -> Result<SpaceParams, Failure> {
    let family = match cli.space {
        Space::Cp => Family::Complex,
        Space::Hp => Family::Quaternionic,
    };
    Ok(SpaceParams::new(family, cli.n)?)
}

fn record(cli: &Cli, command: &str, result: ResultBody, degree: Option<DegreeShift>) -> OutputRecord {
    let space = match cli.space {
        Space::Cp => "cp",
        Space::Hp => "hp",
    };
    OutputRecord { space: space.into(), n: cli.n, command: command.into(), result, degree }
}

/// `(coefficient, canonical key, generator keys)` for each term.
fn lincomb_terms<K: Term>(x: &LinComb<K>, generators: impl Fn(&K) -> Vec<String>) -> Vec<(Scalar, String, Vec<String>)> {
    x.iter().map(|(k, c)| (c.clone(), LinComb::basis(k.clone()).to_string(), generators(k))).collect()
}

fn homology_terms(x: &HomologyElement, label: impl Fn(&Monomial) -> String) -> Vec<(Scalar, String, Vec<String>)> {
    x.terms().iter().map(|(m, c)| (c.clone(), label(m), vec![label(m)])).collect()
}

fn class_result(
    input: String,
    route: Option<&str>,
    context: Option<String>,
    terms: Vec<(Scalar, String, Vec<String>)>,
) -> ResultBody {
    let keyed: Vec<(Scalar, String)> = terms.iter().map(|(c, k, _)| (c.clone(), k.clone())).collect();
    ResultBody::Class(ClassResult {
        input,
        route: route.map(str::to_string),
        context,
        value: canonical(&keyed),
        terms: terms
            .into_iter()
            .map(|(c, _, generators)| TermRecord { coefficient: coefficient_string(&c), generators })
            .collect(),
    })
}

fn loop_key(g: &LoopGen) -> String {
    LoopClass::basis(*g).to_string()
}

fn shift(input: Option<u32>, output: Option<u32>) -> Option<DegreeShift> {
    input.map(|_| DegreeShift { input, output })
}

fn check_max_level(what: &str, level: u32, max_level: u32) -> Result<(), Failure> {
    if level > max_level {
        return Err(Failure::Usage(format!("{what} {level} exceeds LOOPALG_MAX_LEVEL={max_level}")));
    }
    Ok(())
}

fn execute(cli: &Cli, max_level: u32, err: &mut dyn Write) -> Result<(OutputRecord, i32), Failure> {
    let p = params(cli)?;
    match &cli.command {
        Command::Coproduct { expr, route } => {
            let x: LoopClass = parse_class(&p, expr)?;
            let (image, route) = match route {
                Route::Closed => (coproduct_closed(&p, &x)?, "closed"),
                Route::Pipeline => {
                    let top = x.iter().map(|(g, _)| g.level).max().unwrap_or(1);
                    check_max_level("level", top, max_level)?;
                    (CoproductPipeline::new(p, top)?.coproduct(&x)?, "pipeline")
                }
            };
            let terms = lincomb_terms(&image, |(a, b)| vec![loop_key(a), loop_key(b)]);
            let degree = shift(loop_class_degree(&p, &x)?, tensor_class_degree(&p, &image)?);
            let body = class_result(x.to_string(), Some(route), None, terms);
            Ok((record(cli, "coproduct", body, degree), 0))
        }
        Command::Product { expr } => {
            let t: LinComb<(CohGen, CohGen)> = parse_class(&p, expr)?;
            let image = gh_product_tensor(&p, &t)?;
            let coh_key = |g: &CohGen| LinComb::basis(*g).to_string();
            let terms = lincomb_terms(&image, |g| vec![coh_key(g)]);
            let degs = t
                .iter()
                .map(|((a, b), _)| Ok(a.degree(&p)? + b.degree(&p)?))
                .collect::<Result<Vec<u32>, loopalg_core::Error>>()?;
            let input_degree = degs.first().copied().filter(|d| degs.iter().all(|e| e == d));
            let degree = shift(input_degree, coh_class_degree(&p, &image)?);
            let body = class_result(t.to_string(), None, None, terms);
            Ok((record(cli, "product", body, degree), 0))
        }
        Command::Gysin { k, map, gen } => {
            p.check_level(*k)?;
            let (with_b, i) = parse_bundle_gen(&p, gen)?;
            let cat = SpaceCatalog::new(p, *k);
            let gamma = cat.gamma(*k)?;
            let (base, pullback, marker, name): (&OrientedSpace, RingMap, &str, String) = match map {
                MapArg::Pl => (cat.sm(), cat.pullback_pl(*k)?, "~", "pL".into()),
                MapArg::Pv(m) => (cat.fiber(), cat.pullback_pv(*k, *m)?, "^", format!("pV:{m}")),
            };
            let mut factors = vec![(format!("a{marker}"), i)];
            if with_b {
                factors.push((format!("b{marker}"), 1));
            }
            let refs: Vec<(&str, u32)> = factors.iter().map(|(n, e)| (n.as_str(), *e)).collect();
            let mono = base.ring().monomial_of(&refs)?;
            let x = HomologyElement::dual(base.ring(), mono, Scalar::one());
            let image = gysin(&pullback, base, &gamma, &x)?;
            let degree = shift(x.degree(), image.degree());
            let input = format!("{}[{i}]", if with_b { "ab" } else { "a" });
            let body = class_result(input, None, Some(format!("map {name}, k={k}")), homology_terms(&image, gamma_label));
            Ok((record(cli, "gysin", body, degree), 0))
        }
        Command::Cap { k, m, gen } => {
            p.check_level(*k)?;
            let x: LoopClass = parse_class(&p, gen)?;
            if let Some((g, _)) = x.iter().find(|(g, _)| g.level != *k) {
                return Err(Failure::Usage(format!("{} is not at level k={k}", loop_key(g))));
            }
            if *m == 0 || *m >= *k {
                return Err(Failure::Usage(format!("m must satisfy 1 ≤ m ≤ k−1 = {}", k - 1)));
            }
            let cat = SpaceCatalog::new(p, *k);
            let gamma = cat.gamma(*k)?;
            let mut rep = HomologyElement::zero(gamma.ring());
            for (g, c) in x.iter() {
                rep = rep + loop_representative(&cat, *g)?.scale(c);
            }
            let xi = gamma.ring().generator(&format!("x{}", 2 * m))?;
            let image = cap(&xi, &rep)?;
            let rep_text = canonical(
                &homology_terms(&rep, gamma_label).into_iter().map(|(c, k, _)| (c, k)).collect::<Vec<_>>(),
            );
            let context = format!("x{} cap {rep_text} in Gamma_{k}", 2 * m);
            let degree = shift(rep.degree(), image.degree());
            let body = class_result(x.to_string(), None, Some(context), homology_terms(&image, gamma_label));
            Ok((record(cli, "cap", body, degree), 0))
        }
        Command::Table => {
            // Degrees reachable by generators of level ≤ max_level.
            let reach = p.index(max_level + 1)? - 1;
            let default = p.deg_b(max_level, 0)?.min(reach);
            let mut max_degree = cli.max_degree.unwrap_or(default);
            if max_degree > reach {
                let _ = writeln!(err, "note: max degree {max_degree} lowered to {reach} by LOOPALG_MAX_LEVEL={max_level}");
                max_degree = reach;
            }
            let gens = loop_basis(&p, max_level);
            let rows = (0..=max_degree)
                .map(|d| BettiRow {
                    degree: d,
                    betti: betti(&p, d),
                    generators: gens.iter().filter(|g| g.degree(&p).ok() == Some(d)).map(loop_key).collect(),
                })
                .collect();
            let body = ResultBody::Table(TableResult { max_degree, rows });
            Ok((record(cli, "table", body, None), 0))
        }
        Command::Verify { suite } => {
            let mut max_k = cli.max_k.unwrap_or(DEFAULT_VERIFY_K.min(max_level));
            if max_k == 0 {
                return Err(Failure::Usage("--max-k must be ≥ 1".into()));
            }
            if max_k > max_level {
                let _ = writeln!(err, "note: --max-k {max_k} lowered to LOOPALG_MAX_LEVEL={max_level}");
                max_k = max_level;
            }
            let report: Report = match suite {
                Suite::Duality => verify_duality(&p, max_k),
                Suite::Coassoc => verify_coassoc(&p, max_k),
                Suite::Pipeline => verify_pipeline(&p, max_k),
                // ω^k is checked up to twice the level.
                Suite::Presentation => verify_presentation(&p, max_k),
                Suite::Gysin => verify_gysin(&p, max_k),
                Suite::Rings => verify_rings(&p, max_k),
            };
            let code = if report.passed() { 0 } else { 1 };
            let body = ResultBody::Verify(VerifyResult {
                suite: report.name.clone(),
                max_k,
                passed: report.passed(),
                checks: report.checks,
                failures: report.failures,
                counterexamples: report.counterexamples,
            });
            Ok((record(cli, "verify", body, None), code))
        }
    }
}
