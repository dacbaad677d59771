//! The `tangential` command line: argument parsing, validation into a
//! [`RunConfig`], dispatch, and JSON or plain-text reports.

use crate::error::{Error, Result};
use crate::exactalg::{fmt_rat, int};
use crate::generic::{pi_on_tabloid, straighten_check, target_covariant, Relation, TabloidFilling, TargetFilling};
use crate::graphs::{generators_catalog, witness_tabloid, Catalog, ColoredGraph};
use crate::symfun::{dim_gl, m_tau, mult_in_sym, mult_in_sym_characters, CharacterTable, NPartition, Partition, TableCache};
use crate::tangent::{
    certify, coordinate_families, family_classes, graph_covariant_concrete, ideal_dimension, Certificate, Family,
    FamilyClass, TensorSpaceSpec,
};
use clap::{Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::PathBuf;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "tangential", version, about = "Equations and coordinate rings of tangential varieties")]
pub struct Cli {
    #[command(subcommand)]
    pub command: CommandArgs,
    /// Seed for sampled evaluation points
    #[arg(long, global = true, default_value_t = 1)]
    pub seed: u64,
    /// Directory for cached character tables (falls back to TANGENT_CACHE_DIR)
    #[arg(long, global = true)]
    pub cache_dir: Option<PathBuf>,
    /// Write the report here instead of stdout
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

#[derive(Subcommand, Debug)]
pub enum CommandArgs {
    /// Isotypic decomposition of the degree-r coordinate ring
    Decompose {
        /// Format, e.g. 1,1,1
        #[arg(long)]
        d: String,
        /// Vector space dimensions, e.g. 2,2,2 (default: 2 for every factor)
        #[arg(long)]
        dims: Option<String>,
        /// Degree or range, e.g. 4 or 2..4
        #[arg(long)]
        r: String,
    },
    /// Minimal generators of degree 2 to 4 as tabloids
    Generators {
        #[arg(long)]
        d: String,
        #[arg(long, default_value = "2..4")]
        degree: String,
    },
    /// Kernel of π, evaluation oracle and character count for one space
    Verify {
        #[arg(long)]
        d: String,
        #[arg(long)]
        dims: String,
        #[arg(long)]
        r: String,
    },
    /// Run the built-in check suite
    Selftest,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Table,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Command {
    Decompose,
    Generators,
    Verify,
    Selftest,
}

/// A validated invocation.
#[derive(Clone, Debug, Serialize)]
pub struct RunConfig {
    pub command: Command,
    pub d: Vec<usize>,
    pub dims: Vec<usize>,
    pub degrees: Vec<usize>,
    pub seed: u64,
    #[serde(skip)]
    pub cache_dir: Option<PathBuf>,
    #[serde(skip)]
    pub out: Option<PathBuf>,
    pub format: Format,
}

/// "1,1,1", "(1,1,1)" or "1 1 1".
pub fn parse_list(s: &str) -> Result<Vec<usize>> {
    let body = s.trim().trim_start_matches('(').trim_end_matches(')');
    let out: Vec<usize> = body
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<usize>().map_err(|_| Error::Invalid(format!("not a count: {t:?}"))))
        .collect::<Result<_>>()?;
    if out.is_empty() || out.contains(&0) {
        return Err(Error::Invalid(format!("{s:?} must list positive integers")));
    }
    Ok(out)
}

/// "4", "2..4" or "2-4".
pub fn parse_range(s: &str) -> Result<Vec<usize>> {
    let num = |t: &str| t.trim().parse::<usize>().map_err(|_| Error::Invalid(format!("not a degree: {t:?}")));
    let (lo, hi) = match s.split_once("..").or_else(|| s.split_once('-')) {
        Some((a, b)) => (num(a)?, num(b.trim_start_matches('='))?),
        None => (num(s)?, num(s)?),
    };
    if lo == 0 || lo > hi {
        return Err(Error::Invalid(format!("empty or zero degree range {s:?}")));
    }
    Ok((lo..=hi).collect())
}

impl RunConfig {
    pub fn from_cli(cli: &Cli) -> Result<Self> {
        let (command, d, dims, degrees) = match &cli.command {
            CommandArgs::Decompose { d, dims, r } => {
                let d = parse_list(d)?;
                let dims = match dims {
                    Some(m) => parse_list(m)?,
                    None => vec![2; d.len()],
                };
                (Command::Decompose, d, dims, parse_range(r)?)
            }
            CommandArgs::Generators { d, degree } => {
                let d = parse_list(d)?;
                let degrees = parse_range(degree)?;
                if degrees.iter().any(|&k| !(2..=4).contains(&k)) {
                    return Err(Error::Invalid("generator degrees lie in 2..4".into()));
                }
                let n = d.len();
                (Command::Generators, d, vec![2; n], degrees)
            }
            CommandArgs::Verify { d, dims, r } => (Command::Verify, parse_list(d)?, parse_list(dims)?, parse_range(r)?),
            CommandArgs::Selftest => (Command::Selftest, vec![], vec![], vec![]),
        };
        if d.len() != dims.len() {
            return Err(Error::Dimension(format!("--d has {} factors but --dims has {}", d.len(), dims.len())));
        }
        let cfg = RunConfig {
            command,
            d,
            dims,
            degrees,
            seed: cli.seed,
            cache_dir: cli.cache_dir.clone(),
            out: cli.out.clone(),
            format: cli.format,
        };
        if cfg.command != Command::Selftest {
            cfg.spec()?;
        }
        Ok(cfg)
    }

    pub fn spec(&self) -> Result<TensorSpaceSpec> {
        TensorSpaceSpec::new(self.d.clone(), self.dims.clone())
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Header {
    pub version: String,
    pub seed: u64,
    pub command: Command,
}

impl Header {
    fn new(cfg: &RunConfig) -> Self {
        Header { version: crate::VERSION.to_string(), seed: cfg.seed, command: cfg.command.clone() }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct DecomposeDegree {
    pub r: usize,
    pub families: Vec<Family>,
    pub classes: Vec<FamilyClass>,
    pub total: u128,
    pub sym_dim: u128,
    pub ideal_dim: u128,
    /// S_λ in the ideal: multiplicity in Sym^r(Sym^d V) minus m_λ.
    pub ideal_families: Vec<IdealFamily>,
}

#[derive(Clone, Debug, Serialize)]
pub struct IdealFamily {
    pub lambda: Vec<Vec<usize>>,
    pub multiplicity: u64,
    pub dim: u128,
}

fn ideal_families(spec: &TensorSpaceSpec, r: usize) -> Result<Vec<IdealFamily>> {
    let mut out = Vec::new();
    for lam in NPartition::all(r, &spec.d, usize::MAX) {
        let dim: u128 = lam.components().iter().zip(&spec.m).map(|(p, &m)| dim_gl(p, m)).product();
        if dim == 0 {
            continue;
        }
        let mult = mult_in_sym(&lam, r, &spec.d)?
            .checked_sub(u64::from(m_tau(&lam, r, &spec.d)))
            .ok_or_else(|| Error::Invalid(format!("m_λ exceeds the plethysm multiplicity at {lam:?}")))?;
        if mult > 0 {
            let lambda = lam.components().iter().map(|p| p.parts().to_vec()).collect();
            out.push(IdealFamily { lambda, multiplicity: mult, dim });
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, Serialize)]
pub struct DecomposeReport {
    #[serde(flatten)]
    pub header: Header,
    pub spec: TensorSpaceSpec,
    pub degrees: Vec<DecomposeDegree>,
}

pub fn cmd_decompose(cfg: &RunConfig) -> Result<DecomposeReport> {
    let spec = cfg.spec()?;
    let degrees = cfg
        .degrees
        .iter()
        .map(|&r| {
            let families = coordinate_families(&spec, r);
            let total: u128 = families.iter().map(|f| f.dim).sum();
            let sym_dim = spec.sym_dim(r);
            Ok(DecomposeDegree {
                r,
                classes: family_classes(&spec, &families),
                families,
                total,
                sym_dim,
                ideal_dim: sym_dim - total,
                ideal_families: ideal_families(&spec, r)?,
            })
        })
        .collect::<Result<_>>()?;
    Ok(DecomposeReport { header: Header::new(cfg), spec, degrees })
}

#[derive(Clone, Debug, Serialize)]
pub struct GeneratorsReport {
    #[serde(flatten)]
    pub header: Header,
    pub d: Vec<usize>,
    pub catalogs: Vec<Catalog>,
    pub total: usize,
}

pub fn cmd_generators(cfg: &RunConfig) -> Result<GeneratorsReport> {
    let catalogs = cfg.degrees.iter().map(|&k| generators_catalog(&cfg.d, k)).collect::<Result<Vec<_>>>()?;
    let total = catalogs.iter().map(Catalog::generator_count).sum();
    Ok(GeneratorsReport { header: Header::new(cfg), d: cfg.d.clone(), catalogs, total })
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    #[serde(flatten)]
    pub header: Header,
    pub certificates: Vec<Certificate>,
    pub passed: bool,
}

pub fn cmd_verify(cfg: &RunConfig) -> Result<VerifyReport> {
    let spec = cfg.spec()?;
    let certificates = cfg.degrees.iter().map(|&r| certify(&spec, r, cfg.seed)).collect::<Result<Vec<_>>>()?;
    let passed = certificates.iter().all(Certificate::passed);
    Ok(VerifyReport { header: Header::new(cfg), certificates, passed })
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct SelftestReport {
    #[serde(flatten)]
    pub header: Header,
    pub checks: Vec<Check>,
    pub passed: bool,
}

fn check(name: &str, f: impl FnOnce() -> Result<(bool, String)>) -> Check {
    let (passed, detail) = f().unwrap_or_else(|e| (false, e.to_string()));
    Check { name: name.to_string(), passed, detail }
}

fn part(p: &[usize]) -> Partition {
    Partition::from_unsorted(p.to_vec())
}

pub fn cmd_selftest(cfg: &RunConfig) -> Result<SelftestReport> {
    let seed = cfg.seed;
    let cache = TableCache::resolve(cfg.cache_dir.clone());
    let mut checks = Vec::new();

    for (d, m, top) in [(vec![1, 1], vec![2, 2], 3), (vec![3], vec![2], 4), (vec![1, 1, 1], vec![2, 2, 2], 4)] {
        let spec = TensorSpaceSpec::new(d, m)?;
        checks.push(check(&format!("reconcile and oracle {spec}"), || {
            let mut dims = Vec::new();
            let mut ok = true;
            for r in 1..=top {
                let c = certify(&spec, r, seed)?;
                ok &= c.passed();
                dims.push(c.ideal_dim);
            }
            Ok((ok, format!("ideal dims {dims:?}")))
        }));
    }

    checks.push(check("hyperdeterminant is the quartic graph", || {
        let spec = TensorSpaceSpec::new(vec![1, 1, 1], vec![2, 2, 2])?;
        let ideal = ideal_dimension(&spec, 4)?;
        let t = TabloidFilling::parse(&[1, 1, 1], 4, "12/34 x 12/34 x 13/24")?;
        let hw = graph_covariant_concrete(&ColoredGraph::from_tabloid(&t)?, &spec)?;
        let ratio = ideal.kernel.first().and_then(|k| k.terms.ratio_to(&hw.terms));
        Ok((ideal.dim() == 1 && ratio.is_some(), ratio.map_or("not proportional".into(), |q| format!("ratio {}", fmt_rat(&q)))))
    }));

    checks.push(check("straightening identities", || {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let shapes: [(&[usize], usize, NPartition); 3] = [
            (&[2], 3, NPartition::new(vec![part(&[4, 2])])),
            (&[1, 1, 1], 3, NPartition::new(vec![part(&[2, 1]); 3])),
            (&[2, 1], 3, NPartition::new(vec![part(&[3, 3]), part(&[2, 1])])),
        ];
        let mut count = 0;
        for (d, r, sh) in &shapes {
            for kind in 0..4u8 {
                for _ in 0..5 {
                    let Ok(rel) = Relation::random(kind, d, *r, sh, &mut rng) else { break };
                    if !straighten_check(&rel)? {
                        return Ok((false, format!("{rel:?}")));
                    }
                    count += 1;
                }
            }
        }
        Ok((true, format!("{count} relations")))
    }));

    checks.push(check("witness scalar", || {
        let lam = NPartition::from_parts(&[&[6, 2], &[12, 4], &[7, 1]])?;
        let (t, a) = witness_tabloid(&lam, 8, &[1, 2, 1])?;
        let image = pi_on_tabloid(&t, &a)?;
        let target = target_covariant(&TargetFilling::ones_then_twos(&t.shape(), &a)?)?;
        let ratio = image.ratio_to(&target);
        Ok((ratio == Some(int(-8)), ratio.map_or("not proportional".into(), |q| fmt_rat(&q))))
    }));

    checks.push(check("characters of S3", || {
        let table = cache.character_table(3);
        let fresh = CharacterTable::build(3);
        let l = part(&[2, 1]);
        let vals: Vec<Option<i64>> = [&[1, 1, 1][..], &[2, 1], &[3]].iter().map(|mu| table.value(&l, &part(mu))).collect();
        let same = [&[1, 1, 1][..], &[2, 1], &[3]].iter().all(|mu| fresh.value(&l, &part(mu)) == table.value(&l, &part(mu)));
        Ok((vals == vec![Some(2), Some(0), Some(-1)] && same, format!("{vals:?}")))
    }));

    checks.push(check("multiplicity routes agree", || {
        let mut n = 0;
        for d in [vec![1], vec![2], vec![1, 1], vec![2, 1]] {
            for r in 1..=3 {
                for lam in NPartition::all(r, &d, usize::MAX) {
                    if mult_in_sym(&lam, r, &d)? != mult_in_sym_characters(&lam, r, &d)? {
                        return Ok((false, format!("{lam:?}")));
                    }
                    n += 1;
                }
            }
        }
        Ok((true, format!("{n} shapes")))
    }));

    checks.push(check("generator counts", || {
        let hyper = generators_catalog(&[1, 1, 1], 4)?.generator_count();
        let veronese = generators_catalog(&[2], 4)?.generator_count();
        Ok((hyper == 1 && veronese == 0, format!("(1,1,1): {hyper}, (2): {veronese}")))
    }));

    let passed = checks.iter().all(|c| c.passed);
    Ok(SelftestReport { header: Header::new(cfg), checks, passed })
}

fn lambda_text(l: &[Vec<usize>]) -> String {
    l.iter()
        .map(|p| format!("({})", p.iter().map(usize::to_string).collect::<Vec<_>>().join(",")))
        .collect::<Vec<_>>()
        .join(" x ")
}

fn decompose_table(r: &DecomposeReport) -> String {
    let mut s = String::new();
    for deg in &r.degrees {
        let _ = writeln!(s, "{} r={}: {} families, total {} of {}", r.spec, deg.r, deg.families.len(), deg.total, deg.sym_dim);
        for f in &deg.families {
            let _ = writeln!(s, "  {:<32} {}", lambda_text(&f.lambda), f.dim);
        }
        if !deg.ideal_families.is_empty() {
            let _ = writeln!(s, "  ideal, dim {}:", deg.ideal_dim);
            for f in &deg.ideal_families {
                let _ = writeln!(s, "  {:<32} {} x {}", lambda_text(&f.lambda), f.multiplicity, f.dim);
            }
        }
    }
    s
}

fn generators_table(r: &GeneratorsReport) -> String {
    let mut s = String::new();
    for c in &r.catalogs {
        let _ = writeln!(s, "d={:?} degree {}: {} generators", r.d, c.degree, c.generator_count());
        for e in &c.entries {
            for f in &e.fillings {
                let _ = writeln!(s, "  {:<10} {}", e.family, f);
            }
        }
    }
    s
}

fn verify_table(r: &VerifyReport) -> String {
    let mut s = String::new();
    for c in &r.certificates {
        let _ = writeln!(
            s,
            "{} r={}: ideal {} oracle {} coordinate {} of {} {}",
            c.spec,
            c.r,
            c.ideal_dim,
            c.oracle_dim,
            c.coordinate_dim,
            c.sym_dim,
            if c.passed() { "ok" } else { "MISMATCH" }
        );
    }
    s
}

fn selftest_table(r: &SelftestReport) -> String {
    let mut s = String::new();
    for c in &r.checks {
        let _ = writeln!(s, "{} {}: {}", if c.passed { "PASS" } else { "FAIL" }, c.name, c.detail);
    }
    s
}

fn render<T: Serialize>(report: &T, format: Format, table: impl Fn(&T) -> String) -> Result<String> {
    match format {
        Format::Json => serde_json::to_string_pretty(report).map(|s| s + "\n").map_err(|e| Error::Io(e.to_string())),
        Format::Table => Ok(table(report)),
    }
}

/// Runs a validated config; returns the rendered report and whether it passed.
pub fn execute(cfg: &RunConfig) -> Result<(String, bool)> {
    match cfg.command {
        Command::Decompose => Ok((render(&cmd_decompose(cfg)?, cfg.format, decompose_table)?, true)),
        Command::Generators => Ok((render(&cmd_generators(cfg)?, cfg.format, generators_table)?, true)),
        Command::Verify => {
            let r = cmd_verify(cfg)?;
            Ok((render(&r, cfg.format, verify_table)?, r.passed))
        }
        Command::Selftest => {
            let r = cmd_selftest(cfg)?;
            Ok((render(&r, cfg.format, selftest_table)?, r.passed))
        }
    }
}

/// Parse, run and write; returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    let cfg = match RunConfig::from_cli(&cli) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_USAGE;
        }
    };
    let (text, passed) = match execute(&cfg) {
        Ok(x) => x,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_USAGE;
        }
    };
    let written = match &cfg.out {
        Some(path) => std::fs::write(path, &text).map_err(Error::from),
        None => {
            print!("{text}");
            Ok(())
        }
    };
    if let Err(e) = written {
        eprintln!("error: {e}");
        return EXIT_USAGE;
    }
    if passed {
        EXIT_OK
    } else {
        EXIT_FAILED
    }
}
