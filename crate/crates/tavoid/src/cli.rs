use std::collections::HashMap;
use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use tavoid_core::atlas::{srg_embedding, Adjacency, Atlas, Code, CodeId, SphericalCode};
use tavoid_core::certify::{
    certify_design, certify_energy, certify_max, published_profile, reproduce, ProfileSource, RowStatus,
};
use tavoid_core::designs::{design_strength, moments, CodeProfile, Potential, ProfileMode};
use tavoid_core::gegenbauer::expand;
use tavoid_core::{parse_rational, IntervalSet};

use crate::codefile::{parse_eigenspace, CodeFile};
use crate::error::CliError;
use crate::output;
use crate::parallel::{profile_parallel, with_jobs};
use crate::polyexpr::PolyExpr;

pub const DEFAULT_SEED: u64 = 1;
/// Ordered pairs enumerated without `--long`.
pub const PAIR_BUDGET: u64 = 100_000_000;
const DEFAULT_SAMPLE: usize = 64;

#[derive(Debug, Parser)]
#[command(name = "tavoid", version, about = "Exact certificates for T-avoiding spherical codes and designs")]
pub struct Cli {
    /// Human-readable output instead of JSON.
    #[arg(long, global = true)]
    pub table: bool,
    /// Worker threads for pair enumeration.
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    /// Seed for sampled profiles.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum CertKind {
    Max,
    Design,
    Energy,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build a code and write it as codefile/v1.
    Construct {
        /// leech-min, bw16, dual-golay, c4600, c47104, c93150, c552, c11178,
        /// c48600, c2816, c2025, or srg:<adjacency file>:<first|second>
        code: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Inner products, distance distribution, strength and moments.
    Profile {
        codefile: PathBuf,
        /// Examine only this many rows.
        #[arg(long)]
        sample: Option<usize>,
        /// Report M_1..M_M.
        #[arg(long)]
        moments: Option<usize>,
        /// Allow full enumeration beyond the pair budget.
        #[arg(long)]
        long: bool,
    },
    /// Check an LP certificate.
    Certify {
        kind: CertKind,
        #[arg(long)]
        dim: u32,
        #[arg(long, allow_hyphen_values = true)]
        poly: String,
        #[arg(long = "T", allow_hyphen_values = true)]
        t: String,
        #[arg(long, allow_hyphen_values = true)]
        s: Option<String>,
        #[arg(long)]
        tau: Option<usize>,
        /// riesz:k, exp:c or poly:EXPR
        #[arg(long, allow_hyphen_values = true)]
        potential: Option<String>,
        #[arg(long = "N")]
        n: Option<u64>,
    },
    /// Recompute the published certificates.
    Reproduce {
        #[arg(long, conflicts_with = "id")]
        all: bool,
        /// An entry id, or a prefix ending before a `/`.
        #[arg(long)]
        id: Option<String>,
        /// Enumerate every pair of every attaining code.
        #[arg(long)]
        long: bool,
    },
    /// Gegenbauer coefficients of a factored polynomial.
    Expand {
        #[arg(long)]
        dim: u32,
        #[arg(long, allow_hyphen_values = true)]
        poly: String,
    },
}

/// Parses arguments, runs, and returns the exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            if e.use_stderr() {
                let _ = write!(err, "{}", e.render());
                return 2;
            }
            let _ = write!(out, "{}", e.render());
            return 0;
        }
    };
    let jobs = cli.jobs;
    match with_jobs(jobs, || execute(&cli)) {
        Ok((text, code)) => {
            let _ = out.write_all(text.as_bytes());
            code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

fn render(cli: &Cli, v: &Value) -> String {
    if cli.table {
        output::table(v) + "\n"
    } else {
        v.to_string() + "\n"
    }
}

fn execute(cli: &Cli) -> Result<(String, i32), CliError> {
    match &cli.command {
        Command::Construct { code, out } => construct(cli, code, out.as_ref()),
        Command::Profile { codefile, sample, moments, long } => profile_cmd(cli, codefile, *sample, *moments, *long),
        Command::Certify { kind, dim, poly, t, s, tau, potential, n } => {
            certify_cmd(cli, *kind, *dim, poly, t, s.as_deref(), *tau, potential.as_deref(), *n)
        }
        Command::Reproduce { all, id, long } => reproduce_cmd(cli, *all, id.as_deref(), *long),
        Command::Expand { dim, poly } => {
            let e = PolyExpr::parse(poly)?;
            let exp = expand(&e.to_poly(), *dim);
            let text = if cli.table {
                let parts: Vec<String> = exp.coeffs.iter().map(ToString::to_string).collect();
                format!("({})\n", parts.join(", "))
            } else {
                render(cli, &json!({ "dim": dim, "polynomial": e.to_string(), "coefficients": output::rationals(&exp.coeffs) }))
            };
            Ok((text, 0))
        }
    }
}

/// Maps a command-line code name to a built code.
pub fn build_named(name: &str, atlas: &mut Atlas) -> Result<(String, Code), CliError> {
    if let Some(rest) = name.strip_prefix("srg:") {
        let (file, which) =
            rest.rsplit_once(':').ok_or_else(|| CliError::Usage("expected srg:<file>:<first|second>".into()))?;
        let text = std::fs::read_to_string(file).map_err(|e| CliError::Input(format!("{file}: {e}")))?;
        let adj = Adjacency::parse(&text)?;
        let params = adj.srg_params()?;
        return Ok((name.to_owned(), Code::Gram(srg_embedding(&params, &adj, parse_eigenspace(which)?)?)));
    }
    let id = if name == "leech-min" {
        CodeId::Leech
    } else {
        name.parse::<CodeId>().map_err(|_| CliError::Usage(format!("unknown code {name:?}")))?
    };
    Ok((id.name().to_owned(), atlas.build(id)?))
}

fn construct(cli: &Cli, name: &str, out: Option<&PathBuf>) -> Result<(String, i32), CliError> {
    let (label, code) = build_named(name, &mut Atlas::new())?;
    let file = CodeFile::from_code(&code, Some(&label));
    match out {
        Some(path) => {
            file.write(path)?;
            let summary = json!({ "code": label, "N": code.len(), "dim": code.dim(), "file": path.display().to_string() });
            Ok((render(cli, &summary), 0))
        }
        None => Ok((serde_json::to_string(&file).expect("serializable") + "\n", 0)),
    }
}

fn pairs(len: usize) -> u64 {
    let n = len as u64;
    n.saturating_mul(n.saturating_sub(1))
}

fn profile_cmd(
    cli: &Cli,
    path: &Path,
    sample: Option<usize>,
    upto: Option<usize>,
    long: bool,
) -> Result<(String, i32), CliError> {
    let code = CodeFile::read(path)?.to_code()?;
    let mut notes = Vec::new();
    let mode = match sample {
        Some(k) => ProfileMode::Sampled { points: k, seed: cli.seed },
        None if !long && pairs(code.len()) > PAIR_BUDGET => {
            notes.push(format!("{DEFAULT_SAMPLE} sampled rows; pass --long to enumerate all pairs"));
            ProfileMode::Sampled { points: DEFAULT_SAMPLE, seed: cli.seed }
        }
        None => ProfileMode::Full,
    };
    let p = profile_parallel(&code, mode);
    let mut v = output::profile(&p);
    let upto_m = upto.unwrap_or(0);
    let check = upto_m.max(12);
    if p.is_full() {
        v["strength"] = json!(design_strength(&p, check)?);
        if upto_m > 0 {
            v["moments"] = output::rationals(&moments(&p, upto_m)?);
        }
    } else if let Some(row) = &p.common_row {
        // Valid only if every point sees the sampled distribution.
        let q = CodeProfile::from_frequencies(p.n, p.len, row.clone());
        v["strength_if_distance_invariant"] = json!(design_strength(&q, check)?);
        if upto_m > 0 {
            v["moments_if_distance_invariant"] = output::rationals(&moments(&q, upto_m)?);
        }
    }
    if !cli.table {
        v.as_object_mut().expect("object").remove("pair_counts");
    }
    if !notes.is_empty() {
        v["notes"] = json!(notes);
    }
    Ok((render(cli, &v), 0))
}

fn parse_potential(text: &str) -> Result<Potential, CliError> {
    let (kind, arg) = text.split_once(':').ok_or_else(|| CliError::Usage(format!("bad potential {text:?}")))?;
    let usage = |e: tavoid_core::Error| CliError::Usage(format!("potential {text:?}: {e}"));
    match kind {
        "riesz" => {
            let k: u32 = arg.parse().map_err(|_| CliError::Usage(format!("bad exponent {arg:?}")))?;
            Potential::inverse_chordal(k).map_err(usage)
        }
        "exp" => Potential::exponential(parse_rational(arg).map_err(usage)?).map_err(usage),
        "poly" => Ok(Potential::Polynomial(PolyExpr::parse(arg)?.to_poly())),
        _ => Err(CliError::Usage(format!("unknown potential kind {kind:?}"))),
    }
}

#[allow(clippy::too_many_arguments)]
fn certify_cmd(
    cli: &Cli,
    kind: CertKind,
    dim: u32,
    poly: &str,
    t: &str,
    s: Option<&str>,
    tau: Option<usize>,
    potential: Option<&str>,
    n: Option<u64>,
) -> Result<(String, i32), CliError> {
    let expr = PolyExpr::parse(poly)?;
    let f = expr.to_poly();
    let t = IntervalSet::parse(t).map_err(|e| CliError::Usage(format!("T: {e}")))?;
    let missing = |flag: &str| CliError::Usage(format!("{flag} is required for this certificate"));
    let cert = match kind {
        CertKind::Max => {
            let s = parse_rational(s.ok_or_else(|| missing("--s"))?).map_err(|e| CliError::Usage(e.to_string()))?;
            certify_max(&f, dim, &s, &t)
        }
        CertKind::Design => certify_design(&f, dim, tau.ok_or_else(|| missing("--tau"))?, &t),
        CertKind::Energy => {
            let h = parse_potential(potential.ok_or_else(|| missing("--potential"))?)?;
            certify_energy(&f, &h, dim, n.ok_or_else(|| missing("--N"))?, &t)
        }
    };
    let cert = cert.map_err(|e| match e {
        tavoid_core::Error::Precondition(_) | tavoid_core::Error::InvalidIntervalSet(_) => CliError::Usage(e.to_string()),
        other => CliError::Core(other),
    })?;
    let mut v = output::certificate(&cert);
    v["polynomial"] = json!(expr.to_string());
    Ok((render(cli, &v), if cert.is_valid() { 0 } else { 1 }))
}

/// Attaining-code profiles for `reproduce`: full enumeration within the
/// pair budget or under `--long`, otherwise sampled rows checked against
/// the published distribution.
pub struct AtlasProfiles {
    atlas: Atlas,
    long: bool,
    seed: u64,
    cache: HashMap<CodeId, Option<CodeProfile>>,
}

impl AtlasProfiles {
    pub fn new(long: bool, seed: u64) -> Self {
        AtlasProfiles { atlas: Atlas::new(), long, seed, cache: HashMap::new() }
    }

    fn compute(&mut self, id: CodeId) -> tavoid_core::Result<Option<CodeProfile>> {
        if id == CodeId::Leech {
            return Ok(None);
        }
        let code = self.atlas.build(id)?;
        if self.long || pairs(code.len()) <= PAIR_BUDGET {
            return Ok(Some(profile_parallel(&code, ProfileMode::Full)));
        }
        let sampled = profile_parallel(&code, ProfileMode::Sampled { points: DEFAULT_SAMPLE, seed: self.seed });
        match published_profile(id) {
            Some(p) if p.common_row.is_some() && p.common_row == sampled.common_row => Ok(Some(p)),
            _ => Ok(Some(sampled)),
        }
    }
}

impl ProfileSource for AtlasProfiles {
    fn profile(&mut self, id: CodeId) -> tavoid_core::Result<Option<CodeProfile>> {
        if let Some(p) = self.cache.get(&id) {
            return Ok(p.clone());
        }
        let p = self.compute(id)?;
        self.cache.insert(id, p.clone());
        Ok(p)
    }
}

fn reproduce_cmd(cli: &Cli, all: bool, id: Option<&str>, long: bool) -> Result<(String, i32), CliError> {
    if !all && id.is_none() {
        return Err(CliError::Usage("reproduce needs --all or --id ID".into()));
    }
    let mut src = AtlasProfiles::new(long, cli.seed);
    let rows = reproduce(id, &mut src);
    if rows.is_empty() {
        return Err(CliError::Usage(format!("no registry entry matches {:?}", id.unwrap_or(""))));
    }
    let failed = rows.iter().filter(|r| r.status == RowStatus::Fail).count();
    let mut text = String::new();
    for r in &rows {
        if cli.table {
            text.push_str(&output::row_table(r));
        } else {
            text.push_str(&output::row(r).to_string());
        }
        text.push('\n');
    }
    if cli.table {
        let errata = rows.iter().filter(|r| r.status == RowStatus::Erratum).count();
        text.push_str(&format!("{} entries, {} failed, {} errata\n", rows.len(), failed, errata));
    }
    Ok((text, if failed == 0 { 0 } else { 1 }))
}
