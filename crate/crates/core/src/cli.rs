//! The `cdcodes` command line: `decompose`, `construct`, `analyze` and
//! `verify-paper`.
//!
//! Exit codes: 0 success, 1 a verification check failed, 2 invalid input,
//! 3 hypothesis unmet, 4 budget exceeded.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::algebra::{decompose_twisted, ComponentKind, Decomposition, Twist};
use crate::analysis::{
    balanced_check, census, census_parts, find_good_beta, good_n_predicates, good_n_sequence, min_weight,
    parse_delta, CensusBudget, Profile, SearchStrategy, K_STAR_BUDGET,
};
use crate::code::format::{read_code, to_json, to_text, Verification};
use crate::code::{
    build_lcd_code, plain_code, self_dual_code, self_orthogonal_code, BetaVector, Family, KStar, LinearCode,
};
use crate::dihedral::count_cab_codes;
use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::util::prime_power;
use crate::verify::{verify_suite, VerifyOptions, DEFAULT_Q_GRID};

#[derive(Parser, Debug)]
#[command(name = "cdcodes", version, about = "Consta-dihedral and dihedral codes over finite fields")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Decompose the algebra into blocks.
    Decompose(DecomposeArgs),
    /// Build a code and write its generator matrix.
    Construct(ConstructArgs),
    /// Minimum weight, hull, balance, census, predicates and counts.
    Analyze(AnalyzeArgs),
    /// Run the fixed check suite.
    VerifyPaper(VerifyArgs),
}

#[derive(Args, Debug, Clone)]
pub struct FieldArgs {
    /// Field order as a prime power (`9`) or `p^m` (`3^2`).
    #[arg(long)]
    pub q: Option<String>,
    /// Characteristic (with `--m`).
    #[arg(long)]
    pub p: Option<u64>,
    /// Extension degree (with `--p`).
    #[arg(long)]
    pub m: Option<u32>,
}

#[derive(Args, Debug, Clone)]
pub struct OutputArgs {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Output file; standard output when absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Worker threads for enumeration.
    #[arg(long)]
    pub jobs: Option<usize>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum TwistArg {
    Consta,
    Dihedral,
}

impl From<TwistArg> for Twist {
    fn from(t: TwistArg) -> Self {
        match t {
            TwistArg::Consta => Twist::Consta,
            TwistArg::Dihedral => Twist::Dihedral,
        }
    }
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum FamilyArg {
    SelfDual,
    Lcd,
    SelfOrthogonal,
    Plain,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Self {
        match f {
            FamilyArg::SelfDual => Family::SelfDual,
            FamilyArg::Lcd => Family::Lcd,
            FamilyArg::SelfOrthogonal => Family::SelfOrthogonal,
            FamilyArg::Plain => Family::Plain,
        }
    }
}

#[derive(Args, Debug)]
pub struct DecomposeArgs {
    #[command(flatten)]
    pub field: FieldArgs,
    /// Odd length parameter; codes have length `2n`.
    #[arg(long)]
    pub n: usize,
    /// Which algebra to decompose.
    #[arg(long, value_enum, default_value_t = TwistArg::Consta)]
    pub twist: TwistArg,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Args, Debug)]
pub struct ConstructArgs {
    #[command(flatten)]
    pub field: FieldArgs,
    /// Odd length parameter; codes have length `2n`.
    #[arg(long)]
    pub n: usize,
    /// Code family to build.
    #[arg(long, value_enum)]
    pub family: FamilyArg,
    /// `identity`, `random` (with `--seed`), `random:SEED`, a comma-separated
    /// list of unit indices (one per nontrivial block), or `exhaustive`.
    #[arg(long, default_value = "identity")]
    pub beta: String,
    /// Seed for `--beta random`.
    #[arg(long)]
    pub seed: Option<u64>,
    /// For `lcd`: adjoin the whole trivial block.
    #[arg(long)]
    pub with_a0: bool,
    /// Largest `|K^*|` enumerated by `--beta exhaustive`.
    #[arg(long, default_value_t = K_STAR_BUDGET)]
    pub budget: u128,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Check {
    /// Minimum weight, relative distance and rate of `--code`.
    Weight,
    /// Hull dimension and duality verdict of `--code`.
    Hull,
    /// Balance of `--code` under the group permutations.
    Balanced,
    /// Census of the twists of the plain or self-dual code at `--q --n`.
    Census,
    /// A twist with relative distance above `--delta`.
    GoodBeta,
    /// Length predicates for `--q --n`, or the qualifying lengths up to `--limit`.
    Predicates,
    /// Dihedral codes `A_0 ê_0 + sum A_t f_ab` at `--q --n`.
    Count,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum ProfileArg {
    SelfOrthogonal,
    Lcd,
    SelfDual,
}

impl From<ProfileArg> for Profile {
    fn from(p: ProfileArg) -> Self {
        match p {
            ProfileArg::SelfOrthogonal => Profile::SelfOrthogonal,
            ProfileArg::Lcd => Profile::Lcd,
            ProfileArg::SelfDual => Profile::SelfDual,
        }
    }
}

#[derive(Args, Debug)]
pub struct AnalyzeArgs {
    /// Generator matrix file (text or JSON).
    #[arg(long)]
    pub code: Option<PathBuf>,
    #[command(flatten)]
    pub field: FieldArgs,
    /// Odd length parameter for checks that build codes.
    #[arg(long)]
    pub n: Option<usize>,
    /// Checks to run; defaults to weight,hull,balanced with `--code`, census
    /// with `--delta`, predicates otherwise.
    #[arg(long, value_enum, value_delimiter = ',')]
    pub check: Vec<Check>,
    /// Relative distances, as decimals or `a/b`.
    #[arg(long, value_delimiter = ',')]
    pub delta: Vec<String>,
    /// Algebra of `--code`; taken from the file's origin, else consta.
    #[arg(long, value_enum)]
    pub twist: Option<TwistArg>,
    /// Census of the self-dual code (with `C_0`) instead of the plain code.
    #[arg(long)]
    pub hatted: bool,
    /// Largest number of codewords enumerated per code.
    #[arg(long, default_value_t = 1 << 24)]
    pub budget: u128,
    /// Seed for sampled searches and counts.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Sampled twists for `good-beta`; 0 searches exhaustively.
    #[arg(long, default_value_t = 0)]
    pub tries: usize,
    /// Samples for `count` beyond the exhaustive limit.
    #[arg(long, default_value_t = 200)]
    pub samples: usize,
    /// With `predicates` and no `--n`: list qualifying lengths up to this.
    #[arg(long)]
    pub limit: Option<u64>,
    /// Family whose qualifying lengths `--limit` lists.
    #[arg(long, value_enum, default_value_t = ProfileArg::SelfOrthogonal)]
    pub profile: ProfileArg,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// Field orders for the grid checks.
    #[arg(long, value_delimiter = ',')]
    pub q_grid: Vec<u64>,
    /// Flip the sign of the `a12` term in the paired-block map under test.
    #[arg(long)]
    pub tamper_sign: bool,
    /// Seed for sampled checks.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[command(flatten)]
    pub output: OutputArgs,
}

/// Runs the command line with the given arguments; returns the exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { stdout.write_all(text.as_bytes()) } else { stderr.write_all(text.as_bytes()) };
            return code;
        }
    };
    let output = match &cli.command {
        Command::Decompose(a) => &a.output,
        Command::Construct(a) => &a.output,
        Command::Analyze(a) => &a.output,
        Command::VerifyPaper(a) => &a.output,
    };
    let result = with_jobs(output.jobs, || dispatch(&cli.command));
    match result {
        Ok((text, code)) => match emit(output, &text, stdout) {
            Ok(()) => code,
            Err(e) => {
                let _ = writeln!(stderr, "error: {e}");
                2
            }
        },
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            exit_code(&e)
        }
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::HypothesisUnmet(_) => 3,
        Error::BudgetExceeded { .. } => 4,
        _ => 2,
    }
}

fn with_jobs<T: Send>(jobs: Option<usize>, f: impl FnOnce() -> Result<T> + Send) -> Result<T> {
    match jobs {
        None => f(),
        Some(0) => Err(Error::InvalidParameter("--jobs must be positive".into())),
        Some(j) => rayon::ThreadPoolBuilder::new()
            .num_threads(j)
            .build()
            .map_err(|e| Error::InvalidParameter(e.to_string()))?
            .install(f),
    }
}

/// `<out>.summary.json`, next to a census CSV.
pub fn summary_path(out: &std::path::Path) -> PathBuf {
    let mut name = out.as_os_str().to_owned();
    name.push(".summary.json");
    PathBuf::from(name)
}

fn emit(output: &OutputArgs, text: &str, stdout: &mut dyn Write) -> std::io::Result<()> {
    match &output.out {
        Some(path) => std::fs::write(path, text),
        None => stdout.write_all(text.as_bytes()),
    }
}

fn dispatch(cmd: &Command) -> Result<(String, i32)> {
    match cmd {
        Command::Decompose(a) => cmd_decompose(a).map(|s| (s, 0)),
        Command::Construct(a) => cmd_construct(a).map(|s| (s, 0)),
        Command::Analyze(a) => cmd_analyze(a).map(|s| (s, 0)),
        Command::VerifyPaper(a) => cmd_verify(a),
    }
}

/// The field named by `--q` or `--p/--m`.
pub fn parse_field(args: &FieldArgs) -> Result<FieldSpec> {
    let (p, m) = match (&args.q, args.p, args.m) {
        (Some(q), None, None) => parse_q(q)?,
        (None, Some(p), m) => (p, m.unwrap_or(1)),
        (Some(q), Some(p), m) => {
            let (qp, qm) = parse_q(q)?;
            if qp != p || m.is_some_and(|m| m != qm) {
                return Err(Error::InvalidParameter(format!("--q {q} disagrees with --p/--m")));
            }
            (qp, qm)
        }
        (None, None, _) | (Some(_), None, Some(_)) => {
            return Err(Error::InvalidParameter("give --q, or --p and --m".into()));
        }
    };
    FieldSpec::new(p, m, None)
}

/// `9` or `3^2` as `(p, m)`.
pub fn parse_q(s: &str) -> Result<(u64, u32)> {
    let bad = || Error::Parse(format!("'{s}' is not a prime power"));
    let (p, m) = match s.split_once('^') {
        Some((p, m)) => (p.trim().parse().map_err(|_| bad())?, m.trim().parse().map_err(|_| bad())?),
        None => prime_power(s.trim().parse().map_err(|_| bad())?).ok_or_else(bad)?,
    };
    if m == 0 {
        return Err(bad());
    }
    Ok((p, m))
}

fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report serializes");
    s.push('\n');
    s
}

fn no_csv(what: &str) -> Error {
    Error::InvalidParameter(format!("{what} has no csv output"))
}

fn kind_name(kind: &ComponentKind) -> String {
    match kind {
        ComponentKind::TrivialField => "trivial (field)".into(),
        ComponentKind::TrivialSplit { r } => format!("trivial (split, r = {})", r.0),
        ComponentKind::TrivialDihedral => "trivial".into(),
        ComponentKind::Paired { e, e_bar } => format!("paired (e{e}, e{e_bar})"),
        ComponentKind::SelfConj { e } | ComponentKind::SelfConjDihedral { e } => format!("self-conjugate (e{e})"),
    }
}

fn cmd_decompose(a: &DecomposeArgs) -> Result<String> {
    let field = parse_field(&a.field)?;
    let d = decompose_twisted(a.n, &field, a.twist.into())?;
    let r = d.report();
    match a.output.format {
        Format::Json => Ok(json(&r)),
        Format::Csv => Err(no_csv("decompose")),
        Format::Text => {
            let mut s = String::new();
            let twist = match r.twist {
                Twist::Consta => "consta-dihedral",
                Twist::Dihedral => "dihedral",
            };
            writeln!(s, "{twist} algebra, n = {}, q = {}, lambda(n) = {}", r.n, r.q, r.lambda).unwrap();
            writeln!(s, "block  kind                      k  dim  identity (a | b)").unwrap();
            for c in &r.components {
                let enc = |v: &[u32]| v.iter().map(u32::to_string).collect::<Vec<_>>().join(" ");
                writeln!(
                    s,
                    "{:<6} {:<25} {:<2} {:<4} {} | {}",
                    c.index,
                    kind_name(&c.kind),
                    c.k,
                    c.dim,
                    enc(&c.identity_a),
                    enc(&c.identity_b)
                )
                .unwrap();
                if let (Some(g), Some(s1), Some(s2)) = (c.g, c.s, c.s_prime) {
                    writeln!(s, "       g = {g}, s = {s1}, s' = {s2}").unwrap();
                }
            }
            writeln!(
                s,
                "sum of 4 k_t = {} (2n - 2 = {}): {}",
                r.sum_4k,
                r.expected_sum_4k,
                if r.sum_4k == r.expected_sum_4k { "ok" } else { "MISMATCH" }
            )
            .unwrap();
            writeln!(s, "2 k_t >= lambda(n) for every block: {}", if r.lambda_bound_holds { "ok" } else { "NO" })
                .unwrap();
            Ok(s)
        }
    }
}

/// A parsed `--beta` value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BetaSpec {
    Identity,
    Random(u64),
    List(Vec<u128>),
    Exhaustive,
}

pub fn parse_beta(s: &str, seed: Option<u64>) -> Result<BetaSpec> {
    let s = s.trim();
    match s {
        "identity" => Ok(BetaSpec::Identity),
        "exhaustive" => Ok(BetaSpec::Exhaustive),
        "random" => seed
            .map(BetaSpec::Random)
            .ok_or_else(|| Error::InvalidParameter("--beta random needs --seed".into())),
        _ => {
            if let Some(rest) = s.strip_prefix("random:") {
                let seed = rest.parse().map_err(|_| Error::Parse(format!("bad seed '{rest}'")))?;
                return Ok(BetaSpec::Random(seed));
            }
            s.split(',')
                .map(|t| t.trim().parse::<u128>().map_err(|_| Error::Parse(format!("bad --beta entry '{t}'"))))
                .collect::<Result<Vec<_>>>()
                .map(BetaSpec::List)
        }
    }
}

fn build_family(d: &Decomposition, family: Family, beta: Option<(&KStar, &BetaVector)>, with_a0: bool) -> Result<LinearCode> {
    match family {
        Family::SelfDual => self_dual_code(d, beta),
        Family::Lcd => build_lcd_code(d, beta, with_a0),
        Family::SelfOrthogonal => self_orthogonal_code(d, beta),
        Family::Plain => plain_code(d, beta),
    }
}

#[derive(Serialize)]
struct TwistRow {
    index: u128,
    beta: Vec<u128>,
    #[serde(flatten)]
    verification: Verification,
}

fn cmd_construct(a: &ConstructArgs) -> Result<String> {
    let field = parse_field(&a.field)?;
    let spec = parse_beta(&a.beta, a.seed)?;
    let family: Family = a.family.into();
    if a.with_a0 && family != Family::Lcd {
        return Err(Error::InvalidParameter("--with-a0 applies to --family lcd".into()));
    }
    let d = decompose_twisted(a.n, &field, Twist::Consta)?;
    let kstar = KStar::new(&d)?;
    let beta = match &spec {
        BetaSpec::Identity => None,
        BetaSpec::Random(seed) => Some(kstar.random_beta(&mut ChaCha8Rng::seed_from_u64(*seed))),
        BetaSpec::List(units) => {
            let b = BetaVector { units: units.clone() };
            kstar.validate(&b)?;
            Some(b)
        }
        BetaSpec::Exhaustive => return construct_exhaustive(a, &d, &kstar, family),
    };
    let mut code = build_family(&d, family, beta.as_ref().map(|b| (&kstar, b)), a.with_a0)?;
    if let (BetaSpec::Random(seed), Some(o)) = (&spec, code.origin.as_mut()) {
        o.seed = Some(*seed);
    }
    let v = Verification::of(&code);
    match a.output.format {
        Format::Json => {
            let mut s = to_json(&code, Some(v));
            s.push('\n');
            Ok(s)
        }
        Format::Text => {
            let mut s = to_text(&code);
            writeln!(s, "# family {} dim {} hull {} verdict {}", family.name(), v.dim, v.hull_dim, v.verdict).unwrap();
            Ok(s)
        }
        Format::Csv => Err(no_csv("a single code")),
    }
}

fn construct_exhaustive(a: &ConstructArgs, d: &Decomposition, kstar: &KStar, family: Family) -> Result<String> {
    use rayon::prelude::*;
    let size = kstar.size();
    if size > a.budget {
        return Err(Error::BudgetExceeded { needed: size, budget: a.budget });
    }
    let rows = (0..size)
        .into_par_iter()
        .map(|i| {
            let beta = kstar.beta(i);
            let code = build_family(d, family, Some((kstar, &beta)), a.with_a0)?;
            Ok(TwistRow { index: i, beta: beta.units, verification: Verification::of(&code) })
        })
        .collect::<Result<Vec<_>>>()?;
    let beta_str = |b: &[u128]| b.iter().map(u128::to_string).collect::<Vec<_>>().join(" ");
    Ok(match a.output.format {
        Format::Json => json(&rows),
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["index", "beta", "dim", "hull_dim", "verdict"]).unwrap();
            for r in &rows {
                w.write_record([
                    r.index.to_string(),
                    beta_str(&r.beta),
                    r.verification.dim.to_string(),
                    r.verification.hull_dim.to_string(),
                    r.verification.verdict.clone(),
                ])
                .unwrap();
            }
            String::from_utf8(w.into_inner().unwrap()).unwrap()
        }
        Format::Text => {
            let mut s = String::new();
            let mut verdicts: std::collections::BTreeMap<&str, usize> = Default::default();
            for r in &rows {
                *verdicts.entry(&r.verification.verdict).or_default() += 1;
            }
            writeln!(s, "family {}, {} twists", family.name(), rows.len()).unwrap();
            for (v, c) in verdicts {
                writeln!(s, "  {v}: {c}").unwrap();
            }
            for r in &rows {
                writeln!(
                    s,
                    "{} [{}] dim {} hull {} {}",
                    r.index,
                    beta_str(&r.beta),
                    r.verification.dim,
                    r.verification.hull_dim,
                    r.verification.verdict
                )
                .unwrap();
            }
            s
        }
    })
}

fn cmd_analyze(a: &AnalyzeArgs) -> Result<String> {
    let checks = if !a.check.is_empty() {
        a.check.clone()
    } else if a.code.is_some() {
        vec![Check::Weight, Check::Hull, Check::Balanced]
    } else if !a.delta.is_empty() {
        vec![Check::Census]
    } else {
        vec![Check::Predicates]
    };
    let deltas = a.delta.iter().map(|d| parse_delta(d)).collect::<Result<Vec<_>>>()?;
    if a.output.format == Format::Csv && checks != [Check::Census] {
        return Err(no_csv("analyze (except a lone census)"));
    }
    let code = match &a.code {
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Error::InvalidParameter(format!("cannot read {}: {e}", path.display())))?;
            Some(read_code(&text)?)
        }
        None => None,
    };
    let need_code = || code.as_ref().ok_or_else(|| Error::InvalidParameter("this check needs --code".into()));
    let need_n = || a.n.ok_or_else(|| Error::InvalidParameter("this check needs --n".into()));
    let mut report = serde_json::Map::new();
    let mut text = String::new();
    for check in &checks {
        match check {
            Check::Weight => {
                let w = min_weight(need_code()?, a.budget)?;
                writeln!(
                    text,
                    "minimum weight: {}{} (relative distance {}, rate {}, {:?}, {} words)",
                    w.min_weight,
                    if w.is_exact() { String::new() } else { format!(" (lower bound {})", w.lower_bound) },
                    w.relative_distance,
                    w.rate,
                    w.method,
                    w.words_examined
                )
                .unwrap();
                report.insert("weight".into(), serde_json::to_value(&w).unwrap());
            }
            Check::Hull => {
                let c = need_code()?;
                let v = Verification::of(c);
                writeln!(text, "dimension {} of length {}, hull {}: {}", v.dim, c.n_len(), v.hull_dim, v.verdict)
                    .unwrap();
                report.insert("hull".into(), serde_json::to_value(&v).unwrap());
            }
            Check::Balanced => {
                let c = need_code()?;
                let twist = a
                    .twist
                    .map(Twist::from)
                    .or_else(|| c.origin.as_ref().and_then(|o| o.twist))
                    .unwrap_or(Twist::Consta);
                match balanced_check(c, twist, a.budget) {
                    Ok(r) => {
                        writeln!(
                            text,
                            "balanced: {} (coverage t = {}), information set {:?}",
                            if r.balanced() { "yes" } else { "no" },
                            r.t.map_or("non-uniform".to_string(), |t| t.to_string()),
                            r.information_set
                        )
                        .unwrap();
                        for e in &r.entropy_checks {
                            writeln!(
                                text,
                                "  |B^(<= {:.4})| = {} <= q^(k h_q) = {:.4}: {}",
                                e.delta,
                                e.count,
                                e.bound,
                                if e.holds { "ok" } else { "VIOLATED" }
                            )
                            .unwrap();
                        }
                        report.insert("balanced".into(), serde_json::to_value(&r).unwrap());
                    }
                    Err(Error::NotLeftIdeal) => {
                        writeln!(text, "balanced: not a left ideal").unwrap();
                        report.insert("balanced".into(), serde_json::Value::String("not a left ideal".into()));
                    }
                    Err(e) => return Err(e),
                }
            }
            Check::Census => {
                if deltas.is_empty() {
                    return Err(Error::InvalidParameter("census needs --delta".into()));
                }
                let d = decompose_twisted(need_n()?, &parse_field(&a.field)?, Twist::Consta)?;
                let kstar = KStar::new(&d)?;
                let parts = census_parts(&d, a.hatted)?;
                let budget = CensusBudget { words: a.budget, ambient: a.budget, per_d: a.budget, ..Default::default() };
                let mut r = census(&d, &kstar, &parts, &deltas, budget)?;
                if a.output.format == Format::Csv {
                    let csv = r.to_csv();
                    if let Some(out) = &a.output.out {
                        r.rows.clear();
                        let summary = serde_json::to_string_pretty(&r).unwrap() + "\n";
                        std::fs::write(summary_path(out), summary).map_err(|e| Error::InvalidParameter(e.to_string()))?;
                    }
                    return Ok(csv);
                }
                writeln!(text, "census over |K*| = {} twists, lambda(n) = {}{}", r.k_star, r.lambda, if r.hatted { ", with C_0" } else { "" }).unwrap();
                for s in &r.deltas {
                    writeln!(
                        text,
                        "  delta {:.4}: count {}, h_q {:.4}, exponent term {:.4} ({}), bound {:.4e} {}, union bound {}, per-element bound {}",
                        s.delta,
                        s.count,
                        s.h_q,
                        s.exponent_term,
                        if s.hypothesis { "hypothesis holds" } else { "hypothesis fails" },
                        s.bound,
                        if !s.hypothesis { "n/a" } else if s.bound_holds { "ok" } else { "VIOLATED" },
                        match (s.union_bound, s.union_bound_holds) {
                            (Some(b), Some(ok)) => format!("{b:.4} {}", if ok { "ok" } else { "VIOLATED" }),
                            _ => "skipped".into(),
                        },
                        match s.per_d_holds {
                            Some(true) => "ok",
                            Some(false) => "VIOLATED",
                            None => "skipped",
                        }
                    )
                    .unwrap();
                }
                r.rows.clear();
                report.insert("census".into(), serde_json::to_value(&r).unwrap());
            }
            Check::GoodBeta => {
                let [delta] = deltas[..] else {
                    return Err(Error::InvalidParameter("good-beta needs exactly one --delta".into()));
                };
                let d = decompose_twisted(need_n()?, &parse_field(&a.field)?, Twist::Consta)?;
                let kstar = KStar::new(&d)?;
                let parts = census_parts(&d, a.hatted)?;
                let strategy = if a.tries == 0 {
                    SearchStrategy::Exhaustive
                } else {
                    SearchStrategy::Sampled { seed: a.seed, tries: a.tries }
                };
                match find_good_beta(&d, &kstar, &parts, delta, strategy, a.budget) {
                    Ok((beta, w)) => {
                        writeln!(text, "twist {:?} has minimum weight {} (relative distance {})", beta.units, w.min_weight, w.relative_distance).unwrap();
                        report.insert("good_beta".into(), serde_json::json!({ "beta": beta.units, "weight": w }));
                    }
                    Err(Error::NoneFound(_)) => {
                        writeln!(text, "no twist with relative distance above {delta} found").unwrap();
                        report.insert("good_beta".into(), serde_json::Value::Null);
                    }
                    Err(e) => return Err(e),
                }
            }
            Check::Predicates => {
                let (p, m) = parse_field(&a.field).map(|f| (f.p() as u64, f.m()))?;
                let q = p.pow(m);
                match (a.n, a.limit) {
                    (Some(n), _) => {
                        let f = good_n_predicates(q, n as u64)?;
                        writeln!(
                            text,
                            "q = {q}, n = {n}: ord {}, ord odd {}, -1 in <q> {}, 2 || ord {}, in G_t {}, lambda {}, log_q n / lambda {:.4}",
                            f.ord, f.ord_odd, f.minus1_in_q, f.two_exactly_divides_ord, f.in_g_t, f.lambda, f.log_ratio
                        )
                        .unwrap();
                        for p in [Profile::SelfOrthogonal, Profile::Lcd, Profile::SelfDual] {
                            writeln!(text, "  {p:?}: {}", if f.qualifies(p) { "qualifies" } else { "no" }).unwrap();
                        }
                        report.insert("predicates".into(), serde_json::to_value(&f).unwrap());
                    }
                    (None, Some(limit)) => {
                        let seq = good_n_sequence(q, limit, a.profile.into())?;
                        let ns: Vec<u64> = seq.iter().map(|f| f.n).collect();
                        writeln!(text, "{:?} lengths up to {limit} over GF({q}): {ns:?}", Profile::from(a.profile)).unwrap();
                        report.insert("sequence".into(), serde_json::to_value(&seq).unwrap());
                    }
                    (None, None) => return Err(Error::InvalidParameter("predicates needs --n or --limit".into())),
                }
            }
            Check::Count => {
                let r = count_cab_codes(need_n()?, &parse_field(&a.field)?, a.samples, a.seed)?;
                writeln!(
                    text,
                    "dihedral codes A_0 ê_0 + sum A_t f_ab: {} total, {} LCD, verification {}",
                    r.total,
                    r.lcd,
                    if r.passed() { "passed" } else { "FAILED" }
                )
                .unwrap();
                report.insert("count".into(), serde_json::to_value(&r).unwrap());
            }
        }
    }
    Ok(match a.output.format {
        Format::Json => json(&report),
        _ => text,
    })
}

fn cmd_verify(a: &VerifyArgs) -> Result<(String, i32)> {
    let opts = VerifyOptions {
        q_grid: if a.q_grid.is_empty() { DEFAULT_Q_GRID.to_vec() } else { a.q_grid.clone() },
        seed: a.seed,
        tamper_paired_sign: a.tamper_sign,
    };
    for &q in &opts.q_grid {
        FieldSpec::from_order(q)?;
    }
    let r = verify_suite(&opts)?;
    let code = if r.passed() { 0 } else { 1 };
    let text = match a.output.format {
        Format::Json => json(&r),
        Format::Text => r.to_text(),
        Format::Csv => return Err(no_csv("verify-paper")),
    };
    Ok((text, code))
}
