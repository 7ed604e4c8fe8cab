//! Command-line interface: argument definitions and dispatch.

use anyhow::{anyhow, bail, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use laumon_core::affine_module::{AffineGenerator, AffineModule, EigenSeries, SeriesKind};
use laumon_core::detline::DegreeMode;
use laumon_core::exactalg::Lin;
use laumon_core::finite_module::{FiniteGenerator, FiniteModule};
use laumon_core::integrable;
use laumon_core::localization::{self, FixedEdge};
use laumon_core::patterns::{AffinePattern, DominantWeight, FinitePattern};
use serde_json::{json, Value};

use crate::config::Config;
use crate::formats::{self, AnyPattern, State};
use crate::suites::{HpChoice, Runner};

#[derive(Parser, Debug)]
#[command(
    name = "laumon",
    version,
    about = "Yangian actions on fixed-point bases of Laumon spaces"
)]
pub struct Cli {
    /// `key = value` configuration file.
    #[arg(long, global = true)]
    pub config: Option<String>,
    /// Worker threads (overrides the configuration file).
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    /// Output format; JSON is the only machine format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum Format {
    Json,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// List fixed points with a given degree vector.
    Enumerate(EnumerateArgs),
    /// Apply a generator to a state read from a JSON file.
    Apply(ApplyArgs),
    /// Run a verification suite.
    Verify(VerifyArgs),
    /// Graded counts of D(mu) against the independent enumerations.
    Character(CharacterArgs),
    /// Torus characters at fixed points.
    Localize(LocalizeArgs),
    /// Eigenvalue series of the Gelfand-Tsetlin subalgebra at a fixed point.
    Series(SeriesArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    Finite,
    Affine,
}

#[derive(Args, Debug)]
pub struct EnumerateArgs {
    #[arg(long, value_enum)]
    pub kind: Kind,
    #[arg(short = 'n')]
    pub n: usize,
    /// Comma-separated degree vector (n-1 entries for finite, n for affine).
    #[arg(long, value_delimiter = ',', conflicts_with = "max_degree")]
    pub degree: Option<Vec<u32>>,
    /// Every pattern of total degree at most this.
    #[arg(long)]
    pub max_degree: Option<u32>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum HpArg {
    Free,
    SlHat,
    Critical,
}

impl From<HpArg> for HpChoice {
    fn from(h: HpArg) -> HpChoice {
        match h {
            HpArg::Free => HpChoice::Free,
            HpArg::SlHat => HpChoice::SlHat,
            HpArg::Critical => HpChoice::Critical,
        }
    }
}

#[derive(Args, Debug)]
pub struct ApplyArgs {
    /// Generator: e, f, h, x+, x-, hr (all kinds) or eii (finite).
    #[arg(long = "gen")]
    pub generator: String,
    #[arg(short = 'i', allow_negative_numbers = true)]
    pub i: i64,
    #[arg(short = 'r', default_value_t = 0)]
    pub r: u32,
    #[arg(long)]
    pub state: String,
    #[arg(long, value_enum, default_value_t = HpArg::Free)]
    pub hp: HpArg,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Relations,
    AffineRelations,
    A01,
    Irreducible,
    KIdentity,
    Localization,
    Truncation,
    Xvi,
    Rank,
    Phi,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Mutation {
    /// Flip the sign of every e-coefficient of the closed form.
    FlipESign,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Diagonal,
    All,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[arg(value_enum)]
    pub suite: Suite,
    #[arg(short = 'n', default_value_t = 3)]
    pub n: usize,
    #[arg(long, default_value_t = 2)]
    pub max_degree: u32,
    #[arg(long, default_value_t = 2)]
    pub rmax: u32,
    /// Dominant weight (mu_{1-n},...,mu_0) for truncation.
    #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
    pub mu: Option<Vec<i64>>,
    #[arg(long, default_value_t = 1)]
    pub level: i64,
    #[arg(long, value_enum, default_value_t = HpArg::Free)]
    pub hp: HpArg,
    #[arg(long, value_enum)]
    pub mutate: Option<Mutation>,
    /// Degree selection for xvi.
    #[arg(long, value_enum, default_value_t = ModeArg::Diagonal)]
    pub mode: ModeArg,
    /// Number of random patterns for phi.
    #[arg(long, default_value_t = 20)]
    pub samples: usize,
    #[arg(long, default_value_t = 2024)]
    pub seed: u64,
    /// Maximum number of failing instances listed in the report.
    #[arg(long, default_value_t = 20)]
    pub max_failures: usize,
}

#[derive(Args, Debug)]
pub struct CharacterArgs {
    #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
    pub mu: Vec<i64>,
    #[arg(long)]
    pub level: i64,
    #[arg(long)]
    pub cutoff: u32,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum LocalizeWhat {
    Tangent,
    EBundle,
    Edge,
}

#[derive(Args, Debug)]
pub struct LocalizeArgs {
    #[arg(value_enum)]
    pub what: LocalizeWhat,
    #[arg(long)]
    pub pattern: String,
    /// Second pattern of the pair for e-bundle.
    #[arg(long)]
    pub pattern2: Option<String>,
    #[arg(short = 'i', allow_negative_numbers = true)]
    pub i: Option<i64>,
    #[arg(short = 'j', allow_negative_numbers = true)]
    pub j: Option<i64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SeriesWhat {
    A,
    H,
    A0n,
    Phi,
}

#[derive(Args, Debug)]
pub struct SeriesArgs {
    #[arg(value_enum)]
    pub what: SeriesWhat,
    #[arg(long)]
    pub pattern: String,
    #[arg(short = 'i', default_value_t = 1, allow_negative_numbers = true)]
    pub i: i64,
    #[arg(short = 'm', default_value_t = 0, allow_negative_numbers = true)]
    pub m: i64,
    /// Number of coefficients of Phi; defaults to the configured series order.
    #[arg(long)]
    pub order: Option<u32>,
}

/// Errors in the input, reported with exit status 2.
#[derive(Debug)]
pub struct InputError(pub anyhow::Error);

/// JSON output and whether every check passed.
pub struct Outcome {
    pub json: Value,
    pub ok: bool,
}

fn settings(cli: &Cli) -> Result<Config> {
    let mut c = match &cli.config {
        Some(path) => Config::load(path)?,
        None => Config::default(),
    };
    if let Some(t) = cli.threads {
        if t == 0 {
            bail!("--threads must be positive");
        }
        c.threads = t;
    }
    Ok(c)
}

fn check_n(cfg: &Config, n: usize) -> Result<()> {
    if n < 2 {
        bail!("n must be at least 2");
    }
    if cfg.enforce_n_gt_2 && n <= 2 {
        bail!("n = 2 is excluded (set enforce_n_gt_2 = false to allow it)");
    }
    if n > 16 {
        bail!("n is limited to 16");
    }
    Ok(())
}

/// Runs the parsed command. Input problems come back as [`InputError`].
pub fn run(cli: &Cli) -> Result<Outcome, InputError> {
    let cfg = settings(cli).map_err(InputError)?;
    match &cli.command {
        Command::Enumerate(a) => enumerate(&cfg, a).map_err(InputError),
        Command::Apply(a) => apply(&cfg, a).map_err(InputError),
        Command::Verify(a) => verify(&cfg, a).map_err(InputError),
        Command::Character(a) => character(&cfg, a).map_err(InputError),
        Command::Localize(a) => localize(&cfg, a).map_err(InputError),
        Command::Series(a) => series(&cfg, a).map_err(InputError),
    }
}

fn enumerate(cfg: &Config, a: &EnumerateArgs) -> Result<Outcome> {
    check_n(cfg, a.n)?;
    let list: Vec<Value> = match (a.kind, &a.degree, a.max_degree) {
        (Kind::Finite, Some(d), _) => {
            if d.len() != a.n - 1 {
                bail!("a finite degree vector has n-1 = {} entries", a.n - 1);
            }
            FinitePattern::enumerate(a.n, d)
                .iter()
                .map(formats::finite_json)
                .collect()
        }
        (Kind::Finite, None, Some(m)) => FinitePattern::up_to(a.n, m)
            .iter()
            .map(formats::finite_json)
            .collect(),
        (Kind::Affine, Some(d), _) => {
            if d.len() != a.n {
                bail!("an affine degree vector has n = {} entries", a.n);
            }
            AffinePattern::enumerate(a.n, d)
                .iter()
                .map(formats::affine_json)
                .collect()
        }
        (Kind::Affine, None, Some(m)) => AffinePattern::up_to(a.n, m)
            .iter()
            .map(formats::affine_json)
            .collect(),
        (_, None, None) => bail!("give --degree or --max-degree"),
    };
    Ok(Outcome {
        json: Value::Array(list),
        ok: true,
    })
}

fn finite_generator(tag: &str, i: i64, r: u32) -> Result<FiniteGenerator> {
    let i = usize::try_from(i).map_err(|_| anyhow!("finite generators need a positive index"))?;
    Ok(match tag {
        "e" => FiniteGenerator::E(i),
        "f" => FiniteGenerator::F(i),
        "h" => FiniteGenerator::H(i),
        "eii" => FiniteGenerator::Eii(i),
        "x+" => FiniteGenerator::XPlus(i, r),
        "x-" => FiniteGenerator::XMinus(i, r),
        "hr" => FiniteGenerator::HCoeff(i, r),
        other => bail!("unknown generator {:?}", other),
    })
}

fn affine_generator(tag: &str, i: i64, r: u32) -> Result<AffineGenerator> {
    Ok(match tag {
        "e" => AffineGenerator::E(i),
        "f" => AffineGenerator::F(i),
        "h" => AffineGenerator::HDiag(i),
        "x+" => AffineGenerator::XPlus(i, r),
        "x-" => AffineGenerator::XMinus(i, r),
        "hr" => AffineGenerator::HCoeff(i, r),
        other => bail!("unknown affine generator {:?}", other),
    })
}

fn apply(cfg: &Config, a: &ApplyArgs) -> Result<Outcome> {
    let state = formats::parse_state(&formats::read_json_file(&a.state)?)?;
    let out = match &state {
        State::Finite(v) => {
            let n = v
                .terms()
                .next()
                .map(|(p, _)| p.n())
                .ok_or_else(|| anyhow!("empty state"))?;
            let g = finite_generator(&a.generator, a.i, a.r)?;
            State::Finite(
                FiniteModule::new(n)
                    .apply(g, v)
                    .map_err(|e| anyhow!("{}", e))?,
            )
        }
        State::Affine(v) => {
            let n = v
                .terms()
                .next()
                .map(|(p, _)| p.n())
                .ok_or_else(|| anyhow!("empty state"))?;
            check_n(cfg, n)?;
            let g = affine_generator(&a.generator, a.i, a.r)?;
            let m = HpChoice::from(a.hp).module(n);
            State::Affine(m.apply(g, v).map_err(|e| anyhow!("{}", e))?)
        }
    };
    let mut json = formats::state_json(&out);
    json["generator"] = json!({"tag": a.generator, "i": a.i, "r": a.r});
    Ok(Outcome { json, ok: true })
}

fn weight(mu: Option<&Vec<i64>>, n: usize, level: i64) -> Result<DominantWeight> {
    match mu {
        Some(m) => {
            if m.len() != n {
                bail!("--mu needs n = {} entries", n);
            }
            DominantWeight::new(level, m.clone()).map_err(|e| anyhow!("{}", e))
        }
        None => DominantWeight::new(level, vec![0; n]).map_err(|e| anyhow!("{}", e)),
    }
}

fn verify(cfg: &Config, a: &VerifyArgs) -> Result<Outcome> {
    check_n(cfg, a.n)?;
    let runner = Runner::new(cfg.threads)?;
    let mut module = HpChoice::from(a.hp).module(a.n);
    if a.mutate == Some(Mutation::FlipESign) {
        module = module.with_flipped_e_sign();
    }
    let (name, report) = match a.suite {
        Suite::Relations => (
            "relations",
            runner.finite_relations(a.n, a.max_degree, a.rmax),
        ),
        Suite::AffineRelations => (
            "affine-relations",
            runner.affine_relations(&module, a.max_degree, a.rmax),
        ),
        Suite::A01 => ("a01", runner.recursion(a.n, a.max_degree)),
        Suite::Irreducible => ("irreducible", runner.irreducible(&module, a.max_degree)),
        Suite::KIdentity => ("k-identity", runner.k_identity(a.n, a.max_degree)),
        Suite::Localization => ("localization", runner.localization(&module, a.max_degree)),
        Suite::Truncation => {
            let w = weight(a.mu.as_ref(), a.n, a.level)?;
            ("truncation", runner.truncation(&w, a.max_degree, a.rmax))
        }
        Suite::Xvi => {
            let mode = match a.mode {
                ModeArg::Diagonal => DegreeMode::Diagonal,
                ModeArg::All => DegreeMode::All,
            };
            ("xvi", runner.xvi(a.n, a.max_degree, mode))
        }
        Suite::Rank => ("rank", runner.rank(a.n, a.max_degree)),
        Suite::Phi => ("phi", runner.phi(a.n, a.max_degree, a.samples, a.seed)),
    };
    // Off-diagonal xvi instances are informational.
    let ok = report
        .instances
        .iter()
        .all(|i| i.passed || i.relation == "xvi-offdiagonal");
    let params = json!({
        "n": a.n, "max_degree": a.max_degree, "rmax": a.rmax, "hp": format!("{:?}", a.hp),
        "mutate": a.mutate.map(|m| format!("{:?}", m)), "level": a.level, "mu": a.mu,
    });
    let mut json = formats::report_json(name, params, &report, a.max_failures);
    json["ok"] = json!(ok);
    Ok(Outcome { json, ok })
}

fn character(cfg: &Config, a: &CharacterArgs) -> Result<Outcome> {
    check_n(cfg, a.mu.len())?;
    let w = DominantWeight::new(a.level, a.mu.clone()).map_err(|e| anyhow!("{}", e))?;
    let ours = integrable::character_counts(&w, a.cutoff);
    let oracle = integrable::oracle::cylindric_counts(&w, a.cutoff);
    let mut keys: Vec<&Vec<u32>> = ours.keys().chain(oracle.keys()).collect();
    keys.sort();
    keys.dedup();
    let mut ok = true;
    let table: Vec<Value> = keys
        .into_iter()
        .map(|k| {
            let c = ours.get(k).copied().unwrap_or(0);
            let o = oracle.get(k).copied().unwrap_or(0);
            ok &= c == o;
            json!({"degree": k, "count": c, "oracle": o, "match": c == o})
        })
        .collect();
    Ok(Outcome {
        json: json!({"weight": w.to_string(), "cutoff": a.cutoff, "table": table, "ok": ok}),
        ok,
    })
}

fn affine_from(path: &str) -> Result<AffinePattern> {
    match formats::parse_pattern(&formats::read_json_file(path)?)? {
        AnyPattern::Affine(p) => Ok(p),
        AnyPattern::Finite(_) => bail!(
            "{} holds a finite pattern; torus characters need an affine one",
            path
        ),
    }
}

fn localize(cfg: &Config, a: &LocalizeArgs) -> Result<Outcome> {
    let p = affine_from(&a.pattern)?;
    check_n(cfg, p.n())?;
    let json = match a.what {
        LocalizeWhat::Tangent => {
            let t = localization::tangent(&p);
            json!({"pattern": formats::affine_json(&p), "character": formats::charpoly_json(&t),
                   "weights": formats::weights_json(&t), "rank": t.at_one().to_string()})
        }
        LocalizeWhat::EBundle => {
            let q = match &a.pattern2 {
                Some(path) => affine_from(path)?,
                None => p.clone(),
            };
            if q.n() != p.n() {
                bail!("the two patterns have different n");
            }
            let e = localization::e_char(&p, &q);
            json!({"pattern": formats::affine_json(&p), "pattern2": formats::affine_json(&q),
                   "character": formats::charpoly_json(&e), "rank": e.at_one().to_string()})
        }
        LocalizeWhat::Edge => {
            let (i, j) = match (a.i, a.j) {
                (Some(i), Some(j)) => (i, j),
                _ => bail!("edge needs -i and -j"),
            };
            let edge = FixedEdge::new(&p, i, j)
                .ok_or_else(|| anyhow!("no box can be added at ({}, {})", i, j))?;
            let corr = localization::corr_tangent(&edge);
            let hp = Lin::var(laumon_core::exactalg::Var::Hp);
            let coeff = |k| match localization::localized_coeff(&edge, k, &hp) {
                Ok(v) => Value::String(v.to_string()),
                Err(e) => json!({"error": e.to_string()}),
            };
            json!({"source": formats::affine_json(&edge.source), "target": formats::affine_json(&edge.target),
                   "i": i, "j": j, "character": formats::charpoly_json(&corr), "weights": formats::weights_json(&corr),
                   "e": coeff(localization::CoeffKind::E), "f": coeff(localization::CoeffKind::F)})
        }
    };
    Ok(Outcome { json, ok: true })
}

fn series(cfg: &Config, a: &SeriesArgs) -> Result<Outcome> {
    let p = affine_from(&a.pattern)?;
    check_n(cfg, p.n())?;
    let m = AffineModule::new(p.n());
    let order = a.order.unwrap_or(cfg.series_order);
    let kind = match a.what {
        SeriesWhat::A => SeriesKind::Ami { m: a.m, i: a.i },
        SeriesWhat::H => SeriesKind::H { i: a.i },
        SeriesWhat::A0n => SeriesKind::A0n,
        SeriesWhat::Phi => SeriesKind::Phi {
            order: order as i32,
        },
    };
    let value = match m.eigen_series(kind, &p).map_err(|e| anyhow!("{}", e))? {
        EigenSeries::Rational(r) => {
            let list = |p: &[laumon_core::exactalg::Scalar]| {
                p.iter().map(|c| c.to_string()).collect::<Vec<_>>()
            };
            let s = r.expand(order as i32);
            json!({"numerator": list(r.numerator()), "denominator": list(r.denominator()), "series": series_json(&s, order)})
        }
        EigenSeries::Series(s) => json!({"series": series_json(&s, order)}),
    };
    Ok(Outcome {
        json: json!({"pattern": formats::affine_json(&p), "kind": format!("{:?}", a.what), "value": value}),
        ok: true,
    })
}

fn series_json(s: &laumon_core::exactalg::SeriesU, order: u32) -> Value {
    let coeffs: Vec<Value> = (0..=order as i32)
        .map(|k| json!({"u_power": -k, "coeff": s.coeff(k).map(|c| c.to_string())}))
        .collect();
    Value::Array(coeffs)
}
