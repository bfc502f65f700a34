use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand};
use finring::io::{self, DiskCache, IoError};
use finring::theorems::{self, CatalogConfig, Report, Status, TheoremError};
use finring::{Analyzer, ClassificationRecord, ClassifyConfig, Evaluator, ExprError, FiniteRing, Limits};

/// Stdout writes that end the process quietly once the reader goes away.
macro_rules! out {
    ($($t:tt)*) => {{
        use std::io::Write as _;
        if write!(std::io::stdout(), $($t)*).is_err() {
            std::process::exit(0);
        }
    }};
}

macro_rules! outln {
    ($($t:tt)*) => {{
        use std::io::Write as _;
        if writeln!(std::io::stdout(), $($t)*).is_err() {
            std::process::exit(0);
        }
    }};
}

#[derive(Parser)]
#[command(name = "finring", version, about = "Finite ring engine and claim auditor")]
struct Cli {
    #[command(flatten)]
    opts: Opts,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args)]
struct Opts {
    /// Largest ring order any construction may produce.
    #[arg(long, global = true, default_value_t = finring::ring::DEFAULT_MAX_ORDER)]
    max_order: usize,
    /// Skip the exchange, π-regular and unit-regular scans on every ring
    /// (they are always skipped above order 1024).
    #[arg(long, global = true)]
    skip_expensive: bool,
    /// Record cache directory.
    #[arg(long, global = true)]
    cache_dir: Option<PathBuf>,
    #[arg(long, global = true)]
    no_cache: bool,
    /// Machine-readable output.
    #[arg(long, global = true)]
    json: bool,
    /// Extra catalog expressions, one per line.
    #[arg(long, global = true)]
    seed_catalog: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Cmd {
    /// Sizes and members of the distinguished subsets.
    Describe { expr: String },
    /// Every class verdict, as JSON.
    Classify {
        expr: String,
        /// Print only this verdict (`true`, `false` or `skipped`); aliases accepted.
        #[arg(long)]
        verdict: Option<String>,
    },
    /// Audit claims over the catalog, or over one subject.
    Verify {
        #[arg(long, default_value = "all")]
        claims: String,
        #[arg(long)]
        subject: Option<String>,
        /// Also write the JSON report here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// One row of verdicts per catalog ring.
    Census {
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Write a ring's tables as JSON.
    Save { expr: String, path: PathBuf },
    /// Load, re-validate and describe a ring JSON file.
    Load { path: PathBuf },
}

enum Failure {
    Usage(String),
    Construction(String),
}

impl From<ExprError> for Failure {
    fn from(e: ExprError) -> Self {
        match e {
            ExprError::Eval { .. } => Failure::Construction(e.to_string()),
            other => Failure::Usage(other.to_string()),
        }
    }
}

impl From<IoError> for Failure {
    fn from(e: IoError) -> Self {
        match e {
            IoError::Io { .. } => Failure::Usage(e.to_string()),
            other => Failure::Construction(other.to_string()),
        }
    }
}

impl From<finring::AlgebraError> for Failure {
    fn from(e: finring::AlgebraError) -> Self {
        Failure::Construction(e.to_string())
    }
}

impl From<theorems::CatalogError> for Failure {
    fn from(e: theorems::CatalogError) -> Self {
        let theorems::CatalogError::Expr { source, .. } = e;
        source.into()
    }
}

impl From<TheoremError> for Failure {
    fn from(e: TheoremError) -> Self {
        match e {
            TheoremError::Expr(x) => x.into(),
            TheoremError::Catalog(c) => c.into(),
            other => Failure::Usage(other.to_string()),
        }
    }
}

struct Ctx {
    opts: Opts,
    analyzer: Analyzer,
    cache: Option<DiskCache>,
}

impl Ctx {
    fn new(opts: Opts) -> Ctx {
        let config = ClassifyConfig { skip_expensive: opts.skip_expensive, ..ClassifyConfig::default() };
        let cache = (!opts.no_cache)
            .then(|| DiskCache::new(opts.cache_dir.clone().unwrap_or_else(DiskCache::default_dir), config));
        Ctx { opts, analyzer: Analyzer::new(config), cache }
    }

    fn limits(&self) -> Limits {
        Limits::new(self.opts.max_order)
    }

    fn ring(&self, text: &str) -> Result<Arc<FiniteRing>, Failure> {
        Ok(Evaluator::new(self.limits()).ring(text)?)
    }

    fn classify(&self, r: &Arc<FiniteRing>) -> Result<Arc<ClassificationRecord>, Failure> {
        match &self.cache {
            Some(c) => Ok(c.classify(&self.analyzer, r)?),
            None => Ok(self.analyzer.classify(r)?),
        }
    }

    fn catalog_config(&self) -> Result<CatalogConfig, Failure> {
        let mut cfg = CatalogConfig::default().with_max_order(self.opts.max_order);
        cfg.classify = self.analyzer.config();
        if let Some(path) = &self.opts.seed_catalog {
            let text = fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
            cfg.extra = text
                .lines()
                .map(str::trim)
                .filter(|l| !l.is_empty() && !l.starts_with('#'))
                .map(String::from)
                .collect();
        }
        Ok(cfg)
    }

    fn catalog(&self) -> Result<theorems::Catalog, Failure> {
        let cat = theorems::build_catalog(&self.catalog_config()?)?;
        if !cat.skipped.is_empty() {
            eprintln!("{} constructions exceed the size cap and were skipped", cat.skipped.len());
        }
        Ok(cat)
    }
}

fn json<T: serde::Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("output serializes")
}

fn write_out(path: &Option<PathBuf>, text: &str) -> Result<(), Failure> {
    if let Some(p) = path {
        fs::write(p, text).map_err(|e| Failure::Usage(format!("{}: {e}", p.display())))?;
    }
    Ok(())
}

fn describe(ctx: &Ctx, r: &FiniteRing) -> Result<(), Failure> {
    let p = ctx.analyzer.profile(r)?;
    let d = io::describe(r, &p);
    if ctx.opts.json {
        outln!("{}", json(&d));
    } else {
        out!("{}", d.text());
    }
    Ok(())
}

fn verify(ctx: &Ctx, claims: &str, subject: Option<&str>, out: &Option<PathBuf>) -> Result<ExitCode, Failure> {
    let selected = theorems::select_claims(claims)?;
    if let Some(subject) = subject {
        let mut failed = false;
        let mut all = Vec::new();
        for c in &selected {
            let outs = theorems::check_claim(c.id, subject, &ctx.analyzer, ctx.opts.max_order)?;
            failed |= outs.iter().any(|o| o.status == Status::Fail);
            all.extend(outs);
        }
        let text = json(&all);
        write_out(out, &text)?;
        if ctx.opts.json {
            outln!("{text}");
        } else {
            for o in &all {
                let w = o.witness.as_ref().map(|w| format!(" {:?} {}", w.elements, w.detail)).unwrap_or_default();
                outln!("{:<12} {:<16} {}{w}", o.claim, format!("{:?}", o.status).to_lowercase(), o.subject);
            }
        }
        return Ok(if failed { ExitCode::from(1) } else { ExitCode::SUCCESS });
    }
    let cat = ctx.catalog()?;
    if let Some(cache) = &ctx.cache {
        for e in &cat.entries {
            cache.classify(&ctx.analyzer, &e.ring)?;
        }
    }
    let report: Report = theorems::run_suite(&cat, &ctx.analyzer, &selected);
    let text = report.to_json();
    write_out(out, &text)?;
    if ctx.opts.json {
        outln!("{text}");
    } else {
        out!("{}", report.table());
        for c in &report.claims {
            for w in &c.witnesses {
                outln!("FAIL {} on {}: {:?} {}\n  recheck: {}", c.id, w.subject, w.elements, w.detail, w.recheck);
            }
        }
    }
    Ok(if report.failures() > 0 { ExitCode::from(1) } else { ExitCode::SUCCESS })
}

fn census(ctx: &Ctx, out: &Option<PathBuf>) -> Result<(), Failure> {
    let cat = ctx.catalog()?;
    let rows = io::census_rows(&cat, |r| ctx.classify(r))?;
    let text = if ctx.opts.json { json(&rows) } else { io::census_csv(&rows)? };
    write_out(out, &text)?;
    if out.is_none() {
        out!("{text}");
        if ctx.opts.json {
            outln!();
        }
    }
    Ok(())
}

fn run(cli: Cli) -> Result<ExitCode, Failure> {
    let ctx = Ctx::new(cli.opts);
    match &cli.cmd {
        Cmd::Describe { expr } => describe(&ctx, &*ctx.ring(expr)?)?,
        Cmd::Classify { expr, verdict } => {
            let r = ctx.ring(expr)?;
            let rec = ctx.classify(&r)?;
            match verdict {
                None => outln!("{}", json(&*rec)),
                Some(name) => match rec.verdict(name) {
                    Some(Some(v)) => outln!("{v}"),
                    Some(None) => outln!("skipped"),
                    None => return Err(Failure::Usage(format!("unknown verdict `{name}`"))),
                },
            }
        }
        Cmd::Verify { claims, subject, out } => return verify(&ctx, claims, subject.as_deref(), out),
        Cmd::Census { out } => census(&ctx, out)?,
        Cmd::Save { expr, path } => {
            let r = ctx.ring(expr)?;
            io::save_ring(&r, path)?;
            if !ctx.opts.json {
                outln!("saved {} ({}) to {}", r.label(), r.hash().short(), path.display());
            }
        }
        Cmd::Load { path } => {
            let r = Arc::new(io::load_ring(path, ctx.limits())?);
            if ctx.opts.json {
                let d = io::describe(&r, &*ctx.analyzer.profile(&r)?);
                let rec = ctx.classify(&r)?;
                outln!("{}", json(&serde_json::json!({ "description": d, "record": *rec })));
            } else {
                describe(&ctx, &r)?;
                let rec = ctx.classify(&r)?;
                outln!("  w_sqrt_ju {}, sqrt_ju {}", rec.w_sqrt_ju, rec.sqrt_ju);
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
        Err(Failure::Construction(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(3)
        }
    }
}
