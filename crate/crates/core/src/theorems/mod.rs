//! Executable claims audited over a generated catalog of rings.

mod catalog;
mod claims;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::analysis::Analyzer;
use crate::expr::ExprError;

pub use catalog::{
    build_catalog, build_with, catalog_of, Catalog, CatalogConfig, CatalogEntry, CatalogError, GroupRingSubject,
    SkippedEntry,
};
pub use claims::{claim, matrix_witness, Claim, CLAIMS};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    /// The subject was beyond a size cap.
    Skipped,
    /// The claim's hypothesis is false for the subject.
    NotApplicable,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    /// Element indices in the subject ring.
    pub elements: Vec<usize>,
    pub detail: String,
}

impl Witness {
    pub fn new(elements: Vec<usize>, detail: impl Into<String>) -> Witness {
        Witness { elements, detail: detail.into() }
    }
}

/// One claim on one subject.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClaimOutcome {
    pub claim: String,
    pub subject: String,
    pub hashes: Vec<String>,
    pub status: Status,
    pub witness: Option<Witness>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessReport {
    pub subject: String,
    pub hashes: Vec<String>,
    pub elements: Vec<usize>,
    pub detail: String,
    /// Reproduces the failing check.
    pub recheck: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClaimSummary {
    pub id: String,
    pub anchor: String,
    pub subjects: usize,
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
    pub not_applicable: usize,
    pub witnesses: Vec<WitnessReport>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportConfig {
    pub max_order: usize,
    pub derived_max_order: usize,
    pub corner_max_order: usize,
    pub expensive_threshold: usize,
    pub skip_expensive: bool,
    pub claims: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub claims: Vec<ClaimSummary>,
    pub catalog_size: usize,
    pub skipped_constructions: usize,
    pub config: ReportConfig,
    #[serde(skip)]
    pub outcomes: Vec<ClaimOutcome>,
}

impl Report {
    pub fn failures(&self) -> usize {
        self.claims.iter().map(|c| c.fail).sum()
    }

    pub fn summary(&self, id: &str) -> Option<&ClaimSummary> {
        self.claims.iter().find(|c| c.id == id)
    }

    pub fn outcomes_for<'a>(&'a self, id: &'a str) -> impl Iterator<Item = &'a ClaimOutcome> + 'a {
        self.outcomes.iter().filter(move |o| o.claim == id)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// Fixed-width table, one line per claim.
    pub fn table(&self) -> String {
        let mut s =
            format!("{:<12} {:>8} {:>6} {:>6} {:>8} {:>6}\n", "claim", "subjects", "pass", "fail", "skipped", "n/a");
        for c in &self.claims {
            s.push_str(&format!(
                "{:<12} {:>8} {:>6} {:>6} {:>8} {:>6}\n",
                c.id, c.subjects, c.pass, c.fail, c.skipped, c.not_applicable
            ));
        }
        s.push_str(&format!("catalog size {}, failures {}\n", self.catalog_size, self.failures()));
        s
    }
}

#[derive(Debug, Error)]
pub enum TheoremError {
    #[error("unknown claim `{0}`")]
    UnknownClaim(String),
    #[error(transparent)]
    Expr(#[from] ExprError),
    #[error(transparent)]
    Catalog(#[from] CatalogError),
}

/// Resolves a comma-separated claim filter; `all` selects every claim.
pub fn select_claims(filter: &str) -> Result<Vec<&'static Claim>, TheoremError> {
    let filter = filter.trim();
    if filter.eq_ignore_ascii_case("all") || filter.is_empty() {
        return Ok(CLAIMS.iter().collect());
    }
    let mut out: Vec<&'static Claim> = Vec::new();
    for id in filter.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let c = claim(id).ok_or_else(|| TheoremError::UnknownClaim(id.to_string()))?;
        if !out.iter().any(|x| x.id == c.id) {
            out.push(c);
        }
    }
    Ok(out)
}

/// Runs the selected claims over the catalog, in registry order.
pub fn run_suite(catalog: &Catalog, analyzer: &Analyzer, selected: &[&Claim]) -> Report {
    let mut order: Vec<&Claim> = selected.to_vec();
    order.sort_by_key(|c| CLAIMS.iter().position(|x| x.id == c.id));
    let mut outcomes = Vec::new();
    let mut claims = Vec::new();
    for c in order {
        let outs = c.run(catalog, analyzer);
        claims.push(summarize(c, &outs));
        outcomes.extend(outs);
    }
    let cfg = &catalog.config;
    Report {
        claims,
        catalog_size: catalog.len(),
        skipped_constructions: catalog.skipped.len(),
        config: ReportConfig {
            max_order: cfg.max_order,
            derived_max_order: cfg.derived_max_order,
            corner_max_order: cfg.corner_max_order,
            expensive_threshold: analyzer.config().expensive_threshold,
            skip_expensive: analyzer.config().skip_expensive,
            claims: selected.iter().map(|c| c.id.to_string()).collect(),
        },
        outcomes,
    }
}

/// Checks one claim against one expression, treated as a one-ring catalog.
/// Group-ring claims expect a `GR(ring,group)` expression.
pub fn check_claim(
    claim_id: &str,
    subject: &str,
    analyzer: &Analyzer,
    max_order: usize,
) -> Result<Vec<ClaimOutcome>, TheoremError> {
    let c = claim(claim_id).ok_or_else(|| TheoremError::UnknownClaim(claim_id.to_string()))?;
    let expr = crate::expr::parse(subject)?;
    let mut catalog = catalog_of(&[&expr.canonical()], crate::ring::Limits::new(max_order))?;
    if let crate::expr::Node::GR(base, group) = &expr.node {
        catalog.group_rings.push(GroupRingSubject {
            expr: expr.canonical(),
            base_expr: base.canonical(),
            group_expr: group.canonical(),
            ring: catalog.entries.first().map(|e| e.ring.clone()),
        });
    }
    if catalog.entries.is_empty() && catalog.group_rings.is_empty() {
        if let Some(s) = catalog.skipped.first() {
            return Ok(vec![ClaimOutcome {
                claim: c.id.to_string(),
                subject: s.expr.clone(),
                hashes: Vec::new(),
                status: Status::Skipped,
                witness: Some(Witness::new(Vec::new(), s.reason.clone())),
            }]);
        }
    }
    Ok(c.run(&catalog, analyzer))
}

fn summarize(c: &Claim, outs: &[ClaimOutcome]) -> ClaimSummary {
    let count = |s: Status| outs.iter().filter(|o| o.status == s).count();
    ClaimSummary {
        id: c.id.to_string(),
        anchor: c.anchor.to_string(),
        subjects: outs.len(),
        pass: count(Status::Pass),
        fail: count(Status::Fail),
        skipped: count(Status::Skipped),
        not_applicable: count(Status::NotApplicable),
        witnesses: outs
            .iter()
            .filter(|o| o.status == Status::Fail)
            .map(|o| {
                let w = o.witness.clone().unwrap_or_else(|| Witness::new(Vec::new(), ""));
                WitnessReport {
                    subject: o.subject.clone(),
                    hashes: o.hashes.clone(),
                    elements: w.elements,
                    detail: w.detail,
                    recheck: format!("finring verify --claims {} --subject '{}'", c.id, o.subject),
                }
            })
            .collect(),
    }
}
