use std::collections::HashSet;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::classify::ClassifyConfig;
use crate::constructions::ideal_generated;
use crate::error::AlgebraError;
use crate::expr::{Evaluator, ExprError};
use crate::radicals::element_sets;
use crate::ring::{FiniteRing, Limits, RingHash};

/// What goes into a catalog. Every list holds expression texts.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogConfig {
    pub max_order: usize,
    /// Base rings, closed once under the catalog constructions.
    pub base: Vec<String>,
    /// Groups used for group rings.
    pub groups: Vec<String>,
    /// Extra bases paired with every group (beside `base`).
    pub group_ring_bases: Vec<String>,
    /// Factors of the triple products.
    pub triple_factors: Vec<String>,
    /// Appended verbatim, e.g. from a seed file.
    pub extra: Vec<String>,
    /// Corners and single-generator quotients are added below this order.
    pub derived_max_order: usize,
    /// Bound for the corner claim and the quotient-radical lemma.
    pub corner_max_order: usize,
    pub classify: ClassifyConfig,
}

fn strings(xs: &[&str]) -> Vec<String> {
    xs.iter().map(|s| s.to_string()).collect()
}

impl Default for CatalogConfig {
    fn default() -> Self {
        let mut base: Vec<String> = (2..=12).map(|n| format!("Z({n})")).collect();
        base.extend(strings(&["GF(2,1)", "GF(3,1)", "GF(2,2)", "GF(5,1)", "GF(7,1)", "GF(2,3)", "GF(3,2)"]));
        CatalogConfig {
            max_order: crate::ring::DEFAULT_MAX_ORDER,
            base,
            groups: strings(&["C(1)", "C(2)", "C(3)", "C(4)", "Prod(C(2),C(2))", "Prod(C(2),C(3))", "S3"]),
            group_ring_bases: strings(&["Prod(Z(2),Z(3))"]),
            triple_factors: strings(&["Z(2)", "Z(3)", "Z(4)", "Z(9)", "GF(2,2)"]),
            extra: Vec::new(),
            derived_max_order: 64,
            corner_max_order: 256,
            classify: ClassifyConfig::default(),
        }
    }
}

impl CatalogConfig {
    /// No rings at all.
    pub fn empty() -> Self {
        CatalogConfig {
            base: Vec::new(),
            groups: Vec::new(),
            group_ring_bases: Vec::new(),
            triple_factors: Vec::new(),
            ..CatalogConfig::default()
        }
    }

    /// Only the given expressions, without closure.
    pub fn only(exprs: &[&str]) -> Self {
        CatalogConfig { extra: strings(exprs), derived_max_order: 0, ..CatalogConfig::empty() }
    }

    pub fn with_max_order(mut self, max_order: usize) -> Self {
        self.max_order = max_order;
        self
    }

    pub fn limits(&self) -> Limits {
        Limits::new(self.max_order)
    }
}

#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub expr: String,
    pub ring: Arc<FiniteRing>,
}

/// A group ring together with the expressions of its inputs.
#[derive(Debug, Clone)]
pub struct GroupRingSubject {
    pub expr: String,
    pub base_expr: String,
    pub group_expr: String,
    /// `None` when the construction exceeded the size cap.
    pub ring: Option<Arc<FiniteRing>>,
}

/// An expression that could not be built.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SkippedEntry {
    pub expr: String,
    pub reason: String,
}

#[derive(Debug)]
pub struct Catalog {
    pub config: CatalogConfig,
    pub entries: Vec<CatalogEntry>,
    pub group_rings: Vec<GroupRingSubject>,
    pub skipped: Vec<SkippedEntry>,
    seen: HashSet<RingHash>,
}

#[derive(Debug, thiserror::Error)]
pub enum CatalogError {
    #[error("catalog expression `{expr}`: {source}")]
    Expr { expr: String, source: ExprError },
}

impl Catalog {
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn find(&self, expr: &str) -> Option<&CatalogEntry> {
        self.entries.iter().find(|e| e.expr == expr)
    }

    pub fn contains_hash(&self, hash: RingHash) -> bool {
        self.seen.contains(&hash)
    }

    fn push(&mut self, ev: &mut Evaluator, text: &str) -> Result<Option<Arc<FiniteRing>>, CatalogError> {
        match ev.ring(text) {
            Ok(r) => {
                if self.seen.insert(r.hash()) {
                    self.entries.push(CatalogEntry { expr: r.label().to_string(), ring: r.clone() });
                }
                Ok(Some(r))
            }
            Err(e) if is_size_cap(&e) => {
                self.skipped.push(SkippedEntry { expr: text.to_string(), reason: e.to_string() });
                Ok(None)
            }
            Err(source) => Err(CatalogError::Expr { expr: text.to_string(), source }),
        }
    }
}

fn is_size_cap(e: &ExprError) -> bool {
    matches!(e.algebra(), Some(AlgebraError::SizeCapExceeded { .. }))
}

/// Builds the catalog. Size-cap failures are logged in `skipped`; any
/// other failure means a malformed expression in the config.
pub fn build_catalog(config: &CatalogConfig) -> Result<Catalog, CatalogError> {
    let mut ev = Evaluator::new(config.limits());
    build_with(config, &mut ev)
}

pub fn build_with(config: &CatalogConfig, ev: &mut Evaluator) -> Result<Catalog, CatalogError> {
    let mut cat = Catalog {
        config: config.clone(),
        entries: Vec::new(),
        group_rings: Vec::new(),
        skipped: Vec::new(),
        seen: HashSet::new(),
    };
    let mut bases = Vec::new();
    for b in &config.base {
        if let Some(r) = cat.push(ev, b)? {
            bases.push(r.label().to_string());
        }
    }
    let mut ops = Vec::new();
    if !bases.is_empty() {
        for i in 0..bases.len() {
            for j in i..bases.len() {
                ops.push(format!("Prod({},{})", bases[i], bases[j]));
            }
        }
        for b in &bases {
            ops.push(format!("M(2,{b})"));
        }
        for b in &bases {
            for k in [2, 3] {
                ops.push(format!("T({k},{b})"));
            }
        }
        for b in &bases {
            ops.push(format!("TrivExt({b})"));
        }
    }
    let t = &config.triple_factors;
    for i in 0..t.len() {
        for j in i..t.len() {
            for k in j..t.len() {
                ops.push(format!("Prod({},{},{})", t[i], t[j], t[k]));
            }
        }
    }
    for text in &ops {
        cat.push(ev, text)?;
    }

    let mut gr_bases = bases.clone();
    for b in &config.group_ring_bases {
        match ev.ring(b) {
            Ok(r) => gr_bases.push(r.label().to_string()),
            Err(e) if is_size_cap(&e) => {
                cat.skipped.push(SkippedEntry { expr: b.clone(), reason: e.to_string() });
            }
            Err(source) => return Err(CatalogError::Expr { expr: b.clone(), source }),
        }
    }
    for b in &gr_bases {
        for g in &config.groups {
            let group = ev.group(g).map_err(|source| CatalogError::Expr { expr: g.clone(), source })?;
            let text = format!("GR({b},{})", group.label());
            let ring = cat.push(ev, &text)?;
            cat.group_rings.push(GroupRingSubject {
                expr: text,
                base_expr: b.clone(),
                group_expr: group.label().to_string(),
                ring,
            });
        }
    }
    for text in &config.extra {
        cat.push(ev, text)?;
    }

    let parents: Vec<CatalogEntry> =
        cat.entries.iter().filter(|e| e.ring.order() <= config.derived_max_order).cloned().collect();
    for p in &parents {
        let r = &p.ring;
        let sets = element_sets(r);
        for e in sets.idempotents.iter().filter(|&e| e != r.zero() && e != r.one()) {
            cat.push(ev, &format!("Corner({},{e})", p.expr))?;
        }
        let mut ideals: HashSet<Vec<usize>> = HashSet::new();
        for x in r.elements() {
            let ideal = match ideal_generated(r, &[x]) {
                Ok(i) => i,
                Err(e) => {
                    cat.skipped.push(SkippedEntry { expr: format!("Quot({},[{x}])", p.expr), reason: e.to_string() });
                    continue;
                }
            };
            if ideal.len() == 1 || ideal.len() == r.order() || !ideals.insert(ideal.members().to_vec()) {
                continue;
            }
            cat.push(ev, &format!("Quot({},[{x}])", p.expr))?;
        }
    }
    Ok(cat)
}

/// A catalog holding exactly the given expressions, in order.
pub fn catalog_of(exprs: &[&str], limits: Limits) -> Result<Catalog, CatalogError> {
    let config = CatalogConfig::only(exprs).with_max_order(limits.max_order);
    build_catalog(&config)
}
