//! JSON formats, the on-disk record cache, census tables and descriptions.

use std::fs;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::analysis::Analyzer;
use crate::classify::{ClassificationRecord, ClassifyConfig, VERDICT_NAMES};
use crate::error::AlgebraError;
use crate::group::{validate_group_with, FiniteGroup};
use crate::radicals::RingProfile;
use crate::ring::{validate_ring_with, FiniteRing, Limits, RingHash};
use crate::theorems::Catalog;

/// Bumped whenever a verdict definition changes.
pub const ENGINE_VERSION: &str = "finring-engine-1";

/// Rings above this order are described by counts only.
pub const DESCRIBE_SET_LIMIT: usize = 64;

#[derive(Debug, Error)]
pub enum IoError {
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
}

fn io_err(path: &Path) -> impl FnOnce(std::io::Error) -> IoError + '_ {
    move |source| IoError::Io { path: path.to_path_buf(), source }
}

/// `{"order","zero","one","add","mul","label"}` with row-major tables.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RingJson {
    pub order: usize,
    pub zero: usize,
    pub one: usize,
    pub add: Vec<Vec<usize>>,
    pub mul: Vec<Vec<usize>>,
    #[serde(default)]
    pub label: String,
}

impl RingJson {
    pub fn from_ring(r: &FiniteRing) -> RingJson {
        RingJson {
            order: r.order(),
            zero: r.zero(),
            one: r.one(),
            add: r.add_rows(),
            mul: r.mul_rows(),
            label: r.label().to_string(),
        }
    }

    /// Re-validates every axiom.
    pub fn into_ring(self, limits: Limits) -> Result<FiniteRing, AlgebraError> {
        Ok(validate_ring_with(self.order, &self.add, &self.mul, self.zero, self.one, limits)?.with_label(self.label))
    }
}

pub fn ring_to_json(r: &FiniteRing) -> String {
    serde_json::to_string(&RingJson::from_ring(r)).expect("ring serializes")
}

pub fn ring_from_json(text: &str, limits: Limits) -> Result<FiniteRing, IoError> {
    let j: RingJson = serde_json::from_str(text)?;
    limits.check(j.order as u128)?;
    Ok(j.into_ring(limits)?)
}

pub fn save_ring(r: &FiniteRing, path: &Path) -> Result<(), IoError> {
    fs::write(path, ring_to_json(r)).map_err(io_err(path))
}

pub fn load_ring(path: &Path, limits: Limits) -> Result<FiniteRing, IoError> {
    let text = fs::read_to_string(path).map_err(io_err(path))?;
    ring_from_json(&text, limits)
}

/// `{"order","identity","cayley"}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupJson {
    pub order: usize,
    pub identity: usize,
    pub cayley: Vec<Vec<usize>>,
}

pub fn group_to_json(g: &FiniteGroup) -> String {
    let j = GroupJson { order: g.order(), identity: g.identity(), cayley: g.cayley_rows() };
    serde_json::to_string(&j).expect("group serializes")
}

pub fn group_from_json(text: &str, limits: Limits) -> Result<FiniteGroup, IoError> {
    let j: GroupJson = serde_json::from_str(text)?;
    if j.cayley.len() != j.order {
        return Err(AlgebraError::MalformedTable(format!(
            "cayley table has {} rows, expected {}",
            j.cayley.len(),
            j.order
        ))
        .into());
    }
    Ok(validate_group_with(&j.cayley, j.identity, limits)?)
}

/// One cached classification.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CacheEntry {
    pub hash: String,
    pub version: String,
    pub record: ClassificationRecord,
}

/// Version tag covering the engine and the options that change records.
pub fn version_tag(config: ClassifyConfig) -> String {
    format!("{ENGINE_VERSION}-t{}-s{}", config.expensive_threshold, u8::from(config.skip_expensive))
}

pub fn decode_cache_entry(text: &str) -> Result<CacheEntry, IoError> {
    Ok(serde_json::from_str(text)?)
}

/// Records stored one file per `(hash, version)` pair.
#[derive(Debug, Clone)]
pub struct DiskCache {
    dir: PathBuf,
    version: String,
}

impl DiskCache {
    pub fn new(dir: impl Into<PathBuf>, config: ClassifyConfig) -> DiskCache {
        DiskCache { dir: dir.into(), version: version_tag(config) }
    }

    /// `$XDG_CACHE_HOME/finring`, else `~/.cache/finring`.
    pub fn default_dir() -> PathBuf {
        if let Some(x) = std::env::var_os("XDG_CACHE_HOME").filter(|x| !x.is_empty()) {
            return PathBuf::from(x).join("finring");
        }
        match std::env::var_os("HOME") {
            Some(h) => PathBuf::from(h).join(".cache").join("finring"),
            None => std::env::temp_dir().join("finring-cache"),
        }
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn version(&self) -> &str {
        &self.version
    }

    fn path(&self, hash: RingHash) -> PathBuf {
        self.dir.join(format!("{}.{}.json", hash.to_hex(), self.version))
    }

    /// Returns a stored record, ignoring unreadable, stale or mismatched files.
    pub fn get(&self, hash: RingHash) -> Option<ClassificationRecord> {
        let text = fs::read_to_string(self.path(hash)).ok()?;
        let entry = decode_cache_entry(&text).ok()?;
        (entry.version == self.version && entry.hash == hash.to_hex() && entry.record.hash == entry.hash)
            .then_some(entry.record)
    }

    /// Writes through a temporary file, so concurrent writers of the same
    /// key leave one complete copy.
    pub fn put(&self, rec: &ClassificationRecord) -> Result<(), IoError> {
        fs::create_dir_all(&self.dir).map_err(io_err(&self.dir))?;
        let entry = CacheEntry { hash: rec.hash.clone(), version: self.version.clone(), record: rec.clone() };
        let name = format!("{}.{}.json", rec.hash, self.version);
        let target = self.dir.join(&name);
        let tmp = self.dir.join(format!(".{name}.{}", std::process::id()));
        fs::write(&tmp, serde_json::to_string(&entry)?).map_err(io_err(&tmp))?;
        fs::rename(&tmp, &target).map_err(io_err(&target))
    }

    /// Classifies through the analyzer, reading and filling the disk cache.
    pub fn classify(&self, an: &Analyzer, r: &Arc<FiniteRing>) -> Result<Arc<ClassificationRecord>, IoError> {
        if an.cached_record(r.hash()).is_none() {
            if let Some(rec) = self.get(r.hash()) {
                an.insert_record(r.hash(), rec);
            }
        }
        if let Some(rec) = an.cached_record(r.hash()) {
            return Ok(rec);
        }
        let rec = an.classify(r)?;
        self.put(&rec)?;
        Ok(rec)
    }
}

fn verdict_cell(v: Option<bool>) -> &'static str {
    match v {
        Some(true) => "true",
        Some(false) => "false",
        None => "skipped",
    }
}

/// Census header: expression, order, characteristic, then every verdict.
pub fn census_header() -> Vec<&'static str> {
    let mut h = vec!["expression", "order", "characteristic"];
    h.extend_from_slice(VERDICT_NAMES);
    h
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CensusRow {
    pub expression: String,
    pub order: usize,
    pub record: ClassificationRecord,
}

/// One row per catalog entry, in catalog order.
pub fn census_rows<E>(
    cat: &Catalog,
    mut classify: impl FnMut(&Arc<FiniteRing>) -> Result<Arc<ClassificationRecord>, E>,
) -> Result<Vec<CensusRow>, E> {
    cat.entries
        .iter()
        .map(|e| {
            Ok(CensusRow { expression: e.expr.clone(), order: e.ring.order(), record: (*classify(&e.ring)?).clone() })
        })
        .collect()
}

pub fn census_csv(rows: &[CensusRow]) -> Result<String, IoError> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(census_header())?;
    for row in rows {
        let mut cells = vec![row.expression.clone(), row.order.to_string(), row.record.characteristic.to_string()];
        for name in VERDICT_NAMES {
            let v = row.record.verdict(name).expect("verdict names resolve");
            cells.push(verdict_cell(v).to_string());
        }
        w.write_record(&cells)?;
    }
    let bytes = w.into_inner().map_err(|e| IoError::Io { path: PathBuf::from("<memory>"), source: e.into_error() })?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

/// Counts and, for small rings, the sets themselves.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Description {
    pub label: String,
    pub hash: String,
    pub order: usize,
    pub characteristic: usize,
    pub commutative: bool,
    pub zero: usize,
    pub one: usize,
    pub units: usize,
    pub jacobson: usize,
    pub sqrt_jacobson: usize,
    pub idempotents: usize,
    pub nilpotents: usize,
    pub center: usize,
    pub prime_radical: usize,
    pub sets: Option<DescribedSets>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DescribedSets {
    pub units: Vec<usize>,
    pub jacobson: Vec<usize>,
    pub sqrt_jacobson: Vec<usize>,
    pub idempotents: Vec<usize>,
    pub nilpotents: Vec<usize>,
    pub center: Vec<usize>,
    pub prime_radical: Vec<usize>,
}

pub fn describe(r: &FiniteRing, p: &RingProfile) -> Description {
    let sets = (r.order() <= DESCRIBE_SET_LIMIT).then(|| DescribedSets {
        units: p.units.members().members().to_vec(),
        jacobson: p.jacobson.members().to_vec(),
        sqrt_jacobson: p.sqrt_jacobson.members().to_vec(),
        idempotents: p.idempotents.members().to_vec(),
        nilpotents: p.nilpotents.members().to_vec(),
        center: p.center.members().to_vec(),
        prime_radical: p.prime_radical.members().to_vec(),
    });
    Description {
        label: r.label().to_string(),
        hash: r.hash().to_hex(),
        order: r.order(),
        characteristic: p.characteristic,
        commutative: p.commutative,
        zero: r.zero(),
        one: r.one(),
        units: p.units.len(),
        jacobson: p.jacobson.len(),
        sqrt_jacobson: p.sqrt_jacobson.len(),
        idempotents: p.idempotents.len(),
        nilpotents: p.nilpotents.len(),
        center: p.center.len(),
        prime_radical: p.prime_radical.len(),
        sets,
    }
}

fn set_text(xs: &[usize]) -> String {
    let items: Vec<String> = xs.iter().map(usize::to_string).collect();
    format!("{{{}}}", items.join(","))
}

impl Description {
    pub fn text(&self) -> String {
        let mut s = format!("{}\n  hash {}\n", self.label, self.hash);
        s.push_str(&format!("  order {}, characteristic {}", self.order, self.characteristic));
        if self.order == 1 {
            s.push_str(", zero ring");
        }
        s.push_str(if self.commutative { ", commutative\n" } else { ", noncommutative\n" });
        let rows: [(&str, usize, Option<&Vec<usize>>); 7] = [
            ("U", self.units, self.sets.as_ref().map(|x| &x.units)),
            ("J", self.jacobson, self.sets.as_ref().map(|x| &x.jacobson)),
            ("sqrtJ", self.sqrt_jacobson, self.sets.as_ref().map(|x| &x.sqrt_jacobson)),
            ("Id", self.idempotents, self.sets.as_ref().map(|x| &x.idempotents)),
            ("Nil", self.nilpotents, self.sets.as_ref().map(|x| &x.nilpotents)),
            ("C", self.center, self.sets.as_ref().map(|x| &x.center)),
            ("Nil*", self.prime_radical, self.sets.as_ref().map(|x| &x.prime_radical)),
        ];
        for (name, n, set) in rows {
            match set {
                Some(xs) => s.push_str(&format!("  {name:<6} |{n}| = {}\n", set_text(xs))),
                None => s.push_str(&format!("  {name:<6} |{n}|\n")),
            }
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify::ClassifyConfig;
    use crate::expr::Evaluator;

    fn ring(text: &str) -> Arc<FiniteRing> {
        Evaluator::new(Limits::default()).ring(text).unwrap()
    }

    #[test]
    fn ring_json_round_trip() {
        let r = ring("M(2,Z(2))");
        let back = ring_from_json(&ring_to_json(&r), Limits::default()).unwrap();
        assert_eq!(back.hash(), r.hash());
        assert_eq!(ring_to_json(&back), ring_to_json(&r));
    }

    #[test]
    fn tampered_distributivity_is_rejected() {
        let mut j = RingJson::from_ring(&ring("Z(4)"));
        j.mul[2][3] = 1;
        let err = ring_from_json(&serde_json::to_string(&j).unwrap(), Limits::default()).unwrap_err();
        assert!(matches!(err, IoError::Algebra(AlgebraError::AxiomViolation { .. })), "{err}");
    }

    #[test]
    fn group_json_round_trip() {
        let g = Evaluator::new(Limits::default()).group("S3").unwrap();
        let back = group_from_json(&group_to_json(&g), Limits::default()).unwrap();
        assert_eq!(back.cayley_rows(), g.cayley_rows());
    }

    #[test]
    fn describe_examples() {
        let r = ring("Z(9)");
        let d = describe(&r, &RingProfile::compute(&r).unwrap());
        let sets = d.sets.unwrap();
        assert_eq!(sets.units, [1, 2, 4, 5, 7, 8]);
        assert_eq!(sets.jacobson, [0, 3, 6]);
        let z1 = ring("Z(1)");
        let d = describe(&z1, &RingProfile::compute(&z1).unwrap());
        assert!(d.text().contains("zero ring"));
        assert_eq!(d.sets.unwrap().units, [0]);
    }

    #[test]
    fn disk_cache_ignores_other_versions() {
        let dir = tempfile::tempdir().unwrap();
        let an = Analyzer::default();
        let r = ring("M(2,Z(2))");
        let cache = DiskCache::new(dir.path(), ClassifyConfig::default());
        let first = cache.classify(&an, &r).unwrap();
        assert_eq!(cache.get(r.hash()).as_ref(), Some(&*first));
        let other = DiskCache::new(dir.path(), ClassifyConfig { skip_expensive: true, ..Default::default() });
        assert!(other.get(r.hash()).is_none());
        let fresh = Analyzer::default();
        assert_eq!(*cache.classify(&fresh, &r).unwrap(), *first);
    }

    #[test]
    fn empty_census_is_header_only() {
        let csv = census_csv(&[]).unwrap();
        assert_eq!(csv.lines().count(), 1);
        assert!(csv.starts_with("expression,order,characteristic,abelian,"));
    }
}
