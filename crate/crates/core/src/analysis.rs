//! Hash-keyed memo store for profiles, `R/J(R)` quotients and records.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use crate::classify::{classify_with, ClassificationRecord, ClassifyConfig};
use crate::constructions::quotient;
use crate::error::Result;
use crate::radicals::RingProfile;
use crate::ring::{FiniteRing, Limits, RingHash, HARD_MAX_ORDER};

/// Caches derived data by ring hash. Writes are idempotent, so concurrent
/// fills of the same key store identical values.
#[derive(Debug, Default)]
pub struct Analyzer {
    config: ClassifyConfig,
    profiles: Mutex<HashMap<RingHash, Arc<RingProfile>>>,
    quotients: Mutex<HashMap<RingHash, Arc<FiniteRing>>>,
    records: Mutex<HashMap<RingHash, Arc<ClassificationRecord>>>,
}

impl Analyzer {
    pub fn new(config: ClassifyConfig) -> Analyzer {
        Analyzer { config, ..Default::default() }
    }

    pub fn config(&self) -> ClassifyConfig {
        self.config
    }

    pub fn profile(&self, r: &FiniteRing) -> Result<Arc<RingProfile>> {
        if let Some(p) = self.profiles.lock().unwrap().get(&r.hash()) {
            return Ok(p.clone());
        }
        let p = Arc::new(RingProfile::compute(r)?);
        self.profiles.lock().unwrap().entry(r.hash()).or_insert_with(|| p.clone());
        Ok(p)
    }

    /// `R/J(R)`; the ring itself when `J(R) = 0`.
    pub fn jacobson_quotient(&self, r: &Arc<FiniteRing>) -> Result<Arc<FiniteRing>> {
        if let Some(q) = self.quotients.lock().unwrap().get(&r.hash()) {
            return Ok(q.clone());
        }
        let p = self.profile(r)?;
        let q = if p.jacobson.len() == 1 {
            r.clone()
        } else {
            Arc::new(quotient(r, &p.jacobson, Limits::new(HARD_MAX_ORDER))?.0)
        };
        self.quotients.lock().unwrap().entry(r.hash()).or_insert_with(|| q.clone());
        Ok(q)
    }

    pub fn classify(&self, r: &Arc<FiniteRing>) -> Result<Arc<ClassificationRecord>> {
        if let Some(rec) = self.cached_record(r.hash()) {
            return Ok(rec);
        }
        let p = self.profile(r)?;
        let q = self.jacobson_quotient(r)?;
        let rec = Arc::new(classify_with(r, &p, &q, self.config)?);
        self.records.lock().unwrap().entry(r.hash()).or_insert_with(|| rec.clone());
        Ok(rec)
    }

    pub fn cached_record(&self, hash: RingHash) -> Option<Arc<ClassificationRecord>> {
        self.records.lock().unwrap().get(&hash).cloned()
    }

    /// Seeds the record cache, e.g. from disk. The record's own hash field
    /// must equal `hash`.
    pub fn insert_record(&self, hash: RingHash, rec: ClassificationRecord) {
        if rec.hash == hash.to_hex() {
            self.records.lock().unwrap().entry(hash).or_insert_with(|| Arc::new(rec));
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::ring_zn;

    #[test]
    fn cache_hits_equal_fresh_results() {
        let a = Analyzer::default();
        let r = Arc::new(ring_zn(12, Limits::default()).unwrap());
        let first = a.classify(&r).unwrap();
        let second = a.classify(&r).unwrap();
        assert!(Arc::ptr_eq(&first, &second));
        let fresh = Analyzer::default().classify(&r).unwrap();
        assert_eq!(*first, *fresh);
        assert_eq!(a.jacobson_quotient(&r).unwrap().order(), 6);
    }
}
