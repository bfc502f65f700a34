//! Verdicts for every named ring class, each a literal scan of its definition.

use serde::{Deserialize, Serialize};

use crate::error::{AlgebraError, Result};
use crate::radicals::{idempotents_lift, RingProfile};
use crate::ring::FiniteRing;
use crate::sets::ElemSet;

/// Controls the verdicts whose scans are the slowest.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassifyConfig {
    /// `exchange`, `pi_regular` and `unit_regular` are skipped above this order.
    pub expensive_threshold: usize,
    /// Skip them regardless of order.
    pub skip_expensive: bool,
}

impl Default for ClassifyConfig {
    fn default() -> Self {
        ClassifyConfig { expensive_threshold: 1024, skip_expensive: false }
    }
}

impl ClassifyConfig {
    pub fn skips(&self, order: usize) -> bool {
        self.skip_expensive || order > self.expensive_threshold
    }
}

/// One ring's verdicts. Fields are in alphabetical order; the three
/// optional verdicts are `None` when skipped for size.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationRecord {
    pub abelian: bool,
    pub boolean: bool,
    pub characteristic: usize,
    pub clean: bool,
    pub commutative: bool,
    pub dedekind_finite: bool,
    pub exchange: Option<bool>,
    pub hash: String,
    pub j_clean: bool,
    pub ju: bool,
    pub local: bool,
    pub nil_clean: bool,
    pub pi_regular: Option<bool>,
    pub reduced: bool,
    pub regular: bool,
    pub semi_regular: bool,
    pub semi_weakly_boolean: bool,
    pub sqrt_ju: bool,
    pub strongly_clean: bool,
    pub strongly_nil_clean: bool,
    pub strongly_regular: bool,
    pub strongly_weakly_nil_clean: bool,
    pub two_primal: bool,
    pub unit_regular: Option<bool>,
    pub uu: bool,
    pub w_sqrt_ju: bool,
    pub weakly_boolean: bool,
    pub weakly_j_clean: bool,
    pub weakly_nil_clean: bool,
    pub wju: bool,
    pub wuu: bool,
}

/// Verdict names in alphabetical order (the census column order).
pub const VERDICT_NAMES: &[&str] = &[
    "abelian",
    "boolean",
    "clean",
    "commutative",
    "dedekind_finite",
    "exchange",
    "j_clean",
    "ju",
    "local",
    "nil_clean",
    "pi_regular",
    "reduced",
    "regular",
    "semi_regular",
    "semi_weakly_boolean",
    "sqrt_ju",
    "strongly_clean",
    "strongly_nil_clean",
    "strongly_regular",
    "strongly_weakly_nil_clean",
    "two_primal",
    "unit_regular",
    "uu",
    "w_sqrt_ju",
    "weakly_boolean",
    "weakly_j_clean",
    "weakly_nil_clean",
    "wju",
    "wuu",
];

/// Maps accepted alternative names onto record fields.
pub fn canonical_verdict_name(name: &str) -> Option<&'static str> {
    let lower = name.trim().to_ascii_lowercase().replace('-', "_");
    let alias = match lower.as_str() {
        "weakly_semi_boolean" => "weakly_j_clean",
        "semi_boolean" => "j_clean",
        "sqrtju" | "sqrt_j_u" => "sqrt_ju",
        "wsqrtju" | "weakly_sqrt_ju" => "w_sqrt_ju",
        "2_primal" => "two_primal",
        other => other,
    };
    VERDICT_NAMES.iter().copied().find(|&v| v == alias)
}

impl ClassificationRecord {
    /// Looks a verdict up by name or alias; the inner `None` means skipped.
    pub fn verdict(&self, name: &str) -> Option<Option<bool>> {
        let v = match canonical_verdict_name(name)? {
            "abelian" => Some(self.abelian),
            "boolean" => Some(self.boolean),
            "clean" => Some(self.clean),
            "commutative" => Some(self.commutative),
            "dedekind_finite" => Some(self.dedekind_finite),
            "exchange" => self.exchange,
            "j_clean" => Some(self.j_clean),
            "ju" => Some(self.ju),
            "local" => Some(self.local),
            "nil_clean" => Some(self.nil_clean),
            "pi_regular" => self.pi_regular,
            "reduced" => Some(self.reduced),
            "regular" => Some(self.regular),
            "semi_regular" => Some(self.semi_regular),
            "semi_weakly_boolean" => Some(self.semi_weakly_boolean),
            "sqrt_ju" => Some(self.sqrt_ju),
            "strongly_clean" => Some(self.strongly_clean),
            "strongly_nil_clean" => Some(self.strongly_nil_clean),
            "strongly_regular" => Some(self.strongly_regular),
            "strongly_weakly_nil_clean" => Some(self.strongly_weakly_nil_clean),
            "two_primal" => Some(self.two_primal),
            "unit_regular" => self.unit_regular,
            "uu" => Some(self.uu),
            "w_sqrt_ju" => Some(self.w_sqrt_ju),
            "weakly_boolean" => Some(self.weakly_boolean),
            "weakly_j_clean" => Some(self.weakly_j_clean),
            "weakly_nil_clean" => Some(self.weakly_nil_clean),
            "wju" => Some(self.wju),
            "wuu" => Some(self.wuu),
            _ => unreachable!("every verdict name is matched"),
        };
        Some(v)
    }
}

/// `uu`, `wuu`, `ju`, `wju`, `sqrt_ju`, `w_sqrt_ju`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct UnitClasses {
    pub uu: bool,
    pub wuu: bool,
    pub ju: bool,
    pub wju: bool,
    pub sqrt_ju: bool,
    pub w_sqrt_ju: bool,
}

/// Decides `U(R) = 1 + S` (and with `weak`, `U(R) = ±1 + S`) as a set equality.
fn units_are_shifts(r: &FiniteRing, units: &ElemSet, s: &ElemSet, weak: bool) -> Result<bool> {
    let mut shifted = vec![false; r.order()];
    let minus_one = r.neg(r.one());
    for x in s.iter() {
        shifted[r.add(r.one(), x)] = true;
        if weak {
            shifted[r.add(minus_one, x)] = true;
        }
    }
    if let Some(y) = (0..r.order()).find(|&y| shifted[y] && !units.contains(y)) {
        return Err(AlgebraError::InternalInconsistency(format!("shift {y} of a radical element is not a unit")));
    }
    Ok(units.iter().all(|u| shifted[u]))
}

pub fn unit_class_predicates(r: &FiniteRing, p: &RingProfile) -> Result<UnitClasses> {
    let u = p.units.members();
    Ok(UnitClasses {
        uu: units_are_shifts(r, u, &p.nilpotents, false)?,
        wuu: units_are_shifts(r, u, &p.nilpotents, true)?,
        ju: units_are_shifts(r, u, p.jacobson.set(), false)?,
        wju: units_are_shifts(r, u, p.jacobson.set(), true)?,
        sqrt_ju: units_are_shifts(r, u, &p.sqrt_jacobson, false)?,
        w_sqrt_ju: units_are_shifts(r, u, &p.sqrt_jacobson, true)?,
    })
}

pub fn is_boolean(r: &FiniteRing) -> bool {
    r.elements().all(|x| r.mul(x, x) == x)
}

pub fn is_weakly_boolean(r: &FiniteRing) -> bool {
    r.elements().all(|x| {
        let y = r.neg(x);
        r.mul(x, x) == x || r.mul(y, y) == y
    })
}

/// `boolean`, `weakly_boolean`, `semi_weakly_boolean`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BooleanClasses {
    pub boolean: bool,
    pub weakly_boolean: bool,
    pub semi_weakly_boolean: bool,
}

/// `quotient` is `R/J(R)`.
pub fn boolean_predicates(r: &FiniteRing, p: &RingProfile, quotient: &FiniteRing) -> Result<BooleanClasses> {
    Ok(BooleanClasses {
        boolean: is_boolean(r),
        weakly_boolean: is_weakly_boolean(r),
        semi_weakly_boolean: is_weakly_boolean(quotient) && idempotents_lift(r, &p.jacobson)?,
    })
}

/// The clean family and `exchange`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CleanClasses {
    pub clean: bool,
    pub strongly_clean: bool,
    pub j_clean: bool,
    pub weakly_j_clean: bool,
    pub nil_clean: bool,
    pub strongly_nil_clean: bool,
    pub weakly_nil_clean: bool,
    pub strongly_weakly_nil_clean: bool,
    pub exchange: Option<bool>,
}

pub fn clean_predicates(r: &FiniteRing, p: &RingProfile, skip_exchange: bool) -> CleanClasses {
    let idem = &p.idempotents;
    let units = p.units.members();
    let j = p.jacobson.set();
    let nil = &p.nilpotents;
    let mut acc = [true; 8];
    for a in r.elements() {
        let mut found = [false; 8];
        for e in idem.iter() {
            let minus = r.sub(a, e);
            let plus = r.add(a, e);
            let commute = r.mul(a, e) == r.mul(e, a);
            let hits = [
                units.contains(minus),
                units.contains(minus) && commute,
                j.contains(minus),
                j.contains(minus) || j.contains(plus),
                nil.contains(minus),
                nil.contains(minus) && commute,
                nil.contains(minus) || nil.contains(plus),
                (nil.contains(minus) || nil.contains(plus)) && commute,
            ];
            for (f, h) in found.iter_mut().zip(hits) {
                *f |= h;
            }
            if found.iter().all(|&f| f) {
                break;
            }
        }
        for (slot, f) in acc.iter_mut().zip(found) {
            *slot &= f;
        }
    }
    CleanClasses {
        clean: acc[0],
        strongly_clean: acc[1],
        j_clean: acc[2],
        weakly_j_clean: acc[3],
        nil_clean: acc[4],
        strongly_nil_clean: acc[5],
        weakly_nil_clean: acc[6],
        strongly_weakly_nil_clean: acc[7],
        exchange: (!skip_exchange).then(|| is_exchange(r, idem)),
    }
}

/// For each `a`: some idempotent `e ∈ aR` with `1 − e ∈ (1 − a)R`.
pub fn is_exchange(r: &FiniteRing, idempotents: &ElemSet) -> bool {
    let n = r.order();
    let mut in_ar = vec![u32::MAX; n];
    let mut in_br = vec![u32::MAX; n];
    r.elements().all(|a| {
        let stamp = a as u32;
        for &x in r.mul_row(a) {
            in_ar[x as usize] = stamp;
        }
        for &x in r.mul_row(r.sub(r.one(), a)) {
            in_br[x as usize] = stamp;
        }
        idempotents.iter().any(|e| in_ar[e] == stamp && in_br[r.sub(r.one(), e)] == stamp)
    })
}

/// `b` with some `x` such that `b·x·b = b`.
pub fn regular_elements(r: &FiniteRing) -> Vec<bool> {
    r.elements().map(|b| r.mul_row(b).iter().any(|&bx| r.mul(bx as usize, b) == b)).collect()
}

/// The regularity family.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RegularityClasses {
    pub regular: bool,
    pub strongly_regular: bool,
    pub unit_regular: Option<bool>,
    pub pi_regular: Option<bool>,
    pub semi_regular: bool,
}

/// `quotient` is `R/J(R)`; `skip` drops the size-capped verdicts.
pub fn regularity_predicates(
    r: &FiniteRing,
    p: &RingProfile,
    quotient: &FiniteRing,
    skip: bool,
) -> Result<RegularityClasses> {
    let reg = regular_elements(r);
    let regular = reg.iter().all(|&b| b);
    let strongly_regular = r.elements().all(|a| {
        let a2 = r.mul(a, a);
        r.mul_row(a2).iter().any(|&y| y as usize == a)
    });
    let unit_regular =
        (!skip).then(|| r.elements().all(|a| p.units.members().iter().any(|u| r.mul(r.mul(a, u), a) == a)));
    let pi_regular = (!skip).then(|| {
        let n = r.order();
        r.elements().all(|a| {
            let mut x = a;
            for _ in 0..n {
                if reg[x] {
                    return true;
                }
                x = r.mul(x, a);
            }
            false
        })
    });
    let quotient_regular =
        if quotient.hash() == r.hash() { regular } else { regular_elements(quotient).into_iter().all(|b| b) };
    Ok(RegularityClasses {
        regular,
        strongly_regular,
        unit_regular,
        pi_regular,
        semi_regular: quotient_regular && idempotents_lift(r, &p.jacobson)?,
    })
}

/// Structural verdicts.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StructuralClasses {
    pub reduced: bool,
    pub abelian: bool,
    pub local: bool,
    pub dedekind_finite: bool,
    pub two_primal: bool,
    pub commutative: bool,
}

pub fn structural_predicates(r: &FiniteRing, p: &RingProfile) -> StructuralClasses {
    let units = &p.units;
    let non_units: Vec<usize> = r.elements().filter(|&x| !units.contains(x)).collect();
    let local = r.order() > 1 && non_units.iter().all(|&x| non_units.iter().all(|&y| !units.contains(r.add(x, y))));
    let one = r.one() as u16;
    let dedekind_finite =
        r.elements().all(|a| r.mul_row(a).iter().enumerate().all(|(b, &ab)| ab != one || r.mul(b, a) == r.one()));
    StructuralClasses {
        reduced: p.nilpotents.members() == [r.zero()],
        abelian: p.idempotents.is_subset(&p.center),
        local,
        dedekind_finite,
        two_primal: p.prime_radical.members() == p.nilpotents.members(),
        commutative: p.commutative,
    }
}

/// Aggregates every verdict. `quotient` must be `R/J(R)`.
pub fn classify_with(
    r: &FiniteRing,
    p: &RingProfile,
    quotient: &FiniteRing,
    config: ClassifyConfig,
) -> Result<ClassificationRecord> {
    if p.hash != r.hash() {
        return Err(AlgebraError::ForeignElement);
    }
    if quotient.order() * p.jacobson.len() != r.order() {
        return Err(AlgebraError::InvalidArgument("quotient is not R/J(R)".into()));
    }
    let skip = config.skips(r.order());
    let u = unit_class_predicates(r, p)?;
    let b = boolean_predicates(r, p, quotient)?;
    let c = clean_predicates(r, p, skip);
    let g = regularity_predicates(r, p, quotient, skip)?;
    let s = structural_predicates(r, p);
    Ok(ClassificationRecord {
        abelian: s.abelian,
        boolean: b.boolean,
        characteristic: p.characteristic,
        clean: c.clean,
        commutative: s.commutative,
        dedekind_finite: s.dedekind_finite,
        exchange: c.exchange,
        hash: r.hash().to_hex(),
        j_clean: c.j_clean,
        ju: u.ju,
        local: s.local,
        nil_clean: c.nil_clean,
        pi_regular: g.pi_regular,
        reduced: s.reduced,
        regular: g.regular,
        semi_regular: g.semi_regular,
        semi_weakly_boolean: b.semi_weakly_boolean,
        sqrt_ju: u.sqrt_ju,
        strongly_clean: c.strongly_clean,
        strongly_nil_clean: c.strongly_nil_clean,
        strongly_regular: g.strongly_regular,
        strongly_weakly_nil_clean: c.strongly_weakly_nil_clean,
        two_primal: s.two_primal,
        unit_regular: g.unit_regular,
        uu: u.uu,
        w_sqrt_ju: u.w_sqrt_ju,
        weakly_boolean: b.weakly_boolean,
        weakly_j_clean: c.weakly_j_clean,
        weakly_nil_clean: c.weakly_nil_clean,
        wju: u.wju,
        wuu: u.wuu,
    })
}

/// Implications every record must satisfy, as `(premise, conclusion)`.
pub const LATTICE: &[(&str, &str)] = &[
    ("uu", "wuu"),
    ("wuu", "w_sqrt_ju"),
    ("ju", "wju"),
    ("wju", "w_sqrt_ju"),
    ("uu", "sqrt_ju"),
    ("ju", "sqrt_ju"),
    ("sqrt_ju", "w_sqrt_ju"),
    ("boolean", "weakly_boolean"),
    ("j_clean", "weakly_j_clean"),
    ("weakly_j_clean", "clean"),
    ("clean", "exchange"),
    ("strongly_regular", "unit_regular"),
    ("strongly_regular", "regular"),
    ("regular", "pi_regular"),
    ("regular", "semi_regular"),
    ("semi_regular", "exchange"),
    ("reduced", "abelian"),
    ("commutative", "two_primal"),
    ("reduced", "two_primal"),
    ("w_sqrt_ju", "dedekind_finite"),
];

/// Lattice edges whose premise holds and whose conclusion fails. Skipped
/// verdicts never produce a violation.
pub fn lattice_violations(rec: &ClassificationRecord) -> Vec<(&'static str, &'static str)> {
    LATTICE
        .iter()
        .copied()
        .filter(|&(p, c)| rec.verdict(p) == Some(Some(true)) && rec.verdict(c) == Some(Some(false)))
        .collect()
}
