//! Element subsets and ideals.

use serde::Serialize;

use crate::error::{AlgebraError, Result};
use crate::ring::{FiniteRing, RingHash};

/// A subset of a ring's elements, kept both as a sorted member list and a
/// membership mask.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ElemSet {
    ring: RingHash,
    members: Vec<usize>,
    #[serde(skip)]
    mask: Vec<bool>,
}

impl ElemSet {
    pub fn from_mask(ring: &FiniteRing, mask: Vec<bool>) -> ElemSet {
        assert_eq!(mask.len(), ring.order(), "mask length must equal the ring order");
        let members = mask.iter().enumerate().filter(|(_, &m)| m).map(|(i, _)| i).collect();
        ElemSet { ring: ring.hash(), members, mask }
    }

    pub fn from_members(ring: &FiniteRing, members: impl IntoIterator<Item = usize>) -> Result<ElemSet> {
        let mut mask = vec![false; ring.order()];
        for x in members {
            if x >= ring.order() {
                return Err(AlgebraError::ElementOutOfRange { index: x, order: ring.order() });
            }
            mask[x] = true;
        }
        Ok(ElemSet::from_mask(ring, mask))
    }

    pub fn ring(&self) -> RingHash {
        self.ring
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn mask(&self) -> &[bool] {
        &self.mask
    }

    #[inline]
    pub fn contains(&self, x: usize) -> bool {
        self.mask.get(x).copied().unwrap_or(false)
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn is_subset(&self, other: &ElemSet) -> bool {
        self.members.iter().all(|&x| other.contains(x))
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.iter().copied()
    }
}

/// A two-sided ideal: contains zero, closed under addition and negation,
/// absorbs multiplication from both sides.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct Ideal {
    set: ElemSet,
}

impl Ideal {
    pub fn new(ring: &FiniteRing, set: ElemSet) -> Result<Ideal> {
        check_ideal(ring, &set)?;
        Ok(Ideal { set })
    }

    /// Wraps a set produced by a closure that guarantees the ideal laws.
    pub(crate) fn trusted(set: ElemSet) -> Ideal {
        Ideal { set }
    }

    pub fn zero(ring: &FiniteRing) -> Ideal {
        Ideal { set: ElemSet::from_members(ring, [ring.zero()]).unwrap() }
    }

    pub fn set(&self) -> &ElemSet {
        &self.set
    }

    pub fn into_set(self) -> ElemSet {
        self.set
    }

    pub fn members(&self) -> &[usize] {
        self.set.members()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.set.contains(x)
    }

    pub fn len(&self) -> usize {
        self.set.len()
    }

    pub fn is_empty(&self) -> bool {
        self.set.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.set.iter()
    }

    pub fn is_subset(&self, other: &ElemSet) -> bool {
        self.set.is_subset(other)
    }

    pub fn ring(&self) -> RingHash {
        self.set.ring()
    }
}

/// Checks the ideal laws. Absorption is tested against the ring's additive
/// generators, which suffices once additive closure holds.
pub fn check_ideal(ring: &FiniteRing, set: &ElemSet) -> Result<()> {
    if set.ring() != ring.hash() {
        return Err(AlgebraError::ForeignElement);
    }
    if !set.contains(ring.zero()) {
        return Err(AlgebraError::NotAnIdeal("does not contain zero".into()));
    }
    for x in set.iter() {
        if !set.contains(ring.neg(x)) {
            return Err(AlgebraError::NotAnIdeal(format!("not closed under negation at {x}")));
        }
        for y in set.iter() {
            if !set.contains(ring.add(x, y)) {
                return Err(AlgebraError::NotAnIdeal(format!("not closed under addition at ({x}, {y})")));
            }
        }
        for &g in ring.add_generators() {
            if !set.contains(ring.mul(g, x)) || !set.contains(ring.mul(x, g)) {
                return Err(AlgebraError::NotAnIdeal(format!("does not absorb {g} at {x}")));
            }
        }
    }
    Ok(())
}
