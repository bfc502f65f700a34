//! Units, idempotents, nilpotents, the center and the radicals of a ring.
//!
//! All sets are exhaustive scans. Membership of `x` in `Nil(R)` and `√J(R)`
//! is decided from the single power `x^n` with `n = |R|`: the power sequence
//! of `x` takes all of its values at exponents `≤ n`, and once a power lies
//! in an ideal every higher power does too.

use serde::Serialize;

use crate::constructions::close_ideal;
use crate::error::{AlgebraError, Result};
use crate::ring::{FiniteRing, RingHash};
use crate::sets::{check_ideal, ElemSet, Ideal};

/// The unit group with its inverse map, plus the one-sided invertible sets.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct UnitGroup {
    ring: RingHash,
    members: ElemSet,
    #[serde(skip)]
    inv: Vec<Option<usize>>,
    left_invertible: ElemSet,
    right_invertible: ElemSet,
}

impl UnitGroup {
    pub fn members(&self) -> &ElemSet {
        &self.members
    }

    pub fn contains(&self, x: usize) -> bool {
        self.members.contains(x)
    }

    pub fn inverse(&self, x: usize) -> Option<usize> {
        self.inv.get(x).copied().flatten()
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Elements `b` with some `a` such that `a·b = 1`.
    pub fn left_invertible(&self) -> &ElemSet {
        &self.left_invertible
    }

    /// Elements `a` with some `b` such that `a·b = 1`.
    pub fn right_invertible(&self) -> &ElemSet {
        &self.right_invertible
    }

    pub fn ring(&self) -> RingHash {
        self.ring
    }
}

/// Scans every product `a·b` for the identity.
pub fn units(r: &FiniteRing) -> UnitGroup {
    let n = r.order();
    let one = r.one() as u16;
    let mut right_inv: Vec<Option<usize>> = vec![None; n];
    let mut left = vec![false; n];
    for a in 0..n {
        for (b, &ab) in r.mul_row(a).iter().enumerate() {
            if ab == one {
                right_inv[a].get_or_insert(b);
                left[b] = true;
            }
        }
    }
    let right: Vec<bool> = right_inv.iter().map(Option::is_some).collect();
    let inv: Vec<Option<usize>> = (0..n).map(|a| right_inv[a].filter(|&b| left[a] && r.mul(b, a) == r.one())).collect();
    let mask = inv.iter().map(Option::is_some).collect();
    UnitGroup {
        ring: r.hash(),
        members: ElemSet::from_mask(r, mask),
        inv,
        left_invertible: ElemSet::from_mask(r, left),
        right_invertible: ElemSet::from_mask(r, right),
    }
}

/// `Id(R)`, `Nil(R)` and `C(R)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ElementSets {
    pub idempotents: ElemSet,
    pub nilpotents: ElemSet,
    pub center: ElemSet,
}

pub fn element_sets(r: &FiniteRing) -> ElementSets {
    let n = r.order() as u64;
    let idem = r.elements().map(|x| r.mul(x, x) == x).collect();
    let nil = r.elements().map(|x| r.pow(x, n) == r.zero()).collect();
    let gens = r.add_generators();
    let center = r.elements().map(|x| gens.iter().all(|&g| r.mul(x, g) == r.mul(g, x))).collect();
    ElementSets {
        idempotents: ElemSet::from_mask(r, idem),
        nilpotents: ElemSet::from_mask(r, nil),
        center: ElemSet::from_mask(r, center),
    }
}

/// `J(R) = {x : 1 − r·x ∈ U(R) for every r}`.
pub fn jacobson_radical(r: &FiniteRing, units: &UnitGroup) -> Result<Ideal> {
    if units.ring() != r.hash() {
        return Err(AlgebraError::ForeignElement);
    }
    let n = r.order();
    let one_minus_unit: Vec<bool> = r.elements().map(|y| units.contains(r.sub(r.one(), y))).collect();
    let mut mask = vec![true; n];
    for s in 0..n {
        let row = r.mul_row(s);
        for x in 0..n {
            if mask[x] && !one_minus_unit[row[x] as usize] {
                mask[x] = false;
            }
        }
    }
    let set = ElemSet::from_mask(r, mask);
    check_ideal(r, &set).map_err(|e| AlgebraError::InternalInconsistency(format!("J(R) is not an ideal: {e}")))?;
    let minus_one = r.neg(r.one());
    for j in set.iter() {
        if n > 1 && units.contains(j) {
            return Err(AlgebraError::InternalInconsistency(format!("unit {j} in J(R)")));
        }
        if !units.contains(r.add(r.one(), j)) || !units.contains(r.add(minus_one, j)) {
            return Err(AlgebraError::InternalInconsistency(format!("±1 + {j} is not a unit")));
        }
    }
    Ok(Ideal::trusted(set))
}

/// `√J(R) = {x : x^k ∈ J(R) for some k ≥ 1}`.
pub fn sqrt_jacobson(r: &FiniteRing, j: &Ideal) -> ElemSet {
    let n = r.order() as u64;
    let mask = r.elements().map(|x| j.contains(r.pow(x, n))).collect();
    ElemSet::from_mask(r, mask)
}

/// The smallest semiprime ideal, by the ascending chain
/// `I₀ = 0`, `I_{t+1} = ⟨I_t ∪ {a : aRa ⊆ I_t}⟩`.
pub fn prime_radical(r: &FiniteRing, nilpotents: &ElemSet) -> Result<Ideal> {
    let n = r.order();
    let gens = r.add_generators();
    let mut mask = close_ideal(r, vec![false; n], std::iter::empty());
    loop {
        let seeds: Vec<usize> =
            r.elements().filter(|&a| !mask[a] && gens.iter().all(|&g| mask[r.mul(r.mul(a, g), a)])).collect();
        if seeds.is_empty() {
            break;
        }
        mask = close_ideal(r, mask, seeds.into_iter());
    }
    let set = ElemSet::from_mask(r, mask);
    if !set.is_subset(nilpotents) {
        return Err(AlgebraError::InternalInconsistency("prime radical contains a non-nilpotent".into()));
    }
    Ok(Ideal::trusted(set))
}

/// Coset index of every element, cosets numbered by least representative.
pub(crate) fn coset_index(r: &FiniteRing, ideal: &Ideal) -> Vec<usize> {
    let mut idx = vec![usize::MAX; r.order()];
    let mut next = 0;
    for x in r.elements() {
        if idx[x] == usize::MAX {
            for &i in ideal.members() {
                idx[r.add(x, i)] = next;
            }
            next += 1;
        }
    }
    idx
}

/// Whether every idempotent coset of `R/I` contains an idempotent of `R`.
pub fn idempotents_lift(r: &FiniteRing, ideal: &Ideal) -> Result<bool> {
    check_ideal(r, ideal.set())?;
    let idx = coset_index(r, ideal);
    let mut lifted = vec![false; r.order()];
    for x in r.elements() {
        if r.mul(x, x) == x {
            lifted[idx[x]] = true;
        }
    }
    Ok(r.elements().filter(|&x| ideal.contains(r.sub(r.mul(x, x), x))).all(|x| lifted[idx[x]]))
}

/// Every distinguished subset of one ring.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RingProfile {
    pub hash: RingHash,
    pub order: usize,
    pub characteristic: usize,
    pub commutative: bool,
    pub units: UnitGroup,
    pub idempotents: ElemSet,
    pub nilpotents: ElemSet,
    pub center: ElemSet,
    pub jacobson: Ideal,
    pub sqrt_jacobson: ElemSet,
    pub prime_radical: Ideal,
}

impl RingProfile {
    pub fn compute(r: &FiniteRing) -> Result<RingProfile> {
        let units = units(r);
        let sets = element_sets(r);
        let jacobson = jacobson_radical(r, &units)?;
        let sqrt_jacobson = sqrt_jacobson(r, &jacobson);
        let prime_radical = prime_radical(r, &sets.nilpotents)?;
        Ok(RingProfile {
            hash: r.hash(),
            order: r.order(),
            characteristic: r.characteristic(),
            commutative: r.is_commutative(),
            units,
            idempotents: sets.idempotents,
            nilpotents: sets.nilpotents,
            center: sets.center,
            jacobson,
            sqrt_jacobson,
            prime_radical,
        })
    }
}
