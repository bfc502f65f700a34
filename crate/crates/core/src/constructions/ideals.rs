use std::sync::Arc;

use crate::error::{AlgebraError, Result};
use crate::ring::{FiniteRing, Limits, Origin, RingHash};
use crate::sets::{check_ideal, ElemSet, Ideal};

use super::Codec;

/// A ring homomorphism stored as its full value table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RingHom {
    source: RingHash,
    target: RingHash,
    map: Vec<usize>,
}

impl RingHom {
    pub(crate) fn new(source: &FiniteRing, target: RingHash, map: Vec<usize>) -> RingHom {
        debug_assert_eq!(map.len(), source.order());
        RingHom { source: source.hash(), target, map }
    }

    pub fn identity(ring: &FiniteRing) -> RingHom {
        RingHom::new(ring, ring.hash(), ring.elements().collect())
    }

    pub fn source(&self) -> RingHash {
        self.source
    }

    pub fn target(&self) -> RingHash {
        self.target
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.map[x]
    }

    /// Checks the homomorphism laws. Additivity is tested on the source's
    /// additive generators against all elements, multiplicativity on pairs of
    /// generators; together with additivity that covers every pair.
    pub fn verify(&self, src: &FiniteRing, tgt: &FiniteRing) -> Result<()> {
        if src.hash() != self.source || tgt.hash() != self.target {
            return Err(AlgebraError::ForeignElement);
        }
        let f = |x: usize| self.map[x];
        if f(src.zero()) != tgt.zero() || f(src.one()) != tgt.one() {
            return Err(AlgebraError::InternalInconsistency("hom does not preserve 0 and 1".into()));
        }
        if self.map.iter().any(|&y| y >= tgt.order()) {
            return Err(AlgebraError::InternalInconsistency("hom value out of range".into()));
        }
        let gens = src.add_generators();
        for &g in gens {
            for x in src.elements() {
                if f(src.add(g, x)) != tgt.add(f(g), f(x)) {
                    return Err(AlgebraError::InternalInconsistency(format!("hom is not additive at ({g}, {x})")));
                }
            }
            for &h in gens {
                if f(src.mul(g, h)) != tgt.mul(f(g), f(h)) {
                    return Err(AlgebraError::InternalInconsistency(format!(
                        "hom is not multiplicative at ({g}, {h})"
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn is_surjective(&self, tgt: &FiniteRing) -> bool {
        let mut hit = vec![false; tgt.order()];
        for &y in &self.map {
            hit[y] = true;
        }
        hit.into_iter().all(|h| h)
    }

    pub fn image(&self, tgt: &FiniteRing, set: &ElemSet) -> ElemSet {
        let mut mask = vec![false; tgt.order()];
        for x in set.iter() {
            mask[self.map[x]] = true;
        }
        ElemSet::from_mask(tgt, mask)
    }

    pub fn kernel(&self, src: &FiniteRing, tgt: &FiniteRing) -> Ideal {
        let mask = self.map.iter().map(|&y| y == tgt.zero()).collect();
        Ideal::trusted(ElemSet::from_mask(src, mask))
    }
}

/// Projections of a ring built by [`super::direct_product`].
pub fn projections(ring: &FiniteRing) -> Result<Vec<RingHom>> {
    let Origin::Product { factors } = ring.origin() else {
        return Err(AlgebraError::InvalidArgument("ring is not a direct product".into()));
    };
    let codec = Codec::new(factors.iter().map(|r| r.order()).collect(), ring.order());
    Ok(factors
        .iter()
        .enumerate()
        .map(|(d, f)| {
            let map = ring.elements().map(|x| codec.digits(x)[d] as usize).collect();
            RingHom::new(ring, f.hash(), map)
        })
        .collect())
}

/// Smallest ideal containing `gens`.
///
/// The member set is kept an additive subgroup by adjoining whole cosets of
/// each new element; every newly added element is multiplied on both sides
/// by the ring's additive generators, which by biadditivity gives absorption
/// by all of `R`.
pub fn ideal_generated(ring: &FiniteRing, gens: &[usize]) -> Result<Ideal> {
    let n = ring.order();
    if let Some(&x) = gens.iter().find(|&&x| x >= n) {
        return Err(AlgebraError::ElementOutOfRange { index: x, order: n });
    }
    let mask = close_ideal(ring, vec![false; n], gens.iter().copied());
    Ok(Ideal::trusted(ElemSet::from_mask(ring, mask)))
}

/// Extends an existing ideal mask (or the empty mask) by `seeds`.
pub(crate) fn close_ideal(ring: &FiniteRing, mut inside: Vec<bool>, seeds: impl Iterator<Item = usize>) -> Vec<bool> {
    let mut members: Vec<usize> = inside.iter().enumerate().filter(|(_, &m)| m).map(|(i, _)| i).collect();
    if !inside[ring.zero()] {
        inside[ring.zero()] = true;
        members.push(ring.zero());
    }
    let mut pending: Vec<usize> = seeds.collect();
    let gens = ring.add_generators();
    while let Some(x) = pending.pop() {
        if inside[x] {
            continue;
        }
        let base = members.clone();
        let mut t = x;
        while !inside[t] {
            for &m in &base {
                let y = ring.add(m, t);
                inside[y] = true;
                members.push(y);
                for &g in gens {
                    pending.push(ring.mul(g, y));
                    pending.push(ring.mul(y, g));
                }
            }
            t = ring.add(t, x);
        }
    }
    inside
}

/// `R/I` with cosets indexed by increasing least representative, and the
/// canonical projection.
pub fn quotient(ring: &Arc<FiniteRing>, ideal: &Ideal, limits: Limits) -> Result<(FiniteRing, RingHom)> {
    check_ideal(ring, ideal.set())?;
    let n = ring.order();
    let mut rep_index = vec![usize::MAX; n];
    let mut reps = Vec::new();
    for x in 0..n {
        if rep_index[x] != usize::MAX {
            continue;
        }
        let idx = reps.len();
        reps.push(x);
        for &i in ideal.members() {
            rep_index[ring.add(x, i)] = idx;
        }
    }
    let q = reps.len();
    let mut add = Vec::with_capacity(q * q);
    let mut mul = Vec::with_capacity(q * q);
    for &a in &reps {
        for &b in &reps {
            add.push(rep_index[ring.add(a, b)] as u16);
            mul.push(rep_index[ring.mul(a, b)] as u16);
        }
    }
    let zero = rep_index[ring.zero()];
    let one = rep_index[ring.one()];
    let members = ideal.members().to_vec();
    let label =
        format!("Quot({},[{}])", ring.label(), members.iter().map(|m| m.to_string()).collect::<Vec<_>>().join(","));
    let quotient = FiniteRing::from_trusted(q, add, mul, zero, one, limits)?
        .with_label(label)
        .with_origin(Origin::Quotient { parent: ring.clone(), ideal: members, projection: rep_index.clone() });
    let hom = RingHom::new(ring, quotient.hash(), rep_index);
    Ok((quotient, hom))
}

/// Ring on a multiplicatively and additively closed subset, members indexed
/// by increasing parent index. Always fully validated.
fn restrict(ring: &FiniteRing, members: &[usize], one: usize, limits: Limits) -> Result<FiniteRing> {
    let mut pos = vec![usize::MAX; ring.order()];
    for (i, &m) in members.iter().enumerate() {
        pos[m] = i;
    }
    let s = members.len();
    let mut add = Vec::with_capacity(s * s);
    let mut mul = Vec::with_capacity(s * s);
    for &a in members {
        for &b in members {
            let (x, y) = (pos[ring.add(a, b)], pos[ring.mul(a, b)]);
            if x == usize::MAX || y == usize::MAX {
                return Err(AlgebraError::InternalInconsistency("subset is not closed".into()));
            }
            add.push(x as u16);
            mul.push(y as u16);
        }
    }
    FiniteRing::from_tables(s, add, mul, pos[ring.zero()], pos[one], limits)
}

/// `eRe` with identity `e`.
pub fn corner(ring: &Arc<FiniteRing>, e: usize, limits: Limits) -> Result<FiniteRing> {
    if e >= ring.order() {
        return Err(AlgebraError::ElementOutOfRange { index: e, order: ring.order() });
    }
    if ring.mul(e, e) != e {
        return Err(AlgebraError::NotIdempotent(e));
    }
    if e == ring.zero() && ring.order() > 1 {
        return Err(AlgebraError::ZeroCorner);
    }
    let mut mask = vec![false; ring.order()];
    for x in ring.elements() {
        mask[ring.mul(ring.mul(e, x), e)] = true;
    }
    let members: Vec<usize> = ring.elements().filter(|&x| mask[x]).collect();
    Ok(restrict(ring, &members, e, limits)?
        .with_label(format!("Corner({},{e})", ring.label()))
        .with_origin(Origin::Corner { parent: ring.clone(), idempotent: e, embedding: members }))
}

/// Unital subring generated by `gens` (always containing 1).
pub fn subring_generated(ring: &Arc<FiniteRing>, gens: &[usize], limits: Limits) -> Result<FiniteRing> {
    let mask = subring_mask(ring, gens)?;
    let members: Vec<usize> = ring.elements().filter(|&x| mask[x]).collect();
    Ok(restrict(ring, &members, ring.one(), limits)?
        .with_label(format!("Sub({},{gens:?})", ring.label()))
        .with_origin(Origin::Subring { parent: ring.clone(), embedding: members }))
}

pub(crate) fn subring_mask(ring: &FiniteRing, gens: &[usize]) -> Result<Vec<bool>> {
    let n = ring.order();
    if let Some(&x) = gens.iter().find(|&&x| x >= n) {
        return Err(AlgebraError::ElementOutOfRange { index: x, order: n });
    }
    let mut inside = vec![false; n];
    let mut list = Vec::new();
    let mut queue: Vec<usize> = Vec::new();
    for x in [ring.zero(), ring.one()].into_iter().chain(gens.iter().copied()) {
        if !inside[x] {
            inside[x] = true;
            list.push(x);
            queue.push(x);
        }
    }
    while let Some(x) = queue.pop() {
        let len = list.len();
        for i in 0..len {
            let y = list[i];
            for z in [ring.add(x, y), ring.mul(x, y), ring.mul(y, x)] {
                if !inside[z] {
                    inside[z] = true;
                    list.push(z);
                    queue.push(z);
                }
            }
        }
    }
    Ok(inside)
}
