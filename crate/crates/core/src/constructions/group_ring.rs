use std::sync::Arc;

use crate::error::{AlgebraError, Result};
use crate::group::FiniteGroup;
use crate::ring::{FiniteRing, Limits, Origin};
use crate::sets::Ideal;

use super::ideals::RingHom;
use super::Codec;

/// Functions `G → R` with pointwise addition and convolution; digit `d` is
/// the coefficient of group element `d`.
pub fn group_ring(base: &Arc<FiniteRing>, group: &Arc<FiniteGroup>, limits: Limits) -> Result<FiniteRing> {
    let m = group.order();
    let order = limits.check_pow(base.order(), m)?;
    let r = base.as_ref();
    let codec = Codec::new(vec![r.order(); m], order);
    let comps = vec![r; m];
    let (add, mul) = codec.tables(&comps, |x, y, out| {
        out.iter_mut().for_each(|c| *c = r.zero());
        for g in 0..m {
            let a = x[g] as usize;
            if a == r.zero() {
                continue;
            }
            for h in 0..m {
                let gh = group.op(g, h);
                out[gh] = r.add(out[gh], r.mul(a, y[h] as usize));
            }
        }
    });
    let mut one = vec![r.zero(); m];
    one[group.identity()] = r.one();
    let zero = codec.encode(&vec![r.zero(); m]);
    let one = codec.encode(&one);
    Ok(FiniteRing::from_trusted(order, add, mul, zero, one, limits)?
        .with_label(format!("GR({},{})", r.label(), group.label()))
        .with_origin(Origin::GroupRing { base: base.clone(), group: group.clone() }))
}

/// The augmentation map `Σ r_g g ↦ Σ r_g` and its kernel.
pub fn augmentation(ring: &FiniteRing) -> Result<(RingHom, Ideal)> {
    let Origin::GroupRing { base, group } = ring.origin() else {
        return Err(AlgebraError::NotAGroupRing);
    };
    let codec = Codec::new(vec![base.order(); group.order()], ring.order());
    let map: Vec<usize> = ring
        .elements()
        .map(|x| codec.digits(x).iter().fold(base.zero(), |acc, &c| base.add(acc, c as usize)))
        .collect();
    let hom = RingHom::new(ring, base.hash(), map);
    let delta = hom.kernel(ring, base);
    Ok((hom, delta))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::ring_zn;
    use crate::group::cyclic_group;

    fn z(n: usize) -> Arc<FiniteRing> {
        Arc::new(ring_zn(n, Limits::default()).unwrap())
    }

    fn c(m: usize) -> Arc<FiniteGroup> {
        Arc::new(cyclic_group(m, Limits::default()).unwrap())
    }

    #[test]
    fn z2c2() {
        let r = group_ring(&z(2), &c(2), Limits::default()).unwrap();
        assert_eq!(r.order(), 4);
        // g is index 2, 1 + g is index 3
        assert_eq!(r.mul(2, 2), 1);
        assert_eq!(r.mul(3, 3), 0);
        let (eps, delta) = augmentation(&r).unwrap();
        assert_eq!(eps.apply(3), 0);
        assert_eq!(delta.members(), &[0, 3]);
        eps.verify(&r, &z(2)).unwrap();
        assert!(eps.is_surjective(&z(2)));
    }

    #[test]
    fn z3c3_augmentation_ideal() {
        let r = group_ring(&z(3), &c(3), Limits::default()).unwrap();
        assert_eq!(r.order(), 27);
        let (_, delta) = augmentation(&r).unwrap();
        assert_eq!(delta.len(), 9);
        assert!(Ideal::new(&r, delta.set().clone()).is_ok());
    }

    #[test]
    fn trivial_group_reproduces_base() {
        let r = group_ring(&z(6), &c(1), Limits::default()).unwrap();
        assert_eq!(r.hash(), z(6).hash());
        assert_eq!(augmentation(&r).unwrap().1.members(), &[0]);
    }

    #[test]
    fn cap_and_non_group_rings() {
        let l = Limits::default();
        assert!(matches!(group_ring(&z(4), &c(8), l), Err(AlgebraError::SizeCapExceeded { .. })));
        assert_eq!(augmentation(&z(4)).unwrap_err(), AlgebraError::NotAGroupRing);
    }
}
