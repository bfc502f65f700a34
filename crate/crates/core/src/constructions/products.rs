use std::sync::Arc;

use crate::error::{AlgebraError, Result};
use crate::ring::{FiniteRing, Limits, Origin};

use super::ideals::{projections, RingHom};
use super::Codec;

/// Componentwise product; component `i` is digit `i`. Returns the projections.
pub fn direct_product(rings: &[Arc<FiniteRing>], limits: Limits) -> Result<(FiniteRing, Vec<RingHom>)> {
    if rings.is_empty() {
        return Err(AlgebraError::InvalidArgument("direct product of an empty list".into()));
    }
    let mut requested: u128 = 1;
    for r in rings {
        requested = requested.saturating_mul(r.order() as u128);
    }
    let order = limits.check(requested)?;
    let codec = Codec::new(rings.iter().map(|r| r.order()).collect(), order);
    let comps: Vec<&FiniteRing> = rings.iter().map(|r| r.as_ref()).collect();
    let (add, mul) = codec.tables(&comps, |x, y, out| {
        for (d, r) in comps.iter().enumerate() {
            out[d] = r.mul(x[d] as usize, y[d] as usize);
        }
    });
    let zero = codec.encode(&rings.iter().map(|r| r.zero()).collect::<Vec<_>>());
    let one = codec.encode(&rings.iter().map(|r| r.one()).collect::<Vec<_>>());
    let label = format!("Prod({})", rings.iter().map(|r| r.label().to_string()).collect::<Vec<_>>().join(","));
    let ring = FiniteRing::from_trusted(order, add, mul, zero, one, limits)?
        .with_label(label)
        .with_origin(Origin::Product { factors: rings.to_vec() });
    let homs = projections(&ring)?;
    Ok((ring, homs))
}

/// `k × k` matrices over `R`; entry `(i, j)` is digit `i·k + j`.
pub fn matrix_ring(base: &Arc<FiniteRing>, k: usize, limits: Limits) -> Result<FiniteRing> {
    if k == 0 {
        return Err(AlgebraError::InvalidArgument("matrix size must be at least 1".into()));
    }
    let order = limits.check_pow(base.order(), k.saturating_mul(k))?;
    let r = base.as_ref();
    let codec = Codec::new(vec![r.order(); k * k], order);
    let comps = vec![r; k * k];
    let (add, mul) = codec.tables(&comps, |x, y, out| {
        for i in 0..k {
            for j in 0..k {
                let mut acc = r.zero();
                for l in 0..k {
                    acc = r.add(acc, r.mul(x[i * k + l] as usize, y[l * k + j] as usize));
                }
                out[i * k + j] = acc;
            }
        }
    });
    let mut one = vec![r.zero(); k * k];
    for i in 0..k {
        one[i * k + i] = r.one();
    }
    let zero = codec.encode(&vec![r.zero(); k * k]);
    let one = codec.encode(&one);
    Ok(FiniteRing::from_trusted(order, add, mul, zero, one, limits)?
        .with_label(format!("M({k},{})", r.label()))
        .with_origin(Origin::Matrix { base: base.clone(), k }))
}

/// Upper-triangular `k × k` matrices; positions `(i, j)` with `i ≤ j` are
/// digits in row-major order.
pub fn upper_triangular(base: &Arc<FiniteRing>, k: usize, limits: Limits) -> Result<FiniteRing> {
    if k == 0 {
        return Err(AlgebraError::InvalidArgument("matrix size must be at least 1".into()));
    }
    let width = k * (k + 1) / 2;
    let order = limits.check_pow(base.order(), width)?;
    let r = base.as_ref();
    let mut pos = vec![usize::MAX; k * k];
    let mut d = 0;
    for i in 0..k {
        for j in i..k {
            pos[i * k + j] = d;
            d += 1;
        }
    }
    let codec = Codec::new(vec![r.order(); width], order);
    let comps = vec![r; width];
    let (add, mul) = codec.tables(&comps, |x, y, out| {
        for i in 0..k {
            for j in i..k {
                let mut acc = r.zero();
                for l in i..=j {
                    acc = r.add(acc, r.mul(x[pos[i * k + l]] as usize, y[pos[l * k + j]] as usize));
                }
                out[pos[i * k + j]] = acc;
            }
        }
    });
    let mut one = vec![r.zero(); width];
    for i in 0..k {
        one[pos[i * k + i]] = r.one();
    }
    let zero = codec.encode(&vec![r.zero(); width]);
    let one = codec.encode(&one);
    Ok(FiniteRing::from_trusted(order, add, mul, zero, one, limits)?
        .with_label(format!("T({k},{})", r.label()))
        .with_origin(Origin::Triangular { base: base.clone(), k }))
}

/// Pairs `(r, m)` over `M = R` with `(r, m)(s, n) = (rs, rn + ms)`; index
/// `r + m·|R|`.
pub fn trivial_extension(base: &Arc<FiniteRing>, limits: Limits) -> Result<FiniteRing> {
    let order = limits.check_pow(base.order(), 2)?;
    let r = base.as_ref();
    let codec = Codec::new(vec![r.order(); 2], order);
    let (add, mul) = codec.tables(&[r, r], |x, y, out| {
        let (a, m) = (x[0] as usize, x[1] as usize);
        let (b, n) = (y[0] as usize, y[1] as usize);
        out[0] = r.mul(a, b);
        out[1] = r.add(r.mul(a, n), r.mul(m, b));
    });
    let zero = codec.encode(&[r.zero(), r.zero()]);
    let one = codec.encode(&[r.one(), r.zero()]);
    Ok(FiniteRing::from_trusted(order, add, mul, zero, one, limits)?
        .with_label(format!("TrivExt({})", r.label()))
        .with_origin(Origin::TrivialExtension { base: base.clone() }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::ring_zn;

    fn z(n: usize) -> Arc<FiniteRing> {
        Arc::new(ring_zn(n, Limits::default()).unwrap())
    }

    #[test]
    fn product_of_one_ring_reproduces_it() {
        let (p, homs) = direct_product(&[z(6)], Limits::default()).unwrap();
        assert_eq!(p.hash(), z(6).hash());
        assert_eq!(homs.len(), 1);
    }

    #[test]
    fn product_encoding_and_projections() {
        let (p, homs) = direct_product(&[z(2), z(3)], Limits::default()).unwrap();
        assert_eq!(p.order(), 6);
        // (1, 2) = 1 + 2·2
        assert_eq!(homs[0].apply(5), 1);
        assert_eq!(homs[1].apply(5), 2);
        assert_eq!(p.mul(5, 5), 1 + 2);
    }

    #[test]
    fn matrix_units_multiply() {
        let m = matrix_ring(&z(2), 2, Limits::default()).unwrap();
        assert_eq!(m.order(), 16);
        let (e11, e12, e21, e22) = (1, 2, 4, 8);
        assert_eq!(m.one(), e11 + e22);
        assert_eq!(m.mul(e12, e21), e11);
        assert_eq!(m.mul(e21, e12), e22);
        assert!(!m.is_commutative());
        assert_eq!(m.characteristic(), 2);
    }

    #[test]
    fn size_one_matrix_constructions_reproduce_the_base() {
        let l = Limits::default();
        for n in [2, 4, 6] {
            assert_eq!(matrix_ring(&z(n), 1, l).unwrap().hash(), z(n).hash());
            assert_eq!(upper_triangular(&z(n), 1, l).unwrap().hash(), z(n).hash());
        }
    }

    #[test]
    fn strictly_upper_part_squares_to_zero() {
        let t = upper_triangular(&z(2), 2, Limits::default()).unwrap();
        assert_eq!(t.order(), 8);
        // digits: (0,0) -> 1, (0,1) -> 2, (1,1) -> 4
        assert_eq!(t.pow(2, 2), 0);
        assert_eq!(t.one(), 5);
        assert!(!t.is_commutative());
    }

    #[test]
    fn trivial_extension_identity() {
        let t = trivial_extension(&z(3), Limits::default()).unwrap();
        assert_eq!(t.order(), 9);
        assert_eq!(t.one(), 1);
        for x in t.elements() {
            assert_eq!(t.mul(x, t.one()), x);
        }
        // (0,1)^2 = 0
        assert_eq!(t.mul(3, 3), 0);
    }

    #[test]
    fn caps_are_checked_before_allocation() {
        let l = Limits::new(64);
        assert!(matches!(matrix_ring(&z(3), 2, l), Err(AlgebraError::SizeCapExceeded { requested: 81, .. })));
        assert!(matches!(upper_triangular(&z(2), 4, l), Err(AlgebraError::SizeCapExceeded { .. })));
        assert!(matches!(trivial_extension(&z(9), l), Err(AlgebraError::SizeCapExceeded { .. })));
        assert!(matches!(direct_product(&[z(9), z(9)], l), Err(AlgebraError::SizeCapExceeded { .. })));
    }
}
