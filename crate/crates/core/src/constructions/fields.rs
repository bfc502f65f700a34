use crate::error::{AlgebraError, Result};
use crate::group::is_prime;
use crate::ring::{FiniteRing, Limits};

use super::Codec;

/// Conway polynomials for `p^k ≤ 64`, coefficients from the constant term up
/// (monic, so the last entry is 1).
const CONWAY: &[(u64, u64, &[u64])] = &[
    (2, 1, &[1, 1]),
    (2, 2, &[1, 1, 1]),
    (2, 3, &[1, 1, 0, 1]),
    (2, 4, &[1, 1, 0, 0, 1]),
    (2, 5, &[1, 0, 1, 0, 0, 1]),
    (2, 6, &[1, 1, 0, 1, 1, 0, 1]),
    (3, 1, &[1, 1]),
    (3, 2, &[2, 2, 1]),
    (3, 3, &[1, 2, 0, 1]),
    (5, 1, &[3, 1]),
    (5, 2, &[2, 4, 1]),
    (7, 1, &[4, 1]),
    (7, 2, &[3, 6, 1]),
    (11, 1, &[9, 1]),
    (13, 1, &[11, 1]),
    (17, 1, &[14, 1]),
    (19, 1, &[17, 1]),
    (23, 1, &[18, 1]),
    (29, 1, &[27, 1]),
    (31, 1, &[28, 1]),
    (37, 1, &[35, 1]),
    (41, 1, &[35, 1]),
    (43, 1, &[40, 1]),
    (47, 1, &[42, 1]),
    (53, 1, &[51, 1]),
    (59, 1, &[57, 1]),
    (61, 1, &[59, 1]),
];

pub fn conway_polynomial(p: u64, k: u64) -> Option<&'static [u64]> {
    CONWAY.iter().find(|(q, j, _)| *q == p && *j == k).map(|(_, _, c)| *c)
}

/// Integers modulo `n`.
pub fn ring_zn(n: usize, limits: Limits) -> Result<FiniteRing> {
    let n = limits.check(n as u128)?;
    let mut add = Vec::with_capacity(n * n);
    let mut mul = Vec::with_capacity(n * n);
    for a in 0..n {
        for b in 0..n {
            add.push(((a + b) % n) as u16);
            mul.push(((a * b) % n) as u16);
        }
    }
    let one = 1 % n;
    Ok(FiniteRing::from_trusted(n, add, mul, 0, one, limits)?.with_label(format!("Z({n})")))
}

/// The field with `p^k` elements, as `Z_p[x]` modulo the shipped Conway
/// polynomial. For `k = 1` the tables coincide with `Z_p`.
pub fn ring_gf(p: u64, k: u64, limits: Limits) -> Result<FiniteRing> {
    if k == 0 {
        return Err(AlgebraError::InvalidArgument("GF degree must be at least 1".into()));
    }
    let order = limits.check_pow(usize::try_from(p).unwrap_or(usize::MAX), usize::try_from(k).unwrap_or(usize::MAX))?;
    if !is_prime(p) {
        return Err(AlgebraError::NotPrime(p));
    }
    let poly = conway_polynomial(p, k).ok_or(AlgebraError::NoPolynomialShipped { p, k })?;
    let (p, k) = (p as usize, k as usize);
    let codec = Codec::new(vec![p; k], order);
    let zp = ring_zn(p, limits)?;
    let comps: Vec<&FiniteRing> = vec![&zp; k];
    let mut prod = vec![0usize; 2 * k];
    let (add, mul) = codec.tables(&comps, |x, y, out| {
        prod.iter_mut().for_each(|c| *c = 0);
        for i in 0..k {
            for j in 0..k {
                prod[i + j] = (prod[i + j] + x[i] as usize * y[j] as usize) % p;
            }
        }
        // x^k = -(c_0 + c_1 x + ... + c_{k-1} x^{k-1})
        for deg in (k..2 * k - 1).rev() {
            let lead = prod[deg];
            if lead == 0 {
                continue;
            }
            prod[deg] = 0;
            for i in 0..k {
                let shift = deg - k + i;
                prod[shift] = (prod[shift] + (p - lead) * poly[i] as usize) % p;
            }
        }
        out.copy_from_slice(&prod[..k]);
    });
    let one = 1;
    Ok(FiniteRing::from_trusted(order, add, mul, 0, one, limits)?.with_label(format!("GF({p},{k})")))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mult_order(r: &FiniteRing, x: usize) -> usize {
        let mut k = 1;
        let mut acc = x;
        while acc != r.one() {
            acc = r.mul(acc, x);
            k += 1;
            assert!(k <= r.order(), "element is not a unit");
        }
        k
    }

    #[test]
    fn shipped_polynomials_are_primitive() {
        let l = Limits::default();
        for &(p, k, _) in CONWAY {
            let f = ring_gf(p, k, l).unwrap();
            let x = if k == 1 { (p - conway_polynomial(p, 1).unwrap()[0]) as usize % p as usize } else { p as usize };
            assert_eq!(mult_order(&f, x), f.order() - 1, "GF({p},{k})");
        }
    }

    #[test]
    fn prime_fields_match_zn() {
        let l = Limits::default();
        for p in [2u64, 3, 5, 7, 11] {
            assert_eq!(ring_gf(p, 1, l).unwrap().hash(), ring_zn(p as usize, l).unwrap().hash());
        }
    }

    #[test]
    fn gf4_units_cube_to_one() {
        let f = ring_gf(2, 2, Limits::default()).unwrap();
        for x in 1..4 {
            assert_eq!(f.pow(x, 3), 1);
        }
    }

    #[test]
    fn gf9_has_two_square_roots_of_one() {
        let f = ring_gf(3, 2, Limits::default()).unwrap();
        let roots: Vec<usize> = f.elements().filter(|&x| f.mul(x, x) == f.one()).collect();
        assert_eq!(roots.len(), 2);
        assert_eq!(f.characteristic(), 3);
    }

    #[test]
    fn errors() {
        let l = Limits::default();
        assert_eq!(ring_gf(4, 1, l).unwrap_err(), AlgebraError::NotPrime(4));
        assert_eq!(ring_gf(67, 1, l).unwrap_err(), AlgebraError::NoPolynomialShipped { p: 67, k: 1 });
        assert!(matches!(ring_gf(2, 7, Limits::new(64)), Err(AlgebraError::SizeCapExceeded { .. })));
        assert!(matches!(ring_zn(5000, l), Err(AlgebraError::SizeCapExceeded { .. })));
    }

    #[test]
    fn z1_is_the_zero_ring() {
        let z1 = ring_zn(1, Limits::default()).unwrap();
        assert_eq!(z1.order(), 1);
        assert_eq!(z1.one(), z1.zero());
    }
}
