//! Brute-force reference computations built only on `add`, `mul`, `zero`
//! and `one`.
#![allow(dead_code)]

use finring::theorems::{build_catalog, Catalog, CatalogConfig};
use finring::FiniteRing;

/// Default catalog restricted to rings of order at most `max`.
pub fn small_catalog(max: usize) -> Catalog {
    build_catalog(&CatalogConfig::default().with_max_order(max)).expect("catalog builds")
}

pub fn units(r: &FiniteRing) -> Vec<bool> {
    r.elements().map(|x| r.elements().any(|y| r.mul(x, y) == r.one() && r.mul(y, x) == r.one())).collect()
}

/// `x` with `1 - r·x` a unit for every `r`.
pub fn jacobson(r: &FiniteRing, u: &[bool]) -> Vec<bool> {
    r.elements().map(|x| r.elements().all(|s| u[r.sub(r.one(), r.mul(s, x))])).collect()
}

pub fn powers_hit(r: &FiniteRing, a: usize, bound: usize, target: impl Fn(usize) -> bool) -> bool {
    let mut x = a;
    for _ in 0..bound {
        if target(x) {
            return true;
        }
        x = r.mul(x, a);
    }
    false
}

pub fn nilpotents(r: &FiniteRing) -> Vec<bool> {
    r.elements().map(|a| powers_hit(r, a, r.order(), |x| x == r.zero())).collect()
}

/// Some power `a^k` with `k ≤ 2|R|` lies in `j`.
pub fn sqrt_jacobson(r: &FiniteRing, j: &[bool]) -> Vec<bool> {
    r.elements().map(|a| powers_hit(r, a, 2 * r.order(), |x| j[x])).collect()
}

pub fn idempotents(r: &FiniteRing) -> Vec<bool> {
    r.elements().map(|x| r.mul(x, x) == x).collect()
}

pub fn center(r: &FiniteRing) -> Vec<bool> {
    r.elements().map(|x| r.elements().all(|y| r.mul(x, y) == r.mul(y, x))).collect()
}

pub fn members(mask: &[bool]) -> Vec<usize> {
    mask.iter().enumerate().filter(|(_, &m)| m).map(|(i, _)| i).collect()
}

/// Ideals of a commutative ring of order ≤ 64 as bit masks: every ideal is a
/// finite sum of principal ideals `aR`, so the lattice is the closure of the
/// principal ideals under pairwise sums.
pub fn all_ideals(r: &FiniteRing) -> Vec<u64> {
    assert!(r.order() <= 64);
    let principal = |a: usize| r.elements().fold(0u64, |m, s| m | 1 << r.mul(a, s));
    let sum = |i: u64, k: u64| {
        let mut m = 0u64;
        for x in r.elements().filter(|&x| i >> x & 1 == 1) {
            for y in r.elements().filter(|&y| k >> y & 1 == 1) {
                m |= 1 << r.add(x, y);
            }
        }
        m
    };
    let mut ideals: Vec<u64> = Vec::new();
    for a in r.elements() {
        let p = principal(a);
        if !ideals.contains(&p) {
            ideals.push(p);
        }
    }
    let mut i = 0;
    while i < ideals.len() {
        for k in 0..=i {
            let s = sum(ideals[i], ideals[k]);
            if !ideals.contains(&s) {
                ideals.push(s);
            }
        }
        i += 1;
    }
    ideals
}

/// Intersection of the maximal ideals of a commutative ring of order ≤ 64.
pub fn maximal_ideal_intersection(r: &FiniteRing) -> Vec<bool> {
    let full = if r.order() == 64 { u64::MAX } else { (1u64 << r.order()) - 1 };
    let proper: Vec<u64> = all_ideals(r).into_iter().filter(|&i| i != full).collect();
    let maximal = proper.iter().filter(|&&i| !proper.iter().any(|&k| k != i && k & i == i));
    let j = maximal.fold(full, |acc, &m| acc & m);
    r.elements().map(|x| j >> x & 1 == 1).collect()
}

/// Base-`b` digits of `x`, least significant first.
pub fn digits(mut x: usize, b: usize, width: usize) -> Vec<usize> {
    (0..width)
        .map(|_| {
            let d = x % b;
            x /= b;
            d
        })
        .collect()
}

pub fn undigits(ds: &[usize], b: usize) -> usize {
    ds.iter().rev().fold(0, |acc, &d| acc * b + d)
}

/// `U(R) = ±1 + S` for the brute-force `S = √J`, or `S = Nil` with `nil`.
pub fn weakly_shifted_units(r: &FiniteRing, nil: bool) -> bool {
    let u = units(r);
    let s = if nil { nilpotents(r) } else { sqrt_jacobson(r, &jacobson(r, &u)) };
    let minus = r.neg(r.one());
    let mut shifted = vec![false; r.order()];
    for x in r.elements().filter(|&x| s[x]) {
        shifted[r.add(r.one(), x)] = true;
        shifted[r.add(minus, x)] = true;
    }
    shifted == u
}
