//! Finite groups given by Cayley tables.

use std::fmt;

use crate::error::{AlgebraError, GroupAxiom, Result};
use crate::ring::{magma_generators, Limits};

#[derive(Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    order: usize,
    cayley: Vec<u16>,
    identity: usize,
    inv: Vec<u16>,
    label: String,
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteGroup").field("order", &self.order).field("label", &self.label).finish()
    }
}

/// Validates a nested Cayley table.
pub fn validate_group(cayley: &[Vec<usize>], identity: usize) -> Result<FiniteGroup> {
    validate_group_with(cayley, identity, Limits::default())
}

pub fn validate_group_with(cayley: &[Vec<usize>], identity: usize, limits: Limits) -> Result<FiniteGroup> {
    let m = limits.check(cayley.len() as u128)?;
    let mut flat = Vec::with_capacity(m * m);
    for (i, row) in cayley.iter().enumerate() {
        if row.len() != m {
            return Err(AlgebraError::MalformedTable(format!(
                "cayley row {i} has {} entries, expected {m}",
                row.len()
            )));
        }
        for &v in row {
            if v >= m {
                return Err(AlgebraError::MalformedTable(format!("cayley entry {v} outside 0..{m}")));
            }
            flat.push(v as u16);
        }
    }
    FiniteGroup::from_flat(m, flat, identity)
}

impl FiniteGroup {
    /// Identity and inverse laws are checked directly; associativity by
    /// Light's test on a generating set.
    pub(crate) fn from_flat(m: usize, cayley: Vec<u16>, identity: usize) -> Result<FiniteGroup> {
        if identity >= m {
            return Err(AlgebraError::MalformedTable(format!("identity {identity} outside 0..{m}")));
        }
        let op = |x: usize, y: usize| cayley[x * m + y] as usize;
        for x in 0..m {
            if op(identity, x) != x || op(x, identity) != x {
                return Err(AlgebraError::GroupAxiomViolation {
                    kind: GroupAxiom::Identity,
                    witness: [identity, x, 0],
                });
            }
        }
        let mut inv = vec![0u16; m];
        for x in 0..m {
            match (0..m).find(|&y| op(x, y) == identity && op(y, x) == identity) {
                Some(y) => inv[x] = y as u16,
                None => {
                    return Err(AlgebraError::GroupAxiomViolation { kind: GroupAxiom::Inverse, witness: [x, 0, 0] })
                }
            }
        }
        for g in magma_generators(m, op) {
            for x in 0..m {
                let xg = op(x, g);
                for y in 0..m {
                    if op(xg, y) != op(x, op(g, y)) {
                        return Err(AlgebraError::GroupAxiomViolation {
                            kind: GroupAxiom::Associativity,
                            witness: [x, g, y],
                        });
                    }
                }
            }
        }
        Ok(FiniteGroup { order: m, cayley, identity, inv, label: String::new() })
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    #[inline]
    pub fn op(&self, a: usize, b: usize) -> usize {
        self.cayley[a * self.order + b] as usize
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inv[a] as usize
    }

    pub fn cayley_rows(&self) -> Vec<Vec<usize>> {
        self.cayley.chunks(self.order).map(|r| r.iter().map(|&v| v as usize).collect()).collect()
    }

    /// Least `k ≥ 1` with `g^k = e`.
    pub fn element_order(&self, g: usize) -> Result<usize> {
        if g >= self.order {
            return Err(AlgebraError::ElementOutOfRange { index: g, order: self.order });
        }
        let mut k = 1;
        let mut acc = g;
        while acc != self.identity {
            acc = self.op(acc, g);
            k += 1;
        }
        Ok(k)
    }

    /// Sorted multiset of element orders.
    pub fn order_profile(&self) -> Vec<usize> {
        let mut v: Vec<usize> = (0..self.order).map(|g| self.element_order(g).unwrap()).collect();
        v.sort_unstable();
        v
    }

    pub fn exponent(&self) -> usize {
        self.order_profile().into_iter().fold(1, lcm)
    }

    /// Every element order is a power of `p`. Also checks that this agrees
    /// with `|G|` being a power of `p`.
    pub fn is_p_group(&self, p: u64) -> Result<bool> {
        if !is_prime(p) {
            return Err(AlgebraError::NotPrime(p));
        }
        let by_elements = (0..self.order).all(|g| is_power_of(self.element_order(g).unwrap() as u64, p));
        let by_order = is_power_of(self.order as u64, p);
        if by_elements != by_order {
            return Err(AlgebraError::InternalInconsistency(format!(
                "p-group tests disagree for p = {p} on a group of order {}",
                self.order
            )));
        }
        Ok(by_elements)
    }

    /// The order-based p-group test alone.
    pub fn order_is_power_of(&self, p: u64) -> Result<bool> {
        if !is_prime(p) {
            return Err(AlgebraError::NotPrime(p));
        }
        Ok(is_power_of(self.order as u64, p))
    }

    /// Smallest prime `p` for which the group is a p-group, if any. The
    /// trivial group reports `None`, being a p-group for every prime.
    pub fn p_group_prime(&self) -> Option<u64> {
        if self.order == 1 {
            return None;
        }
        let p = smallest_prime_factor(self.order as u64);
        if is_power_of(self.order as u64, p) {
            Some(p)
        } else {
            None
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.order == 1
    }
}

/// Addition modulo `m`.
pub fn cyclic_group(m: usize, limits: Limits) -> Result<FiniteGroup> {
    let m = limits.check(m as u128)?;
    let cayley = (0..m).flat_map(|a| (0..m).map(move |b| ((a + b) % m) as u16)).collect();
    Ok(FiniteGroup::from_flat(m, cayley, 0)?.with_label(format!("C({m})")))
}

/// Componentwise product; `(g, h)` has index `g + h·|G|`.
pub fn group_product(g: &FiniteGroup, h: &FiniteGroup, limits: Limits) -> Result<FiniteGroup> {
    let n = limits.check(g.order as u128 * h.order as u128)?;
    let gm = g.order;
    let mut cayley = Vec::with_capacity(n * n);
    for x in 0..n {
        for y in 0..n {
            let a = g.op(x % gm, y % gm);
            let b = h.op(x / gm, y / gm);
            cayley.push((a + b * gm) as u16);
        }
    }
    let identity = g.identity + h.identity * gm;
    Ok(FiniteGroup::from_flat(n, cayley, identity)?.with_label(format!("Prod({},{})", g.label, h.label)))
}

/// The symmetric group on three points; permutations in lexicographic order,
/// so index 0 is the identity.
pub fn symmetric_group_s3() -> FiniteGroup {
    let perms: Vec<[usize; 3]> = vec![[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
    let idx = |p: [usize; 3]| perms.iter().position(|q| *q == p).unwrap();
    let mut cayley = Vec::with_capacity(36);
    for a in &perms {
        for b in &perms {
            // (a∘b)(i) = a(b(i))
            let c = [a[b[0]], a[b[1]], a[b[2]]];
            cayley.push(idx(c) as u16);
        }
    }
    FiniteGroup::from_flat(6, cayley, 0).expect("S3 table is a group").with_label("S3")
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn smallest_prime_factor(n: u64) -> u64 {
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return d;
        }
        d += 1;
    }
    n
}

pub(crate) fn is_power_of(mut n: u64, p: u64) -> bool {
    if n == 0 {
        return false;
    }
    while n.is_multiple_of(p) {
        n /= p;
    }
    n == 1
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}
