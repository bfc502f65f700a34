//! Finite unital rings presented by addition and multiplication tables.
//!
//! Elements are dense indices `0..n`. Tables are stored row-major as `u16`,
//! so a ring has at most [`HARD_MAX_ORDER`] elements; the working cap is a
//! [`Limits`] value (4096 by default) checked by every constructor before it
//! allocates.

use std::fmt;
use std::sync::Arc;

use serde::{Serialize, Serializer};
use sha2::{Digest, Sha256};

use crate::error::{AlgebraError, Axiom, Result};
use crate::group::FiniteGroup;

pub const DEFAULT_MAX_ORDER: usize = 4096;
/// Largest constructor output re-validated in debug builds.
pub const TRUSTED_CHECK_LIMIT: usize = 1024;

/// Largest order representable with `u16` table entries.
pub const HARD_MAX_ORDER: usize = 1 << 16;

/// Size cap applied by constructors and loaders.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub max_order: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { max_order: DEFAULT_MAX_ORDER }
    }
}

impl Limits {
    pub fn new(max_order: usize) -> Self {
        Limits { max_order: max_order.min(HARD_MAX_ORDER) }
    }

    /// Checks a requested order (already computed without overflow) against the cap.
    pub fn check(&self, requested: u128) -> Result<usize> {
        if requested == 0 {
            return Err(AlgebraError::InvalidArgument("order must be positive".into()));
        }
        if requested > self.max_order as u128 || requested > HARD_MAX_ORDER as u128 {
            return Err(AlgebraError::SizeCapExceeded { requested, cap: self.max_order });
        }
        Ok(requested as usize)
    }

    /// `base^exp` saturating at `u128::MAX`, then [`Limits::check`].
    pub fn check_pow(&self, base: usize, exp: usize) -> Result<usize> {
        let mut acc: u128 = 1;
        for _ in 0..exp {
            acc = acc.saturating_mul(base as u128);
            if acc > HARD_MAX_ORDER as u128 {
                break;
            }
        }
        self.check(acc)
    }
}

/// Digest of a presented ring: order, both tables, zero and one.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RingHash(pub [u8; 32]);

impl RingHash {
    pub fn to_hex(&self) -> String {
        hex::encode(self.0)
    }

    pub fn short(&self) -> String {
        hex::encode(&self.0[..8])
    }
}

impl fmt::Display for RingHash {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_hex())
    }
}

impl fmt::Debug for RingHash {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RingHash({})", self.short())
    }
}

impl Serialize for RingHash {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_hex())
    }
}

/// How a ring was produced. Constructors record their inputs here so that
/// later stages (projections, augmentation, claim subjects) can recover them.
#[derive(Clone, Debug, Default)]
pub enum Origin {
    #[default]
    Tables,
    Product {
        factors: Vec<Arc<FiniteRing>>,
    },
    Matrix {
        base: Arc<FiniteRing>,
        k: usize,
    },
    Triangular {
        base: Arc<FiniteRing>,
        k: usize,
    },
    TrivialExtension {
        base: Arc<FiniteRing>,
    },
    GroupRing {
        base: Arc<FiniteRing>,
        group: Arc<FiniteGroup>,
    },
    Quotient {
        parent: Arc<FiniteRing>,
        ideal: Vec<usize>,
        projection: Vec<usize>,
    },
    Corner {
        parent: Arc<FiniteRing>,
        idempotent: usize,
        embedding: Vec<usize>,
    },
    Subring {
        parent: Arc<FiniteRing>,
        embedding: Vec<usize>,
    },
}

/// A validated, immutable finite unital ring.
#[derive(Clone)]
pub struct FiniteRing {
    order: usize,
    add: Vec<u16>,
    mul: Vec<u16>,
    neg: Vec<u16>,
    zero: usize,
    one: usize,
    add_gens: Vec<usize>,
    label: String,
    hash: RingHash,
    origin: Origin,
}

impl fmt::Debug for FiniteRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteRing")
            .field("order", &self.order)
            .field("label", &self.label)
            .field("hash", &self.hash)
            .finish()
    }
}

impl PartialEq for FiniteRing {
    fn eq(&self, other: &Self) -> bool {
        self.hash == other.hash
    }
}

impl Eq for FiniteRing {}

/// An element tagged with the hash of its ring.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RingElement {
    pub index: usize,
    pub ring: RingHash,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ElemOp {
    Add,
    Mul,
    Neg,
    Sub,
}

/// Validates nested `order × order` tables. See [`FiniteRing::from_tables`].
pub fn validate_ring(
    order: usize,
    add_table: &[Vec<usize>],
    mul_table: &[Vec<usize>],
    zero: usize,
    one: usize,
) -> Result<FiniteRing> {
    validate_ring_with(order, add_table, mul_table, zero, one, Limits::default())
}

pub fn validate_ring_with(
    order: usize,
    add_table: &[Vec<usize>],
    mul_table: &[Vec<usize>],
    zero: usize,
    one: usize,
    limits: Limits,
) -> Result<FiniteRing> {
    limits.check(order as u128)?;
    let add = flatten(order, add_table, "add")?;
    let mul = flatten(order, mul_table, "mul")?;
    FiniteRing::from_tables(order, add, mul, zero, one, limits)
}

fn flatten(order: usize, table: &[Vec<usize>], name: &str) -> Result<Vec<u16>> {
    if table.len() != order {
        return Err(AlgebraError::MalformedTable(format!("{name} table has {} rows, expected {order}", table.len())));
    }
    let mut flat = Vec::with_capacity(order * order);
    for (i, row) in table.iter().enumerate() {
        if row.len() != order {
            return Err(AlgebraError::MalformedTable(format!(
                "{name} row {i} has {} entries, expected {order}",
                row.len()
            )));
        }
        for &v in row {
            if v >= order {
                return Err(AlgebraError::MalformedTable(format!("{name} row {i} has entry {v} outside 0..{order}")));
            }
            flat.push(v as u16);
        }
    }
    Ok(flat)
}

/// Greedy generating set of a finite magma, in increasing index order.
///
/// Only closure under the operation is used, so the result is valid before
/// associativity is known.
pub(crate) fn magma_generators(n: usize, op: impl Fn(usize, usize) -> usize) -> Vec<usize> {
    let mut inside = vec![false; n];
    let mut list: Vec<usize> = Vec::with_capacity(n);
    let mut queue = Vec::new();
    let mut gens = Vec::new();
    for x in 0..n {
        if inside[x] {
            continue;
        }
        gens.push(x);
        inside[x] = true;
        list.push(x);
        queue.push(x);
        while let Some(y) = queue.pop() {
            let len = list.len();
            for i in 0..len {
                let z = list[i];
                for w in [op(y, z), op(z, y)] {
                    if !inside[w] {
                        inside[w] = true;
                        list.push(w);
                        queue.push(w);
                    }
                }
            }
        }
    }
    gens
}

impl FiniteRing {
    /// Validates flat row-major tables and returns the ring.
    ///
    /// Checks run on an additive generating set `S` found by magma closure:
    /// additive associativity by Light's test on `S`, right distributivity for
    /// `x + s` with `s ∈ S`, left distributivity for multipliers in `S`, and
    /// multiplicative associativity on `S³` (the defect is tri-additive once
    /// distributivity holds). Cost is `O(n²·|S|)` instead of `O(n³)`.
    pub fn from_tables(
        order: usize,
        add: Vec<u16>,
        mul: Vec<u16>,
        zero: usize,
        one: usize,
        limits: Limits,
    ) -> Result<FiniteRing> {
        let n = limits.check(order as u128)?;
        check_shape(n, &add, &mul, zero, one)?;
        let a = |x: usize, y: usize| add[x * n + y] as usize;
        let m = |x: usize, y: usize| mul[x * n + y] as usize;

        for x in 0..n {
            if a(zero, x) != x || a(x, zero) != x {
                return Err(violation(Axiom::AddIdentity, x, zero, 0));
            }
        }
        for x in 0..n {
            for y in (x + 1)..n {
                if a(x, y) != a(y, x) {
                    return Err(violation(Axiom::AddCommutativity, x, y, 0));
                }
            }
        }
        let mut neg = vec![0u16; n];
        for x in 0..n {
            match (0..n).find(|&y| a(x, y) == zero) {
                Some(y) => neg[x] = y as u16,
                None => return Err(violation(Axiom::AddInverse, x, 0, 0)),
            }
        }
        let gens = magma_generators(n, a);
        for &g in &gens {
            for x in 0..n {
                let xg = a(x, g);
                for y in 0..n {
                    if a(xg, y) != a(x, a(g, y)) {
                        return Err(violation(Axiom::AddAssociativity, x, g, y));
                    }
                }
            }
        }
        if n > 1 && one == zero {
            return Err(violation(Axiom::MulIdentity, one, one, 0));
        }
        for x in 0..n {
            if m(one, x) != x || m(x, one) != x {
                return Err(violation(Axiom::MulIdentity, one, x, 0));
            }
        }
        for &g in &gens {
            for x in 0..n {
                let gx = a(g, x);
                for r in 0..n {
                    if m(gx, r) != a(m(g, r), m(x, r)) {
                        return Err(violation(Axiom::RightDistributivity, g, x, r));
                    }
                }
            }
        }
        for &r in &gens {
            for &g in &gens {
                for x in 0..n {
                    if m(r, a(g, x)) != a(m(r, g), m(r, x)) {
                        return Err(violation(Axiom::LeftDistributivity, r, g, x));
                    }
                }
            }
        }
        for &x in &gens {
            for &y in &gens {
                for &z in &gens {
                    if m(m(x, y), z) != m(x, m(y, z)) {
                        return Err(violation(Axiom::MulAssociativity, x, y, z));
                    }
                }
            }
        }
        Ok(Self::assemble(n, add, mul, neg, zero, one, gens))
    }

    /// Builds a ring from tables a constructor produced. Debug builds (and
    /// therefore tests) run full validation up to [`TRUSTED_CHECK_LIMIT`];
    /// otherwise only the negation table, generators and hash are derived.
    pub(crate) fn from_trusted(
        order: usize,
        add: Vec<u16>,
        mul: Vec<u16>,
        zero: usize,
        one: usize,
        limits: Limits,
    ) -> Result<FiniteRing> {
        if cfg!(debug_assertions) && order <= TRUSTED_CHECK_LIMIT {
            return Self::from_tables(order, add, mul, zero, one, limits);
        }
        let n = limits.check(order as u128)?;
        check_shape(n, &add, &mul, zero, one)?;
        let mut neg = vec![0u16; n];
        for x in 0..n {
            let row = &add[x * n..(x + 1) * n];
            match row.iter().position(|&v| v as usize == zero) {
                Some(y) => neg[x] = y as u16,
                None => return Err(violation(Axiom::AddInverse, x, 0, 0)),
            }
        }
        let gens = magma_generators(n, |x, y| add[x * n + y] as usize);
        Ok(Self::assemble(n, add, mul, neg, zero, one, gens))
    }

    fn assemble(
        n: usize,
        add: Vec<u16>,
        mul: Vec<u16>,
        neg: Vec<u16>,
        zero: usize,
        one: usize,
        add_gens: Vec<usize>,
    ) -> FiniteRing {
        let hash = digest(n, &add, &mul, zero, one);
        FiniteRing { order: n, add, mul, neg, zero, one, add_gens, label: String::new(), hash, origin: Origin::Tables }
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    pub fn with_origin(mut self, origin: Origin) -> Self {
        self.origin = origin;
        self
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn zero(&self) -> usize {
        self.zero
    }

    pub fn one(&self) -> usize {
        self.one
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn hash(&self) -> RingHash {
        self.hash
    }

    pub fn origin(&self) -> &Origin {
        &self.origin
    }

    /// An additive generating set, sorted ascending.
    pub fn add_generators(&self) -> &[usize] {
        &self.add_gens
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.order + b] as usize
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.order + b] as usize
    }

    #[inline]
    pub fn neg(&self, a: usize) -> usize {
        self.neg[a] as usize
    }

    #[inline]
    pub fn sub(&self, a: usize, b: usize) -> usize {
        self.add(a, self.neg(b))
    }

    /// Row `a` of the multiplication table, i.e. the left multiples `a·r`.
    #[inline]
    pub fn mul_row(&self, a: usize) -> &[u16] {
        &self.mul[a * self.order..(a + 1) * self.order]
    }

    #[inline]
    pub fn add_row(&self, a: usize) -> &[u16] {
        &self.add[a * self.order..(a + 1) * self.order]
    }

    /// Nested copy of the addition table.
    pub fn add_rows(&self) -> Vec<Vec<usize>> {
        self.add.chunks(self.order).map(|r| r.iter().map(|&v| v as usize).collect()).collect()
    }

    pub fn mul_rows(&self) -> Vec<Vec<usize>> {
        self.mul.chunks(self.order).map(|r| r.iter().map(|&v| v as usize).collect()).collect()
    }

    /// `a^k` by square-and-multiply; `a^0 = 1`.
    pub fn pow(&self, a: usize, mut k: u64) -> usize {
        let mut base = a;
        let mut acc = self.one;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        acc
    }

    /// The element `k·1` for an integer `k` (negative values use `-1`).
    pub fn int(&self, k: i64) -> usize {
        let unit = if k < 0 { self.neg(self.one) } else { self.one };
        let mut acc = self.zero;
        for _ in 0..k.unsigned_abs() {
            acc = self.add(acc, unit);
        }
        acc
    }

    /// Additive order of `1`.
    pub fn characteristic(&self) -> usize {
        let mut k = 1;
        let mut acc = self.one;
        while acc != self.zero {
            acc = self.add(acc, self.one);
            k += 1;
        }
        k
    }

    pub fn is_commutative(&self) -> bool {
        let n = self.order;
        (0..n).all(|a| ((a + 1)..n).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Wraps an index as a tagged element.
    pub fn element(&self, index: usize) -> Result<RingElement> {
        if index >= self.order {
            return Err(AlgebraError::ElementOutOfRange { index, order: self.order });
        }
        Ok(RingElement { index, ring: self.hash })
    }

    fn own(&self, e: RingElement) -> Result<usize> {
        if e.ring != self.hash {
            return Err(AlgebraError::ForeignElement);
        }
        if e.index >= self.order {
            return Err(AlgebraError::ElementOutOfRange { index: e.index, order: self.order });
        }
        Ok(e.index)
    }

    /// Checked table lookup on tagged elements.
    pub fn elem_op(&self, op: ElemOp, a: RingElement, b: Option<RingElement>) -> Result<RingElement> {
        let x = self.own(a)?;
        let index = match op {
            ElemOp::Neg => self.neg(x),
            _ => {
                let y = self.own(
                    b.ok_or_else(|| AlgebraError::InvalidArgument("binary operation needs two operands".into()))?,
                )?;
                match op {
                    ElemOp::Add => self.add(x, y),
                    ElemOp::Mul => self.mul(x, y),
                    ElemOp::Sub => self.sub(x, y),
                    ElemOp::Neg => unreachable!(),
                }
            }
        };
        Ok(RingElement { index, ring: self.hash })
    }

    pub fn power(&self, a: RingElement, k: u64) -> Result<RingElement> {
        let x = self.own(a)?;
        Ok(RingElement { index: self.pow(x, k), ring: self.hash })
    }
}

fn check_shape(n: usize, add: &[u16], mul: &[u16], zero: usize, one: usize) -> Result<()> {
    if add.len() != n * n || mul.len() != n * n {
        return Err(AlgebraError::MalformedTable(format!("tables must have {} entries", n * n)));
    }
    if let Some(v) = add.iter().chain(mul.iter()).find(|&&v| v as usize >= n) {
        return Err(AlgebraError::MalformedTable(format!("entry {v} outside 0..{n}")));
    }
    if zero >= n || one >= n {
        return Err(AlgebraError::MalformedTable(format!("zero {zero} / one {one} outside 0..{n}")));
    }
    Ok(())
}

fn violation(kind: Axiom, a: usize, b: usize, c: usize) -> AlgebraError {
    AlgebraError::AxiomViolation { kind, witness: [a, b, c] }
}

fn digest(n: usize, add: &[u16], mul: &[u16], zero: usize, one: usize) -> RingHash {
    let mut h = Sha256::new();
    h.update(b"finring/ring/v1");
    h.update((n as u32).to_le_bytes());
    let mut buf = Vec::with_capacity(1 << 16);
    for chunk in add.chunks(1 << 14).chain(mul.chunks(1 << 14)) {
        buf.clear();
        buf.extend(chunk.iter().flat_map(|&v| (v as u32).to_le_bytes()));
        h.update(&buf);
    }
    h.update((zero as u32).to_le_bytes());
    h.update((one as u32).to_le_bytes());
    RingHash(h.finalize().into())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zn_tables(n: usize) -> (Vec<Vec<usize>>, Vec<Vec<usize>>) {
        let add = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        let mul = (0..n).map(|a| (0..n).map(|b| (a * b) % n).collect()).collect();
        (add, mul)
    }

    #[test]
    fn z2_from_xor_and() {
        let add = vec![vec![0, 1], vec![1, 0]];
        let mul = vec![vec![0, 0], vec![0, 1]];
        let r = validate_ring(2, &add, &mul, 0, 1).unwrap();
        assert_eq!(r.order(), 2);
        assert_eq!(r.characteristic(), 2);
    }

    #[test]
    fn missing_identity_is_rejected() {
        let add = vec![vec![0, 1], vec![1, 0]];
        let mul = vec![vec![0, 0], vec![0, 0]];
        let err = validate_ring(2, &add, &mul, 0, 1).unwrap_err();
        assert!(matches!(err, AlgebraError::AxiomViolation { kind: Axiom::MulIdentity, .. }));
    }

    #[test]
    fn z6_negation_and_arithmetic() {
        let (add, mul) = zn_tables(6);
        let r = validate_ring(6, &add, &mul, 0, 1).unwrap();
        assert_eq!(r.neg(2), 4);
        assert_eq!(r.add(4, 5), 3);
        assert_eq!(r.mul(2, 3), 0);
        assert_eq!(r.sub(1, 3), 4);
        assert_eq!(r.characteristic(), 6);
        assert!(r.is_commutative());
    }

    #[test]
    fn powers_in_z9_and_z6() {
        let (add, mul) = zn_tables(9);
        let z9 = validate_ring(9, &add, &mul, 0, 1).unwrap();
        assert_eq!(z9.pow(3, 2), 0);
        assert_eq!(z9.pow(4, 0), 1);
        let (add, mul) = zn_tables(6);
        let z6 = validate_ring(6, &add, &mul, 0, 1).unwrap();
        assert_eq!(z6.pow(5, 2), 1);
    }

    #[test]
    fn non_associative_algebra_is_rejected() {
        // Z_2-span of 1, x, y with x² = y, y² = 0, xy = yx = x: bilinear and
        // unital, but (x·x)·y = 0 while x·(x·y) = y.
        let enc = |c: [usize; 3]| c[0] | (c[1] << 1) | (c[2] << 2);
        let dec = |v: usize| [v & 1, (v >> 1) & 1, (v >> 2) & 1];
        let basis_mul = |i: usize, j: usize| -> [usize; 3] {
            match (i, j) {
                (0, k) | (k, 0) => {
                    let mut c = [0; 3];
                    c[k] = 1;
                    c
                }
                (1, 1) => [0, 0, 1],
                (2, 2) => [0, 0, 0],
                _ => [0, 1, 0],
            }
        };
        let add: Vec<Vec<usize>> = (0..8).map(|a| (0..8).map(|b| a ^ b).collect()).collect();
        let mul: Vec<Vec<usize>> = (0..8)
            .map(|a| {
                (0..8)
                    .map(|b| {
                        let (da, db) = (dec(a), dec(b));
                        let mut acc = [0; 3];
                        for i in 0..3 {
                            for j in 0..3 {
                                if da[i] * db[j] == 1 {
                                    let t = basis_mul(i, j);
                                    for k in 0..3 {
                                        acc[k] ^= t[k];
                                    }
                                }
                            }
                        }
                        enc(acc)
                    })
                    .collect()
            })
            .collect();
        let err = validate_ring(8, &add, &mul, 0, 1).unwrap_err();
        assert!(matches!(err, AlgebraError::AxiomViolation { kind: Axiom::MulAssociativity, .. }));
    }

    #[test]
    fn broken_distributivity_is_rejected() {
        let (add, mut mul) = zn_tables(4);
        mul[2][2] = 1;
        let err = validate_ring(4, &add, &mul, 0, 1).unwrap_err();
        assert!(matches!(err, AlgebraError::AxiomViolation { .. }));
    }

    #[test]
    fn malformed_tables_are_rejected() {
        let add = vec![vec![0, 1], vec![1]];
        let mul = vec![vec![0, 0], vec![0, 1]];
        assert!(matches!(validate_ring(2, &add, &mul, 0, 1), Err(AlgebraError::MalformedTable(_))));
        let add = vec![vec![0, 2], vec![1, 0]];
        assert!(matches!(validate_ring(2, &add, &mul, 0, 1), Err(AlgebraError::MalformedTable(_))));
    }

    #[test]
    fn size_cap_is_checked() {
        let (add, mul) = zn_tables(5);
        let err = validate_ring_with(5, &add, &mul, 0, 1, Limits::new(4)).unwrap_err();
        assert!(matches!(err, AlgebraError::SizeCapExceeded { requested: 5, cap: 4 }));
    }

    #[test]
    fn hash_is_stable_across_revalidation() {
        let (add, mul) = zn_tables(7);
        let a = validate_ring(7, &add, &mul, 0, 1).unwrap();
        let b = validate_ring(7, &add, &mul, 0, 1).unwrap().with_label("other");
        assert_eq!(a.hash(), b.hash());
    }

    #[test]
    fn foreign_elements_are_rejected() {
        let (add, mul) = zn_tables(6);
        let z6 = validate_ring(6, &add, &mul, 0, 1).unwrap();
        let (add, mul) = zn_tables(5);
        let z5 = validate_ring(5, &add, &mul, 0, 1).unwrap();
        let a = z6.element(4).unwrap();
        let b = z6.element(5).unwrap();
        assert_eq!(z6.elem_op(ElemOp::Add, a, Some(b)).unwrap().index, 3);
        assert_eq!(z6.elem_op(ElemOp::Neg, a, None).unwrap().index, 2);
        let c = z5.element(1).unwrap();
        assert_eq!(z6.elem_op(ElemOp::Add, a, Some(c)), Err(AlgebraError::ForeignElement));
        assert_eq!(z6.power(c, 2), Err(AlgebraError::ForeignElement));
    }

    #[test]
    fn zero_ring_is_valid() {
        let r = validate_ring(1, &[vec![0]], &[vec![0]], 0, 0).unwrap();
        assert_eq!(r.characteristic(), 1);
    }
}
