//! Constructors for every ring family the auditor quantifies over.
//!
//! Index encodings are fixed so that elements named in tests, expressions and
//! witnesses are reproducible. All encodings are mixed radix with digit 0
//! least significant:
//!
//! | constructor            | digit `d` holds                                   |
//! |------------------------|---------------------------------------------------|
//! | `ring_gf(p, k)`        | coefficient of `x^d` (base `p`)                   |
//! | `direct_product`       | component `d`                                     |
//! | `matrix_ring(R, k)`    | entry `(i, j)` with `d = i·k + j`                 |
//! | `upper_triangular`     | entries `(i, j)`, `i ≤ j`, in row-major order     |
//! | `trivial_extension`    | `d = 0`: `r`, `d = 1`: `m` of the pair `(r, m)`   |
//! | `group_ring(R, G)`     | coefficient of group element `d`                  |
//!
//! Quotients index cosets by increasing least representative; corners and
//! subrings index their members by increasing parent index.

mod fields;
mod group_ring;
mod ideals;
mod products;

pub use fields::{conway_polynomial, ring_gf, ring_zn};
pub use group_ring::{augmentation, group_ring};
pub(crate) use ideals::{close_ideal, subring_mask};
pub use ideals::{corner, ideal_generated, projections, quotient, subring_generated, RingHom};
pub use products::{direct_product, matrix_ring, trivial_extension, upper_triangular};

use crate::ring::FiniteRing;

/// Decoded mixed-radix digits for every index of a product-shaped ring.
pub(crate) struct Codec {
    bases: Vec<usize>,
    order: usize,
    digits: Vec<u16>,
}

impl Codec {
    pub(crate) fn new(bases: Vec<usize>, order: usize) -> Codec {
        let width = bases.len();
        let mut digits = vec![0u16; order * width];
        for x in 0..order {
            let mut rest = x;
            for (d, &b) in bases.iter().enumerate() {
                digits[x * width + d] = (rest % b) as u16;
                rest /= b;
            }
        }
        Codec { bases, order, digits }
    }

    #[inline]
    pub(crate) fn digits(&self, x: usize) -> &[u16] {
        let w = self.bases.len();
        &self.digits[x * w..(x + 1) * w]
    }

    #[inline]
    pub(crate) fn encode(&self, ds: &[usize]) -> usize {
        let mut acc = 0;
        for (d, &b) in ds.iter().zip(self.bases.iter()).rev() {
            acc = acc * b + d;
        }
        acc
    }

    pub(crate) fn width(&self) -> usize {
        self.bases.len()
    }

    /// Builds both tables. Addition is digitwise in `rings[d]`; `mul` fills
    /// the product digits of two decoded operands.
    pub(crate) fn tables(
        &self,
        rings: &[&FiniteRing],
        mut mul: impl FnMut(&[u16], &[u16], &mut [usize]),
    ) -> (Vec<u16>, Vec<u16>) {
        let n = self.order;
        let w = self.width();
        let mut add = Vec::with_capacity(n * n);
        let mut mult = Vec::with_capacity(n * n);
        let mut buf = vec![0usize; w];
        for x in 0..n {
            let dx = self.digits(x);
            for y in 0..n {
                let dy = self.digits(y);
                for d in 0..w {
                    buf[d] = rings[d].add(dx[d] as usize, dy[d] as usize);
                }
                add.push(self.encode(&buf) as u16);
                mul(dx, dy, &mut buf);
                mult.push(self.encode(&buf) as u16);
            }
        }
        (add, mult)
    }
}
