//! Exhaustive computation over finite unital rings given by operation tables.

#![allow(clippy::needless_range_loop)]

pub mod analysis;
pub mod classify;
pub mod constructions;
pub mod error;
pub mod expr;
pub mod group;
pub mod io;
pub mod radicals;
pub mod ring;
pub mod sets;
pub mod theorems;

pub use analysis::Analyzer;
pub use classify::{ClassificationRecord, ClassifyConfig};
pub use error::{AlgebraError, Axiom, GroupAxiom, Result};
pub use expr::{parse, Evaluator, Expr, ExprError, Value};
pub use group::FiniteGroup;
pub use radicals::{RingProfile, UnitGroup};
pub use ring::{FiniteRing, Limits, RingHash};
pub use sets::{ElemSet, Ideal};
pub use theorems::{build_catalog, check_claim, run_suite, Catalog, CatalogConfig, ClaimOutcome, Report, Status};
