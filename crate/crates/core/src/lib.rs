//! Exact constructions of integral lattices as kernels of explicit maps
//! `Z^n -> Z^a + A`, enumeration of their short vectors, and perfection
//! analysis through exact symmetric-tensor ranks.
//!
//! Everything here is pure computation over arbitrary-precision integers.
//! The crate is `no_std` and only needs `alloc`; file formats, the CLI and
//! parallel drivers live in the `latlab` companion crate.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod error;
pub mod families;
pub mod field;
pub mod groups;
pub mod lattice;
pub mod linalg;
pub mod perfection;

pub use error::{Error, Result};
pub use families::{FamilySpec, FormulaReport};
pub use field::{FieldElement, FiniteField};
pub use groups::{FinAbelianGroup, GroupElement};
pub use lattice::{ConstraintRow, ConstraintSystem, Lattice, MinimalVectorSet, Minimum};
pub use linalg::IntMatrix;
pub use perfection::{AlphaSeries, MinVectorGraph, PerfectionReport};
