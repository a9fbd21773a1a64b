//! Exact computations with finite-dimensional Leibniz algebras over `Q` and
//! prime fields: structure constants, series, radicals, Frattini and
//! Jacobson ideals, subalgebra lattices, and a catalog of named families.
#![cfg_attr(not(any(test, feature = "std")), no_std)]

extern crate alloc;

pub mod algebra;
pub mod claims;
pub mod classify;
pub mod error;
pub mod field;
pub mod lattice;
pub mod linalg;
pub mod radicals;

pub use algebra::{Element, LeibnizAlgebra, SeriesReport, TableBuilder, Violation};
pub use claims::{ClaimResult, ClaimStatus};
pub use error::Error;
pub use field::{FieldSpec, Scalar};
pub use linalg::{Matrix, Subspace};
