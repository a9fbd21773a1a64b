//! Catalog of named algebra families and verifiers for the classification
//! statements about them.

mod catalog;
mod corpus;
mod e_algebra;
mod extension;
mod minimal;
mod unique_ideal;

pub use catalog::{catalog_grid, rational, CatalogInstance, FamilySpec, LeviData};
pub use corpus::all_leibniz_tables;
pub use e_algebra::{verify_e_algebra, EAlgebraVerdict};
pub use extension::verify_abelian_extension;
pub use minimal::{verify_minimal_non_elementary, MinimalVerdict};
pub use unique_ideal::{verify_unique_maximal_ideal, UniqueIdealCase, UniqueIdealVerdict};
