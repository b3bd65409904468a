//! Exact character theory of the symmetric groups, focused on splitting the
//! Kronecker square `[λ]⊗[λ]` into its symmetric and alternating parts.

pub mod cache;
pub mod characters;
pub mod closed_forms;
pub mod conjectures;
pub mod error;
pub mod kronecker;
pub mod modular;
pub mod partitions;
pub mod report;
pub mod tableaux;

pub use characters::{ClassFunction, Decomposition};
pub use error::{Error, Result};
pub use kronecker::SquareSplit;
pub use partitions::Partition;
