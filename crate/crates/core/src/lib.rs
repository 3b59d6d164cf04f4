//! Posets, their linear extensions, Bender–Knuth moves and the permutation
//! groups those moves generate.

pub mod error;
pub mod linext;
pub mod permgroup;
pub mod poset;
pub mod relations;
pub mod scan;
pub mod tableau;

pub use error::{Error, Result};
pub use linext::{LinExtSpace, LinearExtension};
pub use permgroup::{bk_group, Permutation, PermutationGroup};
pub use poset::{ElementSet, Partition, Poset};
pub use tableau::ColumnStrictTableau;
