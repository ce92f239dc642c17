//! Doxastic states as connected preorders over propositional models.
//!
//! Four representations of the same kind of order are supported: explicit pair sets, level
//! sequences, lexicographic revision histories and natural revision histories. [`translate`]
//! converts between them, [`revision`] applies revisions, and [`analysis`] counts classes and
//! sizes.

pub mod analysis;
pub mod cli;
pub mod document;
pub mod error;
pub mod formula;
pub mod orders;
pub mod revision;
pub mod translate;

pub use error::{Error, Result};
pub use formula::{Alphabet, Formula, Model};
pub use orders::{ClassPartition, ExplicitOrder, Kind, LevelOrder, LexOrder, NaturalOrder, Order};
