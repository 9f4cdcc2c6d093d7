//! Exact enumeration of partially ordered generalized patterns in k-ary
//! words.
//!
//! The crate has two independent routes to the same numbers:
//!
//! - [`oracle`] counts words by walking `[k]^n` with the occurrence
//!   [`matcher`], and
//! - [`gf`] evaluates generating-function formulas as truncated
//!   [`series`] with exact rational coefficients.
//!
//! [`verify`] runs the formulas against the oracle.

pub mod error;
pub mod gf;
pub mod matcher;
pub mod oracle;
pub mod pattern;
pub mod series;
pub mod verify;
pub mod word;

pub use error::{GfError, OracleError, PatternError, SeriesError, WordError};
pub use gf::{GfProvider, KnownPattern};
pub use matcher::{avoids, contains, mnd, occurrences, quasi_avoids};
pub use oracle::{Budget, CountTable, EquivReport, MndTable, Verdict};
pub use pattern::{expansion_count, interleaving_count, OrderMode, OrderRelation, PatternClass, PatternKind, Pogp, Relation, Symbol};
pub use series::{Series, YSeries};
pub use word::Word;
