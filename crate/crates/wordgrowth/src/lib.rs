//! Reduced words, periodicity and product-set growth in free groups.
//!
//! The crate builds up from freely reduced words ([`word`]) through string
//! periodicity ([`periodicity`]) and finite word-set arithmetic ([`setops`])
//! to the combinatorial core: extraction of large well-aligned subsets
//! ([`extraction`]), multiplicity and dichotomy bounds ([`bounds`]), and the
//! growth estimate `|Aⁿ| ≥ cₙ·|A|^⌊(n+1)/2⌋` they compose into. The
//! [`checks`] module wraps each statement in exhaustive sweeps and seeded
//! random campaigns; [`generate`] and [`io`] supply the corpus machinery and
//! the text formats.

pub mod bounds;
pub mod checks;
pub mod extraction;
pub mod generate;
pub mod io;
pub mod periodicity;
pub mod setops;
pub mod word;

pub use bounds::{theorem_check, TheoremReport};
pub use extraction::{lemma1_extract, verify_extraction, ExtractionResult};
pub use periodicity::{left_period, right_period, PeriodDecomposition, Side};
pub use setops::{SetError, WordSet};
pub use word::{Alphabet, Letter, Word, F2};
