//! Noncommutative rewriting over an ordered alphabet and the diamond lemma.

mod ambiguity;
mod format;
mod monomial;
mod ncpoly;
mod system;

pub use ambiguity::{ambiguities, Ambiguity, AmbiguityKind, AmbiguityRecord, ConfluenceReport};
pub use format::{parse_poly, parse_presentation, write_presentation, PresentationFile};
pub use monomial::{is_valid_name, Alphabet, GenId, Monomial};
pub use ncpoly::NCPoly;
pub use system::{FreenessReport, RewriteSystem, Rule, Strategy, REDUCED_MONOMIAL_LIMIT};
